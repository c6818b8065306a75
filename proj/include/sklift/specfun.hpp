#pragma once

#include <mutex>
#include <optional>
#include <vector>

#include "complexnum.hpp"
#include "quadrature.hpp"
#include "real.hpp"

namespace sklift {

// ---------------------------------------------------------------------------
// Bernoulli numbers (exact), cached.  B_1 = -1/2 convention.
// ---------------------------------------------------------------------------
inline Rational bernoulli(unsigned long m) {
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= m) {
        unsigned long n = cache.size();
        // B_n = -1/(n+1) * sum_{k<n} C(n+1,k) B_k
        Rational s(0);
        for (unsigned long k = 0; k < n; ++k) s += Rational(binomial(n + 1, k)) * cache[k];
        cache.push_back(make_rational(-s.get_num(), s.get_den() * BigInt(n + 1)));
    }
    return cache[m];
}

// ---------------------------------------------------------------------------
// Log-gamma by the Stirling series with an error-controlled shift: push the
// argument up by the recurrence until the asymptotic tail bound meets the
// target, then sum the Bernoulli series.
// ---------------------------------------------------------------------------
namespace detail {

inline double stirling_shift_target(int digits) { return std::max(16.0, 0.40 * (digits + 8)); }

template <typename T>  // T = Real or Complex
T lngamma_stirling(T z, int digits, mpfr_prec_t prec, double abs_z, double re_z) {
    double z0 = stirling_shift_target(digits);
    long shift = 0;
    while (re_z + shift < z0) ++shift;
    T acc;
    if constexpr (std::is_same_v<T, Real>)
        acc = Real(prec);
    else
        acc = Complex(prec);
    T zs = z;
    for (long j = 0; j < shift; ++j) {
        acc = acc + log(zs);
        if constexpr (std::is_same_v<T, Real>)
            zs = zs + Real(1L, prec);
        else
            zs = zs + Complex(1L, prec);
    }
    // ln G(z+shift) = (w-1/2)ln w - w + ln(2pi)/2 + sum B_2k/(2k(2k-1) w^(2k-1))
    T w = zs;
    T lw = log(w);
    Real half(prec);
    mpfr_set_d(half.get(), 0.5, MPFR_RNDN);
    Real ln2pi = log(const_pi(prec) * 2);
    T res;
    if constexpr (std::is_same_v<T, Real>)
        res = (w - half) * lw - w + ln2pi * half;
    else
        res = (w - Complex(Real(half), Real(0L, prec))) * lw - w + Complex(ln2pi * half, Real(0L, prec));
    T winv2;
    if constexpr (std::is_same_v<T, Real>)
        winv2 = Real(1L, prec) / (w * w);
    else
        winv2 = Complex(1L, prec) / (w * w);
    T wpow;
    if constexpr (std::is_same_v<T, Real>)
        wpow = Real(1L, prec) / w;
    else
        wpow = Complex(1L, prec) / w;
    Real eps = pow10(-(digits + 6), prec);
    double prev_term = 1e300;
    for (unsigned long k = 1; k < 400; ++k) {
        Rational c = bernoulli(2 * k) / Rational(BigInt(2 * k) * BigInt(2 * k - 1));
        T term;
        if constexpr (std::is_same_v<T, Real>)
            term = Real(c, prec) * wpow;
        else
            term = Complex(Real(c, prec), Real(0L, prec)) * wpow;
        res = res + term;
        double tmag;
        if constexpr (std::is_same_v<T, Real>)
            tmag = std::abs(term.to_double());
        else
            tmag = term.abs().to_double();
        if (tmag > prev_term) break;  // divergence onset; shift guaranteed this is below eps
        prev_term = tmag;
        Real tm(prec);
        if constexpr (std::is_same_v<T, Real>)
            tm = abs(term);
        else
            tm = term.abs();
        if (tm < eps) break;
        wpow = wpow * winv2;
    }
    return res - acc;
}

}  // namespace detail

inline Real lngamma(const Real& x, int digits) {
    mpfr_prec_t prec = bits_for_digits(digits + 10);
    Real xx(prec);
    mpfr_set(xx.get(), x.get(), MPFR_RNDN);
    if (xx.sign() <= 0) throw std::domain_error("lngamma: need x > 0");
    return detail::lngamma_stirling<Real>(xx, digits, prec, xx.to_double(), xx.to_double());
}

inline Complex lngamma(const Complex& z, int digits) {
    mpfr_prec_t prec = bits_for_digits(digits + 10);
    Complex zz{Real(prec), Real(prec)};
    mpfr_set(zz.re.get(), z.re.get(), MPFR_RNDN);
    mpfr_set(zz.im.get(), z.im.get(), MPFR_RNDN);
    if (zz.re.sign() <= 0 && zz.im.is_zero()) throw std::domain_error("lngamma: nonpositive real axis");
    return detail::lngamma_stirling<Complex>(zz, digits, prec, zz.abs().to_double(), zz.re.to_double());
}

// Gamma function for real arguments; poles at non-positive integers raise.
inline Real gamma(const Real& x, int digits) {
    mpfr_prec_t prec = bits_for_digits(digits + 10);
    Real xx(prec);
    mpfr_set(xx.get(), x.get(), MPFR_RNDN);
    if (mpfr_integer_p(xx.get()) && xx.sign() <= 0)
        throw std::domain_error("gamma: pole at non-positive integer");
    if (xx < Real(0.5, prec)) {
        // reflection: G(x) = pi / (sin(pi x) G(1-x))
        Real pi = const_pi(prec);
        Real s = sin(pi * xx);
        if (s.is_zero()) throw std::domain_error("gamma: pole at non-positive integer");
        return pi / (s * gamma(Real(1L, prec) - xx, digits));
    }
    return exp(lngamma(xx, digits));
}

inline Real gamma(const Rational& x, int digits) { return gamma(Real(x, bits_for_digits(digits + 10)), digits); }

// Exact Gamma(a)/Gamma(b) for half-integer or integer a, b with a - b in Z.
inline Rational gamma_ratio_exact(const Rational& a, const Rational& b) {
    Rational diff = a - b;
    if (diff.get_den() != 1) throw std::domain_error("gamma_ratio_exact: a - b must be an integer");
    auto is_pole = [](const Rational& x) { return x.get_den() == 1 && x.get_num() <= 0; };
    if (is_pole(a) || is_pole(b)) throw std::domain_error("gamma_ratio_exact: pole");
    long n = static_cast<long>(diff.get_num().get_si());
    Rational r(1);
    if (n >= 0) {
        Rational t = b;
        for (long i = 0; i < n; ++i) {
            r *= t;
            t += 1;
        }
    } else {
        Rational t = a;
        for (long i = 0; i < -n; ++i) {
            r *= t;
            t += 1;
        }
        r = Rational(1) / r;
    }
    return r;
}

// Rising factorial (x)_n over the rationals.
inline Rational pochhammer(const Rational& x, long n) {
    Rational r(1), t = x;
    for (long i = 0; i < n; ++i) {
        r *= t;
        t += 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Hermite polynomials H_n (physicists'), by the three-term recurrence.
// ---------------------------------------------------------------------------
inline Real hermite(long n, const Real& x) {
    if (n < 0) throw std::domain_error("hermite: need n >= 0");
    Real h0(1L, x.prec());
    if (n == 0) return h0;
    Real h1 = x * 2;
    for (long k = 1; k < n; ++k) {
        Real h2 = x * h1 * 2 - h0 * (2 * k);
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

inline Rational hermite(long n, const Rational& x) {
    if (n < 0) throw std::domain_error("hermite: need n >= 0");
    Rational h0(1);
    if (n == 0) return h0;
    Rational h1 = x * 2;
    for (long k = 1; k < n; ++k) {
        Rational h2 = x * h1 * 2 - h0 * (2 * k);
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

// ---------------------------------------------------------------------------
// Modified Bessel function K_nu(z), z > 0 real.
//
// Dispatch: exact finite sum for half-integer order, ascending series for
// small z, the asymptotic expansion when it reaches the target, and
// double-exponential quadrature of the defining integral otherwise.  The
// quadrature route doubles as the independent oracle in the tests.
// ---------------------------------------------------------------------------
namespace detail {

inline Real bessel_k_half_integer(long n, const Real& z, int digits) {
    // K_{n+1/2}(z) = sqrt(pi/(2z)) e^{-z} sum_{k=0..n} (n+k)!/(k!(n-k)!) (2z)^{-k}
    mpfr_prec_t prec = bits_for_digits(digits + 10);
    Real sum(prec);
    for (long k = 0; k <= n; ++k) {
        Rational c(factorial(n + k), factorial(k) * factorial(n - k));
        c.canonicalize();
        sum += Real(c, prec) / pow_si(z * 2, k);
    }
    Real pi = const_pi(prec);
    return sqrt(pi / (z * 2)) * exp(-z) * sum;
}

inline Real bessel_i_series(const Real& nu, const Real& z, int digits) {
    // I_nu(z) = (z/2)^nu sum z^{2k} / (4^k k! Gamma(nu+k+1))
    mpfr_prec_t prec = bits_for_digits(digits + 15);
    Real q = z * z / 4;
    Real term = Real(1L, prec) / gamma(nu + Real(1L, prec), digits + 10);
    Real sum = term;
    Real eps = pow10(-(digits + 8), prec);
    for (long k = 1; k < 100000; ++k) {
        term = term * q / ((nu + Real(k, prec)) * Real(k, prec));
        sum += term;
        if (abs(term) < eps * abs(sum)) break;
    }
    return pow(z / 2, nu) * sum;
}

inline Real bessel_k_series_noninteger(const Real& nu, const Real& z, int digits) {
    // K_nu = pi/2 (I_{-nu} - I_nu) / sin(pi nu)
    mpfr_prec_t prec = bits_for_digits(digits + 15);
    Real pi = const_pi(prec);
    Real s = sin(pi * nu);
    return pi / 2 * (bessel_i_series(-nu, z, digits + 5) - bessel_i_series(nu, z, digits + 5)) / s;
}

inline Real bessel_k_series_integer(long n, const Real& z, int digits) {
    // Ascending (logarithmic) series for integer order n >= 0.
    int guard = digits + 15 + static_cast<int>(z.to_double());
    mpfr_prec_t prec = bits_for_digits(guard);
    Real zz(prec);
    mpfr_set(zz.get(), z.get(), MPFR_RNDN);
    Real q = zz * zz / 4;
    Real lz = log(zz / 2);
    Real sum(prec);
    // finite part: 1/2 sum_{k=0}^{n-1} (-1)^k (n-k-1)!/k! (z/2)^{2k-n}
    for (long k = 0; k < n; ++k) {
        Real t = Real(factorial(n - k - 1), prec) / Real(factorial(k), prec) * pow_si(zz / 2, 2 * k - n);
        if (k % 2) t = -t;
        sum += t / 2;
    }
    // series part: (-1)^{n+1} sum_{k>=0} (z/2)^{2k+n}/(k!(n+k)!) [ln(z/2) - (psi(k+1)+psi(n+k+1))/2]
    Real egamma(prec);
    mpfr_const_euler(egamma.get(), MPFR_RNDN);
    Real psi1 = -egamma;                     // psi(1)
    Real psin = -egamma;                     // psi(n+1) built below
    for (long j = 1; j <= n; ++j) psin += Real(1L, prec) / j;
    Real pw = pow_si(zz / 2, n);
    Real fk(1L, prec), fnk = Real(factorial(n), prec);
    Real eps = pow10(-(digits + 8), prec);
    for (long k = 0; k < 100000; ++k) {
        if (k > 0) {
            pw = pw * q;
            fk *= k;
            fnk *= (n + k);
            psi1 += Real(1L, prec) / k;
            psin += Real(1L, prec) / (n + k);
        }
        Real t = pw / (fk * fnk) * (lz - (psi1 + psin) / 2);
        if (n % 2 == 0) t = -t;
        sum += t;
        if (abs(t) < eps * (abs(sum) + Real(1L, prec))) break;
    }
    return sum;
}

inline std::optional<Real> bessel_k_asymptotic(const Real& nu, const Real& z, int digits) {
    // K_nu(z) ~ sqrt(pi/2z) e^{-z} sum_k a_k(nu)/(8z)^k, a_k = prod (4nu^2-(2j-1)^2)/k!
    mpfr_prec_t prec = bits_for_digits(digits + 10);
    Real four_nu2 = nu * nu * 4;
    Real term(1L, prec), sum(1L, prec);
    Real eps = pow10(-(digits + 6), prec);
    Real prev = abs(term);
    for (long k = 1; k < 4000; ++k) {
        term = term * (four_nu2 - Real((2 * k - 1) * (2 * k - 1), prec)) / (Real(k, prec) * z * 8);
        if (abs(term) > prev) return std::nullopt;  // divergence before target
        prev = abs(term);
        sum += term;
        if (abs(term) < eps * abs(sum)) {
            Real pi = const_pi(prec);
            return sqrt(pi / (z * 2)) * exp(-z) * sum;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Direct double-exponential quadrature of K_nu(z) = int_0^inf e^{-z cosh u} cosh(nu u) du.
// This is the integral definition after t = e^u; exposed for oracle use.
inline Real bessel_k_quadrature(const Real& nu, const Real& z, int digits) {
    if (z.sign() <= 0) throw std::domain_error("bessel_k: need z > 0");
    auto f = [&](const Real& u) { return exp(-z * cosh(u)) * cosh(nu * u); };
    // integrand is even in u; integrate the full line and halve
    auto r = de_trapezoid_line([&](const Real& u) { return f(u); }, digits + 5);
    return r.value / 2;
}

inline Real bessel_k(const Real& nu_in, const Real& z, int digits) {
    if (z.sign() <= 0) throw std::domain_error("bessel_k: need z > 0");
    mpfr_prec_t prec = bits_for_digits(digits + 10);
    Real nu(prec);
    mpfr_abs(nu.get(), nu_in.get(), MPFR_RNDN);  // K_{-nu} = K_nu
    Real two_nu = nu * 2;
    if (mpfr_integer_p(two_nu.get()) && !mpfr_integer_p(nu.get())) {
        long n = (lround(two_nu) - 1) / 2;
        return detail::bessel_k_half_integer(n, z, digits);
    }
    double zd = z.to_double();
    if (zd >= 1.2 * (digits + 6) * 2.302585) {
        if (auto r = detail::bessel_k_asymptotic(nu, z, digits)) return *r;
    }
    if (zd <= 8.0) {
        if (mpfr_integer_p(nu.get())) return detail::bessel_k_series_integer(lround(nu), z, digits);
        return detail::bessel_k_series_noninteger(nu, z, digits);
    }
    return bessel_k_quadrature(nu, z, digits);
}

// ---------------------------------------------------------------------------
// Generalized hypergeometric pFq.
// ---------------------------------------------------------------------------
namespace detail {
inline std::optional<long> terminating_index(const std::vector<Rational>& num) {
    std::optional<long> best;
    for (auto& a : num)
        if (a.get_den() == 1 && a.get_num() <= 0) {
            long k = -static_cast<long>(a.get_num().get_si());
            if (!best || k < *best) best = k;
        }
    return best;
}
}  // namespace detail

// Exact value of a terminating pFq with rational parameters at rational z.
inline Rational hypergeom_terminating_exact(const std::vector<Rational>& num, const std::vector<Rational>& den,
                                            const Rational& z) {
    auto kmax = detail::terminating_index(num);
    if (!kmax) throw std::domain_error("hypergeom_terminating_exact: series does not terminate");
    Rational sum(0), term(1);
    for (long k = 0;; ++k) {
        sum += term;
        if (k == *kmax) break;
        Rational ratio(1);
        for (auto& a : num) ratio *= (a + k);
        for (auto& b : den) {
            Rational bk = b + k;
            if (bk == 0) throw std::domain_error("hypergeom: denominator parameter hits pole");
            ratio /= bk;
        }
        ratio *= z;
        ratio /= (k + 1);
        term *= ratio;
    }
    return sum;
}

// pFq by partial sums with an a posteriori geometric tail bound.
inline Real hypergeom_pfq(const std::vector<Rational>& num, const std::vector<Rational>& den, const Real& z,
                          int digits) {
    auto kterm = detail::terminating_index(num);
    size_t p = num.size(), q = den.size();
    double zd = std::abs(z.to_double());
    if (!kterm) {
        if (p > q + 1) throw std::domain_error("hypergeom_pfq: divergent (p > q+1, non-terminating)");
        if (p == q + 1 && zd >= 1.0) throw std::domain_error("hypergeom_pfq: divergent at |z| >= 1");
    }
    mpfr_prec_t prec = bits_for_digits(digits + 10);
    Real sum(prec), term(1L, prec);
    Real eps = pow10(-(digits + 6), prec);
    double pmax = 0;
    for (auto& a : num) pmax = std::max(pmax, std::abs(Rational(a).get_d()));
    for (auto& b : den) pmax = std::max(pmax, std::abs(Rational(b).get_d()));
    for (long k = 0; k < 2000000; ++k) {
        sum += term;
        if (kterm && k == *kterm) break;
        Rational rk(1);
        for (auto& a : num) rk *= (a + k);
        for (auto& b : den) {
            Rational bk = b + k;
            if (bk == 0) throw std::domain_error("hypergeom: denominator parameter hits pole");
            rk /= bk;
        }
        term = term * Real(rk, prec) * z / (k + 1);
        if (!kterm && k > 2 * pmax + 4 && abs(term) < eps * (abs(sum) + Real(1L, prec))) {
            // tail bounded by geometric series once the term ratio settles
            sum += term;
            break;
        }
    }
    return sum;
}

inline Real hypergeom_pfq(const std::vector<Rational>& num, const std::vector<Rational>& den, const Rational& z,
                          int digits) {
    return hypergeom_pfq(num, den, Real(z, bits_for_digits(digits + 10)), digits);
}

}  // namespace sklift

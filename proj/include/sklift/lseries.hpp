#pragma once

#include <functional>

#include "complexnum.hpp"
#include "newforms.hpp"
#include "specfun.hpp"
#include "symbols.hpp"

namespace sklift {

// A self-dual motivic L-series: Lambda(s) = prod_j Gamma_C(s + mu_j) * sum a(n) n^{-s},
// with functional equation Q^{s/2} Lambda(s) = eps Q^{(w-s)/2} Lambda(w-s).
// Coefficients are generated multiplicatively from exact local Euler factors.
struct LSeries {
    std::string label;
    int degree = 0;                      // degree of the good-prime local factor
    std::vector<Rational> gamma_shifts;  // mu_j for prod Gamma_C(s + mu_j)
    long w = 0;                          // center of s <-> w - s
    BigInt conductor = 1;
    int sign = 1;
    std::function<std::vector<BigInt>(long)> euler_factor;  // p -> (C_0 = 1, C_1, ..., C_d)

    mutable std::vector<BigInt> coeff_cache;  // a(1..M)
};

// det(1_6 - A_p (x) B_p p^{-s}) expanded through the symmetric functions of
// the Satake parameters; exact integer coefficients.
inline std::vector<BigInt> sym2_tensor_euler_factor(long p, const Newform& f, const Newform& g) {
    if (f.level != g.level) throw std::domain_error("sym2_tensor_euler_factor: mismatched levels");
    long kappa = g.kappa();
    long kp = f.kappa_prime();
    BigInt af = f.a(p), ag = g.a(p);
    if (f.level % p == 0) {
        // (1 - c p^{-s})(1 - c p^{1-s}), c = a_f(p) a_g(p)^2
        BigInt c = af * ag * ag;
        return {BigInt(1), -c * (1 + p), c * c * p};
    }
    BigInt pk = pow_int(BigInt(p), kappa);
    BigInt E1 = ag * ag - pk;   // b1 + b2 + b3
    BigInt E2 = pk * E1;        // e_2 of the B_p eigenvalues
    BigInt E3 = pk * pk * pk;   // e_3
    BigInt A1 = af;             // a1 + a2
    BigInt A2 = pow_int(BigInt(p), 2 * kp - 1);  // a1 a2
    BigInt p2 = A1 * A1 - 2 * A2;
    BigInt p3 = A1 * A1 * A1 - 3 * A1 * A2;
    std::vector<BigInt> C(7);
    C[0] = 1;
    C[1] = -E1 * A1;
    C[2] = E2 * p2 + E1 * E1 * A2;
    C[3] = -(E3 * p3 + E1 * E2 * A1 * A2);
    C[4] = E2 * E2 * A2 * A2 + E1 * E3 * A2 * p2;
    C[5] = -E2 * E3 * A2 * A2 * A1;
    C[6] = E3 * E3 * A2 * A2 * A2;
    return C;
}

// Lambda(s, Sym^2(g) (x) f): degree 6, gamma factor
// Gamma_C(s) Gamma_C(s - kappa) Gamma_C(s - 2 kappa' + 1), center w = 2 kappa + 2 kappa'.
// Conductor and sign are not part of the data and must be fixed by
// determine_sign_and_conductor before AFE evaluation.
inline LSeries make_sym2_tensor_lseries(const Newform& f, const Newform& g) {
    LSeries L;
    L.label = "Sym2(" + g.label + ")x" + f.label;
    L.degree = 6;
    long kappa = g.kappa(), kp = f.kappa_prime();
    L.gamma_shifts = {Rational(0), Rational(-kappa), Rational(-(2 * kp - 1))};
    L.w = 2 * kappa + 2 * kp;
    L.conductor = 1;
    L.sign = 1;
    Newform fc = f, gc = g;
    L.euler_factor = [fc, gc](long p) { return sym2_tensor_euler_factor(p, fc, gc); };
    return L;
}

// Lambda(s, f (x) chi_{-D}) = zeta_C(s) sum a_f(n) chi_{-D}(n) n^{-s},
// degree 2, center w = 2 kappa', conductor N D^2.
inline LSeries twisted_lseries(const Newform& f, long D) {
    if (gcd(BigInt(D), BigInt(f.level)) != 1) throw std::domain_error("twisted_lseries: need (D, N) = 1");
    LSeries L;
    L.label = f.label + "x chi_{-" + std::to_string(D) + "}";
    L.degree = 2;
    L.gamma_shifts = {Rational(0)};
    L.w = f.weight;
    L.conductor = BigInt(f.level) * D * D;
    L.sign = 1;  // provisional; fixed by the residual scan
    Newform fc = f;
    long Dc = D;
    L.euler_factor = [fc, Dc](long p) -> std::vector<BigInt> {
        int chi = kronecker(BigInt(-Dc), BigInt(p));
        if (chi == 0) return {BigInt(1)};
        BigInt ap = fc.a(p) * chi;
        if (fc.level % p == 0) return {BigInt(1), -ap};
        return {BigInt(1), -ap, pow_int(BigInt(p), fc.weight - 1)};
    };
    return L;
}

// a(1..M) by power-series inversion of each local factor and multiplicative
// assembly over a smallest-prime-factor sieve.
inline const std::vector<BigInt>& dirichlet_coefficients(const LSeries& L, long M) {
    if (static_cast<long>(L.coeff_cache.size()) >= M + 1) return L.coeff_cache;
    std::vector<BigInt>& a = L.coeff_cache;
    a.assign(M + 1, BigInt(0));
    if (M >= 1) a[1] = 1;
    std::vector<long> spf(M + 1, 0);
    for (long i = 2; i <= M; ++i)
        if (!spf[i])
            for (long j = i; j <= M; j += i)
                if (!spf[j]) spf[j] = i;
    std::map<long, std::vector<BigInt>> local;  // p -> b_r = coefficient of p^{-rs} in 1/C_p
    for (long n = 2; n <= M; ++n) {
        long p = spf[n];
        long r = 0, n0 = n;
        while (n0 % p == 0) {
            n0 /= p;
            ++r;
        }
        auto it = local.find(p);
        if (it == local.end()) it = local.emplace(p, std::vector<BigInt>{BigInt(1)}).first;
        auto& b = it->second;
        while (static_cast<long>(b.size()) <= r) {
            // b_r = - sum_{i=1..min(r,d)} C_i b_{r-i}
            long rr = static_cast<long>(b.size());
            auto C = L.euler_factor(p);
            BigInt s = 0;
            for (long i = 1; i < static_cast<long>(C.size()) && i <= rr; ++i) s += C[i] * b[rr - i];
            b.push_back(-s);
        }
        a[n] = a[n0] * b[r];
    }
    return a;
}

// ---------------------------------------------------------------------------
// Smoothed approximate functional equation.
//
// G_s(y) = (1/2 pi i) int_{(c)} gamma(s + z) y^{-z} dz / z, where gamma is
// the product of Gamma_C factors; then for X > 0
//   Lambda~(s) = Q^{s/2} sum a(n) n^{-s} G_s(n/(X sqrt Q))
//              + eps Q^{(w-s)/2} sum a(n) n^{s-w} G_{w-s}(n X / sqrt Q).
// The contour integral is a trapezoid sum along Re z = c whose integrand
// factor gamma(s+c+it)/(c+it) is cached; per-n evaluation costs one complex
// exponential plus the cached-node sweep.
// ---------------------------------------------------------------------------
class GammaKernel {
  public:
    GammaKernel(const std::vector<Rational>& shifts, const Rational& s, long w, int digits)
        : digits_(digits), prec_(bits_for_digits(digits + 12)), s_(s, prec_) {
        double sd = Rational(s).get_d();
        double min_shift = 0;
        for (auto& mu : shifts) min_shift = std::min(min_shift, Rational(mu).get_d());
        double c = std::max({2.0, w / 2.0 + 1.75 - sd, 0.75 - (sd + min_shift)});
        c_ = Real(c, prec_);
        double strip = std::min(c, sd + c + min_shift);
        double eps_exp = (digits + 8) * 2.302585092994046;
        double h = 2 * 3.141592653589793 * strip * 0.93 / eps_exp;
        h_ = Real(h, prec_);

        Real ln2pi = log(const_pi(prec_) * 2);
        Real ln2 = log(Real(2L, prec_));
        long dprime = static_cast<long>(shifts.size());
        (void)dprime;
        auto gamma_log = [&](const Complex& z) {
            // log of prod_j Gamma_C(z + mu_j) = sum_j [log 2 - (z+mu_j) log 2pi + lngamma(z+mu_j)]
            Complex acc(prec_);
            for (auto& mu : shifts) {
                Complex zj{z.re + Real(mu, prec_), z.im};
                acc = acc + lngamma(zj, digits + 10);
                acc.re += ln2 - zj.re * ln2pi;
                acc.im -= zj.im * ln2pi;
            }
            return acc;
        };

        Real eps = pow10(-(digits + 8), prec_);
        Real scale(prec_);
        for (long k = 0; k < 200000; ++k) {
            Real t = h_ * k;
            Complex z{s_ + c_, t};
            Complex phi = exp(gamma_log(z)) / Complex{c_, t};
            if (k == 0) scale = phi.abs();
            nodes_.push_back(phi);
            if (k > 3 && phi.abs() < eps * scale) break;
        }
    }

    // G_s(y) for y > 0
    Real eval(const Real& y) const {
        Real ln_y = log(y);
        Complex om{cos(h_ * ln_y), -sin(h_ * ln_y)};
        Real acc = nodes_[0].re;
        Complex run = om;
        for (size_t k = 1; k < nodes_.size(); ++k) {
            acc += (nodes_[k].re * run.re - nodes_[k].im * run.im) * 2;
            run = run * om;
        }
        Real pi = const_pi(prec_);
        return pow(y, -c_) * h_ / (pi * 2) * acc;
    }

    // crude magnitude probe used for truncation decisions
    double log10_magnitude(double y) const {
        Real g = eval(Real(y, prec_));
        double m = std::abs(g.to_double());
        if (m == 0) {
            mpfr_exp_t e = g.is_zero() ? -999999 : mpfr_get_exp(g.get());
            return e * 0.30103;
        }
        return std::log10(m);
    }

    mpfr_prec_t prec() const { return prec_; }

  private:
    int digits_;
    mpfr_prec_t prec_;
    Real s_, c_, h_;
    std::vector<Complex> nodes_;
};

// gamma factor at a real point: prod_j Gamma_C(s + mu_j)
inline Real gamma_factor_at(const LSeries& L, const Rational& s, int digits) {
    mpfr_prec_t prec = bits_for_digits(digits + 10);
    Real r(1L, prec);
    Real two_pi = const_pi(prec) * 2;
    for (auto& mu : L.gamma_shifts) {
        Rational arg = s + mu;
        r *= Real(2L, prec) * pow(two_pi, Real(-arg, prec)) * gamma(arg, digits + 5);
    }
    return r;
}

// Direct Dirichlet-series value of Lambda(s) = gamma(s) sum a(n) n^{-s} in
// the region of absolute convergence (truncated; tail decays polynomially).
inline Real lambda_by_series(const LSeries& L, const Rational& s, int digits, long M) {
    mpfr_prec_t prec = bits_for_digits(digits + 10);
    const auto& a = dirichlet_coefficients(L, M);
    Real sum(prec);
    for (long n = 1; n <= M; ++n) {
        if (a[n] == 0) continue;
        sum += Real(a[n], prec) * pow_rat(Real(n, prec), -s);
    }
    return gamma_factor_at(L, s, digits) * sum;
}

struct LValue {
    Real value;           // Lambda(s) in the paper normalization (no conductor power)
    Real error_estimate;
    long terms_used = 0;
};

namespace detail {

// truncation index: smallest M with envelope(n) |G(n/scale)| below eps_abs.
// The numeric kernel probe bottoms out at its own noise floor, so past the
// first probe the known superexponential decay exp(-d' 2pi y^{1/d'}) of the
// inverse-Mellin kernel caps the estimate from above.
inline long afe_truncation(const GammaKernel& K, double scale, double coeff_exp, double eps_log10,
                           long hard_cap, int dprime, int digits) {
    long M = 8;
    double g0 = K.log10_magnitude(M / scale);
    bool floored = false;
    double yf = 0, gf = 0;
    for (;;) {
        double y = M / scale;
        double g = K.log10_magnitude(y);
        if (!floored && g <= g0 - (digits + 2.0)) {
            floored = true;
            yf = y;
            gf = g;
        }
        if (floored) {
            // past its numeric floor the kernel keeps decaying like
            // exp(-d' 2pi y^{1/d'}); use half that rate as a safe cap
            double analytic = gf - 0.5 * 2.7288 * dprime *
                                       (std::pow(y, 1.0 / dprime) - std::pow(yf, 1.0 / dprime));
            g = std::min(g, analytic);
        }
        double env = coeff_exp * std::log10(static_cast<double>(M));
        if (g + env < eps_log10 || M >= hard_cap) break;
        M = M * 5 / 4 + 8;
    }
    return std::min(M, hard_cap);
}

}  // namespace detail

// Smoothed-AFE evaluation of Lambda(s) (paper normalization: conductor
// powers appear only inside the functional equation, never in the value).
// X is the AFE balance point; the value is X-independent exactly when
// (sign, conductor) are correct, which the residual scan exploits.
inline LValue evaluate_completed(const LSeries& L, const Rational& s, int digits,
                                 const Rational& X = Rational(1), long hard_cap = 2000000,
                                 long force_min_terms = 0) {
    mpfr_prec_t prec = bits_for_digits(digits + 12);
    GammaKernel K1(L.gamma_shifts, s, L.w, digits);
    GammaKernel K2(L.gamma_shifts, Rational(L.w) - s, L.w, digits);

    Real sqrtQ = sqrt(Real(L.conductor, prec));
    double sqrtQ_d = sqrtQ.to_double();
    double Xd = Rational(X).get_d();
    // |a(n)| <= d_k(n) n^{(w-1)/2}; the divisor factor is absorbed into +1.2
    double coeff_exp = (L.w - 1) / 2.0 + 1.2;
    double sd = Rational(s).get_d();
    // log10 of gamma(s), the natural scale of the leading series terms
    auto gamma_scale = [&](double at) {
        double acc = 0;
        for (auto& mu : L.gamma_shifts) {
            double arg = at + Rational(mu).get_d();
            if (arg <= 0.5) return 0.0;  // reflected scale handled by the other side
            acc += std::lgamma(arg) / 2.302585092994046 - arg * std::log10(6.283185307179586) +
                   std::log10(2.0);
        }
        return acc;
    };
    double scale = std::max(gamma_scale(sd), 0.0);
    // side 2 enters weighted by Q^{(w-2s)/2}; its absolute target loosens accordingly
    double logW2 = (L.w - 2.0 * sd) / 2.0 * std::log10(std::max(1.0, L.conductor.get_d()));
    double eps1 = scale - (digits + 4.0);
    double eps2 = scale - (digits + 4.0) - logW2;
    int dprime = static_cast<int>(L.gamma_shifts.size());
    long M1 = detail::afe_truncation(K1, sqrtQ_d * Xd, coeff_exp - sd, eps1, hard_cap, dprime, digits);
    long M2 = detail::afe_truncation(K2, sqrtQ_d / Xd, coeff_exp - (L.w - sd), eps2, hard_cap, dprime, digits);
    M1 = std::max(M1, force_min_terms);
    M2 = std::max(M2, force_min_terms);
    long M = std::max(M1, M2);
    if (M >= hard_cap)
        throw std::runtime_error("evaluate_completed: precision unreachable with coefficient cap " +
                                 std::to_string(hard_cap) + "; required truncation exceeds it");
    const auto& a = dirichlet_coefficients(L, M);

    Real sum1(prec), sum2(prec);
    Real Xr(X, prec);
    for (long n = 1; n <= M1; ++n) {
        if (a[n] == 0) continue;
        Real nr(n, prec);
        sum1 += Real(a[n], prec) * pow_rat(nr, -s) * K1.eval(nr / (sqrtQ * Xr));
    }
    for (long n = 1; n <= M2; ++n) {
        if (a[n] == 0) continue;
        Real nr(n, prec);
        sum2 += Real(a[n], prec) * pow_rat(nr, s - Rational(L.w)) * K2.eval(nr * Xr / sqrtQ);
    }
    // Lambda_paper(s) = Q^{-s/2} Lambda~(s) = sum1 + eps Q^{(w - 2s)/2} sum2
    Real qpow = pow_rat(Real(L.conductor, prec), (Rational(L.w) - Rational(2) * s) / Rational(2));
    Real value = sum1 + Real(static_cast<long>(L.sign), prec) * qpow * sum2;

    LValue out;
    out.value = value;
    out.terms_used = M;
    // error: kernel construction accuracy plus the truncation envelope
    Real tail = pow10(static_cast<long>(eps1 - scale), prec) * (abs(value) + Real(1L, prec));
    out.error_estimate = tail + abs(value) * pow10(-(digits + 2), prec);
    return out;
}

struct SignConductorResult {
    int sign;
    BigInt conductor;
    Real residual;
};

// Empirical determination of (eps, Q): minimize the AFE-vs-series residual at
// an absolutely convergent point plus the X-independence residual; the winner
// must clear 1e-8 relative.
inline SignConductorResult determine_sign_and_conductor(LSeries& L, const std::vector<BigInt>& candidates,
                                                        int digits = 14) {
    if (candidates.empty()) throw std::domain_error("determine_sign_and_conductor: no candidates");
    Rational s0 = Rational(L.w) / 2 + 6;
    Rational s1 = Rational(L.w) / 2 + Rational(3, 2);
    mpfr_prec_t prec = bits_for_digits(digits + 12);

    long Mser = 400;
    Real series = lambda_by_series(L, s0, digits + 4, Mser);

    SignConductorResult best{0, BigInt(0), Real(0L, prec)};
    bool have_best = false;
    for (const BigInt& Q : candidates) {
        for (int eps : {1, -1}) {
            L.conductor = Q;
            L.sign = eps;
            Real r1 = rel_err(evaluate_completed(L, s0, digits).value, series);
            Real v_a = evaluate_completed(L, s1, digits, Rational(13, 10)).value;
            Real v_b = evaluate_completed(L, s1, digits, Rational(1)).value;
            Real r2 = rel_err(v_a, v_b);
            Real resid = r1 + r2;
            if (!have_best || resid < best.residual) {
                best = {eps, Q, resid};
                have_best = true;
            }
        }
    }
    Real thresh = pow10(-8, prec);
    if (best.residual >= thresh)
        throw std::runtime_error("determine_sign_and_conductor: no candidate clears 1e-8 (best residual " +
                                 best.residual.to_string(3) + ")");
    L.sign = best.sign;
    L.conductor = best.conductor;
    return best;
}

inline std::vector<BigInt> default_conductor_candidates(long N) {
    std::vector<BigInt> qs;
    if (N == 1) return {BigInt(1)};
    BigInt q = 1;
    for (int a = 1; a <= 7; ++a) {
        q *= N;
        qs.push_back(q);
    }
    return qs;
}

}  // namespace sklift

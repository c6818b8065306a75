#pragma once

#include "newforms.hpp"
#include "real.hpp"
#include "symbols.hpp"

namespace sklift {

// Element a + b sqrt(rad) of a real quadratic extension; the local Whittaker
// polynomial values live in Q(sqrt(p)) and their prime-local products must
// come out rational, which is asserted rather than assumed.
struct QuadExt {
    Rational a, b;
    BigInt rad = 1;

    QuadExt() : a(0), b(0) {}
    QuadExt(Rational a_, Rational b_, BigInt rad_) : a(std::move(a_)), b(std::move(b_)), rad(std::move(rad_)) {}
    static QuadExt rational(const Rational& x) { return {x, Rational(0), BigInt(1)}; }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        if (x.rad != y.rad && x.b != 0 && y.b != 0) throw std::domain_error("QuadExt: mixed radicands");
        return {x.a + y.a, x.b + y.b, x.b != 0 ? x.rad : y.rad};
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        if (x.rad != y.rad && x.b != 0 && y.b != 0) throw std::domain_error("QuadExt: mixed radicands");
        return {x.a - y.a, x.b - y.b, x.b != 0 ? x.rad : y.rad};
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        if (x.rad != y.rad && x.b != 0 && y.b != 0) throw std::domain_error("QuadExt: mixed radicands");
        BigInt r = x.b != 0 ? x.rad : y.rad;
        return {x.a * y.a + x.b * y.b * Rational(r), x.a * y.b + x.b * y.a, r};
    }
    friend QuadExt operator*(const QuadExt& x, const Rational& s) { return {x.a * s, x.b * s, x.rad}; }
    bool is_rational() const { return b == 0; }
    bool is_zero() const { return a == 0 && b == 0; }
    Real to_real(int digits) const {
        mpfr_prec_t prec = bits_for_digits(digits);
        return Real(a, prec) + Real(b, prec) * sqrt(Real(rad, prec));
    }
};

// Kohnen plus-space fixture: printed coefficients of the newform's lift plus
// the machinery to extend them to non-fundamental indices.
struct PlusSpaceForm {
    std::string label;
    Newform parent;
    long kappa_prime = 0;
    long level = 0;  // 4N
    std::map<long, BigInt> c;

    bool in_plus_space_support(long n) const {
        long r = ((kappa_prime % 2 ? -n : n) % 4 + 4) % 4;
        return r == 0 || r == 1;
    }
    bool stored(long n) const { return c.count(n) != 0; }
    BigInt stored_coeff(long n) const {
        auto it = c.find(n);
        if (it == c.end())
            throw std::out_of_range("PlusSpaceForm: c(" + std::to_string(n) + ") beyond stored range");
        return it->second;
    }
};

inline PlusSpaceForm plus_form_fixture(const std::string& label, long parent_truncation = 2000) {
    PlusSpaceForm h;
    h.label = label;
    if (label == "h19_2.4") {
        h.parent = newform_fixture("f18.1", parent_truncation);
        h.kappa_prime = 9;
        h.level = 4;
        h.c = {{3, 1}, {4, -2}, {7, -16}, {8, 36}, {11, 99}};
        for (long n : {1, 2, 5, 6, 9, 10}) h.c[n] = 0;  // plus-space support and displayed gaps
    } else if (label == "h3_2.60") {
        h.parent = newform_fixture("f2.15", parent_truncation);
        h.kappa_prime = 1;
        h.level = 60;
        h.c = {{3, 1}, {8, -2}, {15, -1}, {20, 2}, {23, 2}};
        for (long n = 1; n <= 23; ++n)
            if (!h.c.count(n)) h.c[n] = 0;
    } else {
        throw std::domain_error("plus_form_fixture: unknown label " + label);
    }
    return h;
}

// xi = d f^2 with -d the fundamental discriminant of Q(sqrt(-xi)).
inline std::pair<BigInt, Rational> fundamental_part(const Rational& xi) {
    if (xi <= 0) throw std::domain_error("fundamental_part: need xi > 0");
    auto [ker, f0] = squarefree_decomposition(xi.get_num() * xi.get_den());
    // -ker is the field discriminant iff -ker = 1 mod 4, else the discriminant is -4 ker
    BigInt d = (mpz_class(ker % 4) == 3) ? ker : 4 * ker;
    Rational f2 = xi / Rational(d);
    BigInt fn, fd;
    if (!mpz_perfect_square_p(f2.get_num().get_mpz_t()) || !mpz_perfect_square_p(f2.get_den().get_mpz_t()))
        throw std::runtime_error("fundamental_part: internal square extraction failed");
    mpz_sqrt(fn.get_mpz_t(), f2.get_num().get_mpz_t());
    mpz_sqrt(fd.get_mpz_t(), f2.get_den().get_mpz_t());
    return {d, make_rational(fn, fd)};
}

enum class PsiKind { unramified_odd_p, p_equals_2, steinberg };

namespace detail {

// S_q(T) = (X^{q+1} - X^{-q-1})/(X - X^{-1}) as a polynomial in T = X + X^{-1}.
inline QuadExt chebyshev_s(long q, const QuadExt& T) {
    if (q < 0) return QuadExt();
    QuadExt s0 = QuadExt::rational(Rational(1));
    if (q == 0) return s0;
    QuadExt s1 = T;
    for (long k = 1; k < q; ++k) {
        QuadExt s2 = T * s1 - s0;
        s0 = s1;
        s1 = s2;
    }
    return s1;
}

inline long ord_p_rational(const Rational& x, long p) {
    return ord_p(x.get_num(), BigInt(p)) - ord_p(x.get_den(), BigInt(p));
}

// T = alpha_p + alpha_p^{-1} = a(p) p^{-kappa'} sqrt(p) for a good prime of
// the weight-2kappa' parent.
inline QuadExt unit_root_sum_exact(const Newform& f, long p) {
    long kp = f.kappa_prime();
    return {Rational(0), Rational(f.a(p)) * pow_rat(Rational(p), -kp), BigInt(p)};
}

}  // namespace detail

// The local Whittaker polynomial Psi_p(xi; alpha_p), evaluated exactly.
inline QuadExt psi_poly(PsiKind kind, long p, const Rational& xi, const Newform& f) {
    if (xi == 0) throw std::domain_error("psi_poly: xi must be nonzero");
    long m = detail::ord_p_rational(xi, p);
    if (m < 0) return QuadExt();

    switch (kind) {
        case PsiKind::unramified_odd_p: {
            if (p == 2 || f.level % p == 0) throw std::domain_error("psi_poly: kind/p mismatch");
            QuadExt T = detail::unit_root_sum_exact(f, p);
            if (m % 2 == 0) {
                int sym = hilbert_symbol(Rational(p), -xi, BigInt(p));
                QuadExt corr{Rational(0), make_rational(sym, p), BigInt(p)};  // p^{-1/2} (p,-xi)_p
                return detail::chebyshev_s(m / 2, T) - corr * QuadExt::rational(Rational(1)) *
                                                           detail::chebyshev_s(m / 2 - 1, T);
            }
            return detail::chebyshev_s((m - 1) / 2, T);
        }
        case PsiKind::p_equals_2: {
            if (p != 2 || f.level % 2 == 0) throw std::domain_error("psi_poly: kind/p mismatch");
            QuadExt T = detail::unit_root_sum_exact(f, 2);
            if (m % 2 == 0) {
                Rational u = xi / pow_rat(Rational(2), m);
                long u4 = mpz_class(((u.get_num() * u.get_den()) % 4 + 4) % 4).get_si();
                if (u4 == 3) {
                    int sym = hilbert_symbol(Rational(2), xi, BigInt(2));
                    QuadExt corr{Rational(0), make_rational(sym, 2), BigInt(2)};
                    return detail::chebyshev_s(m / 2, T) - corr * detail::chebyshev_s(m / 2 - 1, T);
                }
                return detail::chebyshev_s(m / 2 - 1, T);
            }
            return detail::chebyshev_s((m - 3) / 2, T);
        }
        case PsiKind::steinberg: {
            if (f.level % p != 0) throw std::domain_error("psi_poly: steinberg requires p | N");
            int eps = f.tau_signs.at(p);
            QuadExt alpha{Rational(0), make_rational(eps, p), BigInt(p)};  // eps_p p^{-1/2}
            long e = (m % 2 == 0) ? m / 2 : (m - 1) / 2;
            QuadExt r = QuadExt::rational(Rational(1));
            for (long i = 0; i < e; ++i) r = r * alpha;
            return r;
        }
    }
    throw std::logic_error("psi_poly: unreachable");
}

inline PsiKind psi_kind_for(const Newform& f, long p) {
    if (f.level % p == 0) return PsiKind::steinberg;
    return p == 2 ? PsiKind::p_equals_2 : PsiKind::unramified_odd_p;
}

struct ExtensionResult {
    Rational value;
    bool supported = true;
};

// c_h(xi) = c_h(d) f^{kappa'-1/2} prod_p Psi_p(xi; alpha_p), evaluated
// exactly; the sqrt(p) parts of the per-prime factors must cancel.
inline ExtensionResult extend_coefficient(const PlusSpaceForm& h, long xi) {
    if (xi <= 0) throw std::domain_error("extend_coefficient: need xi > 0");
    if (!h.in_plus_space_support(xi)) return {Rational(0), false};
    auto [d, f] = fundamental_part(Rational(xi));
    Rational cd(h.stored_coeff(d.get_si()));
    if (f == 1) return {cd, true};
    Rational total = cd;
    for (auto& [pz, e] : factorize(f.get_num())) {
        long p = pz.get_si();
        QuadExt psi = psi_poly(psi_kind_for(h.parent, p), p, Rational(xi), h.parent);
        // p^{e kappa'} (1/sqrt p)^e Psi_p
        QuadExt scale = (e % 2 == 0)
                            ? QuadExt::rational(pow_rat(Rational(p), e * h.kappa_prime - e / 2))
                            : QuadExt{Rational(0), pow_rat(Rational(p), e * h.kappa_prime - (e + 1) / 2),
                                      pz};
        QuadExt loc = scale * psi;
        if (!loc.is_rational())
            throw std::runtime_error("extend_coefficient: local factor not rational at p = " + std::to_string(p));
        total *= loc.a;
    }
    if (f.get_den() != 1) throw std::domain_error("extend_coefficient: fractional conductor part");
    return {total, true};
}

// Discriminants satisfying the auxiliary-field conditions: coprime to N,
// -D = 1 mod 8, -D fundamental, and (p, -tau_p D)_p = -1 at every p | N.
inline std::vector<long> eligible_discriminants(const Newform& f, long bound) {
    std::vector<long> out;
    for (long D = 1; D <= bound; ++D) {
        if (gcd(BigInt(D), BigInt(f.level)) != 1) continue;
        if (((-D) % 8 + 8) % 8 != 1) continue;
        auto [d, ff] = fundamental_part(Rational(D));
        if (ff != 1) continue;
        bool ok = true;
        for (auto& [p, eps] : f.tau_signs)
            if (hilbert_symbol(Rational(p), Rational(-D), BigInt(p)) != -eps) ok = false;
        if (ok) out.push_back(D);
    }
    return out;
}

// <f,f>/<h,h> through the Kohnen-Zagier formula, given the central twisted
// L-value Lambda(kappa', f x chi_{-D}).
inline Real kohnen_zagier_ratio(const PlusSpaceForm& h, long D, const Real& lambda_central) {
    auto [d, f] = fundamental_part(Rational(D));
    if (d != D || f != 1) throw std::domain_error("kohnen_zagier_ratio: -D must be a fundamental discriminant");
    BigInt cD = h.stored_coeff(D);
    if (cD == 0) throw std::domain_error("kohnen_zagier_ratio: vanishing coefficient c(D)");
    long nu = 0;
    for (auto& [p, e] : factorize(BigInt(h.parent.level))) ++nu;
    mpfr_prec_t prec = lambda_central.prec();
    Real r = pow_si(Real(2L, prec), h.kappa_prime - 1 + nu) *
             pow_rat(Real(D, prec), Rational(2 * h.kappa_prime - 1, 2)) * lambda_central /
             Real(BigInt(cD * cD), prec);
    return r;
}

// |c_h(D)|^2 recovered by inverting Kohnen-Zagier, for fundamental D beyond
// the printed table (sign undetermined).
inline Real kz_inverted_coefficient_squared(const PlusSpaceForm& h, long D, const Real& lambda_central,
                                            const Real& ratio_f_over_h) {
    long nu = 0;
    for (auto& [p, e] : factorize(BigInt(h.parent.level))) ++nu;
    mpfr_prec_t prec = lambda_central.prec();
    return pow_si(Real(2L, prec), h.kappa_prime - 1 + nu) *
           pow_rat(Real(D, prec), Rational(2 * h.kappa_prime - 1, 2)) * lambda_central / ratio_f_over_h;
}

inline void write_plus_coefficients(std::ostream& os, const PlusSpaceForm& h) {
    os << "# plus-form " << h.label << " " << h.kappa_prime << " " << h.level << "\n";
    for (auto& [n, cn] : h.c) os << n << " " << cn.get_str() << "\n";
}

// Reads the "# plus-form label kappa_prime level" format; the parent newform
// is re-attached from the fixture registry by label suffix.
inline PlusSpaceForm read_plus_coefficients(std::istream& is, const Newform& parent) {
    PlusSpaceForm h;
    std::string hash, kind;
    is >> hash >> kind >> h.label >> h.kappa_prime >> h.level;
    if (hash != "#" || kind != "plus-form") throw std::runtime_error("read_plus_coefficients: bad header");
    h.parent = parent;
    long n;
    std::string v;
    while (is >> n >> v) h.c[n] = BigInt(v);
    return h;
}

}  // namespace sklift

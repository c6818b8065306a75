#pragma once

#include <fstream>
#include <mutex>
#include <sstream>

#include "qseries.hpp"
#include "symbols.hpp"

namespace sklift {

// The weight/level tuple governing every formula downstream.
struct GlobalParameters {
    long kappa;
    long kappa_prime;
    long m;  // (kappa - kappa')/2
    long N;

    GlobalParameters(long k, long kp, long level) : kappa(k), kappa_prime(kp), m((k - kp) / 2), N(level) {
        if (k < kp || (k - kp) % 2 != 0) throw std::domain_error("GlobalParameters: need kappa - kappa' in 2Z>=0");
        if (level < 1 || level % 2 == 0 || !is_squarefree(level))
            throw std::domain_error("GlobalParameters: N must be odd and squarefree");
    }
};

// A normalized eigenform fixture with integral coefficients.
struct Newform {
    std::string label;
    long level = 1;
    long weight = 0;
    std::vector<BigInt> an;  // an[n], n = 0..truncation, an[0] = 0, an[1] = 1
    std::map<long, int> tau_signs;  // p | N -> eps_p = p^{1-kappa'} a(p)
    std::map<long, int> al_signs;   // Q | N -> Atkin-Lehner eigenvalue lambda_Q

    long truncation() const { return static_cast<long>(an.size()) - 1; }
    long kappa_prime() const {
        if (weight % 2) throw std::domain_error("kappa_prime: odd weight");
        return weight / 2;
    }
    long kappa() const { return weight - 1; }

    const BigInt& a(long n) const {
        if (n < 1 || n > truncation())
            throw std::out_of_range("Newform::a: n = " + std::to_string(n) + " beyond truncation " +
                                    std::to_string(truncation()));
        return an[n];
    }
};

namespace detail {

inline std::vector<BigInt> integer_coeffs(const QExpansion& q) {
    std::vector<BigInt> v(q.truncation() + 1);
    for (long n = 0; n <= q.truncation(); ++n) {
        const Rational& c = q.coeff(n);
        if (c.get_den() != 1) throw std::runtime_error("integer_coeffs: non-integral coefficient");
        v[n] = c.get_num();
    }
    return v;
}

inline void attach_level_data(Newform& f) {
    long kp = f.kappa_prime();
    for (long p : divisors_of(f.level)) {
        if (p == 1 || !is_prime(BigInt(p))) continue;
        Rational eps = Rational(f.a(p)) * pow_rat(Rational(p), 1 - kp);
        if (eps != 1 && eps != -1) throw std::runtime_error("attach_level_data: a(p) not of Steinberg size at p | N");
        f.tau_signs[p] = static_cast<int>(eps.get_num().get_si());
    }
    for (long Q : divisors_of(f.level)) {
        int lam = 1;
        for (auto& [p, eps] : f.tau_signs)
            if (Q % p == 0) lam *= -eps;
        f.al_signs[Q] = lam;
    }
}

}  // namespace detail

// Registered eigenform fixtures, built from eta products and Eisenstein
// series rather than shipped as opaque tables.
inline Newform newform_fixture(const std::string& label, long M = 2000) {
    static std::map<std::pair<std::string, long>, Newform> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(label, M);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    Newform f;
    f.label = label;
    if (label == "g12.1") {
        f.level = 1;
        f.weight = 12;
        f.an = detail::integer_coeffs(eta_quotient({{1, 24}}, M));
    } else if (label == "f18.1") {
        f.level = 1;
        f.weight = 18;
        f.an = detail::integer_coeffs(eta_quotient({{1, 24}}, M) * eisenstein(6, M));
    } else if (label == "f2.15") {
        f.level = 15;
        f.weight = 2;
        f.an = detail::integer_coeffs(eta_quotient({{1, 1}, {3, 1}, {5, 1}, {15, 1}}, M));
    } else {
        throw std::domain_error("newform_fixture: unknown label " + label);
    }
    if (f.an.at(1) != 1) throw std::runtime_error("newform_fixture: not normalized");
    detail::attach_level_data(f);
    return cache.emplace(key, std::move(f)).first->second;
}

// Satake data at p.  For p not dividing N the pair {alpha_p, alpha_p^{-1}}
// is carried implicitly through a(p) and p^{k-1} (alpha + alpha^{-1} =
// a(p) p^{(1-k)/2}); for p | N it degenerates to alpha_p = eps_p p^{-1/2}.
struct SatakeData {
    bool good;
    long p;
    long weight;
    BigInt ap;
    int eps_p = 0;  // only for p | N

    // alpha_p + alpha_p^{-1} as a real number (good primes only)
    Real unit_root_sum(int digits) const {
        if (!good) throw std::domain_error("unit_root_sum: bad prime");
        mpfr_prec_t prec = bits_for_digits(digits);
        return Real(ap, prec) / pow_rat(Real(p, prec), Rational(weight - 1, 2));
    }
};

inline SatakeData satake(const Newform& f, long p) {
    if (!is_prime(BigInt(p))) throw std::domain_error("satake: p must be prime");
    SatakeData s;
    s.p = p;
    s.weight = f.weight;
    s.ap = f.a(p);
    if (f.level % p == 0) {
        s.good = false;
        s.eps_p = f.tau_signs.at(p);
        return s;
    }
    s.good = true;
    // Ramanujan bound a(p)^2 <= 4 p^{k-1}
    if (s.ap * s.ap > 4 * pow_int(BigInt(p), f.weight - 1))
        throw std::runtime_error("satake: coefficient violates the Ramanujan bound; corrupt fixture");
    return s;
}

// a(n) for arbitrary n via multiplicativity and the Hecke recurrences.
inline BigInt coefficient(const Newform& f, const BigInt& n) {
    if (n < 1) throw std::domain_error("coefficient: need n >= 1");
    if (n <= f.truncation()) return f.an[n.get_si()];
    BigInt r = 1;
    for (auto& [p, e] : factorize(n)) {
        if (p > f.truncation())
            throw std::out_of_range("coefficient: prime " + p.get_str() + " beyond fixture truncation");
        long pl = p.get_si();
        BigInt ap = f.a(pl);
        BigInt pk = pow_int(p, f.weight - 1);
        BigInt prev = 1, cur = ap;
        if (f.level % pl == 0) {
            BigInt v = 1;
            for (long i = 0; i < e; ++i) v *= ap;
            r *= v;
            continue;
        }
        for (long i = 1; i < e; ++i) {
            BigInt next = ap * cur - pk * prev;
            prev = cur;
            cur = next;
        }
        r *= (e == 0) ? BigInt(1) : cur;
    }
    return r;
}

// Coefficients of T_p f from the raw expansion (test oracle for the
// eigenform property).
inline BigInt hecke_tp_coefficient(const Newform& f, long p, long n) {
    BigInt b = coefficient(f, BigInt(n) * p);
    if (f.level % p != 0 && n % p == 0) b += pow_int(BigInt(p), f.weight - 1) * f.a(n / p);
    return b;
}

// Plain-text fixture export: header "# label weight level truncation",
// then one "n a(n)" line per coefficient.
inline void write_coefficients(std::ostream& os, const Newform& f) {
    os << "# " << f.label << " " << f.weight << " " << f.level << " " << f.truncation() << "\n";
    for (long n = 1; n <= f.truncation(); ++n) os << n << " " << f.an[n].get_str() << "\n";
}

inline Newform read_coefficients(std::istream& is) {
    Newform f;
    std::string hash;
    long trunc;
    is >> hash >> f.label >> f.weight >> f.level >> trunc;
    if (hash != "#") throw std::runtime_error("read_coefficients: bad header");
    f.an.assign(trunc + 1, BigInt(0));
    long n;
    std::string v;
    while (is >> n >> v) {
        if (n < 1 || n > trunc) throw std::runtime_error("read_coefficients: index out of range");
        f.an[n] = BigInt(v);
    }
    detail::attach_level_data(f);
    return f;
}

}  // namespace sklift

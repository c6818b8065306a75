#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sklift {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den) {
    return make_rational(BigInt(num), BigInt(den));
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow_rat(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    BigInt n = pow_int(base.get_num(), static_cast<unsigned long>(e < 0 ? -e : e));
    BigInt d = pow_int(base.get_den(), static_cast<unsigned long>(e < 0 ? -e : e));
    return e > 0 ? make_rational(n, d) : make_rational(d, n);
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Gamma(n) for integer n >= 1, as an exact integer.
inline BigInt gamma_int(long n) {
    if (n <= 0) throw std::domain_error("gamma_int: pole at non-positive integer");
    return factorial(static_cast<unsigned long>(n - 1));
}

inline long ord_p(BigInt n, const BigInt& p) {
    if (n == 0) throw std::domain_error("ord_p(0)");
    long v = 0;
    n = abs(n);
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    return v;
}

inline bool is_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

inline std::vector<long> primes_up_to(long n) {
    std::vector<bool> comp(std::max<long>(n + 1, 2), false);
    std::vector<long> ps;
    for (long i = 2; i <= n; ++i) {
        if (!comp[i]) {
            ps.push_back(i);
            for (long j = 2 * i; j <= n; j += i) comp[j] = true;
        }
    }
    return ps;
}

// Prime factorization by trial division, with a Pollard rho fallback for
// any cofactor beyond the trial bound.  Desk-scale inputs only.
inline void pollard_rho(const BigInt& n, std::map<BigInt, long>& out);

inline std::map<BigInt, long> factorize(BigInt n) {
    if (n == 0) throw std::domain_error("factorize(0)");
    std::map<BigInt, long> f;
    n = abs(n);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            f[p]++;
            n /= p;
        }
    }
    for (long p = 17; p <= 1000000 && n > 1; p += 2) {
        if (BigInt(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            f[p]++;
            n /= p;
        }
    }
    if (n > 1) {
        if (is_prime(n))
            f[n]++;
        else
            pollard_rho(n, f);
    }
    return f;
}

inline void pollard_rho(const BigInt& n, std::map<BigInt, long>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n]++;
        return;
    }
    BigInt x = 2, y = 2, d = 1, c = 1;
    while (true) {
        x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd(x - y, n);
        }
        if (d != n) break;
        c += 1;
    }
    pollard_rho(d, out);
    pollard_rho(n / d, out);
}

inline std::vector<long> divisors_of(long n) {
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline bool is_squarefree(long n) {
    if (n == 0) return false;
    n = std::abs(n);
    for (long d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

// Largest f with f^2 | n; returns (squarefree kernel, f).
inline std::pair<BigInt, BigInt> squarefree_decomposition(const BigInt& n) {
    if (n <= 0) throw std::domain_error("squarefree_decomposition: need n > 0");
    BigInt ker = 1, f = 1;
    for (auto& [p, e] : factorize(n)) {
        if (e % 2) ker *= p;
        for (long i = 0; i < e / 2; ++i) f *= p;
    }
    return {ker, f};
}

}  // namespace sklift

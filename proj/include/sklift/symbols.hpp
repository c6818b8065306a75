#pragma once

#include "integers.hpp"

namespace sklift {

// Kronecker symbol (a|n), the full extension of the Jacobi symbol.
inline int kronecker(BigInt a, BigInt n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    long v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    if (v % 2) {
        // (a|2) = 0, 1, -1 for a even, a = +-1 mod 8, a = +-3 mod 8
        long am8 = mpz_class(((a % 8) + 8) % 8).get_si();
        if (am8 % 2 == 0) return 0;
        if (am8 == 3 || am8 == 5) result = -result;
    }
    a = ((a % n) + n) % n;
    while (a != 0) {
        long w = 0;
        while (a % 2 == 0) {
            a /= 2;
            ++w;
        }
        if (w % 2) {
            long nm8 = mpz_class(n % 8).get_si();
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        // quadratic reciprocity for odd positive a, n
        if (mpz_class(a % 4) == 3 && mpz_class(n % 4) == 3) result = -result;
        std::swap(a, n);
        a = a % n;
    }
    return n == 1 ? result : 0;
}

inline int kronecker(long a, long n) { return kronecker(BigInt(a), BigInt(n)); }

namespace detail {
// (u-1)/2 mod 2 and (u^2-1)/8 mod 2 for odd u.
inline int eps2(const BigInt& u) { return mpz_class(((u - 1) / 2) % 2 + 2).get_si() % 2; }
inline int omega2(const BigInt& u) {
    long um8 = mpz_class(((u % 8) + 8) % 8).get_si();
    return (um8 == 1 || um8 == 7) ? 0 : 1;
}
}  // namespace detail

// Hilbert symbol (a,b)_{Q_p} for nonzero rationals; p = 0 encodes the real place.
inline int hilbert_symbol(const Rational& a_in, const Rational& b_in, const BigInt& p) {
    if (a_in == 0 || b_in == 0) throw std::domain_error("hilbert_symbol: need a, b nonzero");
    if (p == 0) return (a_in < 0 && b_in < 0) ? -1 : 1;
    if (!is_prime(p)) throw std::domain_error("hilbert_symbol: p must be prime or 0 (real place)");

    // strip squares: only ord mod 2 and the unit part matter
    BigInt a = a_in.get_num() * a_in.get_den();
    BigInt b = b_in.get_num() * b_in.get_den();
    long alpha = ord_p(a, p), beta = ord_p(b, p);
    BigInt u = a / pow_int(p, alpha), v = b / pow_int(p, beta);
    alpha %= 2;
    beta %= 2;

    if (p != 2) {
        int s = 1;
        if (alpha && beta) {
            // (-1|p) factor
            if (mpz_class(p % 4) == 3) s = -s;
        }
        if (beta) s *= kronecker(u, p);
        if (alpha) s *= kronecker(v, p);
        return s;
    }
    // p = 2: (-1)^{eps(u)eps(v) + alpha*omega(v) + beta*omega(u)}
    int e = detail::eps2(u) * detail::eps2(v) + static_cast<int>(alpha) * detail::omega2(v) +
            static_cast<int>(beta) * detail::omega2(u);
    return e % 2 ? -1 : 1;
}

inline int hilbert_symbol(long a, long b, long p) {
    return hilbert_symbol(Rational(a), Rational(b), BigInt(p));
}

}  // namespace sklift

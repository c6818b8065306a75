#pragma once

#include <algorithm>
#include <vector>

#include "integers.hpp"
#include "specfun.hpp"

namespace sklift {

// Truncated q-expansion with exact rational coefficients.  Coefficients are
// valid for exponents n <= truncation(); asking beyond that is an error, the
// series never silently pads zeros.
class QExpansion {
  public:
    QExpansion() = default;
    explicit QExpansion(long truncation) : trunc_(truncation), c_(truncation + 1) {}
    QExpansion(std::vector<Rational> coeffs, long truncation) : trunc_(truncation), c_(std::move(coeffs)) {
        c_.resize(trunc_ + 1);
    }

    long truncation() const { return trunc_; }

    const Rational& coeff(long n) const {
        if (n < 0) throw std::domain_error("QExpansion::coeff: negative exponent");
        if (n > trunc_)
            throw std::out_of_range("QExpansion::coeff: exponent " + std::to_string(n) +
                                    " beyond truncation " + std::to_string(trunc_));
        return c_[n];
    }
    Rational& coeff_mut(long n) { return c_[n]; }

    // order of the first nonzero coefficient; trunc+1 for the zero series
    long leading_order() const {
        for (long n = 0; n <= trunc_; ++n)
            if (c_[n] != 0) return n;
        return trunc_ + 1;
    }

    friend QExpansion operator+(const QExpansion& a, const QExpansion& b) {
        QExpansion r(std::min(a.trunc_, b.trunc_));
        for (long n = 0; n <= r.trunc_; ++n) r.c_[n] = a.c_[n] + b.c_[n];
        return r;
    }
    friend QExpansion operator-(const QExpansion& a, const QExpansion& b) {
        QExpansion r(std::min(a.trunc_, b.trunc_));
        for (long n = 0; n <= r.trunc_; ++n) r.c_[n] = a.c_[n] - b.c_[n];
        return r;
    }
    friend QExpansion operator*(const QExpansion& a, const Rational& s) {
        QExpansion r(a.trunc_);
        for (long n = 0; n <= r.trunc_; ++n) r.c_[n] = a.c_[n] * s;
        return r;
    }

    // Product truncation: a is valid to A+ord(b) in degrees coming from b's
    // tail and vice versa, so the product is valid to min(A+ord_b, B+ord_a).
    friend QExpansion operator*(const QExpansion& a, const QExpansion& b) {
        long oa = a.leading_order(), ob = b.leading_order();
        long t = std::min(a.trunc_ + ob, b.trunc_ + oa);
        t = std::min(t, a.trunc_ + b.trunc_);
        QExpansion r(t);
        for (long i = oa; i <= std::min(a.trunc_, t); ++i) {
            if (a.c_[i] == 0) continue;
            long jmax = std::min(b.trunc_, t - i);
            for (long j = ob; j <= jmax; ++j) {
                if (b.c_[j] == 0) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    bool operator==(const QExpansion& o) const { return trunc_ == o.trunc_ && c_ == o.c_; }

  private:
    long trunc_ = 0;
    std::vector<Rational> c_;
};

namespace detail {

// prod_{n>=1} (1 - q^n) to q^M via the pentagonal number theorem (sparse).
inline std::vector<BigInt> euler_product(long M) {
    std::vector<BigInt> p(M + 1);
    p[0] = 1;
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
        if (g1 > M && g2 > M) break;
        BigInt s = (k % 2) ? -1 : 1;
        if (g1 <= M) p[g1] += s;
        if (g2 <= M) p[g2] += s;
    }
    return p;
}

inline std::vector<BigInt> sparse_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b, long M) {
    std::vector<BigInt> r(M + 1);
    for (long i = 0; i < static_cast<long>(a.size()) && i <= M; ++i) {
        if (a[i] == 0) continue;
        long jmax = std::min<long>(b.size() - 1, M - i);
        for (long j = 0; j <= jmax; ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// 1/a to q^M for a with a[0] = +-1.
inline std::vector<BigInt> unit_inverse(const std::vector<BigInt>& a, long M) {
    if (a.empty() || (a[0] != 1 && a[0] != -1)) throw std::domain_error("unit_inverse: non-unit constant term");
    std::vector<BigInt> r(M + 1);
    r[0] = a[0];
    for (long n = 1; n <= M; ++n) {
        BigInt s = 0;
        long kmax = std::min<long>(n, a.size() - 1);
        for (long k = 1; k <= kmax; ++k)
            if (a[k] != 0) s += a[k] * r[n - k];
        r[n] = -a[0] * s;
    }
    return r;
}

}  // namespace detail

// prod_d eta(d tau)^{e_d} as a q-expansion, for quotients whose leading
// power sum(d e_d)/24 is a non-negative integer.
inline QExpansion eta_quotient(const std::vector<std::pair<long, long>>& spec, long M) {
    long num24 = 0;
    for (auto& [d, e] : spec) {
        if (d < 1) throw std::domain_error("eta_quotient: divisors must be >= 1");
        num24 += d * e;
    }
    if (num24 % 24 != 0 || num24 < 0)
        throw std::domain_error("eta_quotient: leading q-power " + std::to_string(num24) +
                                "/24 is not a non-negative integer; unsupported fixture");
    long lead = num24 / 24;
    long Minner = M;  // expansion of the eta-product tail to q^M, shifted by `lead` at the end
    std::vector<BigInt> acc(Minner + 1);
    acc[0] = 1;
    for (auto& [d, e] : spec) {
        std::vector<BigInt> p1(Minner + 1);  // euler product in q^d
        {
            auto p = detail::euler_product(Minner / d);
            for (long i = 0; i < static_cast<long>(p.size()); ++i)
                if (p[i] != 0) p1[i * d] = p[i];
        }
        std::vector<BigInt> factor = (e > 0) ? p1 : detail::unit_inverse(p1, Minner);
        for (long rep = 0; rep < std::abs(e); ++rep) acc = detail::sparse_mul(factor, acc, Minner);
    }
    QExpansion r(M);
    for (long n = lead; n <= M; ++n) r.coeff_mut(n) = Rational(acc[n - lead]);
    return r;
}

// Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n.
inline QExpansion eisenstein(long k, long M) {
    if (k < 4 || k % 2 != 0) throw std::domain_error("eisenstein: need even k >= 4");
    Rational factor = Rational(-2 * k) / bernoulli(k);
    std::vector<BigInt> sigma(M + 1);
    for (long d = 1; d <= M; ++d) {
        BigInt dk = pow_int(BigInt(d), k - 1);
        for (long n = d; n <= M; n += d) sigma[n] += dk;
    }
    QExpansion r(M);
    r.coeff_mut(0) = 1;
    for (long n = 1; n <= M; ++n) r.coeff_mut(n) = factor * Rational(sigma[n]);
    return r;
}

}  // namespace sklift

#include <catch2/catch_amalgamated.hpp>

#include "sklift/plusforms.hpp"

using namespace sklift;

namespace {

// Independent construction of the weight-19/2 plus form on Gamma_0(4):
// under the Jacobi-form correspondence it is Delta(tau) * phi_{-2,1}(tau,z),
// and c_h(4n - r^2) is the (n,r) Fourier coefficient.  phi_{-2,1} =
// (zeta - 2 + 1/zeta) prod (1-q^n zeta)^2 (1-q^n/zeta)^2 (1-q^n)^{-4}.
class JacobiOracle {
  public:
    explicit JacobiOracle(long nmax) : nmax_(nmax), coef_(nmax + 1) {
        coef_[0][0] = 1;
        for (long n = 1; n <= nmax_; ++n) {
            mul_linear(n, 1);
            mul_linear(n, 1);
            mul_linear(n, -1);
            mul_linear(n, -1);
        }
        // times (prod (1-q^n))^{-4}
        auto euler = sklift::detail::euler_product(nmax_);
        std::vector<BigInt> u = sklift::detail::unit_inverse(euler, nmax_);
        for (int rep = 0; rep < 4; ++rep) mul_univariate(u);
        mul_zeta_weight_factor();
        mul_univariate(sklift::detail::integer_coeffs(eta_quotient({{1, 24}}, nmax_)));
    }

    // c_h(4n - r^2); throws if outside the computed window
    BigInt ch(long D) const {
        long Dm4 = ((D % 4) + 4) % 4;
        if (Dm4 == 1 || Dm4 == 2) return 0;  // no representation 4n - r^2
        for (long r = 0; r * r <= 4 * nmax_; ++r) {
            if ((D + r * r) % 4 == 0) {
                long n = (D + r * r) / 4;
                if (n <= nmax_) {
                    auto it = coef_[n].find(r);
                    return it == coef_[n].end() ? BigInt(0) : it->second;
                }
            }
        }
        throw std::out_of_range("JacobiOracle: D beyond window");
    }

    // index-1 Jacobi invariance: c(n,r) depends on 4n - r^2 only
    bool coefficient_consistency() const {
        std::map<long, BigInt> seen;
        for (long n = 0; n <= nmax_; ++n)
            for (auto& [r, v] : coef_[n]) {
                long D = 4 * n - r * r;
                if (D < 0) continue;
                auto [it, fresh] = seen.emplace(D, v);
                if (!fresh && it->second != v) return false;
            }
        return true;
    }

  private:
    void mul_linear(long a, long s) {  // multiply by (1 - q^a zeta^s)
        for (long n = nmax_; n >= a; --n)
            for (auto& [r, v] : coef_[n - a])
                coef_[n][r + s] -= v;
    }
    void mul_univariate(const std::vector<BigInt>& u) {
        std::vector<std::map<long, BigInt>> out(nmax_ + 1);
        for (long n = 0; n <= nmax_; ++n)
            for (auto& [r, v] : coef_[n])
                for (long k = 0; n + k <= nmax_; ++k)
                    if (u[k] != 0) out[n + k][r] += v * u[k];
        coef_ = std::move(out);
    }
    void mul_zeta_weight_factor() {  // times (zeta - 2 + zeta^{-1})
        std::vector<std::map<long, BigInt>> out(nmax_ + 1);
        for (long n = 0; n <= nmax_; ++n)
            for (auto& [r, v] : coef_[n]) {
                out[n][r + 1] += v;
                out[n][r] -= 2 * v;
                out[n][r - 1] += v;
            }
        coef_ = std::move(out);
    }

    long nmax_;
    std::vector<std::map<long, BigInt>> coef_;
};

}  // namespace

TEST_CASE("printed plus-form coefficients") {
    PlusSpaceForm h1 = plus_form_fixture("h19_2.4");
    REQUIRE(h1.stored_coeff(3) == 1);
    REQUIRE(h1.stored_coeff(4) == -2);
    REQUIRE(h1.stored_coeff(7) == -16);
    REQUIRE(h1.stored_coeff(8) == 36);
    REQUIRE(h1.stored_coeff(11) == 99);
    REQUIRE(h1.stored_coeff(5) == 0);  // (-1)^9 * 5 = 3 mod 4
    REQUIRE_FALSE(h1.in_plus_space_support(5));

    PlusSpaceForm h2 = plus_form_fixture("h3_2.60");
    REQUIRE(h2.stored_coeff(3) == 1);
    REQUIRE(h2.stored_coeff(8) == -2);
    REQUIRE(h2.stored_coeff(15) == -1);
    REQUIRE(h2.stored_coeff(20) == 2);
    REQUIRE(h2.stored_coeff(23) == 2);
    REQUIRE_THROWS_AS(plus_form_fixture("h5_2.7"), std::domain_error);
    REQUIRE_THROWS_AS(h2.stored_coeff(24), std::out_of_range);
}

TEST_CASE("fundamental_part") {
    auto [d1, f1] = fundamental_part(Rational(3));
    REQUIRE((d1 == 3 && f1 == 1));
    auto [d2, f2] = fundamental_part(Rational(12));
    REQUIRE((d2 == 3 && f2 == 2));
    auto [d3, f3] = fundamental_part(Rational(4));
    REQUIRE((d3 == 4 && f3 == 1));
    auto [d4, f4] = fundamental_part(Rational(5, 4));  // rational conductor part
    REQUIRE((d4 == 20 && f4 == Rational(1, 4)));
    REQUIRE_THROWS_AS(fundamental_part(Rational(-3)), std::domain_error);
}

TEST_CASE("psi polynomial special values") {
    Newform f18 = newform_fixture("f18.1", 100);
    // m = 0: the ratio term is 1 and the correction vanishes
    QuadExt v = psi_poly(PsiKind::unramified_odd_p, 5, Rational(3), f18);
    REQUIRE((v.is_rational() && v.a == 1));
    // m = 2 at an odd good prime: S_1(T) - p^{-1/2}(p,-xi)_p
    QuadExt w = psi_poly(PsiKind::unramified_odd_p, 3, Rational(9 * 2), f18);
    QuadExt T = sklift::detail::unit_root_sum_exact(f18, 3);
    int sym = hilbert_symbol(Rational(3), Rational(-18), BigInt(3));
    QuadExt expect = T - QuadExt{Rational(0), make_rational(sym, 3), BigInt(3)};
    REQUIRE(w.a == expect.a);
    REQUIRE(w.b == expect.b);
    // steinberg with m < 0 is 0 (outside the local support)
    Newform f15 = newform_fixture("f2.15", 100);
    QuadExt z = psi_poly(PsiKind::steinberg, 3, Rational(1, 3), f15);
    REQUIRE(z.is_zero());
    REQUIRE_THROWS_AS(psi_poly(PsiKind::steinberg, 7, Rational(3), f15), std::domain_error);
    REQUIRE_THROWS_AS(psi_poly(PsiKind::unramified_odd_p, 3, Rational(3), f15), std::domain_error);
}

TEST_CASE("plus-space support gives exact zeros") {
    PlusSpaceForm h = plus_form_fixture("h19_2.4");
    for (long xi : {1, 2, 5, 6, 9, 10, 13, 14}) {
        auto r = extend_coefficient(h, xi);
        REQUIRE_FALSE(r.supported);
        REQUIRE(r.value == 0);
    }
}

TEST_CASE("coefficient extension agrees with the independent Jacobi expansion") {
    JacobiOracle oracle(8);
    REQUIRE(oracle.coefficient_consistency());
    PlusSpaceForm h = plus_form_fixture("h19_2.4");
    // printed window reproduced by the oracle
    for (long n : {3, 4, 7, 8, 11}) REQUIRE(oracle.ch(n) == h.stored_coeff(n));
    for (long n : {1, 2, 5, 6, 9, 10}) REQUIRE(oracle.ch(n) == 0);
    // non-fundamental indices via the Psi_p relation vs the raw expansion
    for (long xi : {12, 16, 27, 28, 32}) {
        auto ext = extend_coefficient(h, xi);
        REQUIRE(ext.supported);
        REQUIRE(ext.value == Rational(oracle.ch(xi)));
    }
    // frozen spot values from the oracle run
    REQUIRE(extend_coefficient(h, 12).value == -272);
    REQUIRE(extend_coefficient(h, 16).value == 1056);
    REQUIRE(extend_coefficient(h, 27).value == -4284);
}

TEST_CASE("extension consistency for the level-60 fixture") {
    PlusSpaceForm h = plus_form_fixture("h3_2.60");
    // stored non-fundamental indices are reproduced exactly
    for (long xi : {12, 16}) {
        auto ext = extend_coefficient(h, xi);
        REQUIRE(ext.supported);
        REQUIRE(ext.value == Rational(h.stored_coeff(xi)));
    }
    // consistency with a stored fundamental one
    REQUIRE(extend_coefficient(h, 3).value == 1);
}

TEST_CASE("shimura T(p^2) relation links extended coefficients") {
    // a(p) c(xi) = c(p^2 xi) + ((-1)^{k'} xi | p) p^{k'-1} c(xi) + p^{2k'-1} c(xi/p^2)
    PlusSpaceForm h = plus_form_fixture("h19_2.4");
    const Newform& f = h.parent;
    for (long xi : {3, 4, 8}) {
        for (long p : {2, 3, 5}) {
            Rational lhs = Rational(f.a(p)) * Rational(h.stored_coeff(xi));
            Rational rhs = extend_coefficient(h, p * p * xi).value;
            long chi_arg = (h.kappa_prime % 2) ? -xi : xi;
            rhs += Rational(kronecker(chi_arg, p)) * pow_rat(Rational(p), h.kappa_prime - 1) *
                   Rational(h.stored_coeff(xi));
            if (xi % (p * p) == 0)
                rhs += pow_rat(Rational(p), 2 * h.kappa_prime - 1) * extend_coefficient(h, xi / (p * p)).value;
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("eligible discriminants") {
    Newform f18 = newform_fixture("f18.1", 50);
    auto ds = eligible_discriminants(f18, 10);
    REQUIRE(std::find(ds.begin(), ds.end(), 7) != ds.end());
    REQUIRE(std::find(ds.begin(), ds.end(), 3) == ds.end());  // -3 = 5 mod 8
    REQUIRE(std::find(ds.begin(), ds.end(), 8) == ds.end());  // -8 = 0 mod 8

    Newform f15 = newform_fixture("f2.15", 50);
    auto ds15 = eligible_discriminants(f15, 30);
    REQUIRE(ds15 == std::vector<long>{23});
}

#include <catch2/catch_amalgamated.hpp>

#include "sklift/qseries.hpp"

using namespace sklift;

TEST_CASE("eta quotient expansions") {
    QExpansion delta = eta_quotient({{1, 24}}, 3);
    REQUIRE(delta.coeff(0) == 0);
    REQUIRE(delta.coeff(1) == 1);
    REQUIRE(delta.coeff(2) == -24);
    REQUIRE(delta.coeff(3) == 252);

    QExpansion f15 = eta_quotient({{1, 1}, {3, 1}, {5, 1}, {15, 1}}, 2);
    REQUIRE(f15.coeff(1) == 1);
    REQUIRE(f15.coeff(2) == -1);

    QExpansion one = eta_quotient({}, 5);
    REQUIRE(one.coeff(0) == 1);
    for (long n = 1; n <= 5; ++n) REQUIRE(one.coeff(n) == 0);

    REQUIRE_THROWS_AS(eta_quotient({{1, 1}}, 5), std::domain_error);  // leading power 1/24
}

TEST_CASE("eta quotient with negative exponents") {
    // eta(tau)^{-24} * eta(tau)^{48} = eta(tau)^{24}
    QExpansion a = eta_quotient({{1, 48}, {1, -24}}, 6);
    QExpansion b = eta_quotient({{1, 24}}, 6);
    for (long n = 0; n <= 6; ++n) REQUIRE(a.coeff(n) == b.coeff(n));
}

TEST_CASE("eisenstein series") {
    QExpansion e4 = eisenstein(4, 4);
    REQUIRE(e4.coeff(0) == 1);
    REQUIRE(e4.coeff(1) == 240);
    REQUIRE(e4.coeff(2) == 2160);
    QExpansion e6 = eisenstein(6, 2);
    REQUIRE(e6.coeff(1) == -504);
    REQUIRE_THROWS_AS(eisenstein(5, 3), std::domain_error);
    REQUIRE_THROWS_AS(eisenstein(2, 3), std::domain_error);
}

TEST_CASE("QExpansion ring operations and truncation propagation") {
    QExpansion a(5), b(9);
    a.coeff_mut(2) = 1;          // q^2, valid to q^5
    b.coeff_mut(1) = Rational(3);  // 3q, valid to q^9
    QExpansion p = a * b;
    // product valid to min(5+1, 9+2) = 6
    REQUIRE(p.truncation() == 6);
    REQUIRE(p.coeff(3) == 3);
    REQUIRE_THROWS_AS(p.coeff(7), std::out_of_range);
    QExpansion s = a + b;
    REQUIRE(s.truncation() == 5);
}

TEST_CASE("dimension sanity: one-dimensional spaces via classical relations") {
    long M = 30;
    QExpansion e4 = eisenstein(4, M), e6 = eisenstein(6, M);
    QExpansion delta = eta_quotient({{1, 24}}, M);
    QExpansion lhs = e4 * e4 * e4 - e6 * e6;
    // 1728 Delta = E4^3 - E6^2, so any cusp form in M_12 is a multiple of Delta
    for (long n = 0; n <= M; ++n) REQUIRE(lhs.coeff(n) == delta.coeff(n) * 1728);
    // S_18 analogue: E4^3 E6 - E6^3 = 1728 Delta E6
    QExpansion lhs18 = e4 * e4 * e4 * e6 - e6 * e6 * e6;
    QExpansion rhs18 = delta * e6 * Rational(1728);
    for (long n = 0; n <= lhs18.truncation(); ++n) REQUIRE(lhs18.coeff(n) == rhs18.coeff(n));
}

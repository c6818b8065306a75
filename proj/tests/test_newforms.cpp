#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "sklift/newforms.hpp"

using namespace sklift;

TEST_CASE("fixture leading coefficients") {
    Newform f18 = newform_fixture("f18.1", 50);
    REQUIRE(f18.a(1) == 1);
    REQUIRE(f18.a(2) == -528);
    Newform g12 = newform_fixture("g12.1", 50);
    REQUIRE(g12.a(2) == -24);
    REQUIRE(g12.a(3) == 252);
    Newform f15 = newform_fixture("f2.15", 50);
    REQUIRE(f15.a(2) == -1);
    REQUIRE(f15.a(3) == -1);
    REQUIRE(f15.a(5) == 1);
    REQUIRE_THROWS_AS(newform_fixture("nope"), std::domain_error);
}

TEST_CASE("global parameters invariants") {
    GlobalParameters ex1(11, 9, 1);
    REQUIRE(ex1.m == 1);
    GlobalParameters ex2(1, 1, 15);
    REQUIRE(ex2.m == 0);
    REQUIRE_THROWS_AS(GlobalParameters(10, 9, 1), std::domain_error);   // odd difference
    REQUIRE_THROWS_AS(GlobalParameters(11, 9, 4), std::domain_error);   // even level
    REQUIRE_THROWS_AS(GlobalParameters(11, 9, 45), std::domain_error);  // not squarefree
}

TEST_CASE("hecke eigenform property for all fixtures") {
    for (auto label : {"g12.1", "f18.1", "f2.15"}) {
        Newform f = newform_fixture(label, 2000);
        for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L}) {
            for (long n = 1; n <= 60; ++n) {
                REQUIRE(hecke_tp_coefficient(f, p, n) == f.a(p) * f.a(n));
            }
        }
    }
}

TEST_CASE("coefficient multiplicativity against the raw expansion") {
    Newform f = newform_fixture("f18.1", 2000);
    std::mt19937_64 rng(5);
    int found = 0;
    while (found < 200) {
        long m = 2 + static_cast<long>(rng() % 60);
        long n = 2 + static_cast<long>(rng() % 30);
        if (gcd(BigInt(m), BigInt(n)) != 1 || m * n > f.truncation()) continue;
        ++found;
        REQUIRE(coefficient(f, m) * coefficient(f, n) == coefficient(f, BigInt(m) * n));
        REQUIRE(coefficient(f, BigInt(m) * n) == f.a(m * n));
    }
}

TEST_CASE("coefficient extension by Hecke recurrences matches deeper fixtures") {
    Newform shallow = newform_fixture("g12.1", 40);
    Newform deep = newform_fixture("g12.1", 1100);
    REQUIRE(coefficient(shallow, 1) == 1);
    REQUIRE(coefficient(shallow, 4) == -1472);
    REQUIRE(coefficient(shallow, 1024) == deep.a(1024));
    REQUIRE(coefficient(newform_fixture("f2.15", 60), 15) == -1);
    // primes beyond the stored range are a hard error, never silently zero
    REQUIRE_THROWS_AS(coefficient(shallow, BigInt(41)* 41 * 41 * 41 * 41 * 41), std::out_of_range);
}

TEST_CASE("satake data") {
    Newform f15 = newform_fixture("f2.15", 50);
    SatakeData s3 = satake(f15, 3);
    REQUIRE_FALSE(s3.good);
    REQUIRE(s3.eps_p == -1);  // alpha_3 = -3^{-1/2}
    SatakeData s5 = satake(f15, 5);
    REQUIRE(s5.eps_p == 1);

    Newform g12 = newform_fixture("g12.1", 50);
    SatakeData s2 = satake(g12, 2);
    REQUIRE(s2.good);
    int d = 30;
    mpfr_prec_t prec = bits_for_digits(d);
    // beta_2 + beta_2^{-1} = -24 * 2^{-11/2}
    Real expect = Real(-24L, prec) / pow_rat(Real(2L, prec), Rational(11, 2));
    REQUIRE(rel_err(s2.unit_root_sum(d), expect) < pow10(-25, prec));

    // Ramanujan violation detected
    Newform bad = g12;
    bad.an[2] = 100000;
    REQUIRE_THROWS_AS(satake(bad, 2), std::runtime_error);
}

TEST_CASE("atkin-lehner signs for f2.15") {
    Newform f15 = newform_fixture("f2.15", 50);
    REQUIRE(f15.al_signs.at(3) == 1);    // -a(3) = 1
    REQUIRE(f15.al_signs.at(5) == -1);
    REQUIRE(f15.al_signs.at(15) == -1);
    REQUIRE(f15.al_signs.at(1) == 1);
}

TEST_CASE("coefficient file round trip") {
    Newform f = newform_fixture("f2.15", 30);
    std::stringstream ss;
    write_coefficients(ss, f);
    Newform g = read_coefficients(ss);
    REQUIRE(g.label == f.label);
    REQUIRE(g.weight == f.weight);
    REQUIRE(g.level == f.level);
    REQUIRE(g.an == f.an);
}

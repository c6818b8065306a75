// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <random>

#include "sklift/report.hpp"

using namespace sklift;

namespace {

int failures = 0;

void line(int id, bool pass, const std::string& what) {
    std::printf("criterion %2d: %s  %s\n", id, pass ? "PASS" : "FAIL", what.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Real relstr(const Real& v, const char* target) { return rel_err(v, Real(target, v.prec())); }

const VerificationItem& item(const VerificationReport& r, const std::string& name) {
    for (auto& it : r.items)
        if (it.name == name) return it;
    throw std::logic_error("missing report item " + name);
}

}  // namespace

int main() {
    mpfr_prec_t prec30 = bits_for_digits(30);

    // ---- criterion 1: Example-1 central L-value at 30 digits within 2 min ----
    {
        auto t0 = std::chrono::steady_clock::now();
        Newform f = newform_fixture("f18.1", 6000);
        Newform g = newform_fixture("g12.1", 6000);
        LSeries L = make_sym2_tensor_lseries(f, g);
        determine_sign_and_conductor(L, {BigInt(1)});
        LValue v = evaluate_completed(L, Rational(20), 30);
        double secs = seconds_since(t0);
        Real rel = relstr(v.value, targets::ex1_lambda_sym2);
        bool ok = rel < pow10(-8, prec30) && secs <= 120.0;
        char buf[160];
        std::snprintf(buf, sizeof buf, "Lambda(20, Sym2(g) x f) rel %.2e, %.1f s at 30 digits", rel.to_double(),
                      secs);
        line(1, ok, buf);
    }

    // ---- full pipelines (shared by criteria 2-6) ----
    VerificationReport r1 = verify_pullback(1, 28);
    VerificationReport r2 = verify_pullback(2, 25);

    {
        const auto& it = item(r2, "lambda_sym2_central");
        bool ok = it.pass && it.rel_delta < Real(1e-6, prec30);
        line(2, ok,
             "Lambda(2, Sym2(g) x f) rel " + it.rel_delta.to_string(3) + "; " +
                 r2.notes.substr(r2.notes.find("sign")));
    }
    {
        const auto& n1 = item(r1, "petersson_norm_g");
        const auto& n2 = item(r2, "petersson_norm_g");
        // refinement stability on the level-one norm
        Newform g12 = newform_fixture("g12.1", 2000);
        NormResult a = petersson_norm(g12, 14, 20);
        NormResult b = petersson_norm(g12, 14, 30);
        bool stable = abs(a.value - b.value) <= a.error_estimate + abs(a.value) * pow10(-13, prec30);
        bool ok = n1.pass && n2.pass && stable;
        line(3, ok,
             "<g,g> rels " + n1.rel_delta.to_string(3) + " / " + n2.rel_delta.to_string(3) +
                 (stable ? ", refinement stable" : ", refinement UNSTABLE"));
    }
    {
        const auto& k1 = item(r1, "kz_ratio_ff_hh");
        const auto& k2 = item(r2, "kz_ratio_ff_hh");
        const auto& kd = item(r1, "kz_ratio_ff_hh_D4");
        bool ok = k1.pass && k2.pass && kd.pass;
        line(4, ok,
             "Kohnen-Zagier ratios rel " + k1.rel_delta.to_string(3) + " / " + k2.rel_delta.to_string(3) +
                 ", D-independence rel " + kd.rel_delta.to_string(3));
    }
    {
        PlusSpaceForm h1 = plus_form_fixture("h19_2.4");
        PlusSpaceForm h2 = plus_form_fixture("h3_2.60");
        Newform g12 = newform_fixture("g12.1", 2000);
        Newform f15 = newform_fixture("f2.15", 2000);
        Rational p1 = pullback_ratio(h1, g12, 1);
        Rational p2 = pullback_ratio(h2, f15, 0);
        bool ok = (abs(p1) == make_rational(1, 2)) && (p2 == 2);
        line(5, ok, "pullback sums exact: |(3/2)c(3)+c(4)| = " + Rational(abs(p1)).get_str() +
                        ", 2c(3)+c(4) = " + p2.get_str());
    }
    {
        bool ok = r1.pass && r1.residual < Real(1e-4, prec30) && r2.pass && r2.residual < Real(1e-4, prec30);
        line(6, ok,
             "theorem residuals " + r1.residual.to_string(3) + " / " + r2.residual.to_string(3) +
                 " (tolerance 1e-4)");
    }

    // ---- criterion 7: archimedean constants and the conjecture scan ----
    {
        auto t0 = std::chrono::steady_clock::now();
        bool exact_ok = (c_const(11, 9) == 1) && (c_const(1, 1) == 1);
        auto scan = conjecture_scan(20, 200);
        double secs = seconds_since(t0);
        bool ok = exact_ok && scan.all_equal && secs <= 600.0;
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "C(11,9) = C(1,1) = 1 exact; conjecture scan kp<=20 m<=200: %ld cells "
                      "(%ld exact, %d primes), all equal: %s, %.1f s",
                      scan.cells, scan.exact_cells, scan.primes_used, scan.all_equal ? "yes" : "NO", secs);
        line(7, ok, buf);
    }

    // ---- criterion 8: Z_infty cross-check ----
    {
        bool ok = true;
        Real worst(prec30);
        for (long kp = 1; kp <= 6 && ok; ++kp)
            for (long m = 0; m <= 3; ++m) {
                auto z = z_infty_crosscheck(kp + 2 * m, kp, 40);
                if (z.rel_residual > worst) worst = z.rel_residual;
                if (!z.equal_exact || !(z.rel_residual < pow10(-30, prec30))) ok = false;
            }
        line(8, ok, "Z_infty(0) cross-check exact on kp <= 6, m <= 3 (worst residual " +
                        worst.to_string(3) + ")");
    }

    // ---- criterion 9: J/I identity ----
    {
        bool ok = true;
        Real worst(prec30);
        for (long m : {0L, 1L, 2L})
            for (long n : {1L, 3L, 5L})
                for (Rational r : {Rational(1, 2), Rational(1), Rational(2)}) {
                    auto c = j_integral_check(m, n, r, 25);
                    Real rr = rel_err(c.quadrature, c.closed_form);
                    if (rr > worst) worst = rr;
                    if (!(rr < pow10(-8, prec30))) ok = false;
                }
        bool vanish = true;
        for (auto [m, n] : std::vector<std::pair<long, long>>{{0, 1}, {1, 2}, {2, 5}})
            for (Rational r : {Rational(-1, 2), Rational(-1), Rational(-2)}) {
                auto c = j_integral_check(m, n, r, 25);
                if (!(abs(c.quadrature) < pow10(-10, bits_for_digits(25)))) vanish = false;
            }
        line(9, ok && vanish,
             "J/I identity rel <= " + worst.to_string(3) + " on the r > 0 grid; r < 0, n > m vanishing " +
                 (vanish ? "holds" : "FAILS"));
    }

    // ---- criterion 10: Ghate sum ----
    {
        bool ok = true;
        for (long kappa = 1; kappa <= 30 && ok; ++kappa)
            for (long kp = 2 - kappa % 2; kp <= kappa; kp += 2) {
                long m = (kappa - kp) / 2;
                if (kappa <= m || kp < 1) continue;
                auto g = ghate_sum_check(kappa, kp);
                if (!g.equal || g.lhs.coeff == 0) ok = false;
            }
        line(10, ok, "Ghate combinatorial sum equals its closed form exactly for kappa <= 30");
    }

    // ---- criterion 11: property suites ----
    {
        bool ok = true;
        std::string detail;
        // Hilbert product formula
        {
            std::mt19937_64 rng(101);
            for (int i = 0; i < 150 && ok; ++i) {
                long an = static_cast<long>(rng() % 300) - 150, ad = 1 + static_cast<long>(rng() % 30);
                long bn = static_cast<long>(rng() % 300) - 150, bd = 1 + static_cast<long>(rng() % 30);
                if (!an || !bn) continue;
                Rational a = make_rational(an, ad), b = make_rational(bn, bd);
                int prod = hilbert_symbol(a, b, BigInt(0));
                for (auto& [p, e] : factorize(2 * a.get_num() * a.get_den() * b.get_num() * b.get_den()))
                    prod *= hilbert_symbol(a, b, p);
                if (prod != 1) {
                    ok = false;
                    detail = "hilbert product formula";
                }
            }
        }
        // Dirichlet multiplicativity
        if (ok) {
            Newform f15 = newform_fixture("f2.15", 2500);
            LSeries L = make_sym2_tensor_lseries(f15, f15);
            const auto& a = dirichlet_coefficients(L, 1500);
            std::mt19937_64 rng(103);
            for (int i = 0; i < 500 && ok; ++i) {
                long m = 2 + static_cast<long>(rng() % 120), n = 2 + static_cast<long>(rng() % 12);
                if (std::gcd(m, n) != 1 || m * n > 1500) continue;
                if (a[m * n] != a[m] * a[n]) {
                    ok = false;
                    detail = "dirichlet multiplicativity";
                }
            }
        }
        // Hecke eigenform fixtures
        if (ok) {
            for (auto label : {"g12.1", "f18.1", "f2.15"}) {
                Newform f = newform_fixture(label, 2000);
                for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L})
                    for (long n = 1; n <= 40; ++n)
                        if (hecke_tp_coefficient(f, p, n) != f.a(p) * f.a(n)) {
                            ok = false;
                            detail = "hecke eigenform";
                        }
            }
        }
        // Psi reconstruction on the extended window
        if (ok) {
            PlusSpaceForm h = plus_form_fixture("h19_2.4");
            if (extend_coefficient(h, 12).value != -272 || extend_coefficient(h, 16).value != 1056 ||
                extend_coefficient(h, 27).value != -4284) {
                ok = false;
                detail = "psi reconstruction";
            }
            PlusSpaceForm h2 = plus_form_fixture("h3_2.60");
            for (long xi : {12L, 16L})
                if (extend_coefficient(h2, xi).value != Rational(h2.stored_coeff(xi))) {
                    ok = false;
                    detail = "psi reconstruction (level 60)";
                }
        }
        // functional-equation reflection with distinct balance points
        if (ok) {
            Newform f = newform_fixture("f18.1", 6000);
            Newform g = newform_fixture("g12.1", 6000);
            LSeries L = make_sym2_tensor_lseries(f, g);
            L.conductor = 1;
            L.sign = 1;
            for (int k = 0; k < 5 && ok; ++k) {
                Rational s = Rational(L.w, 2) + Rational(3, 2) + Rational(k, 2);
                Real va = evaluate_completed(L, s, 16, Rational(6, 5)).value;
                Real vb = evaluate_completed(L, Rational(L.w) - s, 16, Rational(11, 10)).value;
                if (!(rel_err(va, vb) < pow10(-8, prec30))) {
                    ok = false;
                    detail = "functional equation reflection";
                }
            }
        }
        line(11, ok, ok ? "property suites: hilbert product, multiplicativity, hecke eigenforms, "
                          "psi reconstruction, reflection"
                        : "property suite failed: " + detail);
    }

    std::printf("%s\n", failures == 0 ? "acceptance: ALL CRITERIA PASS" : "acceptance: FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}

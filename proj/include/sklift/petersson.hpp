#pragma once

#include <array>
#include <atomic>
#include <numeric>
#include <thread>
#include <set>

#include "complexnum.hpp"
#include "newforms.hpp"
#include "quadrature.hpp"

namespace sklift {

// Integral 2x2 matrices acting on the upper half-plane.
using Mat2 = std::array<BigInt, 4>;  // a b / c d

inline Mat2 mat_mul(const Mat2& A, const Mat2& B) {
    return {A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3], A[2] * B[0] + A[3] * B[2],
            A[2] * B[1] + A[3] * B[3]};
}

inline Complex moebius(const Mat2& M, const Complex& z) {
    mpfr_prec_t prec = z.prec();
    Complex num = Complex{Real(M[0], prec), Real(0L, prec)} * z + Complex{Real(M[1], prec), Real(0L, prec)};
    Complex den = Complex{Real(M[2], prec), Real(0L, prec)} * z + Complex{Real(M[3], prec), Real(0L, prec)};
    return num / den;
}

// Coset representatives for Gamma_0(N) \ SL_2(Z): [[1,0],[e,1]] T^j for
// e | N, 0 <= j < N/e.  Completeness is checked through the P^1(Z/N) keys.
struct CosetSystem {
    long N;
    std::vector<Mat2> reps;
    std::vector<long> cusp_denominator;  // e for each rep
    std::vector<long> width;             // N/e
    std::vector<long> shift;             // j + t_e with e t_e = 1 mod N/e
};

namespace detail {

inline std::pair<long, long> p1_canonical(long c, long d, long N) {
    std::pair<long, long> best{-1, -1};
    for (long u = 1; u < N; ++u) {
        if (std::gcd(u, N) != 1) continue;
        std::pair<long, long> key{(u * c % N + N) % N, (u * d % N + N) % N};
        if (best.first < 0 || key < best) best = key;
    }
    if (N == 1) best = {0, 0};
    return best;
}

}  // namespace detail

inline CosetSystem coset_reps(long N) {
    if (!is_squarefree(N) || N < 1) throw std::domain_error("coset_reps: need squarefree N >= 1");
    CosetSystem cs;
    cs.N = N;
    for (long e : divisors_of(N)) {
        long w = N / e;
        long t = 0;
        if (w > 1) {
            for (long cand = 0; cand < w; ++cand)
                if ((e * cand) % w == 1) {
                    t = cand;
                    break;
                }
        }
        for (long j = 0; j < w; ++j) {
            // [[1, 0], [e, 1]] * T^j = [[1, j], [e, e j + 1]]
            cs.reps.push_back({BigInt(1), BigInt(j), BigInt(e), BigInt(e * j + 1)});
            cs.cusp_denominator.push_back(e);
            cs.width.push_back(w);
            cs.shift.push_back(j + t);
        }
    }
    // completeness and non-redundancy via canonical P^1(Z/N) keys
    std::set<std::pair<long, long>> keys;
    for (auto& M : cs.reps)
        keys.insert(detail::p1_canonical(M[2].get_si() % N, M[3].get_si() % N, N));
    long psi = N;
    for (auto& [p, e] : factorize(BigInt(N))) psi = psi / p.get_si() * (p.get_si() + 1);
    if (static_cast<long>(keys.size()) != static_cast<long>(cs.reps.size()) ||
        static_cast<long>(cs.reps.size()) != psi)
        throw std::logic_error("coset_reps: representative system is not a complete cross-section");
    return cs;
}

// f(z) for z = x + iy via the q-expansion; requires enough stored
// coefficients for the target accuracy at this height.
inline Complex evaluate_q_series(const Newform& f, const Complex& z, int digits) {
    mpfr_prec_t prec = bits_for_digits(digits + 8);
    Real two_pi = const_pi(prec) * 2;
    Complex q = exp(Complex{-two_pi * z.im, two_pi * z.re});
    double qabs = std::exp(-2 * 3.141592653589793 * z.im.to_double());
    double need = (digits + 8) * 2.302585 + (f.weight / 2.0 + 1.5) * std::log(f.truncation() + 1.0);
    long nterms = static_cast<long>(need / -std::log(qabs)) + 2;
    if (nterms > f.truncation())
        throw std::runtime_error("evaluate_q_series: fixture truncation " + std::to_string(f.truncation()) +
                                 " insufficient at Im z = " + std::to_string(z.im.to_double()) +
                                 " (need " + std::to_string(nterms) + " terms)");
    Complex acc{Real(prec), Real(prec)};
    for (long n = nterms; n >= 1; --n) {
        acc = acc * q;
        if (f.an[n] != 0) acc.re += Real(f.an[n], prec);
    }
    return acc * q;
}

namespace detail {

struct ReductionStep {
    Mat2 M;
    long det;
};

// One improving move of the Atkin-Lehner extended group at z, or det = 0.
inline ReductionStep best_extended_move(long N, double x, double y) {
    ReductionStep best{{BigInt(1), BigInt(0), BigInt(0), BigInt(1)}, 0};
    double best_gain = 1.0 + 1e-9;
    for (long Q : divisors_of(N)) {
        double sq = std::sqrt(static_cast<double>(Q));
        long gmax = static_cast<long>(sq / (N * y)) + 1;
        for (long g2 = 1; g2 <= gmax; ++g2) {
            double c = static_cast<double>(N) * g2;
            if (c * c * y * y >= Q) continue;
            double d0 = -c * x;
            long dlo = static_cast<long>(std::floor((d0 - sq) / Q)) - 1;
            long dhi = static_cast<long>(std::ceil((d0 + sq) / Q)) + 1;
            for (long dd = dlo; dd <= dhi; ++dd) {
                long d = dd * Q;
                double n2 = (c * x + d) * (c * x + d) + c * c * y * y;
                double gain = Q / n2;
                if (gain <= best_gain) continue;
                // solve Q alpha delta - (N/Q) beta g2 = 1
                BigInt A = BigInt(Q) * dd, B = BigInt(N / Q) * g2, s, t;
                BigInt gg;
                mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
                if (gg != 1) continue;
                // alpha = s, beta = -t
                Mat2 M{BigInt(Q) * s, -t, BigInt(N) * g2, BigInt(d)};
                if (M[0] * M[3] - M[1] * M[2] != Q) continue;
                best = {M, Q};
                best_gain = gain;
            }
        }
    }
    return best;
}

}  // namespace detail

// Point evaluation of a newform anywhere on the upper half-plane: reduce z
// under the Atkin-Lehner extension of Gamma_0(N) to maximal imaginary part,
// evaluate the q-expansion there, then unwind automorphy factors and
// pseudo-eigenvalues.
inline Complex evaluate_form(const Newform& f, const Complex& z, int digits) {
    if (z.im.sign() <= 0) throw std::domain_error("evaluate_form: need Im z > 0");
    mpfr_prec_t prec = bits_for_digits(digits + 8);
    long N = f.level;

    Mat2 sigma{BigInt(1), BigInt(0), BigInt(0), BigInt(1)};
    long det = 1;
    double x = z.re.to_double(), y = z.im.to_double();
    for (int iter = 0; iter < 200; ++iter) {
        long n = std::lround(x);
        if (n != 0) {
            sigma = mat_mul({BigInt(1), BigInt(-n), BigInt(0), BigInt(1)}, sigma);
            x -= n;
        }
        auto step = detail::best_extended_move(N, x, y);
        if (step.det == 0) break;
        sigma = mat_mul(step.M, sigma);
        // content reduction keeps the accumulated matrix primitive
        BigInt g = gcd(gcd(sigma[0], sigma[1]), gcd(sigma[2], sigma[3]));
        if (g > 1)
            for (auto& e : sigma) e /= g;
        double a = step.M[0].get_d(), b = step.M[1].get_d(), c = step.M[2].get_d(), d = step.M[3].get_d();
        double n2 = (c * x + d) * (c * x + d) + c * c * y * y;
        double nx = ((a * x + b) * (c * x + d) + a * c * y * y) / n2;
        y = step.det * y / n2;
        x = nx;
        (void)det;
    }

    BigInt detz = sigma[0] * sigma[3] - sigma[1] * sigma[2];
    if (detz <= 0 || N % detz.get_si() != 0)
        throw std::logic_error("evaluate_form: reduced matrix is not an Atkin-Lehner class");
    long Delta = detz.get_si();
    int lambda = f.al_signs.at(Delta);

    Complex zstar = moebius(sigma, z);
    Complex fz = evaluate_q_series(f, zstar, digits);
    // f(z) = lambda^{-1} det^{k/2} (Cz + D)^{-k} f(sigma z)
    Complex czd = Complex{Real(sigma[2], prec), Real(0L, prec)} * z + Complex{Real(sigma[3], prec), Real(0L, prec)};
    Complex factor = pow_si(czd, -f.weight);
    Real detpow = pow_rat(Real(detz, prec), Rational(f.weight, 2));
    Complex r = fz * factor;
    r.re *= detpow;
    r.im *= detpow;
    if (lambda < 0) r = -r;
    return r;
}

struct NormResult {
    Real value;
    Real error_estimate;
    long nodes_used = 0;
};

namespace detail {

// integral over the standard fundamental domain of |f((x + s + i y)/w)|^2 y^{k-2}
inline std::pair<Real, long> coset_integral(const Newform& f, long w, long s, int nx, int digits) {
    mpfr_prec_t prec = bits_for_digits(digits + 8);
    const auto& nodes = gauss_legendre(nx, digits + 5);
    Real total(prec);
    long evals = 0;
    Real half(0.5, prec);
    for (auto& [xi, wi] : nodes) {
        Real x = xi * half;  // map [-1,1] -> [-1/2,1/2]
        Real y0 = sqrt(Real(1L, prec) - x * x);
        auto integrand = [&](const Real& y) {
            Complex u{(x + Real(s, prec)) / w, y / w};
            Complex v = evaluate_q_series(f, u, digits);
            ++evals;
            return v.norm() * pow_si(y, f.weight - 2);
        };
        auto qr = exp_sinh(integrand, y0, digits);
        total += wi * half * qr.value;
    }
    return {total, evals};
}

inline Real norm_pass(const Newform& f, const CosetSystem& cs, int nx, int digits, long& evals) {
    mpfr_prec_t prec = bits_for_digits(digits + 8);
    size_t n = cs.reps.size();
    std::vector<Real> parts(n, Real(prec));
    std::vector<long> evs(n, 0);
    unsigned nt = std::min<unsigned>(std::thread::hardware_concurrency(), 8);
    if (nt < 1) nt = 1;
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= n) break;
            auto [I, ev] = detail::coset_integral(f, cs.width[i], cs.shift[i], nx, digits);
            parts[i] = I / pow_si(Real(cs.width[i], prec), f.weight);
            evs[i] = ev;
        }
    };
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < nt; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    // deterministic ordered reduction
    Real total(prec);
    for (size_t i = 0; i < n; ++i) {
        total += parts[i];
        evals += evs[i];
    }
    return total / static_cast<long>(n);
}

}  // namespace detail

// <f,f> = (1/[SL_2(Z):Gamma_0(N)]) sum_{cosets} int_F |f(gamma tau)|^2 Im(gamma tau)^k dmu.
// Each coset integral uses the closed-form expansion of f|gamma at its cusp,
// Gauss-Legendre panels in x and exp-sinh quadrature in y; two refinement
// passes give the reported error.
inline NormResult petersson_norm(const Newform& f, int digits = 20, int nx = 0) {
    CosetSystem cs = coset_reps(f.level);
    if (nx == 0) nx = std::max(24, static_cast<int>(digits * 1.6));
    long evals = 0;
    Real coarse = detail::norm_pass(f, cs, nx, digits, evals);
    Real fine = detail::norm_pass(f, cs, nx * 3 / 2, digits + 2, evals);
    NormResult r;
    r.value = fine;
    r.error_estimate = abs(fine - coarse) + abs(fine) * pow10(-(digits + 1), fine.prec());
    r.nodes_used = evals;
    return r;
}

}  // namespace sklift

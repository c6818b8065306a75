#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "real.hpp"

namespace sklift {

struct QuadratureResult {
    Real value;
    Real error_estimate;
    long nodes_used = 0;
};

namespace detail {

// Shared level-doubling driver for the double-exponential rules.  `eval`
// maps a node parameter t to w(t)*f(x(t)), or an empty optional when the
// abscissa has collapsed onto an endpoint.
inline QuadratureResult de_levels(const std::function<bool(const Real&, Real&)>& eval, int digits,
                                  int max_level) {
    mpfr_prec_t prec = bits_for_digits(digits + 10);
    Real eps = pow10(-(digits + 6), prec);

    Real scale(prec);
    auto node_sum = [&](const Real& h, bool odd_only) {
        Real s(prec);
        long used = 0;
        long stride = odd_only ? 2 : 1;
        double kmax = 40.0 / h.to_double();
        for (int side = 0; side < 2; ++side) {
            int small_run = 0;
            long k0 = odd_only ? 1 : (side == 0 ? 0 : 1);
            for (long k = k0; k <= kmax; k += stride) {
                Real t = h * (side == 0 ? k : -k);
                Real term(prec);
                if (!eval(t, term)) break;
                if (mpfr_nan_p(term.get())) break;
                s += term;
                ++used;
                if (abs(term) < eps * (scale + abs(s)))
                    ++small_run;
                else
                    small_run = 0;
                if (small_run >= 3) break;
            }
        }
        return std::pair(s, used);
    };

    Real h(1L, prec);
    auto [s, used] = node_sum(h, false);
    scale = abs(s);
    Real integral = h * s;
    Real err = abs(integral);
    long total = used;
    for (int level = 1; level <= max_level; ++level) {
        h /= 2;
        auto [s_odd, u2] = node_sum(h, true);
        s += s_odd;
        scale = abs(s);
        total += u2;
        Real next = h * s;
        err = abs(next - integral);
        integral = next;
        if (err < eps * (abs(integral) + Real(1L, prec)) && level >= 3) break;
    }
    return {integral, err, total};
}

}  // namespace detail

// Tanh-sinh quadrature on a finite interval.  Exponentially convergent for
// integrands analytic on (a,b); endpoint singularities are tolerated.
inline QuadratureResult tanh_sinh(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                                  int digits, int max_level = 12) {
    mpfr_prec_t prec = bits_for_digits(digits + 10);
    Real c = (a + b) / 2, d = (b - a) / 2;
    Real pi_half = const_pi(prec) / 2;
    auto eval = [=](const Real& t, Real& out) {
        Real u = pi_half * sinh(t);
        Real ch = cosh(u);
        Real x = c + d * tanh(u);
        if (x <= a || x >= b) return false;
        Real w = d * pi_half * cosh(t) / (ch * ch);
        out = w * f(x);
        return true;
    };
    return detail::de_levels(eval, digits, max_level);
}

// Exp-sinh quadrature on (a, infinity) for integrands with exponential decay.
inline QuadratureResult exp_sinh(const std::function<Real(const Real&)>& f, const Real& a, int digits,
                                 int max_level = 12) {
    mpfr_prec_t prec = bits_for_digits(digits + 10);
    Real pi_half = const_pi(prec) / 2;
    auto eval = [=](const Real& t, Real& out) {
        Real g = exp(pi_half * sinh(t));
        if (g.is_zero()) return false;
        Real x = a + g;
        Real w = pi_half * cosh(t) * g;
        out = w * f(x);
        return true;
    };
    return detail::de_levels(eval, digits, max_level);
}

// Quadrature over the whole real line with double-exponential decay of the
// integrand itself (plain trapezoid, exponentially convergent).
inline QuadratureResult de_trapezoid_line(const std::function<Real(const Real&)>& f, int digits,
                                          int max_level = 12) {
    auto eval = [=](const Real& t, Real& out) {
        out = f(t);
        return true;
    };
    return detail::de_levels(eval, digits, max_level);
}

// Gauss-Legendre nodes/weights on [-1,1], computed at working precision by
// Newton refinement of double-precision seeds.
inline const std::vector<std::pair<Real, Real>>& gauss_legendre(int n, int digits) {
    static std::map<std::pair<int, int>, std::vector<std::pair<Real, Real>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, digits);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    mpfr_prec_t prec = bits_for_digits(digits + 10);
    Real pi = const_pi(prec);
    std::vector<std::pair<Real, Real>> nw;
    auto legendre = [&](const Real& x) {
        Real p0(1L, prec), p1 = x;
        for (long k = 2; k <= n; ++k) {
            Real p2 = (x * p1 * (2 * k - 1) - p0 * (k - 1)) / k;
            p0 = p1;
            p1 = p2;
        }
        Real dp = (x * p1 - p0) * n / (x * x - 1);
        return std::pair(p1, dp);
    };
    for (int i = 1; i <= n; ++i) {
        Real x = cos(pi * (4 * i - 1) / (4 * n + 2));
        for (int iter = 0; iter < 200; ++iter) {
            auto [p, dp] = legendre(x);
            Real dx = p / dp;
            x -= dx;
            if (abs(dx) < pow10(-(digits + 8), prec)) break;
        }
        auto [p, dp] = legendre(x);
        Real w = Real(2L, prec) / ((Real(1L, prec) - x * x) * dp * dp);
        nw.emplace_back(x, w);
    }
    return cache.emplace(key, std::move(nw)).first->second;
}

}  // namespace sklift

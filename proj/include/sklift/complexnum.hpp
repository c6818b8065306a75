#pragma once

#include "real.hpp"

namespace sklift {

// Complex numbers over Real.  Only the handful of operations the AFE
// contour integration and point evaluation of modular forms need.
struct Complex {
    Real re, im;

    Complex() = default;
    explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(long r, mpfr_prec_t prec) : re(r, prec), im(prec) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Complex operator-() const { return {-re, -im}; }
    Complex conj() const { return {re, -im}; }
    Real norm() const { return re * re + im * im; }
    Real abs() const { return sqrt(norm()); }
};

inline Complex exp(const Complex& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

inline Complex log(const Complex& z) {
    Real r = log(z.norm()) / 2;
    Real th(z.prec());
    mpfr_atan2(th.get(), z.im.get(), z.re.get(), MPFR_RNDN);
    return {r, th};
}

inline Complex pow_si(Complex z, long e) {
    mpfr_prec_t p = z.prec();
    Complex r(1L, p);
    bool inv = e < 0;
    unsigned long n = static_cast<unsigned long>(inv ? -e : e);
    while (n) {
        if (n & 1) r = r * z;
        z = z * z;
        n >>= 1;
    }
    if (inv) r = Complex(1L, p) / r;
    return r;
}

}  // namespace sklift

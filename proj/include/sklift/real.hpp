#pragma once

#include <mpfr.h>

#include <cmath>
#include <ostream>
#include <string>
#include <utility>

#include "integers.hpp"

namespace sklift {

inline mpfr_prec_t bits_for_digits(int digits) {
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 34);
}

// Arbitrary-precision real, a thin RAII wrapper over mpfr_t.  Every value
// carries its working precision; binary operations use the max of the two.
// All operations round to nearest, so results are deterministic functions
// of the operands and their precisions.
class Real {
  public:
    Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(const BigInt& x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
    Real(const Rational& x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }
    Real(const std::string& s, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN);
    }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }

    std::string to_string(int digits) const {
        mpfr_exp_t e;
        char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
        std::string mant(s);
        mpfr_free_str(s);
        bool neg = !mant.empty() && mant[0] == '-';
        std::string d = neg ? mant.substr(1) : mant;
        std::string out = (neg ? "-" : "");
        out += d.substr(0, 1) + "." + d.substr(1) + "e" + std::to_string(e - 1);
        return out;
    }

    friend Real operator+(const Real& a, const Real& b) { return binop(mpfr_add, a, b); }
    friend Real operator-(const Real& a, const Real& b) { return binop(mpfr_sub, a, b); }
    friend Real operator*(const Real& a, const Real& b) { return binop(mpfr_mul, a, b); }
    friend Real operator/(const Real& a, const Real& b) { return binop(mpfr_div, a, b); }
    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(long x) { mpfr_mul_si(v_, v_, x, MPFR_RNDN); return *this; }
    Real& operator/=(long x) { mpfr_div_si(v_, v_, x, MPFR_RNDN); return *this; }

    friend Real operator*(const Real& a, long b) { Real r(a); r *= b; return r; }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, long b) { Real r(a); r /= b; return r; }
    friend Real operator+(const Real& a, long b) { Real r(a); mpfr_add_si(r.v_, r.v_, b, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, long b) { Real r(a); mpfr_sub_si(r.v_, r.v_, b, MPFR_RNDN); return r; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    friend std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_string(20); }

  private:
    using mpfr_f = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static Real binop(mpfr_f f, const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

#define SKLIFT_REAL_UNARY(name, mpfr_name)        \
    inline Real name(const Real& x) {             \
        Real r(x.prec());                         \
        mpfr_name(r.get(), x.get(), MPFR_RNDN);   \
        return r;                                 \
    }
SKLIFT_REAL_UNARY(sqrt, mpfr_sqrt)
SKLIFT_REAL_UNARY(exp, mpfr_exp)
SKLIFT_REAL_UNARY(log, mpfr_log)
SKLIFT_REAL_UNARY(sin, mpfr_sin)
SKLIFT_REAL_UNARY(cos, mpfr_cos)
SKLIFT_REAL_UNARY(tanh, mpfr_tanh)
SKLIFT_REAL_UNARY(sinh, mpfr_sinh)
SKLIFT_REAL_UNARY(cosh, mpfr_cosh)
SKLIFT_REAL_UNARY(abs, mpfr_abs)
#undef SKLIFT_REAL_UNARY

inline Real const_pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

inline Real pow_si(const Real& x, long e) {
    Real r(x.prec());
    mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

inline Real pow(const Real& x, const Real& y) {
    Real r(std::max(x.prec(), y.prec()));
    mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

// x^(p/q) for x > 0.
inline Real pow_rat(const Real& x, const Rational& e) {
    Real le = log(x) * Real(e, x.prec());
    return exp(le);
}

inline Real ldexp(const Real& x, long e) {
    Real r(x.prec());
    mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

inline long lround(const Real& x) {
    Real r(x.prec());
    mpfr_round(r.get(), x.get());
    return mpfr_get_si(r.get(), MPFR_RNDN);
}

// |a - b| / max(|b|, tiny)
inline Real rel_err(const Real& a, const Real& b) {
    Real d = abs(a - b);
    Real m = abs(b);
    if (m.is_zero()) return d;
    return d / m;
}

inline Real pow10(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(e >= 0 ? e : -e), MPFR_RNDN);
    if (e < 0) {
        Real one(1L, prec);
        r = one / r;
    }
    return r;
}

}  // namespace sklift

#pragma once

// RAII value type over mpfr_t. Every Real carries its own precision;
// binary operations round to the wider of the two operands.

#include <algorithm>
#include <string>
#include <utility>

#include <mpfr.h>

#include "zr/precision.hpp"

namespace zr {

class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(double x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  Real(long x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(const std::string& s, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw DomainError("Real: cannot parse \"" + s + "\"");
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  std::string str(size_t digits = 0) const {
    if (digits == 0) digits = (size_t)(prec() * 0.30103) + 2;
    char fmt[32], *out = nullptr;
    snprintf(fmt, sizeof fmt, "%%.%zuRg", digits);
    if (mpfr_asprintf(&out, fmt, v_) < 0) return "?";
    std::string s(out);
    mpfr_free_str(out);
    return s;
  }

  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }
  Real& operator/=(long k) { mpfr_div_si(v_, v_, k, MPFR_RNDN); return *this; }

  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend mpfr_prec_t join_prec(const Real& a, const Real& b) {
    return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
  }

#define ZR_REAL_BINOP(op, fn)                              \
  friend Real operator op(const Real& a, const Real& b) {  \
    Real r(join_prec(a, b));                               \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                       \
    return r;                                              \
  }
  ZR_REAL_BINOP(+, mpfr_add)
  ZR_REAL_BINOP(-, mpfr_sub)
  ZR_REAL_BINOP(*, mpfr_mul)
  ZR_REAL_BINOP(/, mpfr_div)
#undef ZR_REAL_BINOP

  friend Real operator*(const Real& a, long k) {
    Real r(a.prec());
    mpfr_mul_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real operator*(long k, const Real& a) { return a * k; }
  friend Real operator/(const Real& a, long k) {
    Real r(a.prec());
    mpfr_div_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real operator/(long k, const Real& a) {
    Real r(a.prec());
    mpfr_si_div(r.v_, k, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator+(const Real& a, long k) {
    Real r(a.prec());
    mpfr_add_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, long k) {
    Real r(a.prec());
    mpfr_sub_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

#define ZR_REAL_FN1(name, fn)       \
  friend Real name(const Real& a) { \
    Real r(a.prec());               \
    fn(r.v_, a.v_, MPFR_RNDN);      \
    return r;                       \
  }
  ZR_REAL_FN1(exp, mpfr_exp)
  ZR_REAL_FN1(expm1, mpfr_expm1)
  ZR_REAL_FN1(log, mpfr_log)
  ZR_REAL_FN1(log1p, mpfr_log1p)
  ZR_REAL_FN1(sqrt, mpfr_sqrt)
  ZR_REAL_FN1(abs, mpfr_abs)
  ZR_REAL_FN1(sin, mpfr_sin)
  ZR_REAL_FN1(cos, mpfr_cos)
#undef ZR_REAL_FN1

  friend Real pow(const Real& a, const Real& b) {
    Real r(join_prec(a, b));
    mpfr_pow(r.v_, a.raw(), b.raw(), MPFR_RNDN);
    return r;
  }
  friend Real pow(const Real& a, long k) {
    Real r(a.prec());
    mpfr_pow_si(r.v_, a.raw(), k, MPFR_RNDN);
    return r;
  }
  friend Real hypot(const Real& a, const Real& b) {
    Real r(join_prec(a, b));
    mpfr_hypot(r.v_, a.raw(), b.raw(), MPFR_RNDN);
    return r;
  }
  friend Real atan2(const Real& y, const Real& x) {
    Real r(join_prec(y, x));
    mpfr_atan2(r.v_, y.raw(), x.raw(), MPFR_RNDN);
    return r;
  }
  friend void sin_cos(Real& s, Real& c, const Real& a) {
    mpfr_sin_cos(s.raw(), c.raw(), a.raw(), MPFR_RNDN);
  }

  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  static Real euler_gamma(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_euler(r.v_, MPFR_RNDN);
    return r;
  }

  /// log2 of |x| (coarse, for magnitude accounting); very negative for 0.
  double mag_log2() const {
    if (mpfr_zero_p(v_)) return -1e300;
    if (!mpfr_number_p(v_)) return 1e300;
    long e = (long)mpfr_get_exp(v_);
    return (double)e;
  }

 private:
  mpfr_t v_;
};

}  // namespace zr

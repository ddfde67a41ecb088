#pragma once

// Complex numbers over zr::Real. Holds s = sigma + i t wherever the
// evaluators take a zeta argument. Components must stay finite; overflow
// raises instead of propagating infinities.

#include <string>
#include <utility>

#include "zr/real.hpp"

namespace zr {

class Cplx {
 public:
  Real re, im;

  explicit Cplx(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Cplx(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  void check_finite(const char* where) const {
    if (!is_finite()) throw OverflowError(std::string(where) + ": non-finite value");
  }

  Cplx conj() const { return Cplx(re, -im); }

  Cplx operator-() const { return Cplx(-re, -im); }

  friend Cplx operator+(const Cplx& a, const Cplx& b) { return Cplx(a.re + b.re, a.im + b.im); }
  friend Cplx operator-(const Cplx& a, const Cplx& b) { return Cplx(a.re - b.re, a.im - b.im); }

  friend Cplx operator*(const Cplx& a, const Cplx& b) {
    return Cplx(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Cplx operator*(const Cplx& a, const Real& b) { return Cplx(a.re * b, a.im * b); }
  friend Cplx operator*(const Real& b, const Cplx& a) { return a * b; }
  friend Cplx operator*(const Cplx& a, long k) { return Cplx(a.re * k, a.im * k); }

  friend Cplx operator/(const Cplx& a, const Cplx& b) {
    // Smith's algorithm is unnecessary here: exponent range is huge.
    Real d = b.re * b.re + b.im * b.im;
    return Cplx((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
  }
  friend Cplx operator/(const Cplx& a, const Real& b) { return Cplx(a.re / b, a.im / b); }
  friend Cplx operator/(const Cplx& a, long k) { return Cplx(a.re / k, a.im / k); }

  Cplx& operator+=(const Cplx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Cplx& operator-=(const Cplx& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Cplx& operator*=(const Cplx& o) {
    *this = *this * o;
    return *this;
  }

  friend Real abs(const Cplx& z) { return hypot(z.re, z.im); }
  friend Real arg(const Cplx& z) { return atan2(z.im, z.re); }

  friend Cplx exp(const Cplx& z) {
    Real m = exp(z.re);
    Real s(z.prec()), c(z.prec());
    sin_cos(s, c, z.im);
    return Cplx(m * c, m * s);
  }

  /// Principal branch.
  friend Cplx log(const Cplx& z) {
    if (z.is_zero()) throw DomainError("log: zero argument");
    return Cplx(log(abs(z)), arg(z));
  }

  friend Cplx sqrt(const Cplx& z) { return pow_cc(z, Cplx(0.5, 0.0, z.prec())); }

  /// z^w via exp(w log z), principal branch.
  friend Cplx pow_cc(const Cplx& z, const Cplx& w) { return exp(w * log(z)); }

  /// z^k for integer k by repeated squaring (exact branch handling).
  friend Cplx pow_int(const Cplx& z, long k) {
    mpfr_prec_t p = z.prec();
    if (k == 0) return Cplx(1.0, 0.0, p);
    bool inv = k < 0;
    unsigned long e = inv ? (unsigned long)(-k) : (unsigned long)k;
    Cplx acc(1.0, 0.0, p), base = z;
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    if (inv) return Cplx(1.0, 0.0, p) / acc;
    return acc;
  }

  double to_double_re() const { return re.to_double(); }
  double to_double_im() const { return im.to_double(); }

  std::string str(size_t digits = 0) const {
    std::string s = re.str(digits);
    if (im.sign() >= 0)
      s += "+" + im.str(digits) + "i";
    else
      s += im.str(digits) + "i";
    return s;
  }
};

/// base^(-s) = exp(-s ln base) for real base > 0 — the k^{-s} primitive.
inline Cplx cpow(const Real& base, const Cplx& s, const PrecisionContext& ctx) {
  if (!(base.sign() > 0)) throw DomainError("cpow: base must be positive");
  mpfr_prec_t p = std::max<mpfr_prec_t>(ctx.bits, s.prec());
  Real lb(p);
  mpfr_log(lb.raw(), base.raw(), MPFR_RNDN);
  // exp(-(a+bi) L) = e^{-aL} (cos(bL) - i sin(bL))
  Real m = exp(-(s.re * lb));
  Real sn(p), cs(p);
  sin_cos(sn, cs, s.im * lb);
  Cplx r(m * cs, -(m * sn));
  r.check_finite("cpow");
  return r;
}

inline Cplx cpow(double base, const Cplx& s, const PrecisionContext& ctx) {
  return cpow(Real(base, ctx.bits), s, ctx);
}

/// x^w for real x > 0 and complex w (positive exponent convention).
inline Cplx rpow(const Real& x, const Cplx& w) {
  if (!(x.sign() > 0)) throw DomainError("rpow: base must be positive");
  mpfr_prec_t p = std::max(x.prec(), w.prec());
  Real lx(p);
  mpfr_log(lx.raw(), x.raw(), MPFR_RNDN);
  Real m = exp(w.re * lx);
  Real sn(p), cs(p);
  sin_cos(sn, cs, w.im * lx);
  return Cplx(m * cs, m * sn);
}

}  // namespace zr

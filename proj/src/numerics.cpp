#include "zr/numerics.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace zr {

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) throw DomainError("binomial: k > n");
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace {

std::mutex g_bernoulli_mutex;
std::vector<ExactRational> g_bernoulli;  // B_0, B_1, ...

// Sum_{j<=m} C(m+1,j) B_j = 0 for m >= 1, solved for B_m.
void extend_bernoulli(unsigned long n) {
  if (g_bernoulli.empty()) g_bernoulli.emplace_back(1);
  for (unsigned long m = g_bernoulli.size(); m <= n; ++m) {
    if (m >= 3 && m % 2 == 1) {
      g_bernoulli.emplace_back(0);
      continue;
    }
    ExactRational acc(0);
    for (unsigned long j = 0; j < m; ++j) {
      if (g_bernoulli[j] == 0) continue;
      acc += ExactRational(binomial(m + 1, j)) * g_bernoulli[j];
    }
    acc /= ExactRational(BigInt((long)(m + 1)));
    g_bernoulli.emplace_back(-acc);
  }
}

}  // namespace

ExactRational bernoulli(unsigned long n) {
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  if (n >= g_bernoulli.size()) extend_bernoulli(n);
  return g_bernoulli[n];
}

Cplx sin_pi(const Cplx& z) {
  mpfr_prec_t p = z.prec();
  Real pi = Real::pi(p);
  Real a = pi * z.re, b = pi * z.im;
  Real sa(p), ca(p), shb(p), chb(p);
  sin_cos(sa, ca, a);
  mpfr_sinh_cosh(shb.raw(), chb.raw(), b.raw(), MPFR_RNDN);
  return Cplx(sa * chb, ca * shb);
}

Cplx log_gamma_stirling(const Cplx& z, mpfr_prec_t w) {
  // ln Gamma(z) = (z - 1/2) ln z - z + ln(2 pi)/2 + sum c_j z^{1-2j},
  // c_j = B_{2j} / (2j (2j-1)).
  Cplx lz = log(z);
  Real half(0.5, w);
  Cplx acc = (z - Cplx(half, Real(0L, w))) * lz - z;
  Real two_pi = Real::pi(w) * 2L;
  acc.re += log(two_pi) / 2L;

  Cplx zinv = Cplx(1.0, 0.0, w) / z;
  Cplx zinv2 = zinv * zinv;
  Cplx zp = zinv;
  Real thresh(w);
  mpfr_set_ui_2exp(thresh.raw(), 1, -(long)w, MPFR_RNDN);

  for (unsigned long j = 1; j < 4000; ++j) {
    Real cj = to_real(bernoulli(2 * j), w) / (long)(2 * j * (2 * j - 1));
    Cplx term = Cplx(cj * zp.re, cj * zp.im);
    acc += term;
    if (abs(term) < thresh) return acc;
    zp *= zinv2;
  }
  throw OverflowError("log_gamma_stirling: series did not reach threshold (argument too small?)");
}

Cplx gamma(const Cplx& s, const PrecisionContext& ctx) {
  if (s.im.is_zero() && s.re.is_integer() && s.re.sign() <= 0)
    throw PoleError("gamma: pole at non-positive integer");

  mpfr_prec_t p = ctx.bits;
  mpfr_prec_t w = p + 128 + p / 128;

  Cplx z(Real(w), Real(w));
  mpfr_set(z.re.raw(), s.re.raw(), MPFR_RNDN);
  mpfr_set(z.im.raw(), s.im.raw(), MPFR_RNDN);

  double im_mag = std::fabs(z.im.to_double());
  double shift_target = std::max({20.0, 0.35 * (double)w, 4.0 * im_mag});
  long k = 0;
  double re_d = z.re.to_double();
  if (re_d < shift_target) k = (long)std::ceil(shift_target - re_d);

  // Gamma(s) = Gamma(s + k) / prod_{j=0}^{k-1} (s + j)
  Cplx prod(1.0, 0.0, w);
  Cplx t = z;
  for (long j = 0; j < k; ++j) {
    prod *= t;
    t.re += Real(1L, w);
  }
  Cplx lg = log_gamma_stirling(t, w);
  Cplx g = exp(lg);
  if (k > 0) g = g / prod;

  Cplx out(Real(p), Real(p));
  mpfr_set(out.re.raw(), g.re.raw(), MPFR_RNDN);
  mpfr_set(out.im.raw(), g.im.raw(), MPFR_RNDN);
  out.check_finite("gamma");
  return out;
}

Cplx gamma(double s, const PrecisionContext& ctx) {
  return gamma(Cplx(s, 0.0, ctx.bits), ctx);
}

namespace {

// Central-difference derivatives d^k F at x0, k = 0..k_max, with
// h = 2^(-bits/3) evaluated at 3x precision.
template <typename F>
std::vector<Real> central_derivs(F&& f, const Real& x0, int k_max, mpfr_prec_t bits) {
  mpfr_prec_t w3 = 3 * bits;
  Real h(w3);
  mpfr_set_ui_2exp(h.raw(), 1, -(long)(bits / 3), MPFR_RNDN);

  auto at = [&](long j) {
    Real x(w3);
    mpfr_set(x.raw(), x0.raw(), MPFR_RNDN);
    if (j != 0) x += h * j;
    return f(x, j);
  };

  Real g0 = at(0);
  Real gp1 = at(1), gm1 = at(-1);
  Real gp2(w3), gm2(w3);
  if (k_max >= 3) {
    gp2 = at(2);
    gm2 = at(-2);
  }

  std::vector<Real> d;
  d.push_back(g0);
  if (k_max >= 1) d.push_back((gp1 - gm1) / (h * 2L));
  if (k_max >= 2) d.push_back((gp1 - g0 * 2L + gm1) / (h * h));
  if (k_max >= 3) d.push_back((gp2 - gp1 * 2L + gm1 * 2L - gm2) / (h * h * h * 2L));
  if (k_max >= 4)
    d.push_back((gp2 - gp1 * 4L + g0 * 6L - gm1 * 4L + gm2) / (h * h * h * h));

  std::vector<Real> out;
  for (auto& v : d) {
    Real r(bits);
    mpfr_set(r.raw(), v.raw(), MPFR_RNDN);
    out.push_back(r);
  }
  return out;
}

}  // namespace

std::vector<Cplx> gamma_derivs_at(unsigned alpha, int k_max, const PrecisionContext& ctx) {
  if (k_max > 4) throw DomainError("gamma_derivs_at: k_max > 4 unsupported");
  if (k_max < 0) throw DomainError("gamma_derivs_at: k_max < 0");

  mpfr_prec_t w3 = 3 * ctx.bits;
  PrecisionContext inner;
  inner.bits = w3;
  inner.target_tol = ctx.target_tol;
  Real pi_w(w3);
  mpfr_const_pi(pi_w.raw(), MPFR_RNDN);
  int par = (alpha % 2 == 0) ? 1 : -1;

  // g(alpha + d) = -(-1)^alpha sin(pi d) Gamma(1 + alpha + d) / pi;
  // the exact reduction of sin(pi s) at integer alpha avoids argument-
  // reduction error in the stencil.
  auto g = [&](const Real& x, long j) -> Real {
    if (j == 0) return Real(0L, w3);  // sin(pi alpha) = 0 exactly
    Real delta(w3);
    mpfr_set(delta.raw(), x.raw(), MPFR_RNDN);
    delta -= Real((long)alpha, w3);
    Real sp = sin(pi_w * delta);
    Cplx gam = gamma(Cplx(Real(1L, w3) + x, Real(0L, w3)), inner);
    Real r = -(sp * gam.re) / pi_w;
    if (par < 0) r = -r;
    return r;
  };

  Real x0((long)alpha, w3);
  auto d = central_derivs(g, x0, k_max, ctx.bits);
  std::vector<Cplx> out;
  for (auto& v : d) out.emplace_back(v, Real(0L, ctx.bits));
  return out;
}

std::vector<Real> gamma_taylor_at_one(int j_max, const PrecisionContext& ctx) {
  if (j_max > 4) throw DomainError("gamma_taylor_at_one: j_max > 4 unsupported");
  mpfr_prec_t w3 = 3 * ctx.bits;
  PrecisionContext inner;
  inner.bits = w3;
  inner.target_tol = ctx.target_tol;
  auto f = [&](const Real& x, long) -> Real {
    return gamma(Cplx(x, Real(0L, w3)), inner).re;
  };
  Real x0(1L, w3);
  return central_derivs(f, x0, j_max, ctx.bits);
}

}  // namespace zr

#pragma once

// Scalar kernels: complex Gamma, derivatives of 1/Gamma at integer points,
// exact binomials and Bernoulli numbers.

#include <vector>

#include "zr/complex.hpp"
#include "zr/rational.hpp"

namespace zr {

/// Exact C(n, k); throws DomainError for k > n.
BigInt binomial(unsigned long n, unsigned long k);

/// Exact Bernoulli number B_n with B_1 = -1/2; memoized, thread-safe.
ExactRational bernoulli(unsigned long n);

/// Gamma(s) for complex s, accurate to a few ulp at ctx precision.
/// Argument-shift recurrence into the Stirling regime, then the
/// asymptotic series with exact Bernoulli coefficients.
/// Throws PoleError at non-positive integers.
Cplx gamma(const Cplx& s, const PrecisionContext& ctx);

Cplx gamma(double s, const PrecisionContext& ctx);

/// log Gamma(z) for Re(z) large enough that the Stirling series converges
/// at the working precision (internal building block, exposed for tests).
Cplx log_gamma_stirling(const Cplx& z, mpfr_prec_t work_bits);

/// e_k = d^k/ds^k (1/Gamma(-s)) at s = alpha (non-negative integer),
/// k = 0..k_max, via central differences of -sin(pi s)Gamma(1+s)/pi at
/// 3x working precision. k_max <= 4.
std::vector<Cplx> gamma_derivs_at(unsigned alpha, int k_max, const PrecisionContext& ctx);

/// Gamma^{(j)}(1) for j = 0..j_max (<= 4), same differencing scheme.
std::vector<Real> gamma_taylor_at_one(int j_max, const PrecisionContext& ctx);

/// sin(pi z) for complex z (reflection checks).
Cplx sin_pi(const Cplx& z);

}  // namespace zr

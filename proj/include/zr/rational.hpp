#pragma once

// Exact integer/rational support for binomials and Bernoulli numbers.
// GMP's C++ classes keep rationals canonical (lowest terms, positive
// denominator), which is exactly the invariant we need.

#include <gmpxx.h>
#include <mpfr.h>

#include "zr/real.hpp"

namespace zr {

using BigInt = mpz_class;
using ExactRational = mpq_class;

inline Real to_real(const ExactRational& q, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

inline Real to_real(const BigInt& z, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_z(r.raw(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

}  // namespace zr

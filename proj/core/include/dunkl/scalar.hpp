// Exact scalar types. Everything in this library is exact arithmetic:
// Int for the integer-coefficient polynomial layer, Rat for the linear
// algebra that needs division (ideal membership, coinvariant basis).
#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace dunkl {

using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// (2b-1)!! with (-1)!! = 1.
inline Int odd_double_factorial(long b) {
  Int r = 1;
  for (long m = 2 * b - 1; m > 1; m -= 2) r *= m;
  return r;
}

}  // namespace dunkl

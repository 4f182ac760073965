#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace weylab {

using Rat = mpq_class;
using Int = mpz_class;

// Thrown for violated mathematical preconditions (non-homogeneous operator,
// singular basis, order mismatch, ...). The CLI maps this to exit code 1.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int factorial(unsigned n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// binom(r, n) for rational r: r(r-1)...(r-n+1)/n!
inline Rat rat_binomial(const Rat& r, unsigned n) {
  Rat acc = 1;
  for (unsigned i = 0; i < n; ++i) {
    acc *= r - static_cast<long>(i);
    acc /= static_cast<long>(i) + 1;
  }
  return acc;
}

// "p/q", or just "p" when q = 1.
inline std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Accepts "p" or "p/q"; q must be nonzero.
Rat rat_parse(const std::string& s);

}  // namespace weylab

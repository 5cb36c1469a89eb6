// Exact rational scalars (GMP-backed) and small helpers shared by all modules.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <stdexcept>
#include <vector>

namespace alcovelab {

using Rat = mpq_class;
using Int = long long;

inline Rat rat(Int num, Int den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

// floor(q) as a plain machine integer; all quantities at desk scale are tiny.
inline Int rat_floor(const Rat& q) {
  mpz_class z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!z.fits_slong_p()) throw std::overflow_error("rat_floor out of range");
  return z.get_si();
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

// Canonical string form: reduced, "-3", "1/2" (GMP convention, no "/1").
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_parse(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

using RatVec = std::vector<Rat>;

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& m) : std::runtime_error(m) {}
};

inline RatVec rat_vec(std::vector<Int> v) {
  RatVec r;
  r.reserve(v.size());
  for (Int x : v) r.push_back(rat(x));
  return r;
}

}  // namespace alcovelab

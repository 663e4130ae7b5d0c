#pragma once

#include <gmpxx.h>

#include <string>

namespace superquant {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator (GMP canonical form).
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
inline Rat rat_from_string(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace superquant

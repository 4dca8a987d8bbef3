#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hja {

// Exact rational scalar. GMP keeps values canonical (positive denominator,
// reduced fraction) after every arithmetic operation.
using Scalar = mpq_class;

inline Scalar make_scalar(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("scalar: zero denominator");
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

// Parses "p/q" or "p". The serialized form of every scalar in JSON I/O.
inline Scalar parse_scalar(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("scalar: empty string");
  Scalar s;
  if (s.set_str(text, 10) != 0 || s.get_den() == 0)
    throw std::invalid_argument("scalar: cannot parse '" + text + "'");
  s.canonicalize();
  return s;
}

inline std::string format_scalar(const Scalar& s) { return s.get_str(); }

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

}  // namespace hja

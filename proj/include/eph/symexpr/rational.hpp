#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace eph::sym {

// Exact rational in lowest terms with positive denominator.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Every finite double is a dyadic rational; the conversion is exact.
inline Rational rational_from_double(double d) {
  Rational q(d);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational &q) { return q.get_den() == 1; }

inline std::optional<long> to_small_int(const Rational &q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    return std::nullopt;
  return q.get_num().get_si();
}

inline std::string to_string(const Rational &q) { return q.get_str(); }

// Exact q-th root of a nonnegative rational when one exists (q >= 1).
std::optional<Rational> exact_root(const Rational &value, unsigned long q);

} // namespace eph::sym

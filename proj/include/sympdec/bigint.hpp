#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace sympdec {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& value) { return value.get_str(); }

inline std::string to_string(const Rational& value) { return value.get_str(); }

/// n/d in lowest terms. GMP arithmetic requires canonical operands, which
/// the two-argument mpq_class constructor does not produce.
inline Rational ratio(const BigInt& n, const BigInt& d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// Value as int64 when it fits.
inline std::optional<std::int64_t> to_int64(const BigInt& value) {
  if (!value.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(value.get_si());
}

}  // namespace sympdec

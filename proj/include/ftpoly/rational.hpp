#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ftpoly {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

/// A point of R^{2m} with exact coordinates.
using Point = std::vector<Rational>;

inline Rational rational(std::int64_t v) { return Rational(static_cast<long>(v)); }

inline Rational rational(std::int64_t num, std::int64_t den) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

/// "p/q" in lowest terms, or "p" when q = 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p", "-p" or "p/q". Returns false on malformed input or q = 0.
bool parse_rational(std::string_view text, Rational& out);

std::vector<std::string> to_strings(const Point& p);

}  // namespace ftpoly

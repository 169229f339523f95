#pragma once

#include <gmpxx.h>

#include <string>

namespace reflcat {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Canonical "p" / "p/q" form (mpq_class keeps values canonicalized).
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p" or "p/q"; throws std::invalid_argument on garbage.
Rational parse_rational(const std::string& text);

} // namespace reflcat

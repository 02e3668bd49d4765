// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bdisc {

using Integer = mpz_class;

// mpq_class is kept canonical: every constructor path below calls canonicalize().
using Rational = mpq_class;

/// Parses "n", "-n" or "n/d" (d != 0). No floating point forms.
Rational parse_rational(std::string_view text);

/// Always "num/den", e.g. "-3/1". Used for exact values in JSON payloads.
std::string exact_string(const Rational& q);

/// "-3", "1/2": integers without a denominator. Used in polynomial text.
std::string compact_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

}  // namespace bdisc

// Licensed under the Apache License 2.0 (see LICENSE file).

#include "bdisc/rational.hpp"

#include <cctype>

#include "bdisc/error.hpp"

namespace bdisc {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw Error(Errc::Parse, "not an exact rational: '" + std::string(text) + "'");
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(parse_integer(num));
  } else {
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
      throw Error(Errc::Parse, "bad denominator in '" + std::string(text) + "'");
    Integer d = parse_integer(den);
    if (d == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
    q = Rational(parse_integer(num), d);
  }
  q.canonicalize();
  return q;
}

std::string exact_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string compact_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return exact_string(q);
}

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::NotExact: return "NotExact";
    case Errc::Parse: return "Parse";
    case Errc::InvalidClass: return "InvalidClass";
    case Errc::DiscriminantParameter: return "DiscriminantParameter";
    case Errc::NonGenericConfiguration: return "NonGenericConfiguration";
    case Errc::SeedNotSmallEnough: return "SeedNotSmallEnough";
    case Errc::InvalidSignature: return "InvalidSignature";
    case Errc::CatalogMissing: return "CatalogMissing";
    case Errc::DiscriminantEndpoint: return "DiscriminantEndpoint";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::NotFound: return "NotFound";
    case Errc::EmptyViewport: return "EmptyViewport";
    case Errc::BadAxes: return "BadAxes";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace bdisc

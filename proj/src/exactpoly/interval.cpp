// Licensed under the Apache License 2.0 (see LICENSE file).

#include "bdisc/interval.hpp"

#include "bdisc/error.hpp"

namespace bdisc {

Interval Interval::make(std::optional<Rational> lo, bool lo_closed, std::optional<Rational> hi, bool hi_closed) {
  Interval iv;
  if (lo && hi && *lo > *hi) throw Error(Errc::Internal, "interval with lo > hi");
  iv.lo_ = std::move(lo);
  iv.hi_ = std::move(hi);
  iv.lo_closed_ = iv.lo_ && lo_closed;
  iv.hi_closed_ = iv.hi_ && hi_closed;
  if (iv.is_point()) iv.lo_closed_ = iv.hi_closed_ = true;
  return iv;
}

Interval Interval::open(Rational lo, Rational hi) { return make(std::move(lo), false, std::move(hi), false); }
Interval Interval::closed(Rational lo, Rational hi) { return make(std::move(lo), true, std::move(hi), true); }
Interval Interval::point(const Rational& x) { return make(x, true, x, true); }
Interval Interval::whole() { return make(std::nullopt, false, std::nullopt, false); }
Interval Interval::below(Rational hi, bool closed) { return make(std::nullopt, false, std::move(hi), closed); }
Interval Interval::above(Rational lo, bool closed) { return make(std::move(lo), closed, std::nullopt, false); }

bool Interval::contains(const Rational& x) const {
  if (lo_ && (x < *lo_ || (x == *lo_ && !lo_closed_))) return false;
  if (hi_ && (x > *hi_ || (x == *hi_ && !hi_closed_))) return false;
  return true;
}

Rational Interval::width() const {
  if (!is_bounded()) throw Error(Errc::Internal, "width of an unbounded interval");
  return *hi_ - *lo_;
}

std::string Interval::to_string() const {
  std::string s = lo_closed_ ? "[" : "(";
  s += lo_ ? compact_string(*lo_) : "-inf";
  s += ", ";
  s += hi_ ? compact_string(*hi_) : "+inf";
  s += hi_closed_ ? "]" : ")";
  return s;
}

}  // namespace bdisc

// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <optional>
#include <string>

#include "bdisc/rational.hpp"

namespace bdisc {

// Interval on the real line with optional infinite ends. An absent bound is
// infinite and is always treated as open.
class Interval {
 public:
  static Interval open(Rational lo, Rational hi);
  static Interval closed(Rational lo, Rational hi);
  static Interval point(const Rational& x);
  static Interval whole();
  static Interval below(Rational hi, bool closed = false);
  static Interval above(Rational lo, bool closed = false);
  static Interval make(std::optional<Rational> lo, bool lo_closed, std::optional<Rational> hi, bool hi_closed);

  const std::optional<Rational>& lo() const { return lo_; }
  const std::optional<Rational>& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }
  bool is_point() const { return lo_ && hi_ && *lo_ == *hi_; }
  bool is_bounded() const { return lo_ && hi_; }
  bool contains(const Rational& x) const;
  /// hi - lo; only for bounded intervals.
  Rational width() const;

  std::string to_string() const;

 private:
  Interval() = default;
  std::optional<Rational> lo_, hi_;
  bool lo_closed_ = false, hi_closed_ = false;
};

}  // namespace bdisc

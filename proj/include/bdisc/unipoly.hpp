// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bdisc/interval.hpp"
#include "bdisc/rational.hpp"

namespace bdisc {

// Dense univariate polynomial over Q, coefficients from the constant term up.
// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs, std::string var = "x");
  static UniPoly constant(const Rational& c, std::string var = "x");
  static UniPoly monomial(const Rational& c, int degree, std::string var = "x");
  /// (x - r_0)(x - r_1)...
  static UniPoly from_roots(std::span<const Rational> roots, std::string var = "x");

  const std::string& var() const { return var_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly with_var(std::string var) const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
  std::string var_ = "x";
};

/// Euclidean division over Q. Throws ZeroPolynomial for b = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd (zero only when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Integer primitive part with positive leading coefficient.
std::vector<Integer> primitive_integer_coeffs(const UniPoly& p);

struct SquarefreeDecomposition {
  UniPoly gcd_with_derivative;
  UniPoly squarefree_part;
};

SquarefreeDecomposition squarefree_decomposition(const UniPoly& p);

// Sturm chain of the squarefree part of p, stored as primitive integer
// polynomials. Counting distinct roots with it needs no special cases at roots of p.
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& p);

  /// Number of distinct real roots in iv, honoring open/closed ends.
  int count(const Interval& iv) const;
  int count_all() const;
  int sign_at(const Rational& x) const;
  bool is_root(const Rational& x) const { return sign_at(x) == 0; }
  const UniPoly& squarefree() const { return squarefree_; }
  /// True when p itself was squarefree.
  bool input_squarefree() const { return input_squarefree_; }

 private:
  /// Fills chain_ from p0 and p0'; false if p0 has a repeated factor.
  bool build(std::vector<Integer> p0);
  int variations_at(const Rational& x) const;
  int variations_at_infinity(int direction) const;
  /// distinct roots in (lo, hi]
  int count_half_open(const Rational* lo, const Rational* hi) const;

  UniPoly squarefree_;
  bool input_squarefree_ = true;
  std::vector<std::vector<Integer>> chain_;
};

/// Distinct real roots of p in iv. Throws ZeroPolynomial.
int sturm_count(const UniPoly& p, const Interval& iv);

/// True if Descartes' rule of signs, on at most 2^max_depth equal pieces of
/// [0, 1], shows that p has no root there. False means "not shown".
bool descartes_excludes_unit_interval(const UniPoly& p, int max_depth = 5);

struct RootSignature {
  int neg = 0;
  int pos = 0;
  bool zero_is_root = false;
  bool is_squarefree = true;
};

RootSignature root_signature(const UniPoly& p);

/// Disjoint ascending isolating intervals, one per distinct real root. Each is a
/// rational point or an open interval of width at most max_width.
std::vector<Interval> isolate_real_roots(const UniPoly& p, const Rational& max_width);

/// Shrinks an isolating interval (point or open, one root of chain inside) by
/// bisection until it is a point or narrower than max_width.
Interval refine_root(const SturmChain& chain, Interval iv, const Rational& max_width);

/// A rational strictly between the roots isolated by `left` and `right`
/// (left's root < right's root); refines the inputs if they touch.
Rational separating_rational(const SturmChain& chain, Interval left, Interval right);

/// Resultant of two univariate polynomials over Q (Euclidean remainder
/// recurrence). Throws ZeroPolynomial if either input is zero.
Rational resultant(const UniPoly& f, const UniPoly& g);

/// Newton interpolation through (xs[i], ys[i]); the xs must be distinct.
UniPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys, std::string var = "x");

/// Cauchy bound: every real root has absolute value < the returned value.
Rational root_bound(const UniPoly& p);

}  // namespace bdisc

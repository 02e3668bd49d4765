// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bdisc/rational.hpp"
#include "bdisc/unipoly.hpp"

namespace bdisc {

using Monomial = std::vector<std::uint32_t>;

/// Lexicographically larger exponent tuples first.
struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

// Sparse polynomial over Q in an ordered list of named variables. Binary
// operations require both operands to share the same variable list.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);
  static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
  static MultiPoly variable(std::vector<std::string> vars, std::string_view name);
  static MultiPoly term(std::vector<std::string> vars, const Rational& c, Monomial exps);
  /// sum_i coeffs[i] * var^i, coefficients over the same variable list.
  static MultiPoly from_coefficients(std::span<const MultiPoly> coeffs, std::string_view var);
  /// Parses the canonical text form, e.g. "27*d^2 + 4*b^3".
  static MultiPoly parse(std::string_view text, std::vector<std::string> vars);

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  size_t arity() const { return vars_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value.
  Rational constant_value() const;
  int var_index(std::string_view name) const;
  int degree(std::string_view var) const;
  int total_degree() const;
  /// Leading (largest lex) term.
  const std::pair<const Monomial, Rational>& leading_term() const;

  Rational eval(std::span<const Rational> point) const;
  double eval_double(std::span<const double> point) const;
  long double eval_long_double(std::span<const long double> point) const;

  /// Coefficients in `var` (index = power); the results keep the full variable list.
  std::vector<MultiPoly> coefficients_in(std::string_view var) const;
  MultiPoly derivative(std::string_view var) const;
  /// Substitutes a polynomial (over the same variables) for `var`.
  MultiPoly substitute(std::string_view var, const MultiPoly& value) const;
  /// Fixes some variables to values and drops them from the variable list.
  MultiPoly specialize(std::span<const std::string> names, std::span<const Rational> values) const;
  /// Re-expresses over a different variable list; every used variable must be present.
  MultiPoly with_vars(std::vector<std::string> vars) const;
  /// Univariate view; all variables other than `var` must be absent from the terms.
  UniPoly to_unipoly(std::string_view var) const;
  static MultiPoly from_unipoly(const UniPoly& p, std::vector<std::string> vars, std::string_view var);

  /// Scales to coprime integer coefficients with a positive leading term.
  MultiPoly primitive() const;
  /// lcm of coefficient denominators.
  Integer denominator_lcm() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, const MultiPoly& p);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }
  MultiPoly pow(unsigned n) const;

  /// Canonical sparse text: terms in descending exponent order, e.g. "4*b^3 + 27*d^2".
  std::string to_string() const;

 private:
  void check_same_vars(const MultiPoly& o) const;
  void add_term(const Monomial& m, const Rational& c);

  std::vector<std::string> vars_;
  Terms terms_;
};

/// Exact quotient a / b; throws NotExact if b does not divide a.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

/// Sylvester resultant eliminating `var`, via fraction-free determinant
/// evaluation over the integers. The result drops `var` from the variable list.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::string_view var);

/// Determinant of a square matrix of polynomials (Bareiss elimination). Entries
/// must have integer coefficients for the exact divisions to stay in Z[vars].
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m);

/// gcd over Q[vars], normalized by primitive(); gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Product of the distinct irreducible factors, normalized by primitive().
MultiPoly squarefree_part(const MultiPoly& p);

/// F((1-t) l0 + t l1) for F over its variables (in order).
UniPoly restrict_to_segment(const MultiPoly& f, std::span<const Rational> l0, std::span<const Rational> l1);

/// True if a = c * b for some nonzero rational c.
bool proportional(const MultiPoly& a, const MultiPoly& b);

}  // namespace bdisc

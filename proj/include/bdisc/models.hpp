// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bdisc/multipoly.hpp"
#include "bdisc/rational.hpp"
#include "bdisc/unipoly.hpp"

namespace bdisc {

enum class Family { B, C, F4 };

// One row of the table of simple real boundary singularities in (x, y) with
// boundary x = 0.
//
//   B^±_{2k}: x^{2k} ± y^2         ±B_{2k+1}: ±(x^{2k+1} + y^2)
//   C^±_{2k}: xy ± y^{2k}          ±C_{2k+1}: ±(xy + y^{2k+1})
//   F4±:      ±x^2 + y^3
//
// `sign` is the sign of y^2 (even B), of y^mu (even C), of x^2 (F4) and the
// global sign for odd B and C.
class SingularityClass {
 public:
  SingularityClass(Family family, int mu, int sign);

  /// Accepts "B+4", "B4+", "-B5", "B5-", "C5+", "F4+", "F4-" and similar.
  static SingularityClass parse(std::string_view text);

  Family family() const { return family_; }
  int mu() const { return mu_; }
  int sign() const { return sign_; }
  /// mu = 2k or 2k + 1; 1 for F4.
  int k() const;
  bool is_odd() const { return family_ != Family::F4 && mu_ % 2 == 1; }

  /// Canonical tag: "B+4", "-B5", "C-6", "+C3", "F4+".
  std::string tag() const;
  std::string normal_form() const;
  std::vector<std::string> param_names() const;

  size_t expected_component_count() const;
  int asymptotic_sector_count() const;
  /// (type as an ordinary singularity, type of the boundary restriction)
  std::pair<std::string, std::string> decomposition() const;

  /// Sign of the leading term of h (B, C).
  int h_leading_sign() const;
  /// Coefficient of y^2 (B) or of xy (C).
  int quadratic_sign() const;

  friend bool operator==(const SingularityClass&, const SingularityClass&) = default;

 private:
  Family family_;
  int mu_;
  int sign_;
};

// A point of the deformation base Q^mu; for F4 the entries are (a, b, c, d).
struct Parameter {
  std::vector<Rational> values;

  size_t size() const { return values.size(); }
  const Rational& operator[](size_t i) const { return values[i]; }
  Rational& operator[](size_t i) { return values[i]; }
  friend bool operator==(const Parameter&, const Parameter&) = default;
};

Parameter parse_parameter(const std::vector<std::string>& literals);
std::vector<std::string> parameter_strings(const Parameter& lambda);

enum class Membership { NonSingular, Sigma0, Sigma1, Both };

const char* membership_name(Membership m);

/// f_lambda as a polynomial in (x, y).
MultiPoly deformation_polynomial(const SingularityClass& cls, const Parameter& lambda);

/// h_lambda for B (in x) and C (in y); f_lambda(0, y) = y^3 + b y + d for F4+
/// (and f_lambda(0, y) for F4-).
UniPoly boundary_polynomial(const SingularityClass& cls, const Parameter& lambda);

Membership discriminant_membership(const SingularityClass& cls, const Parameter& lambda);

/// Parameter of F4+ describing the same picture as an F4- parameter:
/// -f^-_{(a,b,c,d)}(x, -y) = f^+_{(-a,b,c,-d)}(x, y).
Parameter f4_reduce_minus(const Parameter& lambda);

/// 27 d^2 + 4 b^3 over (a, b, c, d).
const MultiPoly& f4_sigma1_polynomial();

/// Primitive squarefree polynomial in (a, b, c, d) whose real zero set is the
/// critical-value-zero part of the F4+ discriminant. Computed once.
const MultiPoly& f4_sigma0_eliminant();

/// Unreduced Res_y of the two equations left after eliminating x from
/// f = f_x = f_y = 0.
MultiPoly f4_sigma0_raw_resultant();

/// (a, b, c, d) = (-c y0, -3 y0^2, c, 2 y0^3): Morse critical point at (0, y0)
/// with value 0, boundary cubic (y - y0)^2 (y + 2 y0).
Parameter xi0_point(const Rational& y0, const Rational& c);

enum class OvalSide { Left, Right };

/// Perturbs a Xi0 point by x -> x -+ eps (direction chosen by the side) and then
/// f -> f + delta. Throws
/// SeedNotSmallEnough when the result is singular or is not an off-slice type
/// with an uncrossed oval on `side`.
Parameter f4_seed_oval_side(OvalSide side, const Rational& y0, const Rational& eps, const Rational& delta);

/// The same construction without the type check (used by the halving search
/// and for eps = delta = 0).
Parameter f4_perturbed_xi0(OvalSide side, const Rational& y0, const Rational& eps, const Rational& delta);

/// Halving search (factor 1/2, at most 40 steps) for eps = delta that passes
/// f4_seed_oval_side.
Parameter f4_find_oval_seed(OvalSide side, const Rational& y0 = 1);

}  // namespace bdisc

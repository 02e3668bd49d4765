// Licensed under the Apache License 2.0 (see LICENSE file).

#include "bdisc/models.hpp"

#include <cctype>

#include "bdisc/classify.hpp"
#include "bdisc/error.hpp"

namespace bdisc {

SingularityClass::SingularityClass(Family family, int mu, int sign) : family_(family), mu_(mu), sign_(sign) {
  if (sign != 1 && sign != -1) throw Error(Errc::InvalidClass, "sign must be +1 or -1");
  if (family == Family::F4 && mu != 4) throw Error(Errc::InvalidClass, "F4 has mu = 4");
  if (family != Family::F4 && mu < 2) throw Error(Errc::InvalidClass, "B and C need mu >= 2");
}

SingularityClass SingularityClass::parse(std::string_view text) {
  std::optional<Family> family;
  int sign = 0;
  std::string digits;
  for (char ch : text) {
    const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (up == 'B' || up == 'C' || up == 'F') {
      if (family || !digits.empty()) throw Error(Errc::InvalidClass, "bad class '" + std::string(text) + "'");
      family = up == 'B' ? Family::B : up == 'C' ? Family::C : Family::F4;
    } else if (ch == '+' || ch == '-') {
      if (sign != 0) throw Error(Errc::InvalidClass, "two signs in '" + std::string(text) + "'");
      sign = ch == '+' ? 1 : -1;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (!family) throw Error(Errc::InvalidClass, "bad class '" + std::string(text) + "'");
      digits += ch;
    } else {
      throw Error(Errc::InvalidClass, "bad class '" + std::string(text) + "'");
    }
  }
  if (!family || digits.empty() || digits.size() > 3) throw Error(Errc::InvalidClass, "bad class '" + std::string(text) + "'");
  return SingularityClass(*family, std::stoi(digits), sign == 0 ? 1 : sign);
}

int SingularityClass::k() const { return family_ == Family::F4 ? 1 : mu_ / 2; }

std::string SingularityClass::tag() const {
  const char s = sign_ > 0 ? '+' : '-';
  switch (family_) {
    case Family::F4: return std::string("F4") + s;
    case Family::B:
    case Family::C: {
      const std::string letter = family_ == Family::B ? "B" : "C";
      if (is_odd()) return s + letter + std::to_string(mu_);
      return letter + s + std::to_string(mu_);
    }
  }
  return "?";
}

std::string SingularityClass::normal_form() const {
  const std::string m = std::to_string(mu_);
  switch (family_) {
    case Family::F4: return sign_ > 0 ? "x^2 + y^3" : "-x^2 + y^3";
    case Family::B:
      if (is_odd()) return sign_ > 0 ? "x^" + m + " + y^2" : "-x^" + m + " - y^2";
      return sign_ > 0 ? "x^" + m + " + y^2" : "x^" + m + " - y^2";
    case Family::C:
      if (is_odd()) return sign_ > 0 ? "x*y + y^" + m : "-x*y - y^" + m;
      return sign_ > 0 ? "x*y + y^" + m : "x*y - y^" + m;
  }
  return "";
}

std::vector<std::string> SingularityClass::param_names() const {
  if (family_ == Family::F4) return {"a", "b", "c", "d"};
  std::vector<std::string> names;
  for (int i = 1; i <= mu_; ++i) names.push_back("l" + std::to_string(i));
  return names;
}

size_t SingularityClass::expected_component_count() const {
  if (family_ == Family::F4) return 8;
  const size_t kk = static_cast<size_t>(k());
  return is_odd() ? (kk + 1) * (kk + 2) : (kk + 1) * (kk + 1);
}

int SingularityClass::asymptotic_sector_count() const {
  switch (family_) {
    case Family::F4: return 1;
    case Family::C: return 2;
    case Family::B: return is_odd() ? 1 : (sign_ > 0 ? 0 : 2);
  }
  return 0;
}

std::pair<std::string, std::string> SingularityClass::decomposition() const {
  const std::string big = "A" + std::to_string(mu_ - 1);
  switch (family_) {
    case Family::B: return {big, "A1"};
    case Family::C: return {"A1", big};
    case Family::F4: return {"A2", "A2"};
  }
  return {};
}

int SingularityClass::h_leading_sign() const {
  if (family_ == Family::B && !is_odd()) return 1;
  return sign_;
}

int SingularityClass::quadratic_sign() const {
  if (family_ == Family::C && !is_odd()) return 1;
  return sign_;
}

Parameter parse_parameter(const std::vector<std::string>& literals) {
  Parameter p;
  for (const auto& s : literals) p.values.push_back(parse_rational(s));
  return p;
}

std::vector<std::string> parameter_strings(const Parameter& lambda) {
  std::vector<std::string> out;
  for (const auto& v : lambda.values) out.push_back(exact_string(v));
  return out;
}

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::NonSingular: return "NonSingular";
    case Membership::Sigma0: return "Sigma0";
    case Membership::Sigma1: return "Sigma1";
    case Membership::Both: return "Both";
  }
  return "?";
}

namespace {

void check_arity(const SingularityClass& cls, const Parameter& lambda) {
  if (lambda.size() != static_cast<size_t>(cls.mu()))
    throw Error(Errc::ArityMismatch, cls.tag() + " takes " + std::to_string(cls.mu()) + " parameters, got " +
                                         std::to_string(lambda.size()));
}

const std::vector<std::string>& xy() {
  static const std::vector<std::string> v{"x", "y"};
  return v;
}

MultiPoly mono_xy(const Rational& c, unsigned ex, unsigned ey) { return MultiPoly::term(xy(), c, {ex, ey}); }

bool has_repeated_real_root(const UniPoly& h) {
  const UniPoly g = gcd(h, h.derivative());
  return g.degree() >= 1 && sturm_count(g, Interval::whole()) > 0;
}

const std::vector<std::string>& abcd() {
  static const std::vector<std::string> v{"a", "b", "c", "d"};
  return v;
}

}  // namespace

MultiPoly deformation_polynomial(const SingularityClass& cls, const Parameter& lambda) {
  check_arity(cls, lambda);
  const unsigned mu = static_cast<unsigned>(cls.mu());
  MultiPoly f(xy());
  switch (cls.family()) {
    case Family::B:
      f += mono_xy(cls.h_leading_sign(), mu, 0) + mono_xy(cls.quadratic_sign(), 0, 2);
      for (unsigned i = 1; i <= mu; ++i) f += mono_xy(lambda[i - 1], mu - i, 0);
      break;
    case Family::C:
      f += mono_xy(cls.quadratic_sign(), 1, 1) + mono_xy(cls.h_leading_sign(), 0, mu);
      for (unsigned i = 1; i <= mu; ++i) f += mono_xy(lambda[i - 1], 0, mu - i);
      break;
    case Family::F4:
      f += mono_xy(cls.sign(), 2, 0) + mono_xy(1, 0, 3) + mono_xy(lambda[0], 1, 0) + mono_xy(lambda[1], 0, 1) +
           mono_xy(lambda[2], 1, 1) + mono_xy(lambda[3], 0, 0);
      break;
  }
  return f;
}

UniPoly boundary_polynomial(const SingularityClass& cls, const Parameter& lambda) {
  check_arity(cls, lambda);
  const size_t mu = static_cast<size_t>(cls.mu());
  if (cls.family() == Family::F4) return UniPoly({lambda[3], lambda[1], 0, 1}, "y");
  std::vector<Rational> c(mu + 1);
  c[mu] = cls.h_leading_sign();
  for (size_t i = 1; i <= mu; ++i) c[mu - i] = lambda[i - 1];
  return UniPoly(std::move(c), cls.family() == Family::B ? "x" : "y");
}

Parameter f4_reduce_minus(const Parameter& lambda) {
  if (lambda.size() != 4) throw Error(Errc::ArityMismatch, "F4 takes 4 parameters");
  return Parameter{{-lambda[0], lambda[1], lambda[2], -lambda[3]}};
}

const MultiPoly& f4_sigma1_polynomial() {
  static const MultiPoly p = MultiPoly::parse("4*b^3 + 27*d^2", abcd());
  return p;
}

MultiPoly f4_sigma0_raw_resultant() {
  const std::vector<std::string> vars{"a", "b", "c", "d", "x", "y"};
  auto v = [&](const char* n) { return MultiPoly::variable(vars, n); };
  const MultiPoly f = v("x").pow(2) + v("y").pow(3) + v("a") * v("x") + v("b") * v("y") + v("c") * v("x") * v("y") + v("d");
  // f_x = 0 is linear in x: x = -(a + c y) / 2
  const MultiPoly x_of_y = Rational(-1, 2) * (v("a") + v("c") * v("y"));
  const std::vector<std::string> no_x{"a", "b", "c", "d", "y"};
  const MultiPoly f_on = f.substitute("x", x_of_y).with_vars(no_x);
  const MultiPoly fy_on = f.derivative("y").substitute("x", x_of_y).with_vars(no_x);
  return resultant(f_on, fy_on, "y");
}

const MultiPoly& f4_sigma0_eliminant() {
  static const MultiPoly delta = squarefree_part(f4_sigma0_raw_resultant());
  return delta;
}

Membership discriminant_membership(const SingularityClass& cls, const Parameter& lambda) {
  check_arity(cls, lambda);
  bool s0 = false, s1 = false;
  if (cls.family() == Family::F4) {
    const Parameter p = cls.sign() > 0 ? lambda : f4_reduce_minus(lambda);
    s0 = f4_sigma0_eliminant().eval(p.values) == 0;
    s1 = f4_sigma1_polynomial().eval(p.values) == 0;
  } else {
    const UniPoly h = boundary_polynomial(cls, lambda);
    const bool repeated = has_repeated_real_root(h);
    const bool zero_root = h.coeff(0) == 0;
    // B: critical value 0 <=> repeated root, tangency <=> h(0) = 0; C swaps them.
    s0 = cls.family() == Family::B ? repeated : zero_root;
    s1 = cls.family() == Family::B ? zero_root : repeated;
  }
  if (s0 && s1) return Membership::Both;
  if (s0) return Membership::Sigma0;
  if (s1) return Membership::Sigma1;
  return Membership::NonSingular;
}

Parameter xi0_point(const Rational& y0, const Rational& c) {
  return Parameter{{-c * y0, -3 * y0 * y0, c, 2 * y0 * y0 * y0}};
}

namespace {

// The critical point at (0, y0) has Hessian form X^2 + c X Y + 3 y0 Y^2; it is a
// crossing (not an isolated point) only for c^2 > 12 y0.
Rational crossing_c_magnitude(const Rational& y0) {
  Rational c = 1;
  while (c * c <= 12 * y0) c += 1;
  return c;
}

// Sign of c whose seed leaves the oval to the right of the boundary.
constexpr int kRightOvalCSign = -1;

}  // namespace

Parameter f4_perturbed_xi0(OvalSide side, const Rational& y0, const Rational& eps, const Rational& delta) {
  const int s = side == OvalSide::Right ? kRightOvalCSign : -kRightOvalCSign;
  const Rational c = s * crossing_c_magnitude(y0);
  Parameter p = xi0_point(y0, c);
  // the shift runs against c; with the other direction the oval comes out crossed
  const Rational e = -s * eps;
  const Rational a = p[0];
  p[0] = a - 2 * e;
  p[1] = p[1] - c * e;
  // raising f by delta opens the node so that the loop detaches as an oval
  p[3] = p[3] + e * e - a * e + delta;
  return p;
}

Parameter f4_seed_oval_side(OvalSide side, const Rational& y0, const Rational& eps, const Rational& delta) {
  if (y0 <= 0 || eps < 0 || delta < 0) throw Error(Errc::SeedNotSmallEnough, "seed needs y0 > 0, eps, delta >= 0");
  const Parameter p = f4_perturbed_xi0(side, y0, eps, delta);
  const SingularityClass f4(Family::F4, 4, 1);
  if (discriminant_membership(f4, p) != Membership::NonSingular)
    throw Error(Errc::SeedNotSmallEnough, "seed parameter is on the discriminant");
  F4Type t;
  try {
    t = f4_type_of(classify_f4(f4, p));
  } catch (const Error& e) {
    if (e.code() == Errc::NonGenericConfiguration) throw Error(Errc::SeedNotSmallEnough, e.what());
    throw;
  }
  const OvalState want = side == OvalSide::Right ? OvalState::Right : OvalState::Left;
  if (t.branch_crossings != 3 || t.oval != want)
    throw Error(Errc::SeedNotSmallEnough, "seed classified to " + type_key(t));
  return p;
}

Parameter f4_find_oval_seed(OvalSide side, const Rational& y0) {
  Rational eps(1, 2);
  int budget = 40;
  while (budget > 0) {
    Rational delta = eps * eps / 2;
    for (int j = 0; j < 4 && budget > 0; ++j, --budget) {
      try {
        return f4_seed_oval_side(side, y0, eps, delta);
      } catch (const Error& e) {
        if (e.code() != Errc::SeedNotSmallEnough) throw;
      }
      delta /= 2;
    }
    eps /= 2;
  }
  throw Error(Errc::SeedNotSmallEnough, "no seed within the halving budget");
}

}  // namespace bdisc

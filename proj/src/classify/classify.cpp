// Licensed under the Apache License 2.0 (see LICENSE file).

#include "bdisc/classify.hpp"

#include <algorithm>

#include "bdisc/error.hpp"

namespace bdisc {

bool is_valid_signature(const SingularityClass& cls, const BCSignature& sig) {
  return sig.p >= 0 && sig.q >= 0 && sig.p + sig.q <= cls.mu() && (sig.p + sig.q) % 2 == cls.mu() % 2;
}

bool is_consistent(const F4Descriptor& d) {
  if (d.roots.size() != 1 && d.roots.size() != 3) return false;
  int ovals = 0;
  bool seen_oval = false;
  for (const auto& r : d.roots) {
    if (r.fx_sign != 1 && r.fx_sign != -1) return false;
    if (r.part == CurvePart::Oval) {
      ++ovals;
      seen_oval = true;
    } else if (seen_oval) {
      return false;
    }
  }
  if (ovals == 2) return d.oval == OvalState::Crossed;
  return ovals == 0 && d.oval != OvalState::Crossed;
}

F4Type f4_type_of(const F4Descriptor& d) {
  F4Type t;
  t.branch_crossings = static_cast<int>(std::count_if(d.roots.begin(), d.roots.end(),
                                                      [](const BoundaryRoot& r) { return r.part == CurvePart::Branch; }));
  t.oval = d.oval;
  // x_-(y) = 0 leaves the other root -(a + c y) positive, so fx_sign < 0 is the left leg.
  if (t.branch_crossings == 3) t.lowest_leg = d.roots.front().fx_sign < 0 ? Leg::Left : Leg::Right;
  return t;
}

const char* oval_code(OvalState s) {
  switch (s) {
    case OvalState::Absent: return "A";
    case OvalState::Left: return "L";
    case OvalState::Right: return "R";
    case OvalState::Crossed: return "C";
  }
  return "?";
}

std::string type_key(const BCSignature& s) {
  return "{\"p\":" + std::to_string(s.p) + ",\"q\":" + std::to_string(s.q) + "}";
}

std::string type_key(const F4Type& t) {
  const char* leg = t.lowest_leg == Leg::Left ? "L" : t.lowest_leg == Leg::Right ? "R" : "-";
  return "{\"branch\":" + std::to_string(t.branch_crossings) + ",\"leg\":\"" + leg + "\",\"oval\":\"" +
         oval_code(t.oval) + "\"}";
}

std::string descriptor_json(const F4Descriptor& d) {
  std::string s = "{\"roots\":[";
  for (size_t i = 0; i < d.roots.size(); ++i) {
    if (i) s += ",";
    s += d.roots[i].part == CurvePart::Branch ? "[\"B\"," : "[\"O\",";
    s += d.roots[i].fx_sign > 0 ? "\"+\"]" : "\"-\"]";
  }
  s += "],\"oval\":\"";
  s += oval_code(d.oval);
  s += "\"";
  if (d.reduced) s += ",\"reduced\":true";
  return s + "}";
}

std::string LowerSetType::key() const {
  if (const auto* sig = std::get_if<BCSignature>(&value)) return type_key(*sig);
  return type_key(f4_type_of(std::get<F4Descriptor>(value)));
}

BCSignature classify_bc(const SingularityClass& cls, const Parameter& lambda) {
  if (cls.family() == Family::F4) throw Error(Errc::InvalidClass, "classify_bc needs a B or C class");
  if (discriminant_membership(cls, lambda) != Membership::NonSingular)
    throw Error(Errc::DiscriminantParameter, "parameter lies on the discriminant of " + cls.tag());
  const RootSignature rs = root_signature(boundary_polynomial(cls, lambda));
  return {rs.neg, rs.pos};
}

F4Descriptor classify_f4(const SingularityClass& cls, const Parameter& lambda) {
  if (cls.family() != Family::F4) throw Error(Errc::InvalidClass, "classify_f4 needs an F4 class");
  if (discriminant_membership(cls, lambda) != Membership::NonSingular)
    throw Error(Errc::DiscriminantParameter, "parameter lies on the discriminant of " + cls.tag());
  const Parameter p = cls.sign() > 0 ? lambda : f4_reduce_minus(lambda);
  const Rational &a = p[0], &b = p[1], &c = p[2], &d = p[3];

  // boundary cubic and the support polynomial of the x-solutions:
  // f = 0  <=>  x = (-(a + c y) +- sqrt(g(y))) / 2,  g = (a + c y)^2 - 4 (y^3 + b y + d)
  const UniPoly cubic({d, b, 0, 1}, "y");
  const UniPoly g({a * a - 4 * d, 2 * a * c - 4 * b, c * c, -4}, "y");
  const SturmChain pc(cubic), gc(g);
  if (gcd(g, g.derivative()).degree() > 0)
    throw Error(Errc::NonGenericConfiguration, "support polynomial has a repeated root");
  const int n = pc.count_all();
  const int m = gc.count_all();

  int branch_roots = n;
  std::optional<Rational> oval_mid;
  if (m == 3) {
    // support of g >= 0 is (-inf, r1] u [r2, r3]
    const auto iso = isolate_real_roots(g, 1);
    const Rational gap = separating_rational(gc, iso[0], iso[1]);
    oval_mid = separating_rational(gc, iso[1], iso[2]);
    branch_roots = pc.count(Interval::below(gap));
  } else if (m != 1) {
    throw Error(Errc::Internal, "support cubic with " + std::to_string(m) + " real roots");
  }

  F4Descriptor desc;
  desc.reduced = cls.sign() < 0;
  std::vector<int> signs(static_cast<size_t>(n));
  if (c == 0) {
    if (a == 0) throw Error(Errc::NonGenericConfiguration, "boundary crossing at a fold point");
    std::fill(signs.begin(), signs.end(), sgn(a));
  } else {
    const Rational ystar = -a / c;
    if (pc.is_root(ystar)) throw Error(Errc::NonGenericConfiguration, "boundary crossing at a fold point");
    const int below = pc.count(Interval::below(ystar));
    for (int i = 0; i < n; ++i) signs[static_cast<size_t>(i)] = i < below ? -sgn(c) : sgn(c);
  }
  for (int i = 0; i < n; ++i)
    desc.roots.push_back({i < branch_roots ? CurvePart::Branch : CurvePart::Oval, signs[static_cast<size_t>(i)]});

  const int oval_roots = n - branch_roots;
  if (!oval_mid) {
    desc.oval = OvalState::Absent;
  } else if (oval_roots == 2) {
    desc.oval = OvalState::Crossed;
  } else if (oval_roots == 0) {
    const Rational center = -(a + c * *oval_mid) / 2;
    if (center == 0) throw Error(Errc::NonGenericConfiguration, "uncrossed oval centered on the boundary");
    desc.oval = center < 0 ? OvalState::Left : OvalState::Right;
  } else {
    throw Error(Errc::Internal, "oval met by an odd number of boundary roots");
  }
  if (!is_consistent(desc)) throw Error(Errc::Internal, "inconsistent descriptor " + descriptor_json(desc));
  return desc;
}

LowerSetType classify(const SingularityClass& cls, const Parameter& lambda) {
  if (cls.family() == Family::F4) return {cls, classify_f4(cls, lambda)};
  return {cls, classify_bc(cls, lambda)};
}

std::vector<F4Descriptor> candidate_descriptors() {
  std::vector<F4Descriptor> out;
  const std::vector<std::vector<CurvePart>> layouts{
      {CurvePart::Branch},
      {CurvePart::Branch, CurvePart::Branch, CurvePart::Branch},
      {CurvePart::Branch, CurvePart::Oval, CurvePart::Oval},
  };
  for (const auto& layout : layouts) {
    const size_t n = layout.size();
    const bool crossed = layout.back() == CurvePart::Oval;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      F4Descriptor d;
      for (size_t i = 0; i < n; ++i) d.roots.push_back({layout[i], (mask >> i) & 1u ? -1 : 1});
      if (crossed) {
        d.oval = OvalState::Crossed;
        out.push_back(d);
        continue;
      }
      for (auto s : {OvalState::Absent, OvalState::Left, OvalState::Right}) {
        d.oval = s;
        out.push_back(d);
      }
    }
  }
  return out;
}

int conventional_f4_id(const F4Type& t) {
  if (t.branch_crossings == 1) {
    switch (t.oval) {
      case OvalState::Absent: return 1;
      case OvalState::Right: return 4;
      case OvalState::Left: return 5;
      case OvalState::Crossed: return 6;
    }
  }
  if (t.branch_crossings == 3) {
    if (t.oval == OvalState::Absent) return t.lowest_leg == Leg::Left ? 2 : 3;
    if (t.oval == OvalState::Right) return 7;
    if (t.oval == OvalState::Left) return 8;
  }
  return 0;
}

F4Catalog F4Catalog::from_representatives(const std::vector<Parameter>& reps) {
  const SingularityClass f4(Family::F4, 4, 1);
  F4Catalog cat;
  int next_extra = 9;
  for (const auto& rep : reps) {
    const F4Type t = f4_type_of(classify_f4(f4, rep));
    if (std::any_of(cat.entries_.begin(), cat.entries_.end(), [&](const Entry& e) { return e.type == t; })) continue;
    int id = conventional_f4_id(t);
    if (id == 0 || std::any_of(cat.entries_.begin(), cat.entries_.end(), [&](const Entry& e) { return e.id == id; }))
      id = next_extra++;
    cat.entries_.push_back({id, t, rep, rep[2] == 0});
  }
  std::sort(cat.entries_.begin(), cat.entries_.end(), [](const Entry& x, const Entry& y) { return x.id < y.id; });
  return cat;
}

std::vector<Parameter> F4Catalog::stored_representatives() {
  auto P = [](std::vector<std::string> v) { return parse_parameter(v); };
  return {
      P({"1", "1", "0", "0"}),    P({"-3", "-3", "0", "0"}), P({"3", "-3", "0", "0"}),
      P({"-3", "-3", "0", "3"}),  P({"3", "-3", "0", "3"}),  P({"1", "-1", "0", "0"}),
      f4_find_oval_seed(OvalSide::Right), f4_find_oval_seed(OvalSide::Left),
  };
}

const F4Catalog& F4Catalog::builtin() {
  static const F4Catalog cat = from_representatives(stored_representatives());
  return cat;
}

std::optional<int> F4Catalog::id_of(const F4Type& t) const {
  if (entries_.empty()) throw Error(Errc::CatalogMissing, "no F4 catalog loaded");
  for (const auto& e : entries_)
    if (e.type == t) return e.id;
  return std::nullopt;
}

const F4Catalog::Entry& F4Catalog::entry(int id) const {
  if (entries_.empty()) throw Error(Errc::CatalogMissing, "no F4 catalog loaded");
  for (const auto& e : entries_)
    if (e.id == id) return e;
  throw Error(Errc::CatalogMissing, "no catalog entry with id " + std::to_string(id));
}

}  // namespace bdisc

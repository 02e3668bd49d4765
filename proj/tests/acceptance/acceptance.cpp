// Licensed under the Apache License 2.0 (see LICENSE file).

// Acceptance gate: one PASS/FAIL line per criterion, details indented below it.
// Usage: acceptance [--criterion N]...   (no flag: all criteria)

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bdisc/atlas.hpp"
#include "bdisc/error.hpp"
#include "bdisc/render.hpp"

using namespace bdisc;

namespace {

// Pinned thresholds.
constexpr double kBcAtlasSeconds = 60;
constexpr double kF4AtlasSeconds = 600;
constexpr std::size_t kF4AtlasSamples = 100000;
constexpr int kSigma1Points = 10000;
constexpr int kSigma0Constructed = 500;
constexpr int kSigma0Random = 500;
constexpr int kPairsPerType = 10;
constexpr int kCrossPairs = 100;
constexpr double kF4PathRate = 0.95;
constexpr double kBcPathRate = 1.0;
constexpr int kInteriorPoints = 32;
constexpr int kKernelPolys = 10000;
constexpr int kKernelMaxDegree = 10;
constexpr int kResultantInstances = 500;
constexpr double kRenderResidual = 1e-6;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string summary;
  std::vector<std::string> details;
};

template <class... A>
std::string fmt(const char* f, A... a) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, a...);
  return buf;
}

const SingularityClass F4p(Family::F4, 4, 1);

std::vector<SingularityClass> bc_classes() {
  std::vector<SingularityClass> out;
  for (Family fam : {Family::B, Family::C})
    for (int mu = 2; mu <= 7; ++mu)
      for (int s : {1, -1}) out.emplace_back(fam, mu, s);
  return out;
}

Rational rnd(Rng& rng, long radius, int den) { return rng.rational(Rational(radius), den); }

Parameter lerp(const Parameter& a, const Parameter& b, const Rational& t) {
  Parameter out;
  for (size_t i = 0; i < a.size(); ++i) out.values.push_back((1 - t) * a[i] + t * b[i]);
  return out;
}

std::string param_text(const Parameter& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + compact_string(p[i]);
  return s + ")";
}

// ---------------------------------------------------------------- criterion 1

Outcome criterion1() {
  Outcome o;
  o.pass = true;
  double worst = 0;
  for (const auto& cls : bc_classes()) {
    const auto t0 = Clock::now();
    const AtlasReport r = enumerate_components(cls, SamplingConfig{});
    const double sec = seconds_since(t0);
    worst = std::max(worst, sec);
    const bool ok = r.realized.size() == cls.expected_component_count() && r.match && sec < kBcAtlasSeconds;
    o.pass &= ok;
    o.details.push_back(fmt("%-5s realized %2zu expected %2zu match %s  %.2f s%s", cls.tag().c_str(), r.realized.size(),
                            cls.expected_component_count(), r.match ? "yes" : "no", sec, ok ? "" : "  <-- FAIL"));
  }
  o.summary = fmt("B/C component counts for 24 classes, slowest atlas %.2f s (limit %.0f s)", worst, kBcAtlasSeconds);
  return o;
}

// ---------------------------------------------------------------- criterion 2

Outcome criterion2() {
  Outcome o;
  SamplingConfig cfg;
  cfg.random_count = kF4AtlasSamples;
  const auto t0 = Clock::now();
  const AtlasReport r = enumerate_components(F4p, cfg);
  const double sec = seconds_since(t0);
  int on_slice = 0;
  std::vector<int> off_slice_ids;
  bool off_slice_from_seeds = true;
  for (const auto& t : r.realized) {
    if (t.slice_representative) {
      ++on_slice;
      continue;
    }
    off_slice_ids.push_back(t.id);
    off_slice_from_seeds &= t.origin == "seed";
    o.details.push_back(fmt("type %d %s has no c = 0 sample; representative %s from %s (count %zu)", t.id, t.key.c_str(),
                            param_text(t.representative).c_str(), t.origin.c_str(), t.count));
  }
  // the two oval seeds land exactly on the off-slice types
  const auto seed_r = f4_type_of(classify_f4(F4p, f4_find_oval_seed(OvalSide::Right)));
  const auto seed_l = f4_type_of(classify_f4(F4p, f4_find_oval_seed(OvalSide::Left)));
  const auto cat = catalog_from_report(r);
  std::set<int> seed_ids;
  if (auto id = cat.id_of(seed_r)) seed_ids.insert(*id);
  if (auto id = cat.id_of(seed_l)) seed_ids.insert(*id);
  const std::set<int> off(off_slice_ids.begin(), off_slice_ids.end());
  o.pass = r.realized.size() == 8 && r.match && on_slice == 6 && off.size() == 2 && off == seed_ids &&
           off_slice_from_seeds && sec < kF4AtlasSeconds;
  o.details.push_back(fmt("rejections: Sigma0 %zu, Sigma1 %zu, Both %zu, NonGeneric %zu", r.rejections.count("Sigma0") ? r.rejections.at("Sigma0") : 0,
                          r.rejections.count("Sigma1") ? r.rejections.at("Sigma1") : 0,
                          r.rejections.count("Both") ? r.rejections.at("Both") : 0,
                          r.rejections.count("NonGeneric") ? r.rejections.at("NonGeneric") : 0));
  o.summary = fmt("F4+ at %zu samples: %zu types (match %s), %d with c = 0, off-slice ids from oval seeds %s, %.1f s",
                  r.sample_count, r.realized.size(), r.match ? "yes" : "no", on_slice,
                  off == seed_ids ? "yes" : "no", sec);
  return o;
}

// ---------------------------------------------------------------- criterion 3

Outcome criterion3() {
  Outcome o;
  Rng rng(3, 0);
  int agree = 0, on_sigma1 = 0, three_roots = 0, one_root = 0, skipped = 0;
  for (int i = 0; i < kSigma1Points; ++i) {
    Parameter p{{rnd(rng, 5, 64), rnd(rng, 5, 64), rnd(rng, 5, 64), rnd(rng, 5, 64)}};
    if (i % 2 == 1) {
      // (b, d) = (-3 s^2, 2 s^3) lies on 27 d^2 + 4 b^3 = 0
      const Rational s = rnd(rng, 2, 16);
      p[1] = -3 * s * s;
      p[3] = (rng.below(2) ? 2 : -2) * s * s * s;
    }
    const int sgn1 = sign(f4_sigma1_polynomial().eval(p.values));
    const Membership m = discriminant_membership(F4p, p);
    const bool in_sigma1 = m == Membership::Sigma1 || m == Membership::Both;
    bool ok = in_sigma1 == (sgn1 == 0);
    if (ok && m == Membership::NonSingular) {
      try {
        const size_t n = classify_f4(F4p, p).roots.size();
        ok = (sgn1 < 0 && n == 3) || (sgn1 > 0 && n == 1);
        (n == 3 ? three_roots : one_root)++;
      } catch (const Error& e) {
        if (e.code() != Errc::NonGenericConfiguration) throw;
        ++skipped;
      }
    }
    on_sigma1 += sgn1 == 0;
    agree += ok;
    if (!ok && o.details.size() < 5) o.details.push_back("disagreement at " + param_text(p));
  }
  o.pass = agree == kSigma1Points;
  o.summary = fmt("Sigma1 membership and boundary root count agree with 27d^2+4b^3 on %d/%d points", agree, kSigma1Points);
  o.details.push_back(fmt("%d points on the surface, %d with three boundary roots, %d with one, %d fold points (root "
                          "count not compared)",
                          on_sigma1, three_roots, one_root, skipped));
  return o;
}

// ---------------------------------------------------------------- criterion 4

Outcome criterion4() {
  Outcome o;
  const std::vector<std::string> names{"c"};
  const std::vector<Rational> zero{0};
  const MultiPoly slice = squarefree_part(f4_sigma0_eliminant().specialize(names, zero));
  const std::vector<std::string> abd{"a", "b", "d"};
  const MultiPoly stated = MultiPoly::parse("27*d^2 + 27/2*a^2*d + 27/16*a^4 + 4*b^3", abd);
  const MultiPoly shifted = MultiPoly::parse("27*d^2 - 27/2*a^2*d + 27/16*a^4 + 4*b^3", abd);
  o.pass = proportional(slice, stated);
  o.summary = o.pass ? "squarefree(Delta0 | c=0) is proportional to 27(d + a^2/4)^2 + 4b^3"
                     : "squarefree(Delta0 | c=0) is NOT proportional to 27(d + a^2/4)^2 + 4b^3";
  o.details.push_back("squarefree(Delta0 | c=0) = " + slice.to_string());
  o.details.push_back(std::string("proportional to 27(d - a^2/4)^2 + 4b^3: ") + (proportional(slice, shifted) ? "yes" : "no"));
  // for f = x^2 + y^3 + a x + b y + d the critical point (-a/2, y) has value y^3 + b y + d - a^2/4
  const std::vector<Rational> pt{2, 0, 0, 1};
  const MultiPoly f = deformation_polynomial(F4p, Parameter{pt});
  const std::vector<Rational> crit{-1, 0};
  o.details.push_back(fmt("counterexample (a,b,c,d) = (2,0,0,1): f(-1,0) = %s, f_x = %s, f_y = %s, Delta0 = %s, "
                          "27(d + a^2/4)^2 + 4b^3 = %s",
                          compact_string(f.eval(crit)).c_str(), compact_string(f.derivative("x").eval(crit)).c_str(),
                          compact_string(f.derivative("y").eval(crit)).c_str(),
                          compact_string(f4_sigma0_eliminant().eval(pt)).c_str(),
                          compact_string(stated.eval(std::vector<Rational>{2, 0, 1})).c_str()));
  // the stated form is the slice of the F4- eliminant, i.e. of Delta0 at (-a, b, c, -d)
  const std::vector<std::string> abcd{"a", "b", "c", "d"};
  auto v = [&](const char* n) { return MultiPoly::variable(abcd, n); };
  MultiPoly minus = f4_sigma0_eliminant().substitute("a", -v("a")).substitute("d", -v("d"));
  const MultiPoly minus_slice = squarefree_part(minus.specialize(names, zero));
  o.details.push_back(std::string("27(d + a^2/4)^2 + 4b^3 is the c = 0 slice for F4- (-x^2 + y^3 + ...): ") +
                      (proportional(minus_slice, stated) ? "yes" : "no"));
  return o;
}

// ---------------------------------------------------------------- criterion 5

// f(-(a + c y)/2, y) and f_y there, with x eliminated through f_x = 0.
std::pair<UniPoly, UniPoly> instantiated_system(const Parameter& p) {
  const Rational &a = p[0], &b = p[1], &c = p[2], &d = p[3];
  // f = y^3 + b y + d - (a + c y)^2 / 4
  const UniPoly F({d - a * a / 4, b - a * c / 2, -c * c / 4, 1}, "y");
  // f_y = 3 y^2 + b + c x = 3 y^2 + b - c (a + c y) / 2
  const UniPoly G({b - a * c / 2, -c * c / 2, 3}, "y");
  return {F, G};
}

Parameter constructed_critical(Rng& rng) {
  const Rational x0 = rnd(rng, 4, 32), y0 = rnd(rng, 4, 32), c = rnd(rng, 4, 32);
  const Rational a = -2 * x0 - c * y0;
  const Rational b = -3 * y0 * y0 - c * x0;
  const Rational d = -(x0 * x0 + y0 * y0 * y0 + a * x0 + b * y0 + c * x0 * y0);
  return Parameter{{a, b, c, d}};
}

Outcome criterion5() {
  Outcome o;
  Rng rng(5, 0);
  const MultiPoly& d0 = f4_sigma0_eliminant();
  int vanish = 0;
  for (int i = 0; i < kSigma0Constructed; ++i) {
    const Parameter p = constructed_critical(rng);
    vanish += d0.eval(p.values) == 0;
  }
  int agree = 0, zeros = 0, degenerate = 0;
  for (int i = 0; i < kSigma0Random; ++i) {
    // half uniform, half on the surface
    const Parameter p = i % 2 ? constructed_critical(rng)
                              : Parameter{{rnd(rng, 5, 64), rnd(rng, 5, 64), rnd(rng, 5, 64), rnd(rng, 5, 64)}};
    const auto [F, G] = instantiated_system(p);
    const bool lead_degenerate = G.degree() < 2;
    const bool common = gcd(F, G).degree() > 0 || lead_degenerate;
    const bool z = d0.eval(p.values) == 0;
    agree += z == common;
    zeros += z;
    degenerate += lead_degenerate;
    if (z != common && o.details.size() < 5) o.details.push_back("disagreement at " + param_text(p));
  }
  o.pass = vanish == kSigma0Constructed && agree == kSigma0Random;
  o.summary = fmt("Delta0 vanishes at %d/%d constructed critical points; Delta0 = 0 <=> nonconstant gcd at %d/%d points",
                  vanish, kSigma0Constructed, agree, kSigma0Random);
  o.details.push_back(fmt("%d of the %d points have Delta0 = 0; leading-coefficient degenerations: %d", zeros,
                          kSigma0Random, degenerate));
  return o;
}

// ---------------------------------------------------------------- criterion 6

// Random sample of signature sig: random real roots and positive quadratics,
// then a small random move of all coefficients that keeps the type.
Parameter random_bc_sample(const SingularityClass& cls, const BCSignature& sig, Rng& rng) {
  for (;;) {
    std::set<Rational> neg, pos;
    while (static_cast<int>(neg.size()) < sig.p) neg.insert(-(Rational(1, 8) + abs(rnd(rng, 3, 8))));
    while (static_cast<int>(pos.size()) < sig.q) pos.insert(Rational(1, 8) + abs(rnd(rng, 3, 8)));
    std::vector<Rational> roots(neg.begin(), neg.end());
    roots.insert(roots.end(), pos.begin(), pos.end());
    UniPoly h = UniPoly::from_roots(roots);
    for (int i = sig.p + sig.q; i < cls.mu(); i += 2) {
      const Rational beta = rnd(rng, 2, 8);
      h = h * UniPoly({beta * beta / 4 + Rational(1, 8) + abs(rnd(rng, 2, 8)), beta, 1});
    }
    Parameter p = parameter_from_boundary(cls, Rational(cls.h_leading_sign()) * h);
    Parameter moved = p;
    for (auto& v : moved.values) v += rng.rational(1, 64) / 64;
    if (discriminant_membership(cls, moved) == Membership::NonSingular && classify_bc(cls, moved) == sig) return moved;
    if (discriminant_membership(cls, p) == Membership::NonSingular) return p;
  }
}

bool interior_points_ok(const SingularityClass& cls, const PathCertificate& cert, const std::string& key) {
  for (size_t s = 0; s + 1 < cert.waypoints.size(); ++s)
    for (int j = 1; j <= kInteriorPoints; ++j) {
      const Parameter p = lerp(cert.waypoints[s], cert.waypoints[s + 1], Rational(j, kInteriorPoints + 1));
      if (discriminant_membership(cls, p) != Membership::NonSingular) return false;
      try {
        if (classify(cls, p).key() != key) return false;
      } catch (const Error& e) {
        if (e.code() != Errc::NonGenericConfiguration) throw;
      }
    }
  return true;
}

struct PathStats {
  int attempted = 0, certified = 0, inconclusive = 0, invalid = 0;
  int cross = 0, witnessed = 0;
  std::size_t segments = 0;
};

// One certification attempt; returns false for an invalid certificate.
void try_pair(const SingularityClass& cls, const Parameter& a, const Parameter& b, const std::string& key, PathStats& st,
              std::vector<std::string>& notes) {
  ++st.attempted;
  try {
    const PathCertificate c = certify_path(cls, a, b);
    const bool valid = c.waypoints.front() == a && c.waypoints.back() == b && check_certificate(c) &&
                       interior_points_ok(cls, c, key);
    if (valid) {
      ++st.certified;
      st.segments += c.segments.size();
    } else {
      ++st.invalid;
      notes.push_back(cls.tag() + " invalid certificate " + param_text(a) + " -> " + param_text(b));
    }
  } catch (const Error& e) {
    if (e.code() != Errc::NotFound) throw;
    ++st.inconclusive;
    if (notes.size() < 40) notes.push_back(cls.tag() + " inconclusive " + key + " " + param_text(a) + " -> " + param_text(b));
  }
}

void cross_pairs(const SingularityClass& cls, const std::vector<std::pair<std::string, std::vector<Parameter>>>& pools,
                 Rng& rng, PathStats& st, std::vector<std::string>& notes) {
  for (int i = 0; i < kCrossPairs; ++i) {
    const size_t ta = rng.below(pools.size());
    size_t tb = rng.below(pools.size() - 1);
    if (tb >= ta) ++tb;
    const auto& pa = pools[ta].second;
    const auto& pb = pools[tb].second;
    const Parameter& a = pa[rng.below(pa.size())];
    const Parameter& b = pb[rng.below(pb.size())];
    ++st.cross;
    const SegmentResult r = certify_segment(cls, a, b);
    bool ok = !r.ok() && r.witness;
    if (ok) {
      const auto& w = *r.witness;
      // the witness interval lies in [0, 1] and holds a root of the restricted polynomial
      ok = w.root.lo() && w.root.hi() && *w.root.lo() >= 0 && *w.root.hi() <= 1 && sturm_count(w.restricted, w.root) >= 1 &&
           w.restricted == certificate_polynomial(cls, a, b);
    }
    st.witnessed += ok;
    if (!ok) notes.push_back(cls.tag() + " cross-type pair without witness " + param_text(a) + " -> " + param_text(b));
  }
}

Outcome criterion6() {
  Outcome o;
  o.pass = true;
  PathStats bc_total, f4_total;
  double worst_bc = 0;
  for (const auto& cls : bc_classes()) {
    const auto t0 = Clock::now();
    Rng rng(6, static_cast<std::uint64_t>(cls.mu() * 4 + (cls.family() == Family::C ? 2 : 0) + (cls.sign() > 0)));
    PathStats st;
    std::vector<std::string> notes;
    std::vector<std::pair<std::string, std::vector<Parameter>>> pools;
    for (const auto& sig : valid_signatures(cls)) {
      std::vector<Parameter> pool;
      for (int i = 0; i < 2 * kPairsPerType; ++i) pool.push_back(random_bc_sample(cls, sig, rng));
      const std::string key = type_key(sig);
      for (int i = 0; i < kPairsPerType; ++i) try_pair(cls, pool[2 * i], pool[2 * i + 1], key, st, notes);
      pools.emplace_back(key, std::move(pool));
    }
    cross_pairs(cls, pools, rng, st, notes);
    const double sec = seconds_since(t0);
    worst_bc = std::max(worst_bc, sec);
    const bool ok = st.certified >= kBcPathRate * st.attempted && st.invalid == 0 && st.witnessed == st.cross;
    o.pass &= ok;
    o.details.push_back(fmt("%-5s paths %3d/%3d (inconclusive %d, invalid %d, mean %.1f segments)  witnesses %d/%d  %.1f s%s",
                            cls.tag().c_str(), st.certified, st.attempted, st.inconclusive, st.invalid,
                            st.certified ? double(st.segments) / st.certified : 0.0, st.witnessed, st.cross, sec,
                            ok ? "" : "  <-- FAIL"));
    for (const auto& n : notes) o.details.push_back("    " + n);
    bc_total.attempted += st.attempted;
    bc_total.certified += st.certified;
    bc_total.cross += st.cross;
    bc_total.witnessed += st.witnessed;
  }

  {
    const auto t0 = Clock::now();
    Rng rng(6, 1000);
    PathStats st;
    std::vector<std::string> notes;
    // pools: random box samples per type, topped up with small moves of the catalog representatives
    std::map<int, std::vector<Parameter>> by_id;
    const F4Catalog& cat = F4Catalog::builtin();
    for (int draw = 0; draw < 200000; ++draw) {
      bool full = true;
      for (const auto& e : cat.entries()) full &= by_id[e.id].size() >= static_cast<size_t>(2 * kPairsPerType);
      if (full) break;
      Parameter p{{rnd(rng, 5, 64), rnd(rng, 5, 64), rnd(rng, 5, 64), rnd(rng, 5, 64)}};
      const SampleRecord s = sample_point(F4p, p);
      if (!s.type) continue;
      const auto id = cat.id_of(f4_type_of(std::get<F4Descriptor>(s.type->value)));
      if (id && by_id[*id].size() < static_cast<size_t>(2 * kPairsPerType)) by_id[*id].push_back(p);
    }
    int topped_up = 0;
    for (const auto& e : cat.entries()) {
      auto& pool = by_id[e.id];
      Rational scale(1, 64);
      while (pool.size() < static_cast<size_t>(2 * kPairsPerType)) {
        Parameter p = e.representative;
        for (auto& v : p.values) v += scale * rng.rational(1, 64);
        if (sample_point(F4p, p).type && same_type(F4p, p, e.representative)) {
          pool.push_back(p);
          ++topped_up;
        } else {
          scale /= 2;
        }
      }
    }
    std::vector<std::pair<std::string, std::vector<Parameter>>> pools;
    for (const auto& e : cat.entries()) {
      const auto& pool = by_id[e.id];
      const std::string key = type_key(e.type);
      PathStats per;
      for (int i = 0; i < kPairsPerType; ++i) try_pair(F4p, pool[2 * i], pool[2 * i + 1], key, per, notes);
      o.details.push_back(fmt("F4+   type %d %-36s paths %2d/%2d (inconclusive %d, invalid %d)", e.id, key.c_str(),
                              per.certified, per.attempted, per.inconclusive, per.invalid));
      st.attempted += per.attempted;
      st.certified += per.certified;
      st.inconclusive += per.inconclusive;
      st.invalid += per.invalid;
      st.segments += per.segments;
      pools.emplace_back(key, pool);
    }
    cross_pairs(F4p, pools, rng, st, notes);
    const double sec = seconds_since(t0);
    const bool ok = st.certified >= kF4PathRate * st.attempted && st.invalid == 0 && st.witnessed == st.cross;
    o.pass &= ok;
    o.details.push_back(fmt("F4+   paths %d/%d (inconclusive %d, invalid %d, mean %.1f segments)  witnesses %d/%d  "
                            "%d pool points from moved representatives  %.1f s%s",
                            st.certified, st.attempted, st.inconclusive, st.invalid,
                            st.certified ? double(st.segments) / st.certified : 0.0, st.witnessed, st.cross, topped_up,
                            sec, ok ? "" : "  <-- FAIL"));
    for (const auto& n : notes) o.details.push_back("    " + n);
    f4_total = st;
  }
  o.summary = fmt("paths B/C %d/%d, F4 %d/%d (need >= %.0f%%); cross-type witnesses %d/%d",
                  bc_total.certified, bc_total.attempted, f4_total.certified, f4_total.attempted, 100 * kF4PathRate,
                  bc_total.witnessed + f4_total.witnessed, bc_total.cross + f4_total.cross);
  return o;
}

// ---------------------------------------------------------------- criterion 7

Outcome criterion7() {
  Outcome o;
  Rng rng(7, 0);
  int sturm_ok = 0;
  for (int i = 0; i < kKernelPolys; ++i) {
    std::vector<Rational> roots;
    std::set<Rational> distinct;
    UniPoly p = UniPoly::constant(1 + static_cast<long>(rng.below(5)));
    const int degree = 1 + static_cast<int>(rng.below(kKernelMaxDegree));
    while (p.degree() < degree) {
      const int left = degree - p.degree();
      if (left >= 2 && rng.below(3) == 0) {
        const Rational beta = rnd(rng, 4, 8);
        p = p * UniPoly({beta * beta / 4 + Rational(1, 16) + abs(rnd(rng, 4, 8)), beta, 1});
      } else {
        // repeated roots on purpose
        const Rational r = !distinct.empty() && rng.below(4) == 0 ? *distinct.begin() : rnd(rng, 6, 12);
        distinct.insert(r);
        p = p * UniPoly({-r, 1});
      }
    }
    Rational lo = rnd(rng, 7, 12), hi = rnd(rng, 7, 12);
    if (lo > hi) std::swap(lo, hi);
    if (!distinct.empty() && rng.below(8) == 0) lo = *distinct.begin();  // an endpoint on a root
    if (lo > hi) std::swap(lo, hi);
    const bool lc = rng.below(2), hc = rng.below(2);
    const Interval iv = Interval::make(lo, lc, hi, hc);
    const int expected =
        static_cast<int>(std::count_if(distinct.begin(), distinct.end(), [&](const Rational& r) { return iv.contains(r); }));
    const bool ok = sturm_count(p, iv) == expected &&
                    sturm_count(p, Interval::whole()) == static_cast<int>(distinct.size());
    sturm_ok += ok;
    if (!ok && o.details.size() < 5) o.details.push_back("sturm mismatch for " + p.to_string() + " on " + iv.to_string());
  }

  int res_ok = 0, shared = 0;
  const std::vector<std::string> xv{"x"};
  for (int i = 0; i < kResultantInstances; ++i) {
    auto random_poly = [&](int deg) {
      std::vector<Rational> c;
      for (int k = 0; k < deg; ++k) c.push_back(rnd(rng, 5, 4));
      c.push_back(1 + static_cast<long>(rng.below(3)));
      return UniPoly(c);
    };
    UniPoly f = random_poly(1 + static_cast<int>(rng.below(4)));
    UniPoly g = random_poly(1 + static_cast<int>(rng.below(4)));
    if (i % 2) {
      const UniPoly common = random_poly(1 + static_cast<int>(rng.below(2)));
      f = f * common;
      g = g * common;
    }
    const bool has_common = gcd(f, g).degree() > 0;
    shared += has_common;
    const bool uni_zero = resultant(f, g) == 0;
    const bool multi_zero =
        resultant(MultiPoly::from_unipoly(f, xv, "x"), MultiPoly::from_unipoly(g, xv, "x"), "x").is_zero();
    const bool ok = uni_zero == has_common && multi_zero == has_common;
    res_ok += ok;
    if (!ok && o.details.size() < 10) o.details.push_back("resultant mismatch for " + f.to_string() + ", " + g.to_string());
  }

  int restrict_ok = 0;
  const std::vector<std::string> abcd{"a", "b", "c", "d"};
  const int restrict_cases = 500;
  for (int i = 0; i < restrict_cases; ++i) {
    MultiPoly F(abcd);
    for (int t = 0; t < 6; ++t) {
      Monomial m(4);
      for (auto& e : m) e = static_cast<std::uint32_t>(rng.below(4));
      F += MultiPoly::term(abcd, rnd(rng, 9, 5), m);
    }
    std::vector<Rational> l0, l1, mid;
    for (int k = 0; k < 4; ++k) {
      l0.push_back(rnd(rng, 5, 16));
      l1.push_back(rnd(rng, 5, 16));
      mid.push_back((l0.back() + l1.back()) / 2);
    }
    const UniPoly r = restrict_to_segment(F, l0, l1);
    const bool ok = r.eval(0) == F.eval(l0) && r.eval(1) == F.eval(l1) && r.eval(Rational(1, 2)) == F.eval(mid) &&
                    r.degree() <= F.total_degree();
    restrict_ok += ok;
  }
  o.pass = sturm_ok == kKernelPolys && res_ok == kResultantInstances && restrict_ok == restrict_cases;
  o.summary = fmt("Sturm counts %d/%d, resultant vs gcd %d/%d, segment restriction identities %d/%d", sturm_ok,
                  kKernelPolys, res_ok, kResultantInstances, restrict_ok, restrict_cases);
  o.details.push_back(fmt("%d of the resultant instances share a factor", shared));
  return o;
}

// ---------------------------------------------------------------- criterion 8

Rational exact_value(long double v) {
  if (v == 0) return 0;
  int e = 0;
  const long double m = std::frexp(std::fabs(v), &e);
  const auto mant = static_cast<unsigned long>(std::ldexp(m, 64));
  Rational q{mpz_class(mant)};
  if (e >= 64) q *= Rational(mpz_class(1) << (e - 64));
  else q /= Rational(mpz_class(1) << (64 - e));
  return v < 0 ? -q : q;
}

Outcome criterion8() {
  Outcome o;
  o.pass = true;
  for (const auto& e : F4Catalog::builtin().entries()) {
    const MultiPoly f = deformation_polynomial(F4p, e.representative);
    const ZeroSetFigure fig = render_zero_set(F4p, e.representative, fit_viewport(F4p, e.representative));
    Rational worst = 0;
    std::size_t points = 0;
    for (const auto& line : fig.polylines)
      for (const auto& [x, y] : line) {
        const std::vector<Rational> pt{exact_value(x), exact_value(y)};
        worst = std::max(worst, Rational(abs(f.eval(pt))));
        ++points;
      }
    const int roots = static_cast<int>(classify_f4(F4p, e.representative).roots.size());
    const bool ok = !fig.svg.empty() && points > 0 && worst.get_d() < kRenderResidual && fig.boundary_crossings == roots;
    o.pass &= ok;
    o.details.push_back(fmt("type %d: %zu points, max |f| %.3g, crossings %d, descriptor roots %d%s", e.id, points,
                            worst.get_d(), fig.boundary_crossings, roots, ok ? "" : "  <-- FAIL"));
  }
  o.summary = fmt("8 F4 representatives rendered, |f| < %.0e on sampled points, crossings match descriptors", kRenderResidual);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> chosen;
  bool verbose = true;
  app.add_option("--criterion", chosen, "Criterion number (repeatable); default all")->check(CLI::Range(1, 8));
  app.add_flag("!--quiet", verbose, "Only the PASS/FAIL lines");
  CLI11_PARSE(app, argc, argv);
  if (chosen.empty()) chosen = {1, 2, 3, 4, 5, 6, 7, 8};

  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criterion7, criterion8};
  bool all = true;
  for (int c : chosen) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[static_cast<size_t>(c - 1)]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    all &= o.pass;
    std::printf("criterion %d: %s  %s  [%.1f s]\n", c, o.pass ? "PASS" : "FAIL", o.summary.c_str(), seconds_since(t0));
    if (verbose)
      for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}

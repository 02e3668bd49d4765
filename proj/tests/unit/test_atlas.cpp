// Licensed under the Apache License 2.0 (see LICENSE file).

#include <doctest.h>

#include <json.hpp>
#include <set>

#include "bdisc/atlas.hpp"
#include "bdisc/error.hpp"

using namespace bdisc;

namespace {

Parameter P(std::vector<Rational> v) { return Parameter{std::move(v)}; }

const SingularityClass F4p(Family::F4, 4, 1);

Parameter lerp(const Parameter& a, const Parameter& b, const Rational& t) {
  Parameter out;
  for (size_t i = 0; i < a.size(); ++i) out.values.push_back((1 - t) * a[i] + t * b[i]);
  return out;
}

// Every segment: 32 interior points are NonSingular and of the endpoint type.
void check_interior_points(const SingularityClass& cls, const PathCertificate& cert) {
  REQUIRE(cert.waypoints.size() == cert.segments.size() + 1);
  const std::string want = classify(cls, cert.waypoints.front()).key();
  for (size_t s = 0; s + 1 < cert.waypoints.size(); ++s) {
    for (int j = 1; j <= 32; ++j) {
      const Parameter p = lerp(cert.waypoints[s], cert.waypoints[s + 1], Rational(j, 33));
      REQUIRE(discriminant_membership(cls, p) == Membership::NonSingular);
      try {
        CHECK(classify(cls, p).key() == want);
      } catch (const Error& e) {
        // a fold-point crossing is a codimension-one event inside a component
        CHECK(e.code() == Errc::NonGenericConfiguration);
      }
    }
  }
}

// Res_x(h, h') h(0) along the segment through the multivariate resultant over
// Q[t], independent of the evaluation/interpolation route.
UniPoly bc_certificate_by_bareiss(const SingularityClass& cls, const Parameter& l0, const Parameter& l1) {
  const std::string v = cls.family() == Family::B ? "x" : "y";
  const std::vector<std::string> vars{v, "t"};
  const MultiPoly t = MultiPoly::variable(vars, "t"), one = MultiPoly::constant(vars, 1);
  const MultiPoly z = MultiPoly::variable(vars, v);
  const int mu = cls.mu();
  MultiPoly h = MultiPoly::constant(vars, cls.h_leading_sign()) * z.pow(static_cast<unsigned>(mu));
  for (int i = 1; i <= mu; ++i) {
    const auto& a = l0[static_cast<size_t>(i - 1)];
    const auto& b = l1[static_cast<size_t>(i - 1)];
    h += (MultiPoly::constant(vars, a) * (one - t) + MultiPoly::constant(vars, b) * t) * z.pow(static_cast<unsigned>(mu - i));
  }
  const MultiPoly r = resultant(h, h.derivative(v), v);
  const std::vector<std::string> tv{"t"};
  const MultiPoly h0 = h.specialize(std::vector<std::string>{v}, std::vector<Rational>{0});
  return (r.with_vars(tv) * h0.with_vars(tv)).to_unipoly("t");
}

bool proportional(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.monic() == b.monic();
}

}  // namespace

TEST_CASE("rng is deterministic per stream") {
  Rng a(1, 7), b(1, 7), c(1, 8);
  const auto x = a.rational(5, 64);
  CHECK(x == b.rational(5, 64));
  CHECK(abs(x) <= 5);
  CHECK(x.get_den() <= 64);
  bool differs = false;
  for (int i = 0; i < 4; ++i) differs |= a.next() != c.next();
  CHECK(differs);
}

TEST_CASE("representatives") {
  const auto b2 = SingularityClass::parse("B+2");
  CHECK(construct_representative(b2, {1, 1}) == P({0, -1}));
  CHECK(construct_representative(b2, {0, 0}) == P({0, 1}));
  CHECK(construct_representative(SingularityClass::parse("B+3"), {1, 2}) == P({-2, -1, 2}));
  CHECK_THROWS_AS(construct_representative(b2, {1, 0}), Error);
  for (const char* tag : {"B-6", "+B7", "C+6", "-C7"}) {
    const auto cls = SingularityClass::parse(tag);
    for (const auto& sig : valid_signatures(cls)) {
      const Parameter p = construct_representative(cls, sig);
      CHECK(classify_bc(cls, p) == sig);
      CHECK(parameter_from_boundary(cls, boundary_polynomial(cls, p)) == p);
    }
    CHECK(valid_signatures(cls).size() == cls.expected_component_count());
  }
}

TEST_CASE("atlas of B and C classes") {
  for (const char* tag : {"B+2", "B-2", "+B3", "C3+", "B+4", "C5+"}) {
    const auto cls = SingularityClass::parse(tag);
    SamplingConfig cfg;
    cfg.random_count = 500;
    const AtlasReport r = enumerate_components(cls, cfg);
    CHECK(r.realized.size() == cls.expected_component_count());
    CHECK(r.match);
    for (const auto& t : r.realized) {
      CHECK(classify(cls, t.representative).key() == t.key);
      CHECK(t.count > 0);
    }
  }
}

TEST_CASE("atlas is independent of the worker count") {
  const auto cls = SingularityClass::parse("-B5");
  SamplingConfig cfg;
  cfg.random_count = 400;
  const std::string one = to_json(enumerate_components(cls, cfg));
  cfg.jobs = 3;
  auto three = nlohmann::json::parse(to_json(enumerate_components(cls, cfg)));
  auto ref = nlohmann::json::parse(one);
  ref["config"].erase("jobs");
  three["config"].erase("jobs");
  CHECK(ref == three);
}

TEST_CASE("F4 atlas") {
  SamplingConfig cfg;
  cfg.random_count = 3000;
  const AtlasReport r = enumerate_components(F4p, cfg);
  CHECK(r.realized.size() == 8);
  CHECK(r.match);
  int with_slice = 0;
  for (const auto& t : r.realized) with_slice += t.slice_representative.has_value();
  CHECK(with_slice == 6);
  const F4Catalog cat = catalog_from_report(r);
  CHECK(cat.size() == 8);
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["realized_count"] == 8);
  CHECK(j["match"] == true);

  SUBCASE("a report missing a type fails the comparison") {
    AtlasReport partial = r;
    const std::string dropped = partial.realized.back().key;
    partial.realized.pop_back();
    const TableComparison c = verify_against_table1(partial);
    CHECK_FALSE(c.pass);
    CHECK(c.expected == 8);
    CHECK(c.realized == 7);
    REQUIRE(c.missing.size() == 1);
    CHECK(c.missing.front() == dropped);
  }
}

TEST_CASE("table comparison for small classes") {
  SamplingConfig cfg;
  cfg.random_count = 200;
  CHECK(verify_against_table1(enumerate_components(SingularityClass::parse("B-2"), cfg)).pass);
  CHECK(verify_against_table1(enumerate_components(SingularityClass::parse("C3+"), cfg)).pass);
}

TEST_CASE("certificate polynomial: interpolation route equals the multivariate resultant") {
  Rng rng(5, 0);
  for (const char* tag : {"B+2", "-B3", "B-4", "C+2", "+C3", "C-4", "+B5"}) {
    const auto cls = SingularityClass::parse(tag);
    for (int i = 0; i < 6; ++i) {
      Parameter a, b;
      for (int j = 0; j < cls.mu(); ++j) {
        a.values.push_back(rng.rational(4, 8));
        b.values.push_back(rng.rational(4, 8));
      }
      CHECK(proportional(certificate_polynomial(cls, a, b), bc_certificate_by_bareiss(cls, a, b)));
    }
  }
}

TEST_CASE("segment certification") {
  const auto b2 = SingularityClass::parse("B+2");
  const SegmentResult ok = certify_segment(b2, P({0, -1}), P({0, -4}));
  REQUIRE(ok.ok());
  REQUIRE(ok.certificate->segments.size() == 1);
  // disc 4(1 + 3t) times h(0) = -(1 + 3t)
  CHECK(proportional(ok.certificate->segments[0].restricted, UniPoly({1, 6, 9}, "t")));
  CHECK(check_certificate(*ok.certificate));

  const SegmentResult bad = certify_segment(b2, P({0, -1}), P({0, 1}));
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.witness->root.contains(Rational(1, 2)));
  CHECK(sturm_count(bad.witness->restricted, bad.witness->root) >= 1);

  const SegmentResult same = certify_segment(b2, P({0, -1}), P({0, -1}));
  CHECK(same.ok());

  CHECK_THROWS_AS(certify_segment(b2, P({0, 0}), P({0, -1})), Error);
}

TEST_CASE("tampered certificates are rejected") {
  const auto b2 = SingularityClass::parse("B+2");
  PathCertificate cert = *certify_segment(b2, P({0, -1}), P({0, -4})).certificate;
  cert.waypoints.back() = P({0, 1});
  CHECK_FALSE(check_certificate(cert));
}

TEST_CASE("path certification for B/C") {
  const auto b4 = SingularityClass::parse("B+4");
  const Parameter l0 = P({1, -7, -1, 6});  // (x+1)(x+2)(x-1)(x-2)
  const std::vector<Rational> roots{Rational(-1, 2), -3, 3, Rational(1, 3)};
  const Parameter l1 = parameter_from_boundary(b4, UniPoly::from_roots(roots));
  REQUIRE(classify_bc(b4, l0) == BCSignature{2, 2});
  REQUIRE(classify_bc(b4, l1) == BCSignature{2, 2});
  const PathCertificate cert = certify_path(b4, l0, l1);
  CHECK(cert.waypoints.front() == l0);
  CHECK(cert.waypoints.back() == l1);
  CHECK(check_certificate(cert));
  check_interior_points(b4, cert);

  CHECK_THROWS_AS(certify_path(b4, l0, construct_representative(b4, {1, 1})), Error);

  Rng rng(9, 0);
  for (const char* tag : {"-C5", "B-6", "+B7"}) {
    const auto cls = SingularityClass::parse(tag);
    for (const auto& sig : valid_signatures(cls)) {
      const Parameter rep = construct_representative(cls, sig);
      Parameter moved = rep;
      for (auto& v : moved.values) v += rng.rational(1, 64) / 16;
      if (discriminant_membership(cls, moved) != Membership::NonSingular || !same_type(cls, rep, moved)) continue;
      const PathCertificate c = certify_path(cls, moved, rep);
      CHECK(check_certificate(c));
    }
  }
}

TEST_CASE("path certification for F4") {
  const Parameter a = P({1, 1, 0, 0});
  const Parameter b = P({-2, 3, 1, Rational(1, 2)});
  REQUIRE(same_type(F4p, a, b));
  const PathCertificate cert = certify_path(F4p, a, b);
  CHECK(check_certificate(cert));
  check_interior_points(F4p, cert);

  const auto reps = F4Catalog::stored_representatives();
  CHECK_THROWS_AS(certify_path(F4p, reps[0], reps[6]), Error);

  // oval seeds, moved slightly
  for (size_t i : {6u, 7u}) {
    Parameter moved = reps[i];
    moved[3] += Rational(1, 1 << 20);
    REQUIRE(same_type(F4p, reps[i], moved));
    CHECK(check_certificate(certify_path(F4p, reps[i], moved)));
  }
}

TEST_CASE("certificate json") {
  const auto b2 = SingularityClass::parse("B+2");
  const auto j = nlohmann::json::parse(to_json(*certify_segment(b2, P({0, -1}), P({0, -4})).certificate));
  CHECK(j["certified"] == true);
  CHECK(j["waypoints"].size() == 2);
  CHECK(j["segments"][0]["sturm_count_0_1"] == 0);
  const auto w = nlohmann::json::parse(to_json(*certify_segment(b2, P({0, -1}), P({0, 1})).witness));
  CHECK(w["certified"] == false);
  CHECK(w.contains("root"));
}

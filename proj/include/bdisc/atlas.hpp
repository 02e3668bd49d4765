// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bdisc/classify.hpp"

namespace bdisc {

// Deterministic random source. Streams are keyed by (seed, index), so a sample's
// value does not depend on which worker draws it.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Uniform over {p/q : |p/q| <= radius, 1 <= q <= denominator_bound}, drawn by
  /// picking q first.
  Rational rational(const Rational& radius, int denominator_bound);

 private:
  std::mt19937_64 engine_;
};

struct SamplingConfig {
  Rational box_radius = 5;
  /// 0 selects the class default (default_random_count).
  std::size_t random_count = 0;
  int grid_resolution = 3;
  std::uint64_t rng_seed = 1;
  int denominator_bound = 64;
  unsigned jobs = 1;
};

std::size_t default_random_count(const SingularityClass& cls);

struct SampleRecord {
  Parameter lambda;
  Membership membership = Membership::NonSingular;
  std::optional<LowerSetType> type;
  /// Empty when classified; otherwise the membership name or "NonGeneric".
  std::string rejection;
};

SampleRecord sample_point(const SingularityClass& cls, const Parameter& lambda);

struct RealizedType {
  std::string key;
  /// Catalog id for F4 (0 for B/C).
  int id = 0;
  std::size_t count = 0;
  Parameter representative;
  LowerSetType type;
  std::string origin;  // "seed", "grid" or "random"
  /// F4 only: first realizing sample with c = 0.
  std::optional<Parameter> slice_representative;
};

struct AtlasReport {
  SingularityClass cls;
  SamplingConfig config;
  std::size_t sample_count = 0;
  std::vector<RealizedType> realized;
  std::size_t expected = 0;
  bool match = false;
  std::map<std::string, std::size_t> rejections;

  const RealizedType* find(const std::string& key) const;
};

/// Seeds, then the grid, then random samples, classified in parallel and merged
/// in sample order.
AtlasReport enumerate_components(const SingularityClass& cls, const SamplingConfig& cfg);

/// Every (p, q) allowed by the bound and parity rules, sorted.
std::vector<BCSignature> valid_signatures(const SingularityClass& cls);

/// sign * prod (x + i) * prod (x - j) * prod (x^2 + m), read back as a parameter.
Parameter construct_representative(const SingularityClass& cls, const BCSignature& sig);

/// Parameter whose boundary polynomial is h (degree mu, leading coefficient of the class).
Parameter parameter_from_boundary(const SingularityClass& cls, const UniPoly& h);

struct TableComparison {
  std::size_t expected = 0;
  std::size_t realized = 0;
  bool pass = false;
  std::vector<std::string> missing;
  std::vector<std::string> extra;
};

TableComparison verify_against_table1(const AtlasReport& report);

/// Catalog of the realized F4 types, ids assigned from the report's representatives.
F4Catalog catalog_from_report(const AtlasReport& report);

// Exact proof that the segments between consecutive waypoints avoid the
// discriminant: each stored polynomial is the certificate polynomial restricted
// to its segment and has no root in [0, 1].
struct SegmentProof {
  UniPoly restricted;
  int roots_in_unit_interval = 0;
};

struct PathCertificate {
  SingularityClass cls;
  std::vector<Parameter> waypoints;
  std::vector<SegmentProof> segments;
};

struct CrossingWitness {
  Parameter from;
  Parameter to;
  UniPoly restricted;
  /// Isolates one root of `restricted` inside [0, 1].
  Interval root;
};

struct SegmentResult {
  std::optional<PathCertificate> certificate;
  std::optional<CrossingWitness> witness;
  bool ok() const { return certificate.has_value(); }
};

/// B/C: Res_x(h, h') * h(0); F4: (Sigma0 eliminant) * (27 d^2 + 4 b^3), restricted
/// to the segment from l0 to l1.
UniPoly certificate_polynomial(const SingularityClass& cls, const Parameter& l0, const Parameter& l1);

/// Throws DiscriminantEndpoint unless both ends are NonSingular.
SegmentResult certify_segment(const SingularityClass& cls, const Parameter& l0, const Parameter& l1);

struct PathOptions {
  /// Upper bound on segment checks spent by the search.
  int budget = 400;
  std::uint64_t seed = 0;
};

/// Throws TypeMismatch for different endpoint types and NotFound when the budget
/// runs out (inconclusive, not evidence of disconnection).
PathCertificate certify_path(const SingularityClass& cls, const Parameter& l0, const Parameter& l1,
                             const PathOptions& opts = {});

/// Recomputes every segment polynomial and root count. True iff the certificate holds.
bool check_certificate(const PathCertificate& cert);

/// Same LowerSetType key (the F4 comparison uses the topological type).
bool same_type(const SingularityClass& cls, const Parameter& l0, const Parameter& l1);

std::string to_json(const AtlasReport& report);
std::string to_json(const PathCertificate& cert);
std::string to_json(const CrossingWitness& w);

}  // namespace bdisc

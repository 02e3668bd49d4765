// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bdisc/models.hpp"

namespace bdisc {

// Root signature of h_lambda: p negative and q positive simple roots.
struct BCSignature {
  int p = 0;
  int q = 0;
  friend auto operator<=>(const BCSignature&, const BCSignature&) = default;
};

/// p, q >= 0, p + q <= mu, p + q = mu (mod 2).
bool is_valid_signature(const SingularityClass& cls, const BCSignature& sig);

enum class CurvePart { Branch, Oval };
enum class OvalState { Absent, Left, Right, Crossed };

struct BoundaryRoot {
  CurvePart part = CurvePart::Branch;
  int fx_sign = 1;  // sign of a + c*y at the root
  friend auto operator<=>(const BoundaryRoot&, const BoundaryRoot&) = default;
};

// Curve-vs-boundary description of the F4+ zero set: the boundary roots of
// y^3 + b y + d in ascending order, each tagged with the curve component it lies
// on, plus the position of the oval.
struct F4Descriptor {
  std::vector<BoundaryRoot> roots;
  OvalState oval = OvalState::Absent;
  /// Set for F4-: the descriptor is that of the reduced F4+ parameter.
  bool reduced = false;
  friend auto operator<=>(const F4Descriptor&, const F4Descriptor&) = default;
};

/// Root count 1 or 3, branch roots before oval roots, Crossed iff two oval roots.
bool is_consistent(const F4Descriptor& d);

enum class Leg { None, Left, Right };

// Topological type of W(lambda) for F4: the number of branch crossings, for three
// crossings the leg of the branch met lowest on the boundary, and the oval.
// The leg of a single crossing is not part of the type: the branch apex can slide
// across the boundary inside one component.
struct F4Type {
  int branch_crossings = 1;
  Leg lowest_leg = Leg::None;
  OvalState oval = OvalState::Absent;
  friend auto operator<=>(const F4Type&, const F4Type&) = default;
};

F4Type f4_type_of(const F4Descriptor& d);

struct LowerSetType {
  SingularityClass cls;
  std::variant<BCSignature, F4Descriptor> value;

  /// Canonical compact JSON of the topological type, used as a map key:
  /// {"p":1,"q":2} or {"branch":3,"leg":"L","oval":"R"}.
  std::string key() const;
};

BCSignature classify_bc(const SingularityClass& cls, const Parameter& lambda);

/// F4+ classifier; F4- parameters are reduced first and flagged. Throws
/// DiscriminantParameter or NonGenericConfiguration.
F4Descriptor classify_f4(const SingularityClass& cls, const Parameter& lambda);

/// Dispatches on the family.
LowerSetType classify(const SingularityClass& cls, const Parameter& lambda);

/// Every descriptor allowed by the root count, ordering and oval rules.
std::vector<F4Descriptor> candidate_descriptors();

std::string descriptor_json(const F4Descriptor& d);
std::string type_key(const F4Type& t);
std::string type_key(const BCSignature& s);
const char* oval_code(OvalState s);

// Numbering of the realized F4 types: 1-6 on the c = 0 slice, 7-8 off it. The
// numbering is a convention; renderings are provided for comparison.
class F4Catalog {
 public:
  struct Entry {
    int id = 0;
    F4Type type;
    Parameter representative;
    bool on_slice = false;
  };

  F4Catalog() = default;
  /// Assigns ids to classified representatives.
  static F4Catalog from_representatives(const std::vector<Parameter>& reps);
  /// Catalog built from the stored representative parameters.
  static const F4Catalog& builtin();
  /// The stored representatives (types 1..8 in catalog order).
  static std::vector<Parameter> stored_representatives();

  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  /// Throws CatalogMissing for an empty catalog; nullopt for an unknown type.
  std::optional<int> id_of(const F4Type& t) const;
  const Entry& entry(int id) const;

 private:
  std::vector<Entry> entries_;
};

/// Conventional id of a type: the fixed table for types 1-6 and oval side for 7-8;
/// 0 for a type outside the table.
int conventional_f4_id(const F4Type& t);

}  // namespace bdisc

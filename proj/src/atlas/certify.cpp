// Licensed under the Apache License 2.0 (see LICENSE file).

#include <algorithm>
#include <optional>

#include "bdisc/atlas.hpp"
#include "bdisc/error.hpp"

namespace bdisc {

namespace {

const MultiPoly& f4_certificate_product() {
  static const MultiPoly p = f4_sigma0_eliminant() * f4_sigma1_polynomial();
  return p;
}

Parameter lerp(const Parameter& a, const Parameter& b, const Rational& t) {
  Parameter p;
  for (size_t i = 0; i < a.size(); ++i) p.values.push_back((1 - t) * a[i] + t * b[i]);
  return p;
}

// Res_x(h, h') * h(0) along the segment. The resultant is a polynomial of degree
// at most 2 mu - 1 in t, recovered from exact values at 2 mu integer nodes.
UniPoly bc_certificate_polynomial(const SingularityClass& cls, const Parameter& l0, const Parameter& l1) {
  const int nodes = 2 * cls.mu();
  std::vector<Rational> ts, vs;
  for (int i = 0; i < nodes; ++i) {
    const Rational t = i;
    const UniPoly h = boundary_polynomial(cls, lerp(l0, l1, t));
    ts.push_back(t);
    vs.push_back(resultant(h, h.derivative()));
  }
  const UniPoly disc = interpolate(ts, vs, "t");
  const size_t last = l0.size() - 1;
  return disc * UniPoly({l0[last], l1[last] - l0[last]}, "t");
}

bool is_nonsingular(const SingularityClass& cls, const Parameter& p) {
  return discriminant_membership(cls, p) == Membership::NonSingular;
}

std::string type_key_of(const SingularityClass& cls, const Parameter& p) {
  try {
    return classify(cls, p).key();
  } catch (const Error& e) {
    if (e.code() == Errc::DiscriminantParameter || e.code() == Errc::NonGenericConfiguration) return {};
    throw;
  }
}

// An interval inside [0, 1] isolating one root of p, given that [0, 1] holds one.
Interval witness_root(const UniPoly& p) {
  const SturmChain chain(p);
  if (chain.is_root(0)) return Interval::point(0);
  if (chain.is_root(1)) return Interval::point(1);
  Rational lo = 0, hi = 1;
  int n = chain.count(Interval::open(lo, hi));
  if (n == 0) throw Error(Errc::Internal, "no root in [0, 1] although the Sturm count is positive");
  while (n > 1) {
    const Rational mid = (lo + hi) / 2;
    if (chain.is_root(mid)) return Interval::point(mid);
    const int left = chain.count(Interval::open(lo, mid));
    if (left > 0) {
      hi = mid;
      n = left;
    } else {
      lo = mid;
      n -= left;
    }
  }
  return Interval::open(lo, hi);
}

// The certificate polynomial of the segment if it has no root in [0, 1].
std::optional<UniPoly> clear_segment(const SingularityClass& cls, const Parameter& l0, const Parameter& l1) {
  UniPoly p = certificate_polynomial(cls, l0, l1);
  // Descartes settles most segments; Sturm decides the rest
  if (descartes_excludes_unit_interval(p) || sturm_count(p, Interval::closed(0, 1)) == 0) return p;
  return std::nullopt;
}

}  // namespace

UniPoly certificate_polynomial(const SingularityClass& cls, const Parameter& l0, const Parameter& l1) {
  if (l0.size() != static_cast<size_t>(cls.mu()) || l1.size() != static_cast<size_t>(cls.mu()))
    throw Error(Errc::ArityMismatch, "segment endpoints do not match " + cls.tag());
  if (cls.family() != Family::F4) return bc_certificate_polynomial(cls, l0, l1);
  const Parameter a = cls.sign() > 0 ? l0 : f4_reduce_minus(l0);
  const Parameter b = cls.sign() > 0 ? l1 : f4_reduce_minus(l1);
  return restrict_to_segment(f4_certificate_product(), a.values, b.values);
}

SegmentResult certify_segment(const SingularityClass& cls, const Parameter& l0, const Parameter& l1) {
  if (!is_nonsingular(cls, l0) || !is_nonsingular(cls, l1))
    throw Error(Errc::DiscriminantEndpoint, "segment endpoint lies on the discriminant");
  SegmentResult out;
  if (auto p = clear_segment(cls, l0, l1)) {
    out.certificate = PathCertificate{cls, {l0, l1}, {SegmentProof{std::move(*p), 0}}};
  } else {
    UniPoly q = certificate_polynomial(cls, l0, l1);
    Interval root = witness_root(q);
    out.witness = CrossingWitness{l0, l1, std::move(q), std::move(root)};
  }
  return out;
}

bool same_type(const SingularityClass& cls, const Parameter& l0, const Parameter& l1) {
  const std::string k0 = type_key_of(cls, l0);
  return !k0.empty() && k0 == type_key_of(cls, l1);
}

bool check_certificate(const PathCertificate& cert) {
  if (cert.waypoints.size() < 2 || cert.segments.size() + 1 != cert.waypoints.size()) return false;
  for (const auto& w : cert.waypoints)
    if (!is_nonsingular(cert.cls, w)) return false;
  for (size_t i = 0; i < cert.segments.size(); ++i) {
    const UniPoly p = certificate_polynomial(cert.cls, cert.waypoints[i], cert.waypoints[i + 1]);
    if (!(p == cert.segments[i].restricted) || cert.segments[i].roots_in_unit_interval != 0) return false;
    if (p.is_zero() || sturm_count(p, Interval::closed(0, 1)) != 0) return false;
  }
  return true;
}

namespace {

class PathBuilder {
 public:
  PathBuilder(const SingularityClass& cls, const Parameter& start, int budget)
      : cert_{cls, {start}, {}}, budget_(budget) {}

  const Parameter& last() const { return cert_.waypoints.back(); }
  size_t size() const { return cert_.segments.size(); }
  bool exhausted() const { return budget_ <= 0; }

  /// Certifies last() -> next and appends it on success.
  bool step(const Parameter& next) {
    if (next == last()) return true;
    if (budget_-- <= 0 || !is_nonsingular(cert_.cls, next)) return false;
    auto p = clear_segment(cert_.cls, last(), next);
    if (!p) return false;
    cert_.waypoints.push_back(next);
    cert_.segments.push_back({std::move(*p), 0});
    return true;
  }

  void truncate(size_t n) {
    cert_.segments.resize(n);
    cert_.waypoints.resize(n + 1);
  }

  void append_reversed(const PathCertificate& other) {
    // other runs from some point p to last(); walk it backwards
    for (size_t i = other.segments.size(); i-- > 0;) {
      cert_.waypoints.push_back(other.waypoints[i]);
      cert_.segments.push_back(
          {certificate_polynomial(cert_.cls, cert_.waypoints[cert_.waypoints.size() - 2], other.waypoints[i]), 0});
    }
  }

  PathCertificate take() { return std::move(cert_); }
  int budget() const { return budget_; }

 private:
  PathCertificate cert_;
  int budget_;
};

// Rational stand-in for h with the same root signature: real roots replaced by
// nearby rationals, the rest by the polynomial quotient.
struct RootModel {
  std::vector<Rational> real_roots;  // ascending, nonzero
  UniPoly complex_part;              // monic, no real roots
};

UniPoly model_polynomial(const SingularityClass& cls, const RootModel& m, const std::string& var) {
  return UniPoly::constant(cls.h_leading_sign(), var) * UniPoly::from_roots(m.real_roots, var) * m.complex_part;
}

RootModel canonical_model(const SingularityClass& cls, const BCSignature& sig, const std::string& var) {
  RootModel m;
  for (int i = sig.p; i >= 1; --i) m.real_roots.push_back(-i);
  for (int j = 1; j <= sig.q; ++j) m.real_roots.push_back(j);
  m.complex_part = UniPoly::constant(1, var);
  for (int k = 1; k <= (cls.mu() - sig.p - sig.q) / 2; ++k) m.complex_part = m.complex_part * UniPoly({k, 0, 1}, var);
  return m;
}

std::optional<RootModel> approximate_model(const SingularityClass& cls, const UniPoly& h, const Rational& width) {
  const SturmChain chain(h);
  RootModel m;
  for (Interval iv : isolate_real_roots(h, width)) {
    // shrink until the interval is a point or keeps the root's sign
    while (!iv.is_point() && !(*iv.lo() >= 0 || *iv.hi() <= 0)) iv = refine_root(chain, iv, iv.width() / 4);
    m.real_roots.push_back(iv.is_point() ? *iv.lo() : (*iv.lo() + *iv.hi()) / 2);
  }
  const UniPoly real = UniPoly::from_roots(m.real_roots, h.var());
  // coefficients rounded to the grid of width: the first step from h is certified
  // anyway, and short coefficients keep every later certificate polynomial small
  const UniPoly q = divmod(h, UniPoly::constant(cls.h_leading_sign(), h.var()) * real).first;
  std::vector<Rational> c;
  for (int i = 0; i <= q.degree(); ++i) {
    Integer k;
    const Rational x = q.coeff(i) / width + Rational(1, 2);
    mpz_fdiv_q(k.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    c.push_back(Rational(k) * width);
  }
  c.back() = 1;
  m.complex_part = UniPoly(std::move(c), h.var());
  if (m.complex_part.is_zero() || sturm_count(m.complex_part, Interval::whole()) != 0) return std::nullopt;
  return m;
}

RootModel interpolate_models(const RootModel& a, const RootModel& b, const Rational& t) {
  RootModel m;
  for (size_t i = 0; i < a.real_roots.size(); ++i) m.real_roots.push_back((1 - t) * a.real_roots[i] + t * b.real_roots[i]);
  m.complex_part = (1 - t) * a.complex_part + t * b.complex_part;
  return m;
}

// Path from lambda to the canonical representative of its signature.
bool path_to_canonical(PathBuilder& pb, const SingularityClass& cls, const BCSignature& sig) {
  const UniPoly h = boundary_polynomial(cls, pb.last());
  const std::string var = h.var();
  Rational width(1, 16);
  std::optional<RootModel> start;
  for (int attempt = 0; attempt < 12 && !start; ++attempt, width /= 16) {
    auto m = approximate_model(cls, h, width);
    if (!m) continue;
    const Parameter p = parameter_from_boundary(cls, model_polynomial(cls, *m, var));
    if (pb.step(p)) start = std::move(m);
    if (pb.exhausted()) return false;
  }
  if (!start) return false;
  const RootModel target = canonical_model(cls, sig, var);
  auto at = [&](const Rational& t) { return parameter_from_boundary(cls, model_polynomial(cls, interpolate_models(*start, target, t), var)); };

  // chords t_i -> t_{i+1}, bisected where a chord fails
  std::vector<Rational> pending{1, Rational(3, 4), Rational(1, 2), Rational(1, 4)};
  Rational t_done = 0;
  while (!pending.empty()) {
    const Rational t = pending.back();
    if (pb.step(at(t))) {
      t_done = t;
      pending.pop_back();
      continue;
    }
    if (pb.exhausted() || t - t_done < Rational(1, 1 << 24)) return false;
    pending.push_back((t_done + t) / 2);
  }
  return true;
}

// Midpoint subdivision with random jitter; every midpoint must have the target type.
bool connect(PathBuilder& pb, const SingularityClass& cls, const std::string& key, const Parameter& to, Rng& rng,
             int depth) {
  const size_t mark = pb.size();
  if (pb.step(to)) return true;
  if (depth >= 12 || pb.exhausted()) return false;
  const Parameter from = pb.last();
  Rational len = 0;
  for (size_t i = 0; i < from.size(); ++i) len = std::max(len, Rational(abs(to[i] - from[i])));
  for (int attempt = 0; attempt < 6 && !pb.exhausted(); ++attempt) {
    Parameter mid = lerp(from, to, Rational(1, 2));
    if (attempt > 0)
      for (auto& v : mid.values) v += len * rng.rational(Rational(1, 2), 16);
    if (!is_nonsingular(cls, mid) || type_key_of(cls, mid) != key) continue;
    if (connect(pb, cls, key, mid, rng, depth + 1) && connect(pb, cls, key, to, rng, depth + 1)) return true;
    pb.truncate(mark);
  }
  return false;
}

}  // namespace

PathCertificate certify_path(const SingularityClass& cls, const Parameter& l0, const Parameter& l1,
                             const PathOptions& opts) {
  if (!is_nonsingular(cls, l0) || !is_nonsingular(cls, l1))
    throw Error(Errc::DiscriminantEndpoint, "path endpoint lies on the discriminant");
  const std::string key = type_key_of(cls, l0);
  if (key.empty() || key != type_key_of(cls, l1))
    throw Error(Errc::TypeMismatch, "endpoints have different types (" + key + ", " + type_key_of(cls, l1) + ")");
  const std::string budget_msg = "no certified path within a budget of " + std::to_string(opts.budget) + " segment checks";

  if (cls.family() != Family::F4) {
    PathBuilder pb(cls, l0, opts.budget);
    if (pb.step(l1)) return pb.take();
    const BCSignature sig = classify_bc(cls, l0);
    PathBuilder back(cls, l1, opts.budget);
    if (!path_to_canonical(pb, cls, sig) || !path_to_canonical(back, cls, sig))
      throw Error(Errc::NotFound, budget_msg);
    pb.append_reversed(back.take());
    return pb.take();
  }

  Rng rng(opts.seed, 0);
  PathBuilder pb(cls, l0, opts.budget / 2);
  if (connect(pb, cls, key, l1, rng, 0)) return pb.take();
  const int left = opts.budget / 2 + pb.budget();
  // route through the catalog representative of the type
  const auto& cat = F4Catalog::builtin();
  const F4Type t = f4_type_of(classify_f4(cls, l0));
  if (const auto id = cat.id_of(t)) {
    const Parameter& rep0 = cat.entry(*id).representative;
    const Parameter rep = cls.sign() > 0 ? rep0 : f4_reduce_minus(rep0);
    PathBuilder via(cls, l0, left);
    if (connect(via, cls, key, rep, rng, 0) && connect(via, cls, key, l1, rng, 0)) return via.take();
  }
  throw Error(Errc::NotFound, budget_msg);
}

}  // namespace bdisc

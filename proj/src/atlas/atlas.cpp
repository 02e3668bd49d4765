// Licensed under the Apache License 2.0 (see LICENSE file).

#include "bdisc/atlas.hpp"

#include <algorithm>
#include <thread>

#include "bdisc/error.hpp"

namespace bdisc {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error(Errc::Internal, "Rng::below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do v = engine_();
  while (v >= limit);
  return v % n;
}

Rational Rng::rational(const Rational& radius, int denominator_bound) {
  const std::uint64_t q = 1 + below(static_cast<std::uint64_t>(std::max(1, denominator_bound)));
  const Integer top = (radius.get_num() * q) / radius.get_den();
  // draw the numerator in [-top, top]; top fits comfortably in 64 bits for sane radii
  const std::uint64_t span = 2 * top.get_ui() + 1;
  Rational r(Integer(static_cast<unsigned long>(below(span))) - top, Integer(static_cast<unsigned long>(q)));
  r.canonicalize();
  return r;
}

std::size_t default_random_count(const SingularityClass& cls) {
  return cls.family() == Family::F4 ? 100000 : 2000;
}

SampleRecord sample_point(const SingularityClass& cls, const Parameter& lambda) {
  SampleRecord rec{lambda, discriminant_membership(cls, lambda), std::nullopt, {}};
  if (rec.membership != Membership::NonSingular) {
    rec.rejection = membership_name(rec.membership);
    return rec;
  }
  try {
    rec.type = classify(cls, lambda);
  } catch (const Error& e) {
    if (e.code() != Errc::NonGenericConfiguration) throw;
    rec.rejection = "NonGeneric";
  }
  return rec;
}

const RealizedType* AtlasReport::find(const std::string& key) const {
  for (const auto& r : realized)
    if (r.key == key) return &r;
  return nullptr;
}

std::vector<BCSignature> valid_signatures(const SingularityClass& cls) {
  std::vector<BCSignature> out;
  for (int p = 0; p <= cls.mu(); ++p)
    for (int q = 0; p + q <= cls.mu(); ++q)
      if (is_valid_signature(cls, {p, q})) out.push_back({p, q});
  return out;
}

Parameter parameter_from_boundary(const SingularityClass& cls, const UniPoly& h) {
  const int mu = cls.mu();
  if (cls.family() == Family::F4) throw Error(Errc::InvalidClass, "parameter_from_boundary needs a B or C class");
  if (h.degree() != mu || h.leading() != cls.h_leading_sign())
    throw Error(Errc::Internal, "boundary polynomial does not match " + cls.tag());
  Parameter p;
  for (int i = 1; i <= mu; ++i) p.values.push_back(h.coeff(mu - i));
  return p;
}

Parameter construct_representative(const SingularityClass& cls, const BCSignature& sig) {
  if (cls.family() == Family::F4) throw Error(Errc::InvalidClass, "construct_representative needs a B or C class");
  if (!is_valid_signature(cls, sig))
    throw Error(Errc::InvalidSignature, "signature " + type_key(sig) + " is not valid for " + cls.tag());
  UniPoly h = UniPoly::constant(cls.h_leading_sign());
  for (int i = 1; i <= sig.p; ++i) h = h * UniPoly({i, 1});
  for (int j = 1; j <= sig.q; ++j) h = h * UniPoly({-j, 1});
  for (int m = 1; m <= (cls.mu() - sig.p - sig.q) / 2; ++m) h = h * UniPoly({m, 0, 1});
  return parameter_from_boundary(cls, h);
}

namespace {

enum class Origin { Seed, Grid, Random };

const char* origin_name(Origin k) {
  switch (k) {
    case Origin::Seed: return "seed";
    case Origin::Grid: return "grid";
    case Origin::Random: return "random";
  }
  return "?";
}

std::vector<Parameter> constructive_seeds(const SingularityClass& cls) {
  std::vector<Parameter> out;
  if (cls.family() == Family::F4) {
    for (const auto& p : F4Catalog::stored_representatives())
      out.push_back(cls.sign() > 0 ? p : f4_reduce_minus(p));
  } else {
    for (const auto& sig : valid_signatures(cls)) out.push_back(construct_representative(cls, sig));
  }
  return out;
}

std::vector<Parameter> grid_points(const SingularityClass& cls, const SamplingConfig& cfg) {
  const std::size_t mu = static_cast<std::size_t>(cls.mu());
  int res = std::max(1, cfg.grid_resolution);
  // keep the grid below 10^5 points
  auto total = [&](int r) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < mu; ++i) n *= static_cast<std::size_t>(r);
    return n;
  };
  while (res > 1 && total(res) > 100000) --res;
  std::vector<Rational> axis;
  for (int i = 0; i < res; ++i) {
    Rational frac(2 * i + 1, res);
    frac.canonicalize();
    axis.push_back(-cfg.box_radius + frac * cfg.box_radius);
  }
  std::vector<Parameter> out;
  std::vector<std::size_t> idx(mu, 0);
  for (std::size_t n = 0; n < total(res); ++n) {
    Parameter p;
    for (std::size_t i = 0; i < mu; ++i) p.values.push_back(axis[idx[i]]);
    out.push_back(std::move(p));
    for (std::size_t i = mu; i-- > 0;) {
      if (++idx[i] < axis.size()) break;
      idx[i] = 0;
    }
  }
  return out;
}

Parameter random_point(const SingularityClass& cls, const SamplingConfig& cfg, std::uint64_t index) {
  Rng rng(cfg.rng_seed, index);
  Parameter p;
  for (int i = 0; i < cls.mu(); ++i) p.values.push_back(rng.rational(cfg.box_radius, cfg.denominator_bound));
  // every fourth F4 sample lies on the c = 0 slice
  if (cls.family() == Family::F4 && index % 4 == 3) p[2] = 0;
  return p;
}

struct Tally {
  std::size_t count = 0;
  std::size_t first = 0;
  LowerSetType type;
  Parameter representative;
  std::optional<std::size_t> first_slice;
  Parameter slice_representative;
};

struct Partial {
  std::map<std::string, Tally> types;
  std::map<std::string, std::size_t> rejections;
};

void merge_into(Partial& dst, Partial&& src) {
  for (auto& [key, t] : src.types) {
    auto it = dst.types.find(key);
    if (it == dst.types.end()) {
      dst.types.emplace(key, std::move(t));
      continue;
    }
    Tally& d = it->second;
    d.count += t.count;
    if (t.first < d.first) {
      d.first = t.first;
      d.type = t.type;
      d.representative = t.representative;
    }
    if (t.first_slice && (!d.first_slice || *t.first_slice < *d.first_slice)) {
      d.first_slice = t.first_slice;
      d.slice_representative = t.slice_representative;
    }
  }
  for (auto& [k, n] : src.rejections) dst.rejections[k] += n;
}

}  // namespace

AtlasReport enumerate_components(const SingularityClass& cls, const SamplingConfig& cfg) {
  if (cfg.box_radius <= 0 || cfg.denominator_bound <= 0 || cfg.grid_resolution <= 0)
    throw Error(Errc::Internal, "sampling configuration values must be positive");
  const std::vector<Parameter> seeds = constructive_seeds(cls);
  const std::vector<Parameter> grid = grid_points(cls, cfg);
  const std::size_t n_random = cfg.random_count ? cfg.random_count : default_random_count(cls);
  const std::size_t n_total = seeds.size() + grid.size() + n_random;
  const bool f4 = cls.family() == Family::F4;

  auto point = [&](std::size_t i) -> std::pair<Parameter, Origin> {
    if (i < seeds.size()) return {seeds[i], Origin::Seed};
    if (i < seeds.size() + grid.size()) return {grid[i - seeds.size()], Origin::Grid};
    return {random_point(cls, cfg, i - seeds.size() - grid.size()), Origin::Random};
  };

  auto work = [&](std::size_t begin, std::size_t end, Partial& out) {
    for (std::size_t i = begin; i < end; ++i) {
      Parameter lambda = point(i).first;
      SampleRecord rec = sample_point(cls, lambda);
      if (rec.rejection == "NonGeneric") {
        // one re-jitter inside the same component (the rejection is measure zero)
        Rng rng(cfg.rng_seed ^ 0x9e3779b97f4a7c15ULL, i);
        for (auto& v : lambda.values) v += rng.rational(1, cfg.denominator_bound) / 64;
        rec = sample_point(cls, lambda);
      }
      if (!rec.type) {
        ++out.rejections[rec.rejection];
        continue;
      }
      const std::string key = rec.type->key();
      auto it = out.types.find(key);
      if (it == out.types.end()) it = out.types.emplace(key, Tally{0, i, *rec.type, rec.lambda, {}, {}}).first;
      Tally& t = it->second;
      ++t.count;
      if (f4 && rec.lambda[2] == 0 && !t.first_slice) {
        t.first_slice = i;
        t.slice_representative = rec.lambda;
      }
    }
  };

  const unsigned jobs = std::max(1u, cfg.jobs);
  std::vector<Partial> partials(jobs);
  if (jobs == 1) {
    work(0, n_total, partials[0]);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(jobs);
    const std::size_t chunk = (n_total + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
      const std::size_t b = std::min(n_total, j * chunk), e = std::min(n_total, b + chunk);
      threads.emplace_back([&, j, b, e] {
        try {
          work(b, e, partials[j]);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  Partial all;
  for (auto& p : partials) merge_into(all, std::move(p));

  AtlasReport report{cls, cfg, n_total, {}, cls.expected_component_count(), false, std::move(all.rejections)};
  report.config.random_count = n_random;
  for (auto& [key, t] : all.types) {
    RealizedType r{key, 0, t.count, t.representative, t.type, origin_name(point(t.first).second), std::nullopt};
    if (t.first_slice) r.slice_representative = t.slice_representative;
    if (f4) r.id = conventional_f4_id(f4_type_of(std::get<F4Descriptor>(t.type.value)));
    report.realized.push_back(std::move(r));
  }
  if (f4) {
    std::stable_sort(report.realized.begin(), report.realized.end(), [](const RealizedType& a, const RealizedType& b) {
      return (a.id == 0 ? 1000 : a.id) < (b.id == 0 ? 1000 : b.id);
    });
  } else {
    std::sort(report.realized.begin(), report.realized.end(), [](const RealizedType& a, const RealizedType& b) {
      return std::get<BCSignature>(a.type.value) < std::get<BCSignature>(b.type.value);
    });
  }
  report.match = verify_against_table1(report).pass;
  return report;
}

TableComparison verify_against_table1(const AtlasReport& report) {
  TableComparison cmp;
  cmp.expected = report.cls.expected_component_count();
  cmp.realized = report.realized.size();
  std::vector<std::string> known;
  if (report.cls.family() == Family::F4) {
    for (const auto& e : F4Catalog::builtin().entries()) known.push_back(type_key(e.type));
  } else {
    for (const auto& s : valid_signatures(report.cls)) known.push_back(type_key(s));
  }
  for (const auto& k : known)
    if (!report.find(k)) cmp.missing.push_back(k);
  for (const auto& r : report.realized)
    if (std::find(known.begin(), known.end(), r.key) == known.end()) cmp.extra.push_back(r.key);
  cmp.pass = cmp.realized == cmp.expected && cmp.missing.empty() && cmp.extra.empty();
  return cmp;
}

F4Catalog catalog_from_report(const AtlasReport& report) {
  if (report.cls.family() != Family::F4) throw Error(Errc::InvalidClass, "catalog_from_report needs an F4 report");
  std::vector<Parameter> reps;
  for (const auto& r : report.realized)
    reps.push_back(report.cls.sign() > 0 ? r.representative : f4_reduce_minus(r.representative));
  return F4Catalog::from_representatives(reps);
}

}  // namespace bdisc

// Licensed under the Apache License 2.0 (see LICENSE file).

#include "bdisc/bdisc.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <string>

#include "bdisc/atlas.hpp"
#include "bdisc/error.hpp"
#include "bdisc/render.hpp"

struct bdisc_class {
  bdisc::SingularityClass cls;
};

namespace {

using Json = nlohmann::ordered_json;
using namespace bdisc;

thread_local std::string last_error;
thread_local std::string last_kind;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bdisc_status status_of(Errc code) {
  switch (code) {
    case Errc::Parse:
    case Errc::InvalidClass:
    case Errc::ArityMismatch:
    case Errc::InvalidSignature:
    case Errc::EmptyViewport:
    case Errc::BadAxes: return BDISC_E_USAGE;
    case Errc::DiscriminantParameter:
    case Errc::NonGenericConfiguration:
    case Errc::DiscriminantEndpoint:
    case Errc::TypeMismatch:
    case Errc::SeedNotSmallEnough:
    case Errc::CatalogMissing: return BDISC_E_DOMAIN;
    case Errc::NotFound: return BDISC_E_NOT_FOUND;
    default: return BDISC_E_INTERNAL;
  }
}

bdisc_status fail(bdisc_status st, const std::string& kind, const std::string& msg) {
  last_kind = kind;
  last_error = msg;
  return st;
}

template <class F>
bdisc_status guarded(F&& body) {
  last_error.clear();
  last_kind.clear();
  try {
    return body();
  } catch (const Error& e) {
    return fail(status_of(e.code()), errc_name(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(BDISC_E_INTERNAL, "Internal", e.what());
  }
}

Parameter read_parameter(const SingularityClass& cls, const char* const* params, size_t n) {
  if (n != static_cast<size_t>(cls.mu()))
    throw Error(Errc::ArityMismatch,
                cls.tag() + " takes " + std::to_string(cls.mu()) + " parameters, got " + std::to_string(n));
  std::vector<std::string> lits;
  for (size_t i = 0; i < n; ++i) {
    if (!params || !params[i]) throw Error(Errc::Parse, "missing parameter literal");
    lits.emplace_back(params[i]);
  }
  return parse_parameter(lits);
}

const char* family_name(Family f) {
  switch (f) {
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::F4: return "F4";
  }
  return "?";
}

}  // namespace

extern "C" {

bdisc_status bdisc_class_parse(const char* tag, bdisc_class** out) {
  return guarded([&] {
    if (!tag || !out) return fail(BDISC_E_USAGE, "Parse", "null argument");
    *out = new bdisc_class{SingularityClass::parse(tag)};
    return BDISC_OK;
  });
}

void bdisc_class_free(bdisc_class* cls) { delete cls; }

bdisc_status bdisc_info(const bdisc_class* c, char** json_out) {
  return guarded([&] {
    if (!c || !json_out) return fail(BDISC_E_USAGE, "Parse", "null argument");
    const SingularityClass& cls = c->cls;
    std::vector<Rational> zeros(static_cast<size_t>(cls.mu()));
    std::vector<std::string> vars{"x", "y"};
    for (const auto& n : cls.param_names()) vars.push_back(n);
    // f with symbolic parameters, for display
    MultiPoly f = deformation_polynomial(cls, Parameter{zeros}).with_vars(vars);
    const auto names = cls.param_names();
    for (int i = 0; i < cls.mu(); ++i) {
      const auto& n = names[static_cast<size_t>(i)];
      MultiPoly mono = MultiPoly::variable(vars, n);
      if (cls.family() == Family::F4) {
        if (i == 0 || i == 2) mono = mono * MultiPoly::variable(vars, "x");
        if (i == 1 || i == 2) mono = mono * MultiPoly::variable(vars, "y");
      } else {
        const char* v = cls.family() == Family::B ? "x" : "y";
        mono = mono * MultiPoly::variable(vars, v).pow(static_cast<unsigned>(cls.mu() - 1 - i));
      }
      f += mono;
    }
    const auto [ordinary, boundary] = cls.decomposition();
    Json j;
    j["class"] = cls.tag();
    j["family"] = family_name(cls.family());
    j["mu"] = cls.mu();
    j["k"] = cls.k();
    j["sign"] = cls.sign();
    j["normal_form"] = cls.normal_form();
    j["parameters"] = names;
    j["deformation"] = f.to_string();
    j["expected_components"] = cls.expected_component_count();
    j["asymptotic_sectors"] = cls.asymptotic_sector_count();
    j["decomposition"] = {ordinary, boundary};
    *json_out = dup(j.dump(2));
    return BDISC_OK;
  });
}

bdisc_status bdisc_classify(const bdisc_class* c, const char* const* params, size_t n, char** json_out) {
  return guarded([&] {
    if (!c || !json_out) return fail(BDISC_E_USAGE, "Parse", "null argument");
    const SingularityClass& cls = c->cls;
    const Parameter lambda = read_parameter(cls, params, n);
    const Membership m = discriminant_membership(cls, lambda);
    Json j;
    j["membership"] = membership_name(m);
    if (m != Membership::NonSingular) {
      *json_out = dup(j.dump());
      return fail(BDISC_E_DOMAIN, "DiscriminantParameter", "parameter lies on the discriminant of " + cls.tag());
    }
    try {
      const LowerSetType t = classify(cls, lambda);
      j["type"] = Json::parse(t.key());
      if (cls.family() == Family::F4) {
        const auto& d = std::get<F4Descriptor>(t.value);
        j["descriptor"] = Json::parse(descriptor_json(d));
        const auto id = F4Catalog::builtin().id_of(f4_type_of(d));
        j["id"] = id ? Json(*id) : Json(nullptr);
      }
    } catch (const Error& e) {
      if (e.code() != Errc::NonGenericConfiguration) throw;
      j["error"] = errc_name(e.code());
      *json_out = dup(j.dump());
      throw;
    }
    *json_out = dup(j.dump());
    return BDISC_OK;
  });
}

bdisc_status bdisc_atlas(const bdisc_class* c, const bdisc_atlas_options* opts, char** json_out) {
  return guarded([&] {
    if (!c || !json_out) return fail(BDISC_E_USAGE, "Parse", "null argument");
    SamplingConfig cfg;
    if (opts) {
      cfg.rng_seed = opts->seed;
      cfg.random_count = opts->samples;
      if (opts->box) cfg.box_radius = parse_rational(opts->box);
      if (opts->grid > 0) cfg.grid_resolution = opts->grid;
      if (opts->denominator_bound > 0) cfg.denominator_bound = opts->denominator_bound;
      if (opts->jobs > 0) cfg.jobs = opts->jobs;
    }
    if (cfg.box_radius <= 0) return fail(BDISC_E_USAGE, "Parse", "box radius must be positive");
    *json_out = dup(to_json(enumerate_components(c->cls, cfg)));
    return BDISC_OK;
  });
}

bdisc_status bdisc_certify(const bdisc_class* c, const char* const* from, const char* const* to, size_t n, int budget,
                           uint64_t seed, char** json_out) {
  return guarded([&] {
    if (!c || !json_out) return fail(BDISC_E_USAGE, "Parse", "null argument");
    const SingularityClass& cls = c->cls;
    const Parameter l0 = read_parameter(cls, from, n), l1 = read_parameter(cls, to, n);
    PathOptions po;
    if (budget > 0) po.budget = budget;
    po.seed = seed;
    if (!same_type(cls, l0, l1)) {
      const SegmentResult r = certify_segment(cls, l0, l1);
      // only reachable with a fold-point endpoint, whose type is undefined
      if (r.ok()) {
        *json_out = dup(to_json(*r.certificate));
        return BDISC_OK;
      }
      *json_out = dup(to_json(*r.witness));
      return fail(BDISC_E_DOMAIN, "TypeMismatch", "endpoints have different types");
    }
    try {
      *json_out = dup(to_json(certify_path(cls, l0, l1, po)));
    } catch (const Error& e) {
      if (e.code() != Errc::NotFound) throw;
      Json j;
      j["certified"] = false;
      j["inconclusive"] = true;
      j["budget"] = po.budget;
      *json_out = dup(j.dump(2));
      throw;
    }
    return BDISC_OK;
  });
}

bdisc_status bdisc_render(const bdisc_class* c, const char* const* params, size_t n, char** svg_out,
                          char** file_name_out) {
  return guarded([&] {
    if (!c || !svg_out) return fail(BDISC_E_USAGE, "Parse", "null argument");
    const Parameter lambda = read_parameter(c->cls, params, n);
    const ZeroSetFigure fig = render_zero_set(c->cls, lambda, fit_viewport(c->cls, lambda));
    *svg_out = dup(fig.svg);
    if (file_name_out) *file_name_out = dup(figure_file_name(c->cls, lambda));
    return BDISC_OK;
  });
}

bdisc_status bdisc_render_slice(const bdisc_class* c, const char* const* fixed_names, const char* const* fixed_values,
                                size_t n_fixed, const char* axis_x, const char* axis_y, char** svg_out) {
  return guarded([&] {
    if (!c || !svg_out || !axis_x || !axis_y) return fail(BDISC_E_USAGE, "Parse", "null argument");
    std::vector<std::pair<std::string, Rational>> fixed;
    for (size_t i = 0; i < n_fixed; ++i) fixed.emplace_back(fixed_names[i], parse_rational(fixed_values[i]));
    Viewport vp;
    vp.x_min = vp.y_min = -4;
    vp.x_max = vp.y_max = 4;
    *svg_out = dup(render_parameter_slice(c->cls, fixed, {axis_x, axis_y}, vp).svg);
    return BDISC_OK;
  });
}

bdisc_status bdisc_eliminant(char** json_out) {
  return guarded([&] {
    if (!json_out) return fail(BDISC_E_USAGE, "Parse", "null argument");
    const MultiPoly& d0 = f4_sigma0_eliminant();
    Json j;
    j["variables"] = d0.vars();
    j["sigma0"] = d0.to_string();
    j["sigma0_terms"] = d0.terms().size();
    j["sigma0_total_degree"] = d0.total_degree();
    j["sigma1"] = f4_sigma1_polynomial().to_string();
    *json_out = dup(j.dump(2));
    return BDISC_OK;
  });
}

const char* bdisc_last_error(void) { return last_error.c_str(); }
const char* bdisc_last_error_kind(void) { return last_kind.c_str(); }

void bdisc_string_free(char* s) { std::free(s); }

}  // extern "C"

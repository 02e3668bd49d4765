// Licensed under the Apache License 2.0 (see LICENSE file).

#include <json.hpp>

#include "bdisc/atlas.hpp"

namespace bdisc {

namespace {

using Json = nlohmann::ordered_json;

Json parameter_json(const Parameter& p) { return Json(parameter_strings(p)); }

Json interval_json(const Interval& iv) {
  Json j;
  j["lo"] = iv.lo() ? Json(exact_string(*iv.lo())) : Json(nullptr);
  j["lo_closed"] = iv.lo_closed();
  j["hi"] = iv.hi() ? Json(exact_string(*iv.hi())) : Json(nullptr);
  j["hi_closed"] = iv.hi_closed();
  return j;
}

}  // namespace

std::string to_json(const AtlasReport& report) {
  const TableComparison cmp = verify_against_table1(report);
  Json j;
  j["class"] = report.cls.tag();
  j["samples"] = report.sample_count;
  j["config"] = {{"box_radius", exact_string(report.config.box_radius)},
                 {"random_count", report.config.random_count},
                 {"grid_resolution", report.config.grid_resolution},
                 {"rng_seed", report.config.rng_seed},
                 {"denominator_bound", report.config.denominator_bound}};
  j["expected"] = report.expected;
  j["realized_count"] = report.realized.size();
  j["match"] = report.match;
  // keyed by the compact type text, e.g. {"p":1,"q":1}
  Json realized = Json::object();
  for (const auto& r : report.realized) {
    Json t;
    if (report.cls.family() == Family::F4) {
      t["id"] = r.id;
      t["descriptor"] = Json::parse(descriptor_json(std::get<F4Descriptor>(r.type.value)));
    }
    t["count"] = r.count;
    t["origin"] = r.origin;
    t["representative"] = parameter_json(r.representative);
    if (report.cls.family() == Family::F4)
      t["slice_representative"] = r.slice_representative ? parameter_json(*r.slice_representative) : Json(nullptr);
    realized[r.key] = std::move(t);
  }
  j["realized"] = std::move(realized);
  Json rej = Json::object();
  for (const auto& [k, n] : report.rejections) rej[k] = n;
  j["rejections"] = std::move(rej);
  Json missing = Json::array(), extra = Json::array();
  for (const auto& k : cmp.missing) missing.push_back(Json::parse(k));
  for (const auto& k : cmp.extra) extra.push_back(Json::parse(k));
  j["comparison"] = {{"pass", cmp.pass}, {"missing", missing}, {"extra", extra}};
  return j.dump(2);
}

std::string to_json(const PathCertificate& cert) {
  Json j;
  j["class"] = cert.cls.tag();
  j["certified"] = true;
  Json wps = Json::array();
  for (const auto& w : cert.waypoints) wps.push_back(parameter_json(w));
  j["waypoints"] = std::move(wps);
  Json segs = Json::array();
  for (size_t i = 0; i < cert.segments.size(); ++i) {
    segs.push_back({{"from", i},
                    {"to", i + 1},
                    {"polynomial", cert.segments[i].restricted.to_string()},
                    {"sturm_count_0_1", cert.segments[i].roots_in_unit_interval}});
  }
  j["segments"] = std::move(segs);
  return j.dump(2);
}

std::string to_json(const CrossingWitness& w) {
  Json j;
  j["certified"] = false;
  j["from"] = parameter_json(w.from);
  j["to"] = parameter_json(w.to);
  j["polynomial"] = w.restricted.to_string();
  j["root"] = interval_json(w.root);
  return j.dump(2);
}

}  // namespace bdisc

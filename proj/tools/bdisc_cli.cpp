// Licensed under the Apache License 2.0 (see LICENSE file).

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <regex>
#include <string>
#include <vector>

#include "bdisc/bdisc.h"

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { bdisc_string_free(p); }
};

struct ClassHandle {
  bdisc_class* p = nullptr;
  ~ClassHandle() { bdisc_class_free(p); }
};

int report_error(int status) {
  std::cerr << "error: " << bdisc_last_error() << "\n";
  return status;
}

int emit(const char* payload, const std::string& out_path) {
  if (!payload) return 0;
  if (out_path.empty()) {
    std::cout << payload;
    const std::string s(payload);
    if (!s.empty() && s.back() != '\n') std::cout << "\n";
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  f << payload;
  if (!f) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  return 0;
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

// "-B5" would parse as a short option; "B5-" names the same class.
std::vector<std::string> normalize_class_tags(int argc, char** argv) {
  static const std::regex leading_sign("^-([BbCc][0-9]+)$");
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.push_back(std::regex_replace(argv[i], leading_sign, "$1-"));
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discriminants of simple real boundary singularities (B, C, F4)", "bdisc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string cls_tag, out_path;
  std::vector<std::string> params;

  auto* info = app.add_subcommand("info", "Class metadata: normal form, deformation, component count");
  info->add_option("class", cls_tag, "Class tag, e.g. B+4, -B5, C5+, F4+")->required();

  auto* classify = app.add_subcommand("classify", "Discriminant membership and topological type of a parameter");
  classify->add_option("class", cls_tag, "Class tag")->required();
  classify->add_option("params", params, "Exact rational parameters (p or p/q)")->required();

  std::uint64_t seed = 1, samples = 0;
  std::string box = "5";
  int grid = 3, denominator_bound = 64;
  unsigned jobs = 1;
  auto* atlas = app.add_subcommand("atlas", "Enumerate the realized component types by exact sampling");
  atlas->add_option("class", cls_tag, "Class tag")->required();
  atlas->add_option("--seed", seed, "RNG seed")->capture_default_str();
  atlas->add_option("--samples", samples, "Random samples (0: class default)")->capture_default_str();
  atlas->add_option("--box", box, "Sampling box radius (rational)")->capture_default_str();
  atlas->add_option("--grid", grid, "Grid points per axis")->capture_default_str();
  atlas->add_option("--denominator-bound", denominator_bound, "Largest sample denominator")->capture_default_str();
  atlas->add_option("--jobs", jobs, "Worker threads (results do not depend on it)")->capture_default_str();
  atlas->add_option("--out", out_path, "Write the JSON report to a file");

  int budget = 0;
  std::uint64_t path_seed = 0;
  auto* certify = app.add_subcommand("certify", "Certify a discriminant-free path between two parameters");
  certify->add_option("class", cls_tag, "Class tag")->required();
  certify->add_option("params", params, "Both endpoints, mu literals each")->required();
  certify->add_option("--budget", budget, "Segment checks allowed in the path search (0: default)");
  certify->add_option("--seed", path_seed, "Seed for the subdivision jitter");
  certify->add_option("--out", out_path, "Write the JSON certificate to a file");

  std::vector<std::string> slice, axes;
  std::string out_dir;
  auto* render = app.add_subcommand("render", "SVG of the zero set, or of a parameter slice with --slice");
  render->add_option("class", cls_tag, "Class tag")->required();
  render->add_option("params", params, "Parameters (omit with --slice)");
  render->add_option("--slice", slice, "Fixed parameters, e.g. a=2,c=0")->delimiter(',');
  render->add_option("--axes", axes, "Two free parameters, e.g. b,d")->delimiter(',')->expected(2);
  render->add_option("--out", out_path, "Write the SVG to this file");
  render->add_option("--out-dir", out_dir, "Write the SVG into this directory under its conventional name");

  app.add_subcommand("eliminant", "F4 discriminant polynomials");

  try {
    std::vector<std::string> args = normalize_class_tags(argc, argv);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  Owned payload;
  if (app.got_subcommand("eliminant")) {
    const int st = bdisc_eliminant(&payload.p);
    return st ? report_error(st) : emit(payload.p, out_path);
  }

  ClassHandle cls;
  if (int st = bdisc_class_parse(cls_tag.c_str(), &cls.p)) return report_error(st);

  int st = 0;
  if (app.got_subcommand(info)) {
    st = bdisc_info(cls.p, &payload.p);
  } else if (app.got_subcommand(classify)) {
    const auto cs = c_strings(params);
    st = bdisc_classify(cls.p, cs.data(), cs.size(), &payload.p);
  } else if (app.got_subcommand(atlas)) {
    const bdisc_atlas_options o{seed, samples, box.c_str(), grid, denominator_bound, jobs};
    st = bdisc_atlas(cls.p, &o, &payload.p);
  } else if (app.got_subcommand(certify)) {
    if (params.size() % 2 != 0) {
      std::cerr << "error: certify needs two endpoints with the same number of parameters\n";
      return 1;
    }
    const auto cs = c_strings(params);
    const size_t n = cs.size() / 2;
    st = bdisc_certify(cls.p, cs.data(), cs.data() + n, n, budget, path_seed, &payload.p);
  } else if (app.got_subcommand(render)) {
    if (!axes.empty() || !slice.empty()) {
      if (axes.size() != 2 || !params.empty()) {
        std::cerr << "error: a slice needs --axes with two names and no positional parameters\n";
        return 1;
      }
      std::vector<std::string> names, values;
      for (const auto& kv : slice) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
          std::cerr << "error: --slice entries look like name=value\n";
          return 1;
        }
        names.push_back(kv.substr(0, eq));
        values.push_back(kv.substr(eq + 1));
      }
      const auto cn = c_strings(names), cv = c_strings(values);
      st = bdisc_render_slice(cls.p, cn.data(), cv.data(), cn.size(), axes[0].c_str(), axes[1].c_str(), &payload.p);
    } else {
      const auto cs = c_strings(params);
      Owned name;
      st = bdisc_render(cls.p, cs.data(), cs.size(), &payload.p, &name.p);
      if (st == 0 && !out_dir.empty() && out_path.empty()) out_path = out_dir + "/" + name.p;
      if (st == 0 && !out_path.empty()) {
        const int w = emit(payload.p, out_path);
        if (w == 0) std::cout << out_path << "\n";
        return w;
      }
    }
  }
  if (st != 0) {
    // domain failures can still carry a payload (membership, witness)
    if (payload.p) emit(payload.p, out_path);
    return report_error(st);
  }
  return emit(payload.p, out_path);
}

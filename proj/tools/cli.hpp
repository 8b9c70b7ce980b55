// Copyright 2026 The bilincover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line surface. run_cli is separate from main so tests can drive it
// with in-memory streams.
//
// Exit codes: 0 success, 1 usage, 2 data error, 3 numerical failure.

#pragma once

#include <cmath>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bilincover/cutplane.hpp"
#include "bilincover/hull.hpp"
#include "bilincover/io.hpp"
#include "bilincover/model.hpp"
#include "bilincover/optimize.hpp"
#include "bilincover/separation.hpp"

namespace bilincover::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kNumericalFailure = 3 };

namespace detail {

using json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline GenericInstance load_generic(const std::string& path) {
  InstanceFile f = parse_instance(read_file(path));
  if (auto* g = std::get_if<GenericInstance>(&f)) return std::move(*g);
  throw ParseError("$.kind: this command needs a generic instance");
}

inline Point parse_point(const std::string& text, const Instance& inst) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("--point: malformed JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("--point: expected a flat array [x1,y1,x2,y2,...]");
  std::vector<double> flat;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number())
      throw ParseError("--point[" + std::to_string(i) + "]: expected a number");
    flat.push_back(j[i].get<double>());
  }
  if (flat.size() != 2 * static_cast<std::size_t>(inst.n))
    throw ParseError("--point: expected " + std::to_string(2 * inst.n) + " entries");
  return Point::interleaved(flat);
}

inline json number_json(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(json(bilincover::detail::number(x)));
  return a;
}

inline json cut_json(const Cut& c) {
  return json{{"alpha", number_json(c.alpha)}, {"beta", number_json(c.beta)}, {"rhs", 1},
              {"w", c.w}, {"text", c.to_string()}};
}

inline json point_json(const Point& p) { return number_json(p.flatten()); }

inline int cmd_separate(const std::string& file, const std::string& point_text,
                        const std::string& family, int gamma, std::ostream& out) {
  GenericInstance g = load_generic(file);
  const Point p = parse_point(point_text, g.inst);
  SeparationResult res;
  if (family == "bounded") {
    res = separate_bounded(p, g.inst);
  } else {
    Instance unb = g.inst;
    unb.u.reset();
    res = separate_unbounded(p, unb, gamma);
  }
  json j;
  switch (res.status) {
    case SeparationStatus::kFeasible:
      j["status"] = "feasible";
      break;
    case SeparationStatus::kViolated:
      j["status"] = "violated";
      j["cut"] = cut_json(*res.cut);
      break;
    case SeparationStatus::kBoundViolation:
      j["status"] = "bound_violation";
      j["bound_index"] = res.bound_index;
      break;
  }
  j["violation"] = res.violation;
  j["column_sum"] = res.column_sum;
  out << j.dump() << '\n';
  return kOk;
}

inline int cmd_optimize(const std::string& file, std::ostream& out) {
  GenericInstance g = load_generic(file);
  if (!g.objective) throw ParseError("$.c: optimize needs an objective (c and d)");
  const OptResult res = g.inst.bounded() ? optimize_over_SU(*g.objective, g.inst)
                                         : optimize_over_S(*g.objective, g.inst);
  json j;
  j["status"] = to_string(res.status);
  if (res.status == OptStatus::kUnbounded) {
    j["value"] = nullptr;
  } else {
    j["value"] = bilincover::detail::number(res.value);
  }
  j["solution"] = res.solution ? point_json(*res.solution) : json(nullptr);
  out << j.dump() << '\n';
  return kOk;
}

inline int cmd_hull(const std::string& file, bool facets, bool vertices, std::ostream& out) {
  GenericInstance g = load_generic(file);
  if (!g.inst.bounded()) throw ParseError("$.u: hull output needs bounds u");
  if (vertices) {
    for (const Point& p : enumerate_extreme_points(g.inst)) out << point_json(p).dump() << '\n';
  } else if (facets) {
    for (const Cut& c : enumerate_facets_SL(g.inst)) out << cut_json(c).dump() << '\n';
  } else {
    out << json{{"extreme_points", extreme_point_count(g.inst)},
                {"facets_SL", facet_count(g.inst)}}
               .dump()
        << '\n';
  }
  return kOk;
}

inline int cmd_cutplane(const std::string& file, const std::string& family,
                        int max_iters, const std::string& log_path, std::ostream& out) {
  const CutFamily fam = family == "bounded" ? CutFamily::kBoundedHull : CutFamily::kUnboundedHull;
  CutplaneOptions opt;
  opt.max_iters = max_iters;
  InstanceFile f = parse_instance(read_file(file));
  CutplaneResult res;
  if (auto* g = std::get_if<GenericInstance>(&f)) {
    if (!g->objective) throw ParseError("$.c: cutplane needs an objective (c and d)");
    res = run_cutting_plane(g->inst, *g->objective, fam, opt);
  } else {
    res = run_cutting_plane(std::get<TrimLossInstance>(f), fam, opt);
  }
  if (!log_path.empty()) {
    std::ofstream log(log_path);
    if (!log) throw ParseError(log_path + ": cannot write log");
    write_log_csv(log, res.log);
  }
  out << cutplane_summary(res, fam).dump() << '\n';
  return kOk;
}

inline int cmd_gen(const TrimLossGenParams& params, const std::string& out_path,
                   std::ostream& out) {
  const std::string text = write_instance(gen_trimloss(params));
  if (out_path.empty()) {
    out << text << '\n';
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ParseError(out_path + ": cannot write");
    f << text << '\n';
  }
  return kOk;
}

// Random points scaled to the instance: x_i in [0, u_i] (or [0, 3r]), y_i in
// [0, 2r], with a third of the coordinates snapped to integers or zero.
inline Point random_point(SplitMix64& rng, const Instance& inst) {
  Point p;
  for (int i = 0; i < inst.n; ++i) {
    const double xmax = inst.bounded() ? inst.bound(i) : 3.0 * std::max(1.0, inst.r);
    double x = xmax * rng.uniform01();
    double y = 2.0 * inst.r * rng.uniform01();
    const auto mode = rng.next() % 6;
    if (mode == 0) x = std::floor(x);
    if (mode == 1) y = 0.0;
    if (mode == 2) x = 0.0;
    p.x.push_back(x);
    p.y.push_back(y);
  }
  return p;
}

// Self-test: separation against brute force on random points.
inline int cmd_check(const std::string& file, int points, std::uint64_t seed, std::ostream& out) {
  GenericInstance g = load_generic(file);
  const Instance inst = apply_delta_transform(g.inst).first;
  SplitMix64 rng(seed);
  int disagreements = 0;
  if (inst.bounded()) {
    for (int k = 0; k < points; ++k) {
      const Point p = random_point(rng, inst);
      const SeparationResult s = separate_bounded(p, inst);
      const Membership m = membership(p, inst);
      const bool sep_inside = s.status == SeparationStatus::kFeasible;
      const bool agree = sep_inside == m.inside &&
                         std::abs(s.column_sum - m.lhs) <= 1e-9 * std::max(1.0, std::abs(m.lhs));
      if (!agree) ++disagreements;
    }
  } else {
    const Instance& unb = inst;
    for (int k = 0; k < points; ++k) {
      const Point p = random_point(rng, unb);
      const SeparationResult s = separate_unbounded(p, unb);
      if (s.status != SeparationStatus::kViolated) continue;
      bool ok = s.cut->evaluate(p) < 1.0;
      for (int i = 0; i < unb.n && ok; ++i)
        for (int x = 1; x <= 100 && ok; ++x) {
          Point e;
          e.x.assign(static_cast<std::size_t>(unb.n), 0.0);
          e.y.assign(static_cast<std::size_t>(unb.n), 0.0);
          e.x[static_cast<std::size_t>(i)] = x;
          e.y[static_cast<std::size_t>(i)] = unb.r / x;
          ok = s.cut->evaluate(e) >= 1.0 - 1e-9;
        }
      if (!ok) ++disagreements;
    }
  }
  out << json{{"status", disagreements == 0 ? "ok" : "mismatch"},
              {"points", points},
              {"disagreements", disagreements}}
             .dump()
      << '\n';
  return disagreements == 0 ? kOk : kNumericalFailure;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separation, optimization and cutting planes for bilinear covering sets",
               "bilincover"};
  app.require_subcommand(1);

  std::string file, point, family = "bounded", log_path, out_path;
  int gamma = 1, max_iters = 800, points = 1000;
  std::uint64_t check_seed = 1;
  bool facets = false, vertices = false;
  TrimLossGenParams gen;

  const auto families = CLI::IsMember({"bounded", "unbounded"});

  auto* sep = app.add_subcommand("separate", "Separate a point from the hull");
  sep->add_option("file", file, "Instance JSON")->required();
  sep->add_option("--point", point, "Flat array [x1,y1,x2,y2,...]")->required();
  sep->add_option("--family", family, "bounded or unbounded")->check(families);
  sep->add_option("--gamma", gamma, "Offset for the unbounded tail index")
      ->check(CLI::PositiveNumber);

  auto* opt = app.add_subcommand("optimize", "Minimize c'x + d'y over the set");
  opt->add_option("file", file, "Instance JSON")->required();

  auto* hull = app.add_subcommand("hull", "Print hull descriptions, one JSON row per line");
  hull->add_option("file", file, "Instance JSON")->required();
  auto* f_flag = hull->add_flag("--facets", facets, "Facets of the relaxed hull");
  hull->add_flag("--vertices", vertices, "Extreme points")->excludes(f_flag);

  auto* cp = app.add_subcommand("cutplane", "Run the cutting-plane loop");
  cp->add_option("file", file, "Instance JSON")->required();
  cp->add_option("--family", family, "bounded or unbounded")->required()->check(families);
  cp->add_option("--max-iters", max_iters, "LP solve cap")->check(CLI::PositiveNumber);
  cp->add_option("--log", log_path, "Iteration log CSV");

  auto* gn = app.add_subcommand("gen", "Generate a random trim-loss instance");
  gn->add_option("--seed", gen.seed);
  gn->add_option("--finals", gen.n_finals)->check(CLI::PositiveNumber);
  gn->add_option("--patterns", gen.n_patterns)->check(CLI::PositiveNumber);
  gn->add_option("--length", gen.stock_length);
  gn->add_option("--frac-lo", gen.frac_lo);
  gn->add_option("--frac-hi", gen.frac_hi);
  gn->add_option("--demand-mean", gen.demand_mean);
  gn->add_option("-o,--out", out_path, "Output file (default stdout)");

  auto* ck = app.add_subcommand("check", "Compare separation against brute force");
  ck->add_option("file", file, "Instance JSON")->required();
  ck->add_option("--points", points)->check(CLI::PositiveNumber);
  ck->add_option("--seed", check_seed);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (sep->parsed()) return detail::cmd_separate(file, point, family, gamma, out);
    if (opt->parsed()) return detail::cmd_optimize(file, out);
    if (hull->parsed()) return detail::cmd_hull(file, facets, vertices, out);
    if (cp->parsed()) return detail::cmd_cutplane(file, family, max_iters, log_path, out);
    if (gn->parsed()) return detail::cmd_gen(gen, out_path, out);
    if (ck->parsed()) return detail::cmd_check(file, points, check_seed, out);
  } catch (const CutplaneError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsage;
}

}  // namespace bilincover::cli

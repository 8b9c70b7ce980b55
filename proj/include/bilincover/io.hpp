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

// Instance files (JSON), the trim-loss instance generator and the CSV form
// of cutting-plane iteration logs.
//
// Generic instance:
//   {"kind":"generic","n":2,"r":20,"u":[5,6],"delta":[1,1],"c":[-1,-2],"d":[10,12]}
// Trim-loss instance:
//   {"kind":"trimloss","L":1000,"lengths":[...],"demands":[...],"n_patterns":10}

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "bilincover/cutplane.hpp"
#include "bilincover/model.hpp"

namespace bilincover {

/// Malformed input files; the message starts with a JSON path.
class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

struct GenericInstance {
  Instance inst;
  std::optional<LinearObjective> objective;
};

using InstanceFile = std::variant<GenericInstance, TrimLossInstance>;

namespace detail {

using nlohmann::json;

[[noreturn]] inline void fail(const std::string& path, const std::string& msg) {
  throw ParseError(path + ": " + msg);
}

inline void reject_unknown(const json& j, std::initializer_list<const char*> keys) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) fail("$." + it.key(), "unknown key");
  }
}

inline const json& required(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("$.") + key, "missing required key");
  return *it;
}

inline double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(path, "expected a finite number");
  return d;
}

inline std::int64_t as_integer(const json& v, const std::string& path) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::isfinite(d) && d == std::floor(d) && std::abs(d) < 9e15)
      return static_cast<std::int64_t>(d);
  }
  fail(path, "expected an integer");
}

inline std::vector<double> number_array(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(as_number(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

// Integral values are written as JSON integers so output has no ".0".
inline json number(double v) {
  if (v == std::floor(v) && std::abs(v) < 9e15) return static_cast<std::int64_t>(v);
  return v;
}

inline json number_array(const std::vector<double>& v) {
  json a = json::array();
  for (double d : v) a.push_back(number(d));
  return a;
}

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail("$", std::string("malformed JSON: ") + e.what());
  }
}

inline void wrap_invariant(const auto& fn) {
  try {
    fn();
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidInput& e) {
    fail("$", e.what());
  }
}

}  // namespace detail

inline InstanceFile parse_instance(std::string_view text) {
  using detail::fail;
  const detail::json j = detail::parse_json(text);
  if (!j.is_object()) fail("$", "expected an object");
  const detail::json& kind = detail::required(j, "kind");
  if (!kind.is_string()) fail("$.kind", "expected a string");

  if (kind == "generic") {
    detail::reject_unknown(j, {"kind", "n", "r", "u", "delta", "c", "d"});
    GenericInstance g;
    const std::int64_t n = detail::as_integer(detail::required(j, "n"), "$.n");
    if (n < 1 || n > 1'000'000) fail("$.n", "must be a positive count");
    g.inst.n = static_cast<int>(n);
    g.inst.r = detail::as_number(detail::required(j, "r"), "$.r");
    if (auto it = j.find("u"); it != j.end()) {
      if (!it->is_array()) fail("$.u", "expected an array");
      std::vector<int> u;
      for (std::size_t i = 0; i < it->size(); ++i) {
        const std::string path = "$.u[" + std::to_string(i) + "]";
        const std::int64_t v = detail::as_integer((*it)[i], path);
        if (v < 1 || v > 1'000'000'000) fail(path, "u_i >= 1 required");
        u.push_back(static_cast<int>(v));
      }
      g.inst.u = std::move(u);
    }
    if (auto it = j.find("delta"); it != j.end())
      g.inst.delta = detail::number_array(*it, "$.delta");
    const bool has_c = j.contains("c"), has_d = j.contains("d");
    if (has_c != has_d) fail(has_c ? "$.d" : "$.c", "c and d must be given together");
    if (has_c)
      g.objective = LinearObjective{detail::number_array(j["c"], "$.c"),
                                    detail::number_array(j["d"], "$.d")};
    detail::wrap_invariant([&] {
      g.inst = validate_instance(g.inst);
      if (g.objective) check_objective(*g.objective, g.inst);
    });
    return g;
  }
  if (kind == "trimloss") {
    detail::reject_unknown(j, {"kind", "L", "lengths", "demands", "n_patterns"});
    TrimLossInstance t;
    t.stock_length = detail::as_number(detail::required(j, "L"), "$.L");
    t.lengths = detail::number_array(detail::required(j, "lengths"), "$.lengths");
    t.demands = detail::number_array(detail::required(j, "demands"), "$.demands");
    const std::int64_t np =
        detail::as_integer(detail::required(j, "n_patterns"), "$.n_patterns");
    if (np < 1 || np > 1'000'000) fail("$.n_patterns", "must be a positive count");
    t.n_patterns = static_cast<int>(np);
    detail::wrap_invariant([&] { t = validate_trimloss(t); });
    return t;
  }
  fail("$.kind", "expected \"generic\" or \"trimloss\"");
}

/// Canonical form: sorted keys, integral numbers without a fraction, compact.
inline std::string write_instance(const InstanceFile& file) {
  detail::json j;
  if (const auto* g = std::get_if<GenericInstance>(&file)) {
    j["kind"] = "generic";
    j["n"] = g->inst.n;
    j["r"] = detail::number(g->inst.r);
    if (g->inst.u) j["u"] = *g->inst.u;
    if (!g->inst.delta.empty()) j["delta"] = detail::number_array(g->inst.delta);
    if (g->objective) {
      j["c"] = detail::number_array(g->objective->c);
      j["d"] = detail::number_array(g->objective->d);
    }
  } else {
    const auto& t = std::get<TrimLossInstance>(file);
    j["kind"] = "trimloss";
    j["L"] = detail::number(t.stock_length);
    j["lengths"] = detail::number_array(t.lengths);
    j["demands"] = detail::number_array(t.demands);
    j["n_patterns"] = t.n_patterns;
  }
  return j.dump();
}

/// splitmix64; constants from Steele, Lea and Flood.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  /// Uniform integer in [lo, hi] by modulo reduction.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }
  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

struct TrimLossGenParams {
  std::uint64_t seed = 1;
  int n_finals = 10;
  int n_patterns = 10;
  double stock_length = 1000.0;
  double frac_lo = 0.01;
  double frac_hi = 0.2;
  double demand_mean = 10.0;
};

/// CUTGEN-style random instance: lengths are uniform integers in
/// [frac_lo L, frac_hi L], demands uniform integers in [1, 2 mean - 1].
inline TrimLossInstance gen_trimloss(const TrimLossGenParams& g) {
  if (!(g.frac_lo > 0.0 && g.frac_lo < g.frac_hi && g.frac_hi <= 1.0))
    throw InvalidInput("length fractions must satisfy 0 < lo < hi <= 1");
  if (g.n_finals < 1 || g.n_patterns < 1)
    throw InvalidInput("counts must be positive");
  if (!(g.stock_length > 0.0)) throw InvalidInput("L must be positive");
  if (!(g.demand_mean >= 1.0)) throw InvalidInput("demand mean must be at least 1");
  const auto lo = static_cast<std::int64_t>(std::ceil(g.frac_lo * g.stock_length));
  const auto hi = static_cast<std::int64_t>(std::floor(g.frac_hi * g.stock_length));
  if (lo > hi || lo < 1) throw InvalidInput("length range contains no positive integer");
  const auto dmax = static_cast<std::int64_t>(std::llround(2.0 * g.demand_mean - 1.0));

  SplitMix64 rng(g.seed);
  TrimLossInstance t;
  t.stock_length = g.stock_length;
  t.n_patterns = g.n_patterns;
  for (int j = 0; j < g.n_finals; ++j)
    t.lengths.push_back(static_cast<double>(rng.uniform_int(lo, hi)));
  for (int j = 0; j < g.n_finals; ++j)
    t.demands.push_back(static_cast<double>(rng.uniform_int(1, std::max<std::int64_t>(1, dmax))));
  return validate_trimloss(t);
}

inline constexpr const char* kLogCsvHeader = "iter,lb,cuts_added,cuts_total,ms";

inline void write_log_csv(std::ostream& os, const IterationLog& log) {
  os << kLogCsvHeader << '\n';
  char buf[160];
  for (const IterationRecord& r : log.records) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%d,%d,%.17g\n", r.iter, r.lb,
                  r.cuts_added, r.cuts_total, r.ms);
    os << buf;
  }
}

inline std::vector<IterationRecord> parse_log_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kLogCsvHeader)
    throw ParseError("csv: missing header '" + std::string(kLogCsvHeader) + "'");
  std::vector<IterationRecord> out;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    IterationRecord r;
    if (std::sscanf(line.c_str(), "%d,%lf,%d,%d,%lf", &r.iter, &r.lb, &r.cuts_added,
                    &r.cuts_total, &r.ms) != 5)
      throw ParseError("csv line " + std::to_string(lineno) + ": malformed record");
    out.push_back(r);
  }
  return out;
}

/// Summary of a cutting-plane run. `value` and `lower_bound` both carry the
/// last LP value; `solution` is the last LP point.
inline nlohmann::ordered_json cutplane_summary(const CutplaneResult& res, CutFamily family) {
  nlohmann::ordered_json j;
  j["status"] = res.log.terminated ? "terminated" : "iteration_limit";
  j["value"] = detail::number(res.log.final_lower_bound);
  j["solution"] = detail::number_array(res.final_lp.x);
  j["iterations"] = res.log.lp_solves();
  j["terminated"] = res.log.terminated;
  j["lower_bound"] = detail::number(res.log.final_lower_bound);
  j["family"] = to_string(family);
  j["cuts"] = res.cuts.size();
  return j;
}

}  // namespace bilincover

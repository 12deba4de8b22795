#pragma once

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "liework/lie_algebra.hpp"
#include "liework/mat.hpp"
#include "liework/sampling.hpp"
#include "liework/subspace.hpp"
#include "liework/version.hpp"

namespace liework {

using Json = nlohmann::json;

inline Json json_rat(const Rat& r) { return to_string(r); }

inline Json json_vec(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline Json json_mat(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(json_vec(m.row(i)));
  return rows;
}

/// Subspaces render by their canonical RREF rows, so equal spaces diff equal.
inline Json json_subspace(const Subspace& s) {
  return Json{{"ambient", s.ambient_dim()}, {"dim", s.dim()}, {"basis", json_mat(s.basis())}};
}

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string summary;
  Json details = Json::object();
};

struct Report {
  std::string tool = "liework";
  std::string version = kVersion;
  std::string input_digest;
  std::vector<CheckResult> checks;
  long long wall_ms = 0;
};

/// Deterministic JSON: the "report" object and its digest never depend on
/// timing; wall_ms sits outside the digest-covered section.
inline Json report_to_json(const Report& r) {
  std::vector<const CheckResult*> sorted;
  for (const auto& c : r.checks) sorted.push_back(&c);
  std::sort(sorted.begin(), sorted.end(),
            [](const CheckResult* a, const CheckResult* b) { return a->name < b->name; });
  Json checks = Json::array();
  for (const auto* c : sorted)
    checks.push_back(Json{{"details", c->details},
                          {"name", c->name},
                          {"pass", c->pass},
                          {"summary", c->summary}});
  Json section{{"checks", checks},
               {"input_digest", r.input_digest},
               {"tool", r.tool},
               {"version", r.version}};
  return Json{{"digest", "fnv1a64:" + fnv1a64_hex(section.dump())},
              {"report", section},
              {"wall_ms", r.wall_ms}};
}

inline std::string report_to_text(const Report& r) {
  std::vector<const CheckResult*> sorted;
  for (const auto& c : r.checks) sorted.push_back(&c);
  std::sort(sorted.begin(), sorted.end(),
            [](const CheckResult* a, const CheckResult* b) { return a->name < b->name; });
  std::string out;
  std::size_t passed = 0;
  for (const auto* c : sorted) {
    out += c->pass ? "[PASS] " : "[FAIL] ";
    out += c->name;
    if (!c->summary.empty()) {
      out += ": ";
      out += c->summary;
    }
    out += '\n';
    if (c->pass) ++passed;
  }
  out += std::to_string(passed) + "/" + std::to_string(sorted.size()) + " checks passed\n";
  return out;
}

inline bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace liework

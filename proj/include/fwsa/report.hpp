#pragma once

// JSON forms of run configurations and reports.  A report is
//   {"config": RunConfig, "payload": ..., "envelope": {...}}
// where only the envelope (tool version, timing) may differ between
// identical runs.

#include "fwsa/generation.hpp"
#include "fwsa/hilbert.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace fwsa {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
  std::string command;
  std::string group = "1";
  std::string module;
  std::string object;  // dim, restrict-witness
  std::string src;     // hom, act
  std::string dst;
  std::string map;     // act
  std::string pointing;
  std::string mode;    // restrict-witness
  bool tilde = false;
  bool list = false;
  bool weighted = false;
  bool fit = false;
  bool backtrack = false;
  std::size_t size = 0;
  std::size_t claim = 0;
  std::size_t max_size = 0;
  std::size_t imax = 0;
  std::size_t gmax = 0;
  std::size_t guard = 3;
  std::size_t max_multiplicity = 3;
  std::uint32_t jmax = 0;
  std::string format = "json";
  std::string output;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

inline Json to_json(const RunConfig& c) {
  return Json{{"command", c.command},   {"group", c.group},
              {"module", c.module},     {"object", c.object},
              {"src", c.src},           {"dst", c.dst},
              {"map", c.map},           {"pointing", c.pointing},
              {"mode", c.mode},         {"tilde", c.tilde},
              {"list", c.list},         {"weighted", c.weighted},
              {"fit", c.fit},           {"backtrack", c.backtrack},
              {"size", c.size},         {"claim", c.claim},
              {"max_size", c.max_size}, {"imax", c.imax},
              {"gmax", c.gmax},         {"guard", c.guard},
              {"max_multiplicity", c.max_multiplicity},
              {"jmax", c.jmax},         {"format", c.format},
              {"output", c.output}};
}

inline RunConfig run_config_from_json(const Json& j) {
  RunConfig c;
  c.command = j.at("command").get<std::string>();
  c.group = j.at("group").get<std::string>();
  c.module = j.at("module").get<std::string>();
  c.object = j.at("object").get<std::string>();
  c.src = j.at("src").get<std::string>();
  c.dst = j.at("dst").get<std::string>();
  c.map = j.at("map").get<std::string>();
  c.pointing = j.at("pointing").get<std::string>();
  c.mode = j.at("mode").get<std::string>();
  c.tilde = j.at("tilde").get<bool>();
  c.list = j.at("list").get<bool>();
  c.weighted = j.at("weighted").get<bool>();
  c.fit = j.at("fit").get<bool>();
  c.backtrack = j.at("backtrack").get<bool>();
  c.size = j.at("size").get<std::size_t>();
  c.claim = j.at("claim").get<std::size_t>();
  c.max_size = j.at("max_size").get<std::size_t>();
  c.imax = j.at("imax").get<std::size_t>();
  c.gmax = j.at("gmax").get<std::size_t>();
  c.guard = j.at("guard").get<std::size_t>();
  c.max_multiplicity = j.at("max_multiplicity").get<std::size_t>();
  c.jmax = j.at("jmax").get<std::uint32_t>();
  c.format = j.at("format").get<std::string>();
  c.output = j.at("output").get<std::string>();
  return c;
}

inline Json multidegree_json(const FiniteAbelianGroup& group, const LabeledSet& x) {
  return format_multidegree(x.multidegree(group));
}

inline Json to_json(const FiniteAbelianGroup& group, const ObjectRecord& r) {
  return Json{{"object", format_labels(group, r.object)},
              {"multidegree", multidegree_json(group, r.object)},
              {"size", r.object.size()},
              {"dim", r.dim},
              {"rank", r.rank},
              {"coker_dim", r.coker},
              {"pass", r.pass}};
}

inline Json to_json(const FiniteAbelianGroup& group, const GenerationReport& r) {
  Json recs = Json::array();
  Json failing = Json::array();
  for (const auto& rec : r.records) {
    recs.push_back(to_json(group, rec));
    if (!rec.pass) failing.push_back(to_json(group, rec));
  }
  return Json{{"module", r.module},         {"claim", r.claim},   {"truncation", r.truncation},
              {"result", r.pass ? "PASS" : "FAIL"}, {"failing", failing}, {"records", recs}};
}

inline Json to_json(const FiniteAbelianGroup& group, const GenerationProfile& p) {
  Json recs = Json::array();
  for (const auto& rec : p.records) {
    Json j = to_json(group, rec);
    j.erase("pass");
    j["new_generators"] = rec.coker;
    recs.push_back(std::move(j));
  }
  const auto d = p.max_degree();
  return Json{{"module", p.module},
              {"truncation", p.truncation},
              {"max_degree", d ? Json(*d) : Json(nullptr)},
              {"records", recs}};
}

inline Json to_json(const FiniteAbelianGroup& group, const FactorCheckReport& r) {
  Json recs = Json::array();
  for (const auto& rec : r.records) {
    recs.push_back(Json{{"object", format_labels(group, rec.object)},
                        {"domain_dim", rec.domain_dim},
                        {"rank_q", rec.rank_q},
                        {"rank_stacked", rec.rank_stacked},
                        {"pass", rec.pass}});
  }
  return Json{{"truncation", r.truncation}, {"result", r.pass ? "PASS" : "FAIL"}, {"records", recs}};
}

inline Json to_json(const FiniteAbelianGroup& group, const WitnessReport& w) {
  Json covs = Json::array();
  for (const auto& c : w.coverings) {
    Json recs = Json::array();
    for (const auto& r : c.records) {
      recs.push_back(Json{{"object", format_labels(group, r.object)},
                          {"dim", r.dim},
                          {"rank", r.rank},
                          {"pass", r.pass}});
    }
    covs.push_back(Json{{"generator", format_labels(group, c.generator)},
                        {"category", to_string(c.category)},
                        {"family_size", c.family_size},
                        {"max_cover", c.max_cover},
                        {"result", c.pass ? "PASS" : "FAIL"},
                        {"records", recs}});
  }
  return Json{{"mode", to_string(w.mode)},
              {"generator", format_labels(group, w.generator)},
              {"truncation", w.truncation},
              {"claimed_bound", w.claimed_bound},
              {"certified_degree", w.certified_degree},
              {"profiled_module", w.profiled_module},
              {"profile_max_degree", w.profile_max_degree ? Json(*w.profile_max_degree) : Json(nullptr)},
              {"result", w.pass ? "PASS" : "FAIL"},
              {"coverings", covs}};
}

inline Json to_json(const BoundTable& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i <= t.imax; ++i) {
    for (std::size_t g = 0; g <= t.gmax; ++g) {
      rows.push_back(Json{{"i", i}, {"g", g}, {"f", t.f[i][g]}, {"bound", g + 5 * i}});
    }
  }
  Json viol = Json::array();
  for (const auto& [i, g] : t.violations) viol.push_back(Json{{"i", i}, {"g", g}});
  return Json{{"imax", t.imax}, {"gmax", t.gmax}, {"result", t.pass ? "PASS" : "FAIL"},
              {"violations", viol}, {"table", rows}};
}

inline Json to_json(const RationalSeries& s) {
  Json c = Json::object();
  for (const auto& [f, v] : s.coeffs) c[format_multidegree(f)] = v.to_string();
  return Json{{"truncation", s.truncation}, {"weighted", s.weighted}, {"coefficients", c}};
}

inline Json to_json(const FiniteAbelianGroup& group, const FitResult& r) {
  if (!r.fit) {
    Json fs = Json::array();
    for (const auto& f : r.factors) fs.push_back(format_factor(group, f));
    return Json{{"found", false}, {"factors_tried", fs}, {"residual", to_json(r.residual)}};
  }
  Json fs = Json::array();
  for (const auto& f : r.fit->factors) {
    fs.push_back(Json{{"variable", group.format(f.variable)}, {"c", f.c.to_string()},
                      {"factor", format_factor(group, f)}});
  }
  Json num = Json::object();
  for (const auto& [f, v] : r.fit->numerator.coeffs) num[format_multidegree(f)] = v.to_string();
  return Json{{"found", true},
              {"numerator", num},
              {"numerator_degree", r.fit->numerator_degree},
              {"denominator", fs},
              {"guard_verified", r.fit->guard_verified}};
}

inline Json make_report(const RunConfig& c, Json payload, double elapsed_ms) {
  return Json{{"config", to_json(c)},
              {"payload", std::move(payload)},
              {"envelope", Json{{"tool", "fwsa"}, {"version", kToolVersion}, {"elapsed_ms", elapsed_ms}}}};
}

}  // namespace fwsa

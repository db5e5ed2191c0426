#pragma once

#include <json.hpp>

#include "clp_pipeline.hpp"
#include "extremal_search.hpp"
#include "family_io.hpp"
#include "poly_io.hpp"
#include "theorem_bounds.hpp"

namespace vcdelta {

inline constexpr const char* kVersion = "0.1.0";

inline nlohmann::json family_json(const SetFamily& f) {
  nlohmann::json sets = nlohmann::json::array();
  for (Mask m : f.members) sets.push_back(format_set(m));
  return {{"n", f.n}, {"size", f.size()}, {"sets", sets}};
}

inline nlohmann::json bound_report_json(const BoundReport& r) {
  return {{"theorem", theorem_name(r.theorem)},
          {"n", r.n},
          {"d", r.d},
          {"r", r.r},
          {"family_size", r.family_size},
          {"bound", r.bound},
          {"hypothesis_ok", r.hypothesis_ok},
          {"pass", r.pass},
          {"witness", format_set(r.witness)}};
}

inline nlohmann::json exhaustive_json(const ExhaustiveSummary& s) {
  nlohmann::json bad = nlohmann::json::array();
  for (const SetFamily& f : s.violating) bad.push_back(family_json(f));
  return {{"theorem", theorem_name(s.theorem)},
          {"n", s.n},
          {"k", s.k},
          {"families_checked", s.families_checked},
          {"hypothesis_met", s.hypothesis_met},
          {"violations", s.violations},
          {"max_ratio", s.max_ratio},
          {"worst_family", family_json(s.worst)},
          {"violating_families", bad}};
}

inline nlohmann::json certificate_json(const RankCertificate& c) {
  nlohmann::json gx = nlohmann::json::array();
  for (const auto& [key, poly] : c.x_groups)
    gx.push_back({{"key", format_monomial(key)}, {"poly", format_poly(poly)}});
  nlohmann::json gy = nlohmann::json::array();
  for (const auto& [key, poly] : c.y_groups)
    gy.push_back({{"key", format_monomial(key)}, {"poly", format_poly(poly)}});
  return {{"n", c.n},
          {"k", c.k},
          {"d", c.d},
          {"group_count", c.group_count()},
          {"x_groups", gx},
          {"y_groups", gy},
          {"reduced_terms", c.reduced.support.size()},
          {"reduced", format_poly(c.reduced)}};
}

inline nlohmann::json uniclp_json(const UniClpReport& r,
                                  bool include_certificate = false) {
  nlohmann::json j = {{"n", r.n},
                      {"d", r.d},
                      {"k", r.k ? nlohmann::json(*r.k) : nlohmann::json()},
                      {"family_size", r.family_size},
                      {"degree_ok", r.degree_ok},
                      {"diagonal_nonzero", r.diagonal_nonzero},
                      {"offdiagonal_zero", r.offdiagonal_zero},
                      {"gram_rank", r.gram_rank},
                      {"rank_equals_size", r.rank_equals_size},
                      {"bound", r.bound},
                      {"size_within_bound", r.size_within_bound},
                      {"group_count", r.certificate
                                          ? nlohmann::json(r.certificate->group_count())
                                          : nlohmann::json()},
                      {"certificate_replay_ok", r.certificate_replay_ok},
                      {"certificate_keys_ok", r.certificate_keys_ok},
                      {"group_count_ok", r.group_count_ok},
                      {"hypotheses_ok", r.hypotheses_ok()},
                      {"pass", r.pass()}};
  if (include_certificate && r.certificate)
    j["certificate"] = certificate_json(*r.certificate);
  return j;
}

inline nlohmann::json clp_lemma_json(const ClpLemmaReport& r) {
  return {{"n", r.n},
          {"d", r.d},
          {"set_size", r.set_size},
          {"degree_ok", r.degree_ok},
          {"hypothesis_holds", r.hypothesis_holds},
          {"p_at_zero", r.p_at_zero},
          {"bound", r.bound},
          {"size_within_bound", r.size_within_bound},
          {"consistent", r.consistent()}};
}

inline nlohmann::json search_json(const SearchState& s) {
  nlohmann::json hist = nlohmann::json::array();
  for (const BestRecord& rec : s.history)
    hist.push_back({{"move", rec.move}, {"size", rec.size}});
  return {{"n", s.n},
          {"k", s.k},
          {"d", s.d},
          {"r", s.r},
          {"seed", s.seed},
          {"budget", s.budget},
          {"moves_used", s.moves_used},
          {"stall_limit", s.strategy.stall_limit},
          {"max_remove", s.strategy.max_remove},
          {"temperature", s.strategy.temperature},
          {"best_size", s.best_size},
          {"main_bound", s.main_bound},
          {"conjecture_bound", s.conjecture_bound},
          {"main_bound_respected", s.main_bound_respected},
          {"conjecture_exceeded", s.conjecture_exceeded},
          {"records_verified", s.records_verified},
          {"history", hist},
          {"best_family", family_json(s.best)}};
}

// common envelope: every machine-readable report names the tool, version,
// subcommand and full parameter set, so runs can be reproduced
inline nlohmann::json report_envelope(const std::string& subcommand,
                                      nlohmann::json parameters,
                                      nlohmann::json result, bool pass) {
  return {{"tool", "vcdelta"},
          {"version", kVersion},
          {"subcommand", subcommand},
          {"parameters", std::move(parameters)},
          {"result", std::move(result)},
          {"pass", pass}};
}

}  // namespace vcdelta

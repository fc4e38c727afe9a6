#pragma once

#include <json.hpp>

#include "permsimple/classify.hpp"
#include "permsimple/essential.hpp"
#include "permsimple/enumerate.hpp"
#include "permsimple/intervals.hpp"
#include "permsimple/stats.hpp"

// JSON shapes for every report type. Permutations serialize as their
// whitespace one-line text form throughout.

namespace permsimple {

inline void to_json(nlohmann::json& j, const Permutation& p) { j = p.str(); }

inline void to_json(nlohmann::json& j, const EntryRef& e) {
  j = nlohmann::json{{"position", e.position}, {"value", e.value}};
}

inline void to_json(nlohmann::json& j, const IntervalWindow& w) {
  j = nlohmann::json{{"i", w.i}, {"j", w.j}, {"vmin", w.vmin},
                     {"vmax", w.vmax}};
}

inline void to_json(nlohmann::json& j, const SimplicityReport& r) {
  j = nlohmann::json{{"simple", r.simple}};
  if (r.witness) j["witness"] = *r.witness;
}

inline void to_json(nlohmann::json& j, const AlternationWitness& w) {
  j = nlohmann::json{
      {"axis", w.axis == SplitAxis::Value ? "value-split" : "position-split"},
      {"direction", w.direction == Direction::Increasing ? "both-increasing"
                                                         : "both-decreasing"},
      {"halves", w.halves}};
}

inline void to_json(nlohmann::json& j, const AlternationRepair& r) {
  j = nlohmann::json{{"removed", r.removed}, {"result", r.result}};
}

inline void to_json(nlohmann::json& j, const EssentialityReport& r) {
  j = nlohmann::json{{"permutation", r.perm},
                     {"inessential_count", r.inessential_count()}};
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json item{{"position", e.entry.position},
                        {"value", e.entry.value},
                        {"inessential", e.inessential}};
    if (e.pattern) item["pattern"] = *e.pattern;
    entries.push_back(std::move(item));
  }
  j["entries"] = std::move(entries);
}

inline void to_json(nlohmann::json& j, const TheoremReport& r) {
  j = nlohmann::json{
      {"n", r.n},
      {"simple_count", r.simple_count},
      {"parallel_alternation_simple_count",
       r.parallel_alternation_simple_count},
      {"simple_with_inessential_count", r.simple_with_inessential_count},
      {"counterexamples", r.counterexamples}};
}

inline void to_json(nlohmann::json& j, const ExtensionReport& r) {
  nlohmann::json grid = nlohmann::json::array();
  for (const auto& row : r.slot_classes) {
    nlohmann::json cells = nlohmann::json::array();
    for (SlotClass c : row) cells.push_back(slot_class_name(c));
    grid.push_back(std::move(cells));
  }
  j = nlohmann::json{
      {"base", r.base},
      {"n", r.n},
      {"slots",
       {{"doubleton", r.doubleton_slots},
        {"corner", r.corner_slots},
        {"simple", r.simple_slots},
        {"other", r.other_slots},
        {"total", r.doubleton_slots + r.corner_slots + r.simple_slots +
                      r.other_slots}}},
      {"distinct_results", r.distinct_results},
      {"distinct_doubleton_results", r.distinct_doubleton_results},
      {"simple_results", r.simple_results},
      {"naive_simple_estimate", r.naive_simple_estimate},
      {"slot_grid", std::move(grid)}};
}

inline void to_json(nlohmann::json& j, const DoubleCountReport& r) {
  j = nlohmann::json{{"n", r.n},
                     {"inessential_pairs", r.inessential_pairs},
                     {"simple_extension_slots", r.simple_extension_slots},
                     {"equal", r.equal()}};
}

inline void to_json(nlohmann::json& j, const SimpleSet& s) {
  j = nlohmann::json{
      {"n", s.n},
      {"method", s.method == Method::BruteForce ? "brute-force" : "extension"},
      {"count", s.count()},
      {"permutations", s.perms}};
}

inline void to_json(nlohmann::json& j, const StatsReport& r) {
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& [k, cnt] : r.histogram) {
    hist.push_back(nlohmann::json{
        {"intervals", k},
        {"count", cnt},
        {"frequency",
         static_cast<double>(cnt) / static_cast<double>(r.samples)}});
  }
  j = nlohmann::json{{"n", r.n},
                     {"samples", r.samples},
                     {"seed", r.seed},
                     {"generator", r.generator},
                     {"histogram", std::move(hist)},
                     {"poisson_reference", r.poisson_reference},
                     {"tv_distance", r.tv_distance},
                     {"simple_fraction", r.simple_fraction},
                     {"e_minus_2", r.e_minus_2},
                     {"mean_intervals", r.mean_intervals},
                     {"large_interval_fraction", r.large_interval_fraction},
                     {"note", r.note}};
}

inline void to_json(nlohmann::json& j, const TrendRow& r) {
  j = nlohmann::json{{"n", r.n},
                     {"simple_count", r.simple_count},
                     {"total_inessential", r.total_inessential},
                     {"mean_inessential", r.mean_inessential},
                     {"mean_over_n", r.mean_over_n}};
  j["cross_validated"] =
      r.cross_validated ? nlohmann::json(*r.cross_validated)
                        : nlohmann::json(nullptr);
}

inline void to_json(nlohmann::json& j, const InessentialTrend& t) {
  j = nlohmann::json{{"rows", t.rows}};
}

}  // namespace permsimple

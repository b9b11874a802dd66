#pragma once

// Structured (JSON) forms of the library's results. Field order is fixed so
// that parsing and re-serialising a document reproduces it byte for byte.

#include <json.hpp>

#include "lorenz/braids.hpp"
#include "lorenz/families.hpp"
#include "lorenz/farey.hpp"
#include "lorenz/starprod.hpp"
#include "lorenz/words.hpp"

namespace lorenz {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json to_json(const Counts& c) { return Json{{"n_L", c.left}, {"n_R", c.right}}; }

inline std::string_view to_string(TreeSide side) {
  return side == TreeSide::LMaximal ? "minus" : "plus";
}

inline Json to_json(const TreeLevel& level) {
  Json words = Json::array();
  for (std::size_t i = 0; i < level.words.size(); ++i) {
    words.push_back(Json{{"depth", level.depth},
                         {"index", i},
                         {"word", level.words[i].to_string()},
                         {"counts", to_json(counts(level.words[i]))}});
  }
  return Json{{"side", to_string(level.side)}, {"depth", level.depth}, {"words", std::move(words)}};
}

inline Json to_json(const LevelComparison& cmp) {
  Json entries = Json::array();
  for (const auto& e : cmp.entries)
    entries.push_back(Json{{"index", e.index},
                           {"generated", e.generated},
                           {"reference", e.reference},
                           {"status", to_string(e.status)}});
  return entries;
}

inline Json to_json(const FareyPair& pair) {
  return Json{{"X", pair.x().to_string()},
              {"Y", pair.y().to_string()},
              {"S_parent", pair.s_parent().to_string()}};
}

inline Json to_json(const TorusPermutationReport& r) {
  return Json{{"p1", r.p1},
              {"q1", r.q1},
              {"p2", r.p2},
              {"q2", r.q2},
              {"k", r.k},
              {"r1", r.r1},
              {"r2", r.r2},
              {"p", r.p},
              {"q", r.q},
              {"r", r.r},
              {"verdict", to_string(r.verdict)},
              {"certificate", to_string(r.certificate)},
              {"reason", to_string(r.reason)},
              {"p_odd", r.p_odd},
              {"p_gt_4", r.p_greater_than_4},
              {"p_multiple_of_3", r.p_multiple_of_3}};
}

inline Json to_json(const LorenzBraid& b) {
  Json sources = Json::array();
  for (const auto& w : b.source_words()) sources.push_back(w.to_string());
  Json out{{"strands", b.strands()},
           {"left_strands", b.left_strands()},
           {"perm", b.perm()},
           {"artin_word", emit_braid_word(b)},
           {"crossings", crossing_count(b)},
           {"components", cycle_count(b)},
           {"source_words", std::move(sources)}};
  if (cycle_count(b) == 1) {
    out["genus"] = positive_braid_genus(b);
    out["braid_index"] = braid_index(b.source_words().front());
  }
  return out;
}

inline Json to_json(const Certificate& c) {
  Json clauses = Json::object();
  for (const auto& cl : c.clauses) clauses[cl.name] = cl.passed;
  return Json{{"kind", to_string(c.kind)},
              {"p", c.p},
              {"q", c.q},
              {"k", c.k},
              {"issued", c.issued()},
              {"conditional_on_morton", c.conditional_on_morton},
              {"clauses", std::move(clauses)}};
}

inline Json to_json(const FamilyInstance& inst) {
  return Json{{"family", inst.family_id},
              {"k", inst.k},
              {"n", inst.n},
              {"mirrored", inst.mirrored},
              {"pair", to_json(inst.pair)},
              {"S", inst.s.to_string()},
              {"product", inst.product.to_string()},
              {"report", to_json(inst.report)}};
}

}  // namespace lorenz

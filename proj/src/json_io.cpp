#include "satlattice/json_io.hpp"

#include "satlattice/text.hpp"

namespace satlattice {

using nlohmann::json;

json set_to_json(SetWord s) { return json(elements_of(s)); }

json family_to_json(const Family& f) {
  json sets = json::array();
  for (SetWord s : f.members()) sets.push_back(set_to_json(s));
  return json{{"n", f.ground_size()}, {"sets", std::move(sets)}};
}

Family family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("sets"))
    throw std::invalid_argument(R"(family JSON must be {"n": int, "sets": [[...],...]})");
  int n = j.at("n").get<int>();
  std::vector<SetWord> members;
  for (const json& set : j.at("sets"))
    members.push_back(set_of(set.get<std::vector<int>>(), n));
  return Family(n, std::move(members));
}

json copy_to_json(const InducedCopy& c) {
  return json::array(
      {set_to_json(c.a), set_to_json(c.a_up), set_to_json(c.b), set_to_json(c.b_up)});
}

json trace_to_json(const ExtractionTrace& t) {
  json order = json::array(), g_seq = json::array(), chain = json::array();
  for (SetWord s : t.order) order.push_back(set_to_json(s));
  for (SetWord s : t.g_seq) g_seq.push_back(set_to_json(s));
  for (SetWord s : t.chain.members()) chain.push_back(set_to_json(s));
  return json{{"order", std::move(order)},
              {"g_seq", std::move(g_seq)},
              {"chain", std::move(chain)}};
}

json catalog_to_json(const Catalog& c) {
  json families = json::array();
  for (const Family& f : c.families) families.push_back(family_to_json(f));
  json classes = json::array();
  for (const DualityClass& cls : c.classes)
    classes.push_back(json{{"representative", family_to_json(cls.representative)},
                           {"partner", family_to_json(cls.partner)},
                           {"self_dual", cls.self_dual}});
  return json{{"n", c.n},
              {"size", c.size},
              {"count", c.families.size()},
              {"class_count", c.classes.size()},
              {"families", std::move(families)},
              {"classes", std::move(classes)}};
}

namespace {

json config_to_json(const WitnessConfig& c) {
  json out{{"case", static_cast<int>(c.kind)},
           {"target", c.target},
           {"a", set_to_json(c.a)},
           {"b", set_to_json(c.b)}};
  if (c.kind == WitnessConfig::Case::three) out["d"] = set_to_json(c.d);
  if (c.kind == WitnessConfig::Case::two) out["j"] = c.j;
  return out;
}

}  // namespace

json audit_to_json(const AuditReport& r) {
  json shackles = json::array();
  for (const ShackleAudit& sa : r.shackles) {
    json entry{{"index", sa.index}, {"present", sa.present}};
    if (!sa.present) {
      json witnesses = json::array();
      for (SetWord w : sa.witnesses) witnesses.push_back(set_to_json(w));
      entry["witnesses"] = std::move(witnesses);
      entry["case_counts"] = json{{"case1", sa.case1},
                                  {"case2", sa.case2},
                                  {"case3", sa.case3}};
      json configs = json::array();
      for (const WitnessConfig& c : sa.configs) configs.push_back(config_to_json(c));
      entry["configs"] = std::move(configs);
    }
    shackles.push_back(std::move(entry));
  }
  json members = json::array();
  for (const MemberAudit& ma : r.members) {
    members.push_back(json{{"member", set_to_json(ma.member)},
                           {"is_shackle", ma.is_shackle},
                           {"p", ma.span.p},
                           {"q", ma.span.q},
                           {"load", ma.load},
                           {"load_bound_ok", ma.load_bound_ok},
                           {"candidate_set_ok", ma.candidate_set_ok},
                           {"pair_rule_ok", ma.pair_rule_ok}});
  }
  return json{{"n", r.n},
              {"chain_present", r.chain_present},
              {"saturated", r.saturated},
              {"shackle_count", r.shackle_count},
              {"off_chain_count", r.off_chain_count},
              {"shackles", std::move(shackles)},
              {"members", std::move(members)},
              {"witnesses_ok", r.witnesses_ok},
              {"inequality_holds", r.inequality_holds},
              {"size_bound_holds", r.size_bound_holds},
              {"findings", r.findings},
              {"ok", r.all_ok()}};
}

json antichain_report_to_json(const AntichainScanReport& r) {
  json entries = json::array();
  for (const AntichainScanEntry& e : r.entries) {
    json entry{{"family", family_to_json(e.family)},
               {"shackle_free", e.shackle_free}};
    if (e.shackle_free) {
      entry["antichain"] = e.antichain;
      if (e.comparable_pair)
        entry["comparable_pair"] = json::array({set_to_json(e.comparable_pair->first),
                                                set_to_json(e.comparable_pair->second)});
    }
    entries.push_back(std::move(entry));
  }
  return json{{"n", r.n},
              {"checked", r.checked},
              {"skipped", r.skipped},
              {"counterexamples", r.counterexamples},
              {"entries", std::move(entries)}};
}

json certificate_to_json(const ConstructionCertificate& c) {
  json out{{"family", family_to_json(c.family)},
           {"free", c.free},
           {"saturated", c.saturated}};
  if (c.internal_copy) out["internal_copy"] = copy_to_json(*c.internal_copy);
  if (c.unwitnessed_outsider)
    out["unwitnessed_outsider"] = set_to_json(*c.unwitnessed_outsider);
  if (c.saturated) {
    json witnesses = json::array();
    for (const auto& [outsider, copy] : c.outsider_witnesses)
      witnesses.push_back(
          json{{"outsider", set_to_json(outsider)}, {"copy", copy_to_json(copy)}});
    out["outsider_witnesses"] = std::move(witnesses);
  }
  return out;
}

}  // namespace satlattice

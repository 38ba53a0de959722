#include "wdeg/json_io.hpp"

namespace wdeg {

GroupId parse_group(const std::string& name, int64_t p) {
  if (name.size() < 2) throw InvalidInput("group name must look like A4, B3, ...");
  GroupId g;
  g.family = parse_family(name[0]);
  try {
    g.rank = std::stoi(name.substr(1));
  } catch (const std::exception&) {
    throw InvalidInput("bad rank in group name '" + name + "'");
  }
  g.p = p;
  g.validate();
  return g;
}

json group_json(const GroupId& g) {
  return json{{"family", std::string(1, family_letter(g.family))}, {"rank", g.rank}, {"p", g.p}};
}

json weight_json(const Weight& w) { return json(w.str()); }

json char_json(const FormalCharacter& chi, bool full_support) {
  json entries = json::array();
  if (full_support) {
    for (const auto& [eps, m] : chi.expand())
      entries.push_back(json{{"weight", weight_from_eps(chi.group(), eps).str()}, {"mult", m}});
  } else {
    for (const auto& [eps, m] : chi.dominant_entries())
      entries.push_back(json{{"weight", weight_from_eps(chi.group(), eps).str()}, {"mult", m}});
  }
  return json{{"group", group_json(chi.group())},
              {"mode", full_support ? "full" : "dominant"},
              {"dim", chi.dim()},
              {"wdeg", chi.wdeg()},
              {"entries", entries}};
}

FormalCharacter char_from_json(const json& j) {
  GroupId g;
  g.family = parse_family(j.at("group").at("family").get<std::string>().at(0));
  g.rank = j.at("group").at("rank").get<int>();
  g.p = j.at("group").at("p").get<int64_t>();
  g.validate(GroupId::Strictness::Internal);
  if (j.at("mode").get<std::string>() != "dominant")
    throw InvalidInput("character input must be in dominant mode");
  FormalCharacter chi(g);
  for (const auto& e : j.at("entries"))
    chi.add(parse_weight(g, e.at("weight").get<std::string>()).eps(), e.at("mult").get<int64_t>());
  return chi;
}

namespace {
json bound_json(const WdegBound& b) {
  json o{{"value", b.value.get_str()}, {"source", b.source}};
  if (b.is_upper) o["kind"] = "upper";
  else o["kind"] = "lower";
  if (!b.condition.empty()) o["condition"] = b.condition;
  return o;
}
}  // namespace

json verdict_json(const WdegVerdict& v) {
  json o;
  if (v.exact) {
    o["exact"] = v.exact->get_str();
    o["exact_source"] = v.exact_source;
  }
  json lo = json::array(), up = json::array(), cond = json::array();
  for (const auto& b : v.lower) lo.push_back(bound_json(b));
  for (const auto& b : v.upper) up.push_back(bound_json(b));
  for (const auto& b : v.conditional) cond.push_back(bound_json(b));
  o["lower"] = lo;
  o["upper"] = up;
  o["conditional"] = cond;
  o["best_lower"] = v.best_lower().get_str();
  if (auto bu = v.best_upper()) o["best_upper"] = bu->get_str();
  return o;
}

json lemma_report_json(const LemmaReport& r) {
  json params;
  for (const auto& [k, val] : r.params) params[k] = val;
  json o{{"lemma", r.lemma},
         {"params", params},
         {"expected", r.expected},
         {"computed", r.computed},
         {"pass", r.pass}};
  if (!r.note.empty()) o["note"] = r.note;
  return o;
}

json window_json(const InductiveWindow& w) {
  json levels;
  for (const auto& [n, lvl] : w.levels) {
    json arr = json::array();
    for (const auto& x : lvl) arr.push_back(x.str());
    levels[std::to_string(n)] = arr;
  }
  json checks;
  if (!w.closure.empty()) {
    json c;
    for (const auto& [n, s] : w.closure) c[std::to_string(n)] = s;
    checks["closure"] = c;
  }
  if (w.delta_value) {
    checks["delta"] = json{{"value", *w.delta_value}, {"note", w.delta_note}};
  }
  if (w.stable.has_value()) {
    checks["stability"] = json{{"stable", *w.stable}, {"note", w.stability_note}};
  }
  return json{{"family", std::string(1, family_letter(w.family))},
              {"p", w.p},
              {"n_min", w.n_min},
              {"n_max", w.n_max},
              {"provenance", w.provenance},
              {"levels", levels},
              {"checks", checks}};
}

json bwm_verdict_json(const BwmVerdict& v) {
  json o;
  switch (v.kind) {
    case BwmVerdict::Kind::Bounded: o["verdict"] = "bounded"; break;
    case BwmVerdict::Kind::Unbounded: o["verdict"] = "unbounded"; break;
    case BwmVerdict::Kind::Inconclusive: o["verdict"] = "inconclusive"; break;
  }
  if (v.cap) o["max_wdeg"] = v.cap->get_str();
  if (!v.cap_condition.empty()) o["cap_condition"] = v.cap_condition;
  if (v.realized_max) o["realized_max"] = *v.realized_max;
  if (!v.growth.empty()) {
    json g = json::array();
    for (const auto& [n, lb] : v.growth) g.push_back(json{{"rank", n}, {"lower", lb}});
    o["growth"] = g;
    o["certificate"] = v.certificate;
  }
  if (!v.note.empty()) o["note"] = v.note;
  return o;
}

json gram_report_json(const GramReport& r, bool include_matrix) {
  json o{{"mu", r.mu.str()},
         {"weyl_multiplicity", r.weyl_multiplicity},
         {"spanning_size", r.spanning_size},
         {"rank_q", r.rank_q},
         {"rank_p", r.rank_p}};
  if (include_matrix) {
    json m = json::array();
    for (const auto& row : r.gram) {
      json jr = json::array();
      for (const auto& x : row) jr.push_back(x.get_str());
      m.push_back(jr);
    }
    o["gram"] = m;
  }
  return o;
}

}  // namespace wdeg

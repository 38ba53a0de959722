#ifndef WDEG_JSON_IO_HPP
#define WDEG_JSON_IO_HPP

#include <json.hpp>

#include "wdeg/branching.hpp"
#include "wdeg/classify.hpp"
#include "wdeg/inductive.hpp"
#include "wdeg/oracle.hpp"

namespace wdeg {

using json = nlohmann::ordered_json;

GroupId parse_group(const std::string& name, int64_t p);  // "A4", "c3"

json group_json(const GroupId& g);
json weight_json(const Weight& w);
json char_json(const FormalCharacter& chi, bool full_support = false);
FormalCharacter char_from_json(const json& j);
json verdict_json(const WdegVerdict& v);
json lemma_report_json(const LemmaReport& r);
json window_json(const InductiveWindow& w);
json bwm_verdict_json(const BwmVerdict& v);
json gram_report_json(const GramReport& r, bool include_matrix = true);

}  // namespace wdeg

#endif

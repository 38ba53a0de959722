// Command-line front end: every library operation with JSON output.
// Exit codes: 0 success, 2 invalid input, 3 resource refusal, 4 internal.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "wdeg/json_io.hpp"

namespace fs = std::filesystem;
using namespace wdeg;

namespace {

struct Cli {
  int64_t p = 2;
  std::string group;
  std::string weight;
  OracleLimits limits;
  std::string config_path;

  Oracle oracle{limits};

  GroupId gid() const { return parse_group(group, p); }
  Weight wparse(const GroupId& g) const {
    if (weight.empty()) throw InvalidInput("missing weight (-w \"[a1,...,an]\")");
    return parse_weight(g, weight);
  }
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void load_config(Cli& cli) {
  if (cli.config_path.empty()) return;
  std::ifstream in(cli.config_path);
  if (!in) throw InvalidInput("cannot open config file " + cli.config_path);
  json cfg = json::parse(in);
  if (cfg.contains("max_rank")) cli.limits.max_rank = cfg["max_rank"].get<int>();
  if (cfg.contains("max_weyl_dim")) cli.limits.max_weyl_dim = cfg["max_weyl_dim"].get<int64_t>();
  if (cfg.contains("max_weight_space"))
    cli.limits.max_weight_space = cfg["max_weight_space"].get<int>();
}

void wire_disk_cache(Oracle& oracle) {
  const char* dir = std::getenv("WDEG_CACHE_DIR");
  if (!dir || !*dir) return;
  fs::path base(dir);
  std::error_code ec;
  fs::create_directories(base, ec);
  if (ec) return;
  oracle.set_disk_cache(
      [base](const std::string& key, std::string* payload) {
        std::ifstream in(base / (key + ".txt"));
        if (!in) return false;
        std::ostringstream ss;
        ss << in.rdbuf();
        *payload = ss.str();
        return true;
      },
      [base](const std::string& key, const std::string& payload) {
        std::ofstream out(base / (key + ".txt"));
        out << payload;
      });
}

FormalCharacter read_char_arg(const std::string& path) {
  if (path == "-") return char_from_json(json::parse(std::cin));
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open character file " + path);
  return char_from_json(json::parse(in));
}

std::map<std::string, int64_t> parse_params(const std::string& s) {
  std::map<std::string, int64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t eq = tok.find('=');
    if (eq == std::string::npos) throw InvalidInput("params must look like k=2,i=3");
    out[tok.substr(0, eq)] = std::stoll(tok.substr(eq + 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact weight-multiplicity toolkit for classical groups"};
  app.require_subcommand(1);

  Cli cli;
  app.add_option("-p,--characteristic", cli.p, "prime characteristic")->capture_default_str();
  app.add_option("--config", cli.config_path, "JSON config file with resource limits");
  app.add_option("--max-rank", cli.limits.max_rank, "oracle rank limit");
  app.add_option("--max-weyl-dim", cli.limits.max_weyl_dim, "oracle Weyl dimension limit");
  app.add_option("--max-weight-space", cli.limits.max_weight_space,
                 "oracle spanning-set size limit");

  // rootsys info
  auto* rootsys_cmd = app.add_subcommand("rootsys", "root system data");
  auto* info = rootsys_cmd->add_subcommand("info", "summary of the root system");
  info->add_option("group", cli.group, "group, e.g. A4")->required();

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "catalog membership and wdeg verdict");
  classify_cmd->add_option("group", cli.group)->required();
  classify_cmd->add_option("-w,--weight", cli.weight, "dominant weight [a1,...,an]")->required();

  // wdeg
  auto* wdeg_cmd = app.add_subcommand("wdeg", "weight degree");
  bool use_oracle = false, direct = false;
  wdeg_cmd->add_flag("--oracle", use_oracle, "compute the exact value with the oracle");
  wdeg_cmd->add_flag("--direct", direct, "force the Gram route (no tensor factorization)");
  wdeg_cmd->add_option("group", cli.group)->required();
  wdeg_cmd->add_option("-w,--weight", cli.weight)->required();

  // gram
  auto* gram_cmd = app.add_subcommand("gram", "per-weight-space Gram diagnostics");
  gram_cmd->add_option("group", cli.group)->required();
  gram_cmd->add_option("-w,--weight", cli.weight)->required();
  bool with_matrix = false;
  gram_cmd->add_flag("--matrix", with_matrix, "include the Gram matrices");

  // char
  auto* char_cmd = app.add_subcommand("char", "formal characters");
  auto* build = char_cmd->add_subcommand("build", "construct a named character");
  std::string char_name;
  int char_i = 1;
  int64_t char_d = 0;
  std::string which = "even";
  bool full_mode = false;
  build->add_option("name", char_name,
                    "trivial|natural|wedge|truncated|spin|halfspin|oscillator|c2spin|c2q|simple")
      ->required();
  build->add_option("group", cli.group)->required();
  build->add_option("-i,--index", char_i, "wedge index / half-spin selector");
  build->add_option("-d,--degree", char_d, "truncated power degree");
  build->add_option("--which", which, "oscillator half: even|odd");
  build->add_option("-w,--weight", cli.weight, "weight for name=simple");
  build->add_flag("--full", full_mode, "print the full support");
  auto* op = char_cmd->add_subcommand("op", "tensor | twist | dual on character JSON");
  std::string op_name, lhs_path, rhs_path;
  int twist_k = 1;
  op->add_option("operation", op_name, "tensor|twist|dual")->required();
  op->add_option("--lhs", lhs_path, "character JSON file ('-' = stdin)")->required();
  op->add_option("--rhs", rhs_path, "second character file (tensor)");
  op->add_option("-k,--power", twist_k, "twist power");
  op->add_flag("--full", full_mode, "print the full support");

  // branch
  auto* branch_cmd = app.add_subcommand("branch", "restriction factor weights");
  int branch_to = 1;
  std::string provider_name = "oracle";
  branch_cmd->add_option("group", cli.group)->required();
  branch_cmd->add_option("-w,--weight", cli.weight)->required();
  branch_cmd->add_option("--to", branch_to, "target rank")->required();
  branch_cmd->add_option("--provider", provider_name, "oracle|model");

  // verify-lemma
  auto* verify_cmd = app.add_subcommand("verify-lemma", "machine verification of a branching rule");
  std::string lemma_id, params_str;
  verify_cmd->add_option("id", lemma_id)->required();
  verify_cmd->add_option("group", cli.group)->required();
  verify_cmd->add_option("--params", params_str, "comma-separated k=v pairs");
  verify_cmd->add_option("-w,--weight", cli.weight, "weight for the monotonicity checks");

  // system
  auto* system_cmd = app.add_subcommand("system", "inductive-system calculus");
  std::string family_str = "A", desc_str, gen_spec;
  int n_min = 1, n_max = 8, twist_depth = 1, stab = 2;
  int64_t budget = 2;
  bool do_closure = false, do_delta = false;
  auto* realize_cmd = system_cmd->add_subcommand("realize", "level sets of a descriptor");
  realize_cmd->add_option("-d,--descriptor", desc_str)->required();
  realize_cmd->add_option("--family", family_str)->required();
  realize_cmd->add_option("--nmin", n_min);
  realize_cmd->add_option("--nmax", n_max);
  realize_cmd->add_flag("--closure", do_closure, "verify closure levelwise");
  realize_cmd->add_flag("--delta", do_delta, "check the level delta invariant");
  auto* generate_cmd = system_cmd->add_subcommand("generate", "window generated by a chain");
  generate_cmd->add_option("--family", family_str)->required();
  generate_cmd->add_option("--gen", gen_spec,
                           "fundamental-chain | truncated-chain | weight:[a1,...]")
      ->required();
  generate_cmd->add_option("--nmin", n_min);
  generate_cmd->add_option("--nmax", n_max);
  generate_cmd->add_option("--stab", stab, "stabilization window");
  auto* check_cmd = system_cmd->add_subcommand("check", "bounded-multiplicity verdict");
  check_cmd->add_option("-d,--descriptor", desc_str)->required();
  check_cmd->add_option("--family", family_str)->required();
  check_cmd->add_option("--nmax", n_max);
  auto* enum_cmd = system_cmd->add_subcommand("enumerate", "bounded catalogs at a twist depth");
  enum_cmd->add_option("--family", family_str)->required();
  enum_cmd->add_option("-s,--depth", twist_depth);
  enum_cmd->add_option("--budget", budget, "coefficient-atom degree budget (type A)");

  CLI11_PARSE(app, argc, argv);

  try {
    load_config(cli);
    Oracle oracle(cli.limits);
    wire_disk_cache(oracle);
    OracleProvider oprov(oracle);
    ModelProvider mprov(oracle);

    if (*info) {
      GroupId g = cli.gid();
      const RootSystem& rs = root_system(g);
      json simple = json::array(), fund = json::array();
      for (int i = 0; i < g.rank; ++i) {
        simple.push_back(weight_from_eps(g, rs.simple_roots()[i]).str());
        fund.push_back(fundamental_weight(g, i + 1).str());
      }
      json cart = json::array();
      for (const auto& row : rs.cartan()) cart.push_back(row);
      emit(json{{"group", group_json(g)},
                {"num_positive_roots", rs.num_positive()},
                {"simple_roots_fw", simple},
                {"fundamental_weights", fund},
                {"alpha_max_fw", weight_from_eps(g, rs.alpha_max()).str()},
                {"cartan", cart}});
    } else if (*classify_cmd) {
      GroupId g = cli.gid();
      Weight w = cli.wparse(g);
      json out{{"group", group_json(g)}, {"weight", w.str()}};
      bool omega = in_omega(g, w);
      out["omega"] = omega;
      if (is_p_restricted(w)) out["omega_p"] = in_omega_p(g, w);
      if (g.family == Family::C && g.p == 2) {
        auto cls = c2_wdeg_class(g, w);
        json c2{{"layers_in_extended_catalog", cls.layers_in_extended_catalog},
                {"l", cls.l},
                {"excluded_pair_present", cls.excluded_pair_present}};
        if (cls.exact) c2["exact"] = cls.exact->get_str();
        if (cls.lower) c2["lower"] = *cls.lower;
        if (!cls.condition.empty()) c2["condition"] = cls.condition;
        out["char2_class"] = c2;
      }
      auto v = wdeg_verdict(g, w);
      if (v.exact) out["exact"] = v.exact->get_str();
      out["verdict"] = verdict_json(v);
      emit(out);
    } else if (*wdeg_cmd) {
      GroupId g = cli.gid();
      Weight w = cli.wparse(g);
      json out{{"group", group_json(g)}, {"weight", w.str()}};
      if (use_oracle || direct) {
        out["wdeg"] = oracle.simple_char(g, w, direct).wdeg();
        out["source"] = direct ? "oracle-direct" : "oracle";
      } else {
        out["verdict"] = verdict_json(wdeg_verdict(g, w));
        out["source"] = "classify";
      }
      emit(out);
    } else if (*gram_cmd) {
      GroupId g = cli.gid();
      Weight w = cli.wparse(g);
      json arr = json::array();
      for (const auto& r : oracle.gram_reports(g, w)) arr.push_back(gram_report_json(r, with_matrix));
      emit(json{{"group", group_json(g)}, {"weight", w.str()}, {"spaces", arr}});
    } else if (*build) {
      GroupId g = cli.gid();
      FormalCharacter chi(g);
      if (char_name == "trivial") chi = trivial_char(g);
      else if (char_name == "natural") chi = natural_char(g);
      else if (char_name == "wedge") chi = wedge_char(g, char_i);
      else if (char_name == "truncated") chi = truncated_sym_char(g, char_d);
      else if (char_name == "spin") chi = spin_char(g);
      else if (char_name == "halfspin") chi = half_spin_char(g, char_i != 2);
      else if (char_name == "oscillator")
        chi = (which == "odd") ? oscillator_chars(g).first : oscillator_chars(g).second;
      else if (char_name == "c2spin") chi = c2_spin_char(g);
      else if (char_name == "c2q") chi = c2_q_char(g);
      else if (char_name == "simple") chi = oracle.simple_char(g, cli.wparse(g));
      else throw InvalidInput("unknown character name '" + char_name + "'");
      emit(char_json(chi, full_mode));
    } else if (*op) {
      FormalCharacter a = read_char_arg(lhs_path);
      if (op_name == "tensor") {
        if (rhs_path.empty()) throw InvalidInput("tensor needs --rhs");
        emit(char_json(tensor(a, read_char_arg(rhs_path)), full_mode));
      } else if (op_name == "twist") {
        emit(char_json(frobenius_twist(a, twist_k), full_mode));
      } else if (op_name == "dual") {
        emit(char_json(dual(a), full_mode));
      } else {
        throw InvalidInput("unknown character operation '" + op_name + "'");
      }
    } else if (*branch_cmd) {
      GroupId g = cli.gid();
      Weight w = cli.wparse(g);
      CharProvider& prov =
          (provider_name == "model") ? static_cast<CharProvider&>(mprov) : oprov;
      json factors = json::array();
      for (const auto& f : irr_k(g, w, branch_to, prov)) factors.push_back(f.str());
      emit(json{{"group", group_json(g)},
                {"weight", w.str()},
                {"to_rank", branch_to},
                {"factors", factors}});
    } else if (*verify_cmd) {
      GroupId g = cli.gid();
      auto params = parse_params(params_str);
      LemmaReport rep;
      if (lemma_id == "wdeg-monotone" || lemma_id == "delta-monotone") {
        Weight w = cli.wparse(g);
        auto it = params.find("k");
        if (it == params.end()) throw InvalidInput("monotonicity checks need --params k=<rank>");
        rep = verify_monotone(lemma_id, g, w, static_cast<int>(it->second), oprov);
      } else {
        rep = verify_lemma(lemma_id, g, params, oprov);
      }
      emit(lemma_report_json(rep));
    } else if (*realize_cmd) {
      Family fam = parse_family(family_str.at(0));
      auto d = parse_descriptor(fam, cli.p, desc_str);
      auto w = realize(d, n_min, n_max, mprov);
      if (do_closure) check_closure(w, mprov);
      if (do_delta) check_delta(w);
      emit(window_json(w));
    } else if (*generate_cmd) {
      Family fam = parse_family(family_str.at(0));
      std::map<int, std::set<Weight>> gens;
      for (int t = std::max(n_min, 1); t <= n_max; ++t) {
        GroupId g{fam, t, cli.p};
        if (gen_spec == "fundamental-chain") {
          gens[t] = {fundamental_weight(g, (t + 1) / 2)};
        } else if (gen_spec == "truncated-chain") {
          gens[t] = {scale_weight(fundamental_weight(g, (t + 1) / 2), cli.p - 1)};
        } else if (gen_spec.rfind("weight:", 0) == 0) {
          gens[t] = {parse_weight(g, gen_spec.substr(7))};
        } else {
          throw InvalidInput("unknown generator spec '" + gen_spec + "'");
        }
      }
      auto w = generate(fam, cli.p, gens, std::max(n_min, 1), n_max, stab, mprov);
      check_closure(w, mprov);
      check_delta(w);
      emit(window_json(w));
    } else if (*check_cmd) {
      Family fam = parse_family(family_str.at(0));
      auto d = parse_descriptor(fam, cli.p, desc_str);
      emit(json{{"descriptor", d.str()}, {"result", bwm_verdict_json(bwm_check(d, n_max, mprov))}});
    } else if (*enum_cmd) {
      Family fam = parse_family(family_str.at(0));
      auto e = enumerate_bwm(fam, cli.p, twist_depth, BwmBudget{budget});
      json arr = json::array();
      for (const auto& d : e.descriptors) arr.push_back(d.str());
      json out{{"family", family_str}, {"p", cli.p}, {"depth", twist_depth},
               {"count", e.descriptors.size()}, {"descriptors", arr}};
      if (e.budget_limited) out["budget_note"] = e.note;
      emit(out);
    }
    return 0;
  } catch (const InvalidInput& e) {
    std::cout << json{{"error", "invalid-input"}, {"reason", e.what()}}.dump(2) << "\n";
    return 2;
  } catch (const ResourceRefusal& e) {
    std::cout << json{{"error", "resource-refusal"}, {"reason", e.what()}}.dump(2) << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cout << json{{"error", "internal"}, {"reason", e.what()}}.dump(2) << "\n";
    return 4;
  }
}

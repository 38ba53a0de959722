#ifndef WDEG_BRANCHING_HPP
#define WDEG_BRANCHING_HPP

#include <map>
#include <string>
#include <vector>

#include "wdeg/chars.hpp"
#include "wdeg/oracle.hpp"

namespace wdeg {

// Source of simple characters for decomposition.  The oracle-backed
// provider is the independent route; the model-backed provider serves the
// multiplicity-free families from their explicit weight models (with
// twisted-tensor assembly) and falls back to the oracle elsewhere, which
// keeps catalog-level computations feasible at ranks the Gram route
// refuses.
class CharProvider {
 public:
  virtual ~CharProvider() = default;
  virtual FormalCharacter simple(const GroupId& g, const Weight& w) = 0;
};

class OracleProvider : public CharProvider {
 public:
  explicit OracleProvider(Oracle& o) : o_(o) {}
  FormalCharacter simple(const GroupId& g, const Weight& w) override {
    return o_.simple_char(g, w);
  }

 private:
  Oracle& o_;
};

class ModelProvider : public CharProvider {
 public:
  explicit ModelProvider(Oracle& fallback) : o_(fallback) {}
  FormalCharacter simple(const GroupId& g, const Weight& w) override;
  // true when the weight is served by an explicit model (no oracle call)
  static bool has_model(const GroupId& g, const Weight& w);

 private:
  Oracle& o_;
};

OracleProvider& oracle_provider();
ModelProvider& model_provider();

// Character-level restriction along the rank-k chain subgroup.
FormalCharacter restrict_char(const FormalCharacter& chi, int k);

// Greedy peel into composition-factor highest weights (weight, multiplicity),
// dominance-maximal first with lex-descending tie-break.
std::vector<std::pair<Weight, int64_t>> decompose(const FormalCharacter& chi,
                                                  CharProvider& provider);

// Distinct factor highest weights of the restriction of L(lambda) to the
// rank-k chain subgroup.
std::vector<Weight> irr_k(const GroupId& g, const Weight& lambda, int k, CharProvider& provider);

// Highest weight of the Smith factor with respect to the leading or
// trailing chain subsystem.
Weight smith_weight_trailing(const Weight& lambda, int k);
Weight smith_weight_leading(const Weight& lambda, int k);  // type A, G(1..k)

// Verification report for one branching statement.
struct LemmaReport {
  std::string lemma;
  std::map<std::string, int64_t> params;
  std::vector<std::string> expected;
  std::vector<std::string> computed;
  bool pass = false;
  std::string note;
};

// Splits the truncated power of the given degree parameters across the
// two-block subgroup obtained by deleting node m+1, decomposes each
// bidegree piece, and compares with the closed-form index enumeration.
bool levi_restrict_check(const GroupId& g, int m, int i, int64_t c, LemmaReport* report = nullptr);

// ids: wedge-step, wedge-deep, truncated-deep, symmetric-chain,
// natural-step, oscillator-step, spin-step, c2-q-step, truncated-levi-split
LemmaReport verify_lemma(const std::string& id, const GroupId& g,
                         const std::map<std::string, int64_t>& params, CharProvider& provider);

// ids: wdeg-monotone, delta-monotone (factor statistics against the module's)
LemmaReport verify_monotone(const std::string& id, const GroupId& g, const Weight& lambda, int k,
                            CharProvider& provider);

}  // namespace wdeg

#endif

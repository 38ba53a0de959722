#ifndef WDEG_ORACLE_HPP
#define WDEG_ORACLE_HPP

#include <functional>
#include <map>
#include <mutex>
#include <optional>

#include "wdeg/chars.hpp"
#include "wdeg/exactlin.hpp"
#include "wdeg/weights.hpp"

namespace wdeg {

// Hard resource gates; exceeding one raises ResourceRefusal, never a
// truncated answer.
struct OracleLimits {
  int max_rank = 8;
  int64_t max_weyl_dim = 40000;
  int max_weight_space = 400;  // divided-power spanning-set size per weight
};

// Per-weight-space record of the contravariant-form computation.
struct GramReport {
  Weight mu;
  int64_t weyl_multiplicity = 0;  // Freudenthal value = rational rank
  int spanning_size = 0;
  IntMatrix gram;
  int rank_q = 0;
  int rank_p = 0;
};

// Independent ground truth at desk scale:
//  * characteristic-0 characters by Freudenthal's recursion,
//  * modular simple characters by integer contravariant Gram-matrix ranks
//    mod p on the divided-power spanning sets of the admissible lattice,
//    with the twisted-tensor factorization for non-restricted weights.
class Oracle {
 public:
  explicit Oracle(OracleLimits limits = {}) : lim_(limits) {}

  const OracleLimits& limits() const { return lim_; }

  mpz_class weyl_dim(const GroupId& g, const Weight& lambda) const;

  FormalCharacter freudenthal_char(const GroupId& g, const Weight& lambda);

  // direct = true forces the Gram route even for non-restricted weights
  // (used to cross-check the factorized route).
  FormalCharacter simple_char(const GroupId& g, const Weight& lambda, bool direct = false);

  int64_t wdeg(const GroupId& g, const Weight& lambda);

  // Per-dominant-weight Gram diagnostics for the restricted/direct route.
  std::vector<GramReport> gram_reports(const GroupId& g, const Weight& lambda);

  // All dominant mu <= lambda (including lambda itself).
  std::vector<Weight> dominant_below(const GroupId& g, const Weight& lambda) const;

  // Optional persistent memo for simple characters, keyed by a versioned
  // string.  The CLI wires this to a cache directory when configured.
  void set_disk_cache(std::function<bool(const std::string&, std::string*)> load,
                      std::function<void(const std::string&, const std::string&)> store) {
    disk_load_ = std::move(load);
    disk_store_ = std::move(store);
  }

 private:
  OracleLimits lim_;
  std::function<bool(const std::string&, std::string*)> disk_load_;
  std::function<void(const std::string&, const std::string&)> disk_store_;
  std::mutex mu_;
  std::map<std::pair<std::string, std::vector<int64_t>>, FormalCharacter> simple_cache_;
  std::map<std::pair<std::string, std::vector<int64_t>>, FormalCharacter> freudenthal_cache_;

  FormalCharacter simple_char_gram(const GroupId& g, const Weight& lambda,
                                   std::vector<GramReport>* reports);
  void guard(const GroupId& g, const Weight& lambda) const;
};

// Process-wide oracle with default limits (shared memo cache).
Oracle& shared_oracle();

}  // namespace wdeg

#endif

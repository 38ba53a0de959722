#ifndef WDEG_ROOTSYS_HPP
#define WDEG_ROOTSYS_HPP

#include <memory>
#include <vector>

#include "wdeg/base.hpp"

namespace wdeg {

// Root-system data for A_n, B_n, C_n, D_n with Bourbaki labeling.
//
// All epsilon vectors are doubled integers.  For type A they live in
// Z^{n+1} modulo the all-ones vector; the canonical representative of a
// weight has minimum coordinate 0 (roots are stored with coordinate sum 0).
//
// Positive roots are ordered height-then-lex; this order is also the PBW
// monomial order used by the oracle.
class RootSystem {
 public:
  explicit RootSystem(const GroupId& g);

  const GroupId& group() const { return g_; }
  int rank() const { return g_.rank; }
  int eps_dim() const { return edim_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }

  const std::vector<EpsVec>& simple_roots() const { return simple_; }
  const std::vector<EpsVec>& positive_roots() const { return positive_; }
  const EpsVec& positive_root(int i) const { return positive_[i]; }
  const std::vector<EpsVec>& fundamental_weights() const { return fundamental_; }
  const EpsVec& alpha_max() const { return alpha_max_; }
  const std::vector<std::vector<int64_t>>& cartan() const { return cartan_; }

  int height(int pos_root_idx) const { return height_[pos_root_idx]; }
  // Coefficients of a positive root over the simple roots.
  const std::vector<int>& simple_coeffs(int pos_root_idx) const { return coeffs_[pos_root_idx]; }

  // Index of a positive root given its doubled-eps vector, or -1.
  int positive_index(const EpsVec& v) const;

  // --- signed root indexing for the Chevalley structure-constant table ---
  // r in [0,P) is positive_[r]; r in [P,2P) is -positive_[r-P].
  int signed_count() const { return 2 * num_positive(); }
  int neg(int signed_idx) const {
    int P = num_positive();
    return signed_idx < P ? signed_idx + P : signed_idx - P;
  }
  EpsVec signed_root(int signed_idx) const;
  // Signed index of the sum of two signed roots; -1 if the sum is not a
  // root (including the case sum == 0).
  int sum_index(int a, int b) const { return sum_[a][b]; }
  // Structure constant N_{a,b} with [x_a, x_b] = N_{a,b} x_{a+b}; only
  // meaningful when sum_index(a,b) >= 0.  Signs follow the extraspecial
  // pair convention (all extraspecial constants positive).
  int64_t structure_constant(int a, int b) const { return nconst_[a][b]; }

  // <lambda, alpha^vee> = 2(lambda,alpha)/(alpha,alpha) for doubled vectors.
  int64_t pairing(const EpsVec& weight, const EpsVec& root) const;

  // Value of a dominant weight on the maximal root.
  int64_t delta(const EpsVec& dominant_weight) const;

  // Full Weyl orbit of a (doubled-eps) weight; contains exactly one
  // dominant element.  For type A all members are canonical representatives.
  std::vector<EpsVec> weyl_orbit(const EpsVec& weight) const;

  // Orbit size without expansion.
  int64_t orbit_size(const EpsVec& dominant_weight) const;

  // Dominant representative of a weight under the Weyl action.
  EpsVec dominant_rep(const EpsVec& weight) const;
  bool is_dominant(const EpsVec& weight) const;

  // Canonicalize a type-A representative (min coordinate 0); identity for
  // the other families.
  EpsVec canonical(EpsVec v) const;

  // Decompose v (a difference of weights) over the simple roots.  Returns
  // false if v is not a nonnegative-integer combination; used for the
  // dominance order.  For type A the all-ones ambiguity is resolved first.
  bool nonneg_root_combination(const EpsVec& v, std::vector<int64_t>* coeffs = nullptr) const;

  // mu <= lambda in the dominance order (lambda - mu a nonnegative integer
  // combination of simple roots).
  bool dominance_leq(const EpsVec& mu, const EpsVec& lambda) const;

 private:
  GroupId g_;
  int edim_ = 0;
  std::vector<EpsVec> simple_;
  std::vector<EpsVec> positive_;
  std::vector<EpsVec> fundamental_;
  EpsVec alpha_max_;
  std::vector<std::vector<int64_t>> cartan_;
  std::vector<int> height_;
  std::vector<std::vector<int>> coeffs_;
  std::vector<std::vector<int>> sum_;
  std::vector<std::vector<int64_t>> nconst_;

  void build_roots();
  void build_chevalley();
};

// Cached access; root systems are immutable after construction.
const RootSystem& root_system(const GroupId& g);

}  // namespace wdeg

#endif

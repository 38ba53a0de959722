#ifndef WDEG_CHARS_HPP
#define WDEG_CHARS_HPP

#include <map>
#include <vector>

#include "wdeg/weights.hpp"

namespace wdeg {

// A finite Weyl-invariant weight multiset, stored on dominant orbit
// representatives (doubled eps, canonical).  This is the common currency
// for tensor products, twists, restriction and wdeg.
class FormalCharacter {
 public:
  explicit FormalCharacter(const GroupId& g) : g_(g) {}
  FormalCharacter(const GroupId& g, std::map<EpsVec, int64_t> dominant_mults);

  const GroupId& group() const { return g_; }
  const std::map<EpsVec, int64_t>& dominant_entries() const { return dom_; }

  bool empty() const { return dom_.empty(); }
  int64_t dim() const;
  int64_t wdeg() const;
  int64_t multiplicity(const EpsVec& weight) const;  // any weight, via its orbit
  int64_t multiplicity(const Weight& w) const { return multiplicity(w.eps()); }

  // Unique dominance-maximal dominant weight of the support; throws if the
  // maximum is not unique (then the character is not a highest-weight
  // module character).
  Weight highest_weight() const;
  // All dominance-maximal support weights, lex-descending on eps.
  std::vector<Weight> maximal_weights() const;

  // Full support expansion weight -> multiplicity.
  std::map<EpsVec, int64_t> expand() const;

  void add(const EpsVec& dominant_rep, int64_t mult);

  bool operator==(const FormalCharacter& o) const { return g_ == o.g_ && dom_ == o.dom_; }
  bool operator!=(const FormalCharacter& o) const { return !(*this == o); }

 private:
  GroupId g_;
  std::map<EpsVec, int64_t> dom_;
};

FormalCharacter trivial_char(const GroupId& g);
FormalCharacter orbit_char(const GroupId& g, const Weight& dominant);  // one orbit, mult 1

FormalCharacter tensor(const FormalCharacter& a, const FormalCharacter& b);
FormalCharacter frobenius_twist(const FormalCharacter& chi, int k);
FormalCharacter dual(const FormalCharacter& chi);

// --- explicit models for the multiplicity-free families ---

// natural module: all types
FormalCharacter natural_char(const GroupId& g);
// i-th exterior power of the natural module; type A, 0 <= i <= n
FormalCharacter wedge_char(const GroupId& g, int i);
// truncated symmetric power of degree d; type A, 0 <= d <= (p-1)(n+1).
// Highest weight (p-1-a) omega_k + a omega_{k+1} with d = k(p-1)+a.
FormalCharacter truncated_sym_char(const GroupId& g, int64_t d);
// spin module of B_n (half-integral orbit, 2^n weights)
FormalCharacter spin_char(const GroupId& g);
// half-spin modules of D_n; plus = omega_n (even sign count),
// minus = omega_{n-1}
FormalCharacter half_spin_char(const GroupId& g, bool plus);
// the two halves of the truncated polynomial model for C_n, p odd:
// first = L(omega_{n-1} + (p-3)/2 omega_n)  (odd half)
// second = L((p-1)/2 omega_n)               (even half)
std::pair<FormalCharacter, FormalCharacter> oscillator_chars(const GroupId& g);
// C_n at p=2: L(omega_n) (orbit of omega_n) and
// L(omega_1 + omega_n) = L(omega_1) (x) L(omega_n)
FormalCharacter c2_spin_char(const GroupId& g);
FormalCharacter c2_q_char(const GroupId& g);

}  // namespace wdeg

#endif

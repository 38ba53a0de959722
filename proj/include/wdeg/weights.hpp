#ifndef WDEG_WEIGHTS_HPP
#define WDEG_WEIGHTS_HPP

#include <string>
#include <vector>

#include "wdeg/base.hpp"
#include "wdeg/rootsys.hpp"

namespace wdeg {

// A weight in fundamental coordinates.  The doubled-eps view is computed on
// demand from the root system.
struct Weight {
  GroupId group;
  std::vector<int64_t> fw;

  Weight() = default;
  Weight(const GroupId& g, std::vector<int64_t> coords);

  bool is_zero() const;
  bool is_dominant() const;
  int64_t coeff_sum() const;

  EpsVec eps() const;  // doubled, canonical for type A

  bool operator==(const Weight& o) const { return group == o.group && fw == o.fw; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  bool operator<(const Weight& o) const { return fw < o.fw; }

  std::string str() const;  // "[a1,a2,...,an]"
};

Weight weight_from_eps(const GroupId& g, const EpsVec& eps);
Weight zero_weight(const GroupId& g);
Weight fundamental_weight(const GroupId& g, int i);  // 1-based; i==0 or n+1 give 0

Weight parse_weight(const GroupId& g, const std::string& text);

Weight add_weights(const Weight& a, const Weight& b);
Weight scale_weight(const Weight& a, int64_t c);

// all coefficients < p
bool is_p_restricted(const Weight& w);

// Base-p layers lambda_0..lambda_k with sum p^j lambda_j == w, every layer
// p-restricted, and lambda_k != 0 unless k == 0.
struct SteinbergDecomposition {
  std::vector<Weight> layers;
  int64_t p = 0;

  Weight reassemble() const;
};

SteinbergDecomposition steinberg_decompose(const Weight& w);

// Type A only: reversed coefficient sequence (highest weight of the dual).
Weight dual_weight(const Weight& w);

// Type A only: sum of k*a_k.
int64_t pdeg(const Weight& w);
int64_t min_pdeg(const Weight& w);  // min(pdeg w, pdeg dual w)

int64_t delta(const Weight& w);  // value on the maximal root; w dominant

// Restriction of a torus character along the standard chain subgroup of
// rank k (the subgroup generated by the last k simple roots).
Weight restrict_weight(const Weight& w, int k);

}  // namespace wdeg

#endif

#ifndef WDEG_CLASSIFY_HPP
#define WDEG_CLASSIFY_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "wdeg/weights.hpp"

namespace wdeg {

// Membership in the restricted multiplicity-free catalog of the group's
// family.  For type C at p=2 this is the basic three-element set; the
// richer char-2 analysis lives in c2_wdeg_class.
bool in_omega_p(const GroupId& g, const Weight& lambda);

// Membership in the full (Frobenius-layered) multiplicity-free catalog;
// for type C at p=2 the layered set carries the adjacent-pair exclusion.
bool in_omega(const GroupId& g, const Weight& lambda);

// One wdeg bound with provenance.  `condition` is nonempty when the rule's
// rank hypothesis is not met at this rank (the bound is then reported but
// not used in the interval).
struct WdegBound {
  mpz_class value;
  std::string source;
  bool is_upper = false;
  std::string condition;
};

struct WdegVerdict {
  std::optional<mpz_class> exact;
  std::string exact_source;
  std::vector<WdegBound> lower;
  std::vector<WdegBound> upper;
  std::vector<WdegBound> conditional;

  mpz_class best_lower() const;                 // >= 1
  std::optional<mpz_class> best_upper() const;  // absent = unbounded above
  bool contains(const mpz_class& v) const;
};

// Weight-degree analysis for type C in characteristic 2.  The layer
// sequence is scanned against the extended catalog {0, w1, wn, w1+wn};
// `l` counts w1+wn layers.  When every layer lies in the extended catalog
// and no adjacent pair is one of the four excluded combinations, the weight
// degree is exactly 2^l; otherwise the linear rank gap applies (for n>=8).
struct C2WdegClass {
  bool layers_in_extended_catalog = false;
  int l = 0;
  bool excluded_pair_present = false;
  std::optional<mpz_class> exact;
  std::optional<int64_t> lower;  // n - 4 - (n mod 4)
  std::string condition;         // set when rank < 8
};

C2WdegClass c2_wdeg_class(const GroupId& g, const Weight& lambda);

int64_t c2_rank_gap(int n);  // n - 4 - (n mod 4)

// f(u_1) = 1, f(u_1,u_2) = u_2 - u_1,
// f(u_1,...,u_l) = (u_2-u_1) f(u_2,...,u_l) + f(u_3,...,u_l).
int64_t kleshchev_f(const std::vector<int64_t>& u);

// Lower bound l-i-1 from a leading-support block tensored against a
// highly-twisted trailing-support restricted weight (or the mirror
// situation); nullopt when the shape hypotheses do not hold.
std::optional<int64_t> twist_gap_lower(const GroupId& g, const Weight& lambda);

// Aggregated verdict from every applicable implemented rule.
WdegVerdict wdeg_verdict(const GroupId& g, const Weight& lambda);

// All dominant type-A weights a_1 w_1 + ... + a_d w_d with sum i*a_i <= d.
std::vector<Weight> enumerate_small_pdeg_weights(const GroupId& g, int64_t d);

mpz_class factorial(int64_t n);

}  // namespace wdeg

#endif

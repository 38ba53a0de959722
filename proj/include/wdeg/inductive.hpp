#ifndef WDEG_INDUCTIVE_HPP
#define WDEG_INDUCTIVE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wdeg/branching.hpp"
#include "wdeg/classify.hpp"

namespace wdeg {

// Catalog atoms of the named level-set systems.  Grammar:
//   O | L | F | T | S | S' | Q | CL[a1,...,ad] | CR[a1,...,ad] | Ld[d] | Rd[d]
// composed as `d0 * Fr(d1) * Fr^2(d2) * ...`.
enum class AtomKind { O, L, F, T, S, Sp, Q, CL, CR, Ld, Rd };

struct Atom {
  AtomKind kind = AtomKind::O;
  std::vector<int64_t> coeffs;  // CL / CR
  int64_t d = 0;                // Ld / Rd

  std::string str() const;
  bool operator==(const Atom& o) const {
    return kind == o.kind && coeffs == o.coeffs && d == o.d;
  }
  bool operator<(const Atom& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (coeffs != o.coeffs) return coeffs < o.coeffs;
    return d < o.d;
  }
};

struct SystemDescriptor {
  Family family = Family::A;
  int64_t p = 2;
  std::vector<Atom> atoms;  // position k is twisted by Fr^k

  std::string str() const;
  bool operator<(const SystemDescriptor& o) const { return atoms < o.atoms; }
};

SystemDescriptor parse_descriptor(Family family, int64_t p, const std::string& text);

// legality of an atom for a family/characteristic, and its minimal level
bool atom_legal(const Atom& a, Family f, int64_t p);
int atom_min_rank(const Atom& a, Family f);
std::set<Weight> atom_level(const Atom& a, const GroupId& g, CharProvider& provider);

// A window of consecutive level sets of an inductive system, together with
// the finite-surrogate check results.
struct InductiveWindow {
  Family family = Family::A;
  int64_t p = 2;
  int n_min = 1, n_max = 1;
  std::map<int, std::set<Weight>> levels;
  std::string provenance;

  // check results keyed by level (filled by check_closure etc.)
  std::map<int, std::string> closure;  // "verified" | "unverified: ..." | "FAILED: ..."
  std::optional<int64_t> delta_value;
  std::string delta_note;
  std::optional<bool> stable;
  std::string stability_note;

  const std::set<Weight>& level(int n) const { return levels.at(n); }
  bool closure_ok() const;  // no FAILED level
  bool closure_fully_verified() const;
};

InductiveWindow realize(const SystemDescriptor& d, int n_min, int n_max, CharProvider& provider);

InductiveWindow fr_twist_window(const InductiveWindow& w, int k);
InductiveWindow tensor_windows(const InductiveWindow& a, const InductiveWindow& b,
                               CharProvider& provider);
InductiveWindow union_windows(const InductiveWindow& a, const InductiveWindow& b);
// levelwise set difference regenerated as its own system
InductiveWindow difference_windows(const InductiveWindow& a, const InductiveWindow& b,
                                   int stabilization, CharProvider& provider);

// Window generated by per-level generator sets: level n collects the
// factors of the restrictions of all generators above n (within the
// window).  Acceptance requires agreement with the recomputation from a
// lower top (stabilization) and containment of the generators.
InductiveWindow generate(Family family, int64_t p, const std::map<int, std::set<Weight>>& gens,
                         int n_min, int n_max, int stabilization, CharProvider& provider);

// closure at every interior level where the provider is feasible
void check_closure(InductiveWindow& w, CharProvider& provider);
// per-level max of delta; flags non-constancy
void check_delta(InductiveWindow& w);

struct BwmBudget {
  int64_t max_pdeg = 2;  // cap on sum i*a_i of a CL/CR atom
};

struct BwmEnumeration {
  std::vector<SystemDescriptor> descriptors;
  bool budget_limited = false;
  std::string note;
};

// All bounded-multiplicity tensor catalogs with twist depth exactly s+1
// positions (0..s).
BwmEnumeration enumerate_bwm(Family family, int64_t p, int s, const BwmBudget& budget = {});

struct BwmVerdict {
  enum class Kind { Bounded, Unbounded, Inconclusive } kind = Kind::Inconclusive;
  std::optional<mpz_class> cap;           // certified max wdeg (Bounded)
  std::optional<int64_t> realized_max;    // observed over the realized window
  std::string cap_condition;              // rank condition on the cap, if any
  std::vector<std::pair<int, int64_t>> growth;  // (rank, lower bound) certificate
  std::string certificate;
  std::string note;
};

BwmVerdict bwm_check(const SystemDescriptor& d, int n_max, CharProvider& provider);
BwmVerdict bwm_check_window(const InductiveWindow& w, CharProvider& provider);

}  // namespace wdeg

#endif

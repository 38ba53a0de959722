#include "wdeg/chars.hpp"

#include <algorithm>
#include <cassert>

namespace wdeg {

namespace {

const RootSystem& rs_of(const GroupId& g) { return root_system(g); }

void require_family(const GroupId& g, Family f, const char* what) {
  if (g.family != f)
    throw InvalidInput(std::string(what) + " is defined for type " +
                       std::string(1, family_letter(f)) + " only");
}

}  // namespace

FormalCharacter::FormalCharacter(const GroupId& g, std::map<EpsVec, int64_t> dominant_mults)
    : g_(g), dom_(std::move(dominant_mults)) {
  const RootSystem& rs = rs_of(g_);
  for (const auto& [w, m] : dom_) {
    if (!rs.is_dominant(w)) throw InvalidInput("character entry is not a dominant weight");
    if (m <= 0) throw InvalidInput("character multiplicities must be positive");
  }
}

void FormalCharacter::add(const EpsVec& rep, int64_t mult) {
  if (mult == 0) return;
  auto& slot = dom_[rep];
  slot += mult;
  if (slot == 0) dom_.erase(rep);
}

int64_t FormalCharacter::dim() const {
  const RootSystem& rs = rs_of(g_);
  int64_t d = 0;
  for (const auto& [w, m] : dom_) d += m * rs.orbit_size(w);
  return d;
}

int64_t FormalCharacter::wdeg() const {
  int64_t m = 0;
  for (const auto& [w, mult] : dom_) m = std::max(m, mult);
  return m;
}

int64_t FormalCharacter::multiplicity(const EpsVec& weight) const {
  auto it = dom_.find(rs_of(g_).dominant_rep(weight));
  return it == dom_.end() ? 0 : it->second;
}

std::vector<Weight> FormalCharacter::maximal_weights() const {
  const RootSystem& rs = rs_of(g_);
  std::vector<EpsVec> maxima;
  for (const auto& [w, m] : dom_) {
    (void)m;
    bool dominated = false;
    for (const auto& [v, m2] : dom_) {
      (void)m2;
      if (v != w && rs.dominance_leq(w, v)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maxima.push_back(w);
  }
  std::sort(maxima.begin(), maxima.end(), std::greater<EpsVec>());
  std::vector<Weight> out;
  out.reserve(maxima.size());
  for (auto& v : maxima) out.push_back(weight_from_eps(g_, v));
  return out;
}

Weight FormalCharacter::highest_weight() const {
  auto m = maximal_weights();
  if (m.size() != 1)
    throw InvalidInput("character has " + std::to_string(m.size()) +
                       " maximal weights, expected a unique highest weight");
  return m[0];
}

std::map<EpsVec, int64_t> FormalCharacter::expand() const {
  const RootSystem& rs = rs_of(g_);
  std::map<EpsVec, int64_t> full;
  for (const auto& [w, m] : dom_)
    for (const auto& v : rs.weyl_orbit(w)) full[v] = m;
  return full;
}

FormalCharacter trivial_char(const GroupId& g) {
  FormalCharacter chi(g);
  chi.add(EpsVec(rs_of(g).eps_dim(), 0), 1);
  return chi;
}

FormalCharacter orbit_char(const GroupId& g, const Weight& dominant) {
  if (!dominant.is_dominant()) throw InvalidInput("orbit_char needs a dominant weight");
  FormalCharacter chi(g);
  chi.add(dominant.eps(), 1);
  return chi;
}

FormalCharacter tensor(const FormalCharacter& a, const FormalCharacter& b) {
  if (a.group() != b.group()) throw InvalidInput("tensor of characters over different groups");
  const RootSystem& rs = rs_of(a.group());
  auto fa = a.expand();
  auto fb = b.expand();
  std::map<EpsVec, int64_t> dom;
  for (const auto& [wa, ma] : fa)
    for (const auto& [wb, mb] : fb) {
      EpsVec s(wa);
      for (size_t i = 0; i < s.size(); ++i) s[i] += wb[i];
      s = rs.canonical(std::move(s));
      if (rs.is_dominant(s)) dom[s] += ma * mb;
    }
  FormalCharacter out(a.group(), std::move(dom));
  assert(out.dim() == a.dim() * b.dim());
  return out;
}

FormalCharacter frobenius_twist(const FormalCharacter& chi, int k) {
  if (k < 0) throw InvalidInput("twist power must be nonnegative");
  if (k == 0) return chi;
  int64_t pk = ipow(chi.group().p, k);
  FormalCharacter out(chi.group());
  for (const auto& [w, m] : chi.dominant_entries()) {
    EpsVec v(w);
    for (auto& x : v) x *= pk;
    out.add(v, m);
  }
  return out;
}

FormalCharacter dual(const FormalCharacter& chi) {
  const RootSystem& rs = rs_of(chi.group());
  FormalCharacter out(chi.group());
  for (const auto& [w, m] : chi.dominant_entries()) {
    EpsVec v(w);
    for (auto& x : v) x = -x;
    out.add(rs.dominant_rep(rs.canonical(std::move(v))), m);
  }
  return out;
}

FormalCharacter natural_char(const GroupId& g) {
  const RootSystem& rs = rs_of(g);
  FormalCharacter chi(g);
  chi.add(fundamental_weight(g, 1).eps(), 1);
  if (g.family == Family::B) chi.add(EpsVec(rs.eps_dim(), 0), 1);  // 2n+1 = 2n + zero weight
  return chi;
}

FormalCharacter wedge_char(const GroupId& g, int i) {
  require_family(g, Family::A, "wedge_char");
  if (i < 0 || i > g.rank + 1) throw InvalidInput("wedge index out of range");
  if (i == 0 || i == g.rank + 1) return trivial_char(g);
  return orbit_char(g, fundamental_weight(g, i));
}

FormalCharacter truncated_sym_char(const GroupId& g, int64_t d) {
  require_family(g, Family::A, "truncated_sym_char");
  const int m = g.rank + 1;
  const int64_t pm1 = g.p - 1;
  if (d < 0 || d > pm1 * m) throw InvalidInput("truncated power degree out of range");
  const RootSystem& rs = rs_of(g);
  FormalCharacter chi(g);
  // monomials b in [0, p-1]^m with sum d; dominant ones are the sorted
  // (descending) exponent vectors, each with multiplicity one
  std::vector<int64_t> b(m, 0);
  int64_t total_count = 0;
  // enumerate non-increasing exponent vectors directly (dominant reps)
  std::function<void(int, int64_t, int64_t)> rec = [&](int pos, int64_t rem, int64_t cap) {
    if (pos == m) {
      if (rem != 0) return;
      EpsVec v(m);
      for (int j = 0; j < m; ++j) v[j] = 2 * b[j];
      v = rs.canonical(std::move(v));
      chi.add(v, 1);
      total_count += rs.orbit_size(v);
      return;
    }
    for (int64_t x = std::min(cap, rem); x >= 0; --x) {
      if (x * (m - pos) < rem) break;  // cannot reach d with non-increasing tail
      b[pos] = x;
      rec(pos + 1, rem - x, x);
    }
    b[pos] = 0;
  };
  rec(0, d, pm1);
  assert(chi.dim() == total_count);
  return chi;
}

FormalCharacter spin_char(const GroupId& g) {
  require_family(g, Family::B, "spin_char");
  return orbit_char(g, fundamental_weight(g, g.rank));
}

FormalCharacter half_spin_char(const GroupId& g, bool plus) {
  require_family(g, Family::D, "half_spin_char");
  return orbit_char(g, fundamental_weight(g, plus ? g.rank : g.rank - 1));
}

std::pair<FormalCharacter, FormalCharacter> oscillator_chars(const GroupId& g) {
  require_family(g, Family::C, "oscillator_chars");
  if (g.p == 2) throw InvalidInput("oscillator characters need odd characteristic");
  const int n = g.rank;
  const int64_t pm1 = g.p - 1;
  const RootSystem& rs = rs_of(g);
  FormalCharacter odd_half(g), even_half(g);
  // monomials b in [0, p-1]^n, weight sum (b_i - (p-1)/2) eps_i, split by
  // the parity of sum b_i
  std::vector<int64_t> b(n, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      EpsVec v(n);
      int64_t s = 0;
      for (int j = 0; j < n; ++j) {
        v[j] = 2 * b[j] - pm1;
        s += b[j];
      }
      if (!rs.is_dominant(v)) return;
      (s % 2 == 0 ? even_half : odd_half).add(v, 1);
      return;
    }
    for (int64_t x = 0; x <= pm1; ++x) {
      b[pos] = x;
      rec(pos + 1);
    }
  };
  rec(0);
  // model checks: dimensions (p^n -+ 1)/2 and the stated highest weights
  int64_t pn = ipow(g.p, n);
  assert(even_half.dim() == (pn + 1) / 2 && odd_half.dim() == (pn - 1) / 2);
  assert(even_half.wdeg() == 1 && odd_half.wdeg() == 1);
  {
    std::vector<int64_t> fw(n, 0);
    fw[n - 1] = (g.p - 1) / 2;
    assert(even_half.highest_weight() == Weight(g, fw));
    std::vector<int64_t> fw1(n, 0);
    fw1[n - 2 >= 0 ? n - 2 : 0] = 1;
    fw1[n - 1] = (g.p - 3) / 2;
    if (n >= 2) assert(odd_half.highest_weight() == Weight(g, fw1));
  }
  return {odd_half, even_half};
}

FormalCharacter c2_spin_char(const GroupId& g) {
  require_family(g, Family::C, "c2_spin_char");
  if (g.p != 2) throw InvalidInput("c2_spin_char is the p=2 model");
  return orbit_char(g, fundamental_weight(g, g.rank));
}

FormalCharacter c2_q_char(const GroupId& g) {
  return tensor(natural_char(g), c2_spin_char(g));
}

}  // namespace wdeg

#include "wdeg/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace wdeg {

namespace {

int64_t dot(const EpsVec& a, const EpsVec& b) {
  int64_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

EpsVec add(const EpsVec& a, const EpsVec& b) {
  EpsVec r(a);
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

EpsVec negate(EpsVec v) {
  for (auto& x : v) x = -x;
  return v;
}

// Sparse matrix as a sorted list of (row, col) -> value entries; the root
// vectors of the classical matrix realizations have at most two entries.
struct SparseMat {
  std::map<std::pair<int, int>, int64_t> e;

  void addEntry(int r, int c, int64_t v) {
    auto& slot = e[{r, c}];
    slot += v;
    if (slot == 0) e.erase({r, c});
  }
  bool zero() const { return e.empty(); }
};

SparseMat mul(const SparseMat& a, const SparseMat& b) {
  SparseMat r;
  for (const auto& [rc1, v1] : a.e)
    for (const auto& [rc2, v2] : b.e)
      if (rc1.second == rc2.first) r.addEntry(rc1.first, rc2.second, v1 * v2);
  return r;
}

SparseMat bracket(const SparseMat& a, const SparseMat& b) {
  SparseMat r = mul(a, b);
  for (const auto& [rc, v] : mul(b, a).e) r.addEntry(rc.first, rc.second, -v);
  return r;
}

// c with a == c*b, or 0 if a is not a scalar multiple of b (b != 0).
int64_t scalar_ratio(const SparseMat& a, const SparseMat& b) {
  if (a.e.size() != b.e.size()) return 0;
  auto ia = a.e.begin();
  auto ib = b.e.begin();
  int64_t ratio = 0;
  for (; ia != a.e.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return 0;
    if (ia->second % ib->second != 0) return 0;
    int64_t c = ia->second / ib->second;
    if (ratio == 0) ratio = c;
    if (c != ratio) return 0;
  }
  return ratio;
}

int64_t multinomial_count(const EpsVec& v) {
  // number of distinct permutations of the entries of v
  std::map<int64_t, int> mult;
  for (auto x : v) mult[x]++;
  int64_t r = 1;
  int placed = 0;
  for (auto& [val, m] : mult) {
    (void)val;
    // r *= C(placed + m, m)
    for (int i = 1; i <= m; ++i) {
      r = r * (placed + i) / i;
    }
    placed += m;
  }
  return r;
}

}  // namespace

RootSystem::RootSystem(const GroupId& g) : g_(g) {
  g_.validate(GroupId::Strictness::Internal);
  build_roots();
  build_chevalley();
}

void RootSystem::build_roots() {
  const int n = g_.rank;
  edim_ = (g_.family == Family::A) ? n + 1 : n;

  auto unit = [&](int i) {
    EpsVec v(edim_, 0);
    v[i] = 2;  // doubled e_i
    return v;
  };
  auto diff = [&](int i, int j) {
    EpsVec v(edim_, 0);
    v[i] = 2;
    v[j] = -2;
    return v;
  };
  auto sum2 = [&](int i, int j) {
    EpsVec v(edim_, 0);
    v[i] = 2;
    v[j] = 2;
    return v;
  };

  simple_.clear();
  positive_.clear();
  fundamental_.clear();

  switch (g_.family) {
    case Family::A: {
      for (int i = 0; i < n; ++i) simple_.push_back(diff(i, i + 1));
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) positive_.push_back(diff(i, j));
      for (int i = 1; i <= n; ++i) {
        EpsVec w(edim_, 0);
        for (int j = 0; j < i; ++j) w[j] = 2;
        fundamental_.push_back(w);
      }
      alpha_max_ = diff(0, n);
      break;
    }
    case Family::B: {
      for (int i = 0; i + 1 < n; ++i) simple_.push_back(diff(i, i + 1));
      simple_.push_back(unit(n - 1));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          positive_.push_back(diff(i, j));
          positive_.push_back(sum2(i, j));
        }
      for (int i = 0; i < n; ++i) positive_.push_back(unit(i));
      for (int i = 1; i < n; ++i) {
        EpsVec w(edim_, 0);
        for (int j = 0; j < i; ++j) w[j] = 2;
        fundamental_.push_back(w);
      }
      fundamental_.push_back(EpsVec(edim_, 1));  // spin weight, halves
      alpha_max_ = (n >= 2) ? sum2(0, 1) : unit(0);
      break;
    }
    case Family::C: {
      for (int i = 0; i + 1 < n; ++i) simple_.push_back(diff(i, i + 1));
      {
        EpsVec v(edim_, 0);
        v[n - 1] = 4;  // 2*eps_n doubled
        simple_.push_back(v);
      }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          positive_.push_back(diff(i, j));
          positive_.push_back(sum2(i, j));
        }
      for (int i = 0; i < n; ++i) {
        EpsVec v(edim_, 0);
        v[i] = 4;
        positive_.push_back(v);
      }
      for (int i = 1; i <= n; ++i) {
        EpsVec w(edim_, 0);
        for (int j = 0; j < i; ++j) w[j] = 2;
        fundamental_.push_back(w);
      }
      {
        EpsVec v(edim_, 0);
        v[0] = 4;
        alpha_max_ = v;
      }
      break;
    }
    case Family::D: {
      for (int i = 0; i + 1 < n; ++i) simple_.push_back(diff(i, i + 1));
      simple_.push_back(sum2(n - 2, n - 1));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          positive_.push_back(diff(i, j));
          positive_.push_back(sum2(i, j));
        }
      for (int i = 1; i <= n - 2; ++i) {
        EpsVec w(edim_, 0);
        for (int j = 0; j < i; ++j) w[j] = 2;
        fundamental_.push_back(w);
      }
      {
        EpsVec w(edim_, 1);
        w[n - 1] = -1;
        fundamental_.push_back(w);  // omega_{n-1}
        fundamental_.push_back(EpsVec(edim_, 1));  // omega_n
      }
      alpha_max_ = sum2(0, 1);
      break;
    }
  }

  // Cartan matrix: cartan_[i][j] = <alpha_i, alpha_j^vee>; row i is alpha_i
  // in fundamental-weight coordinates.
  cartan_.assign(n, std::vector<int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cartan_[i][j] = pairing(simple_[i], simple_[j]);

  // Simple-root coefficients of each positive root, by closing upward from
  // the simples; heights follow.
  const int P = num_positive();
  coeffs_.assign(P, {});
  std::map<EpsVec, int> pos_of;
  for (int i = 0; i < P; ++i) pos_of[positive_[i]] = i;
  {
    std::vector<char> known(P, 0);
    for (int i = 0; i < n; ++i) {
      int idx = pos_of.at(simple_[i]);
      coeffs_[idx].assign(n, 0);
      coeffs_[idx][i] = 1;
      known[idx] = 1;
    }
    bool progress = true;
    while (progress) {
      progress = false;
      for (int r = 0; r < P; ++r) {
        if (known[r]) continue;
        for (int i = 0; i < n; ++i) {
          EpsVec lower(positive_[r]);
          for (int k = 0; k < edim_; ++k) lower[k] -= simple_[i][k];
          auto it = pos_of.find(lower);
          if (it != pos_of.end() && known[it->second]) {
            coeffs_[r] = coeffs_[it->second];
            coeffs_[r][i] += 1;
            known[r] = 1;
            progress = true;
            break;
          }
        }
      }
    }
    for (int r = 0; r < P; ++r) assert(known[r]);
  }

  // PBW order: height, then lex on the doubled eps vector.
  std::vector<int> order(P);
  std::iota(order.begin(), order.end(), 0);
  auto ht = [&](int r) { return std::accumulate(coeffs_[r].begin(), coeffs_[r].end(), 0); };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int ha = ht(a), hb = ht(b);
    if (ha != hb) return ha < hb;
    return positive_[a] < positive_[b];
  });
  {
    std::vector<EpsVec> pos2(P);
    std::vector<std::vector<int>> co2(P);
    for (int i = 0; i < P; ++i) {
      pos2[i] = positive_[order[i]];
      co2[i] = coeffs_[order[i]];
    }
    positive_ = std::move(pos2);
    coeffs_ = std::move(co2);
  }
  height_.resize(P);
  for (int r = 0; r < P; ++r)
    height_[r] = std::accumulate(coeffs_[r].begin(), coeffs_[r].end(), 0);

  // The maximal root is the unique root of top height, hence last in order.
  assert(positive_.back() == alpha_max_);
}

int RootSystem::positive_index(const EpsVec& v) const {
  for (int i = 0; i < num_positive(); ++i)
    if (positive_[i] == v) return i;
  return -1;
}

EpsVec RootSystem::signed_root(int signed_idx) const {
  int P = num_positive();
  if (signed_idx < P) return positive_[signed_idx];
  return negate(positive_[signed_idx - P]);
}

void RootSystem::build_chevalley() {
  const int n = g_.rank;
  const int P = num_positive();

  // Matrix realization of each root vector in the natural representation.
  // Index helpers translate the classical +i / -i / 0 labels into rows.
  std::map<EpsVec, SparseMat> mat;
  auto diffv = [&](int i, int j) {
    EpsVec v(edim_, 0);
    v[i] = 2;
    v[j] = -2;
    return v;
  };

  switch (g_.family) {
    case Family::A: {
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
          if (i != j) {
            SparseMat m;
            m.addEntry(i, j, 1);
            mat[diffv(i, j)] = m;
          }
      break;
    }
    case Family::B: {
      auto pi = [&](int i) { return i; };          // row of v_{i+1}
      auto ni = [&](int i) { return n + i; };      // row of v_{-(i+1)}
      int zi = 2 * n;                              // row of v_0
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) {
            SparseMat m;
            m.addEntry(pi(i), pi(j), 1);
            m.addEntry(ni(j), ni(i), -1);
            mat[diffv(i, j)] = m;
          }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          SparseMat m;
          m.addEntry(pi(i), ni(j), 1);
          m.addEntry(pi(j), ni(i), -1);
          EpsVec v(edim_, 0);
          v[i] = 2;
          v[j] = 2;
          mat[v] = m;
          SparseMat mm;
          mm.addEntry(ni(j), pi(i), 1);
          mm.addEntry(ni(i), pi(j), -1);
          mat[negate(v)] = mm;
        }
      for (int i = 0; i < n; ++i) {
        SparseMat m;
        m.addEntry(pi(i), zi, 2);
        m.addEntry(zi, ni(i), -1);
        EpsVec v(edim_, 0);
        v[i] = 2;
        mat[v] = m;
        SparseMat mm;
        mm.addEntry(ni(i), zi, -2);
        mm.addEntry(zi, pi(i), 1);
        mat[negate(v)] = mm;
      }
      break;
    }
    case Family::C: {
      auto pi = [&](int i) { return i; };
      auto ni = [&](int i) { return n + i; };
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) {
            SparseMat m;
            m.addEntry(pi(i), pi(j), 1);
            m.addEntry(ni(j), ni(i), -1);
            mat[diffv(i, j)] = m;
          }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          SparseMat m;
          m.addEntry(pi(i), ni(j), 1);
          m.addEntry(pi(j), ni(i), 1);
          EpsVec v(edim_, 0);
          v[i] = 2;
          v[j] = 2;
          mat[v] = m;
          SparseMat mm;
          mm.addEntry(ni(j), pi(i), 1);
          mm.addEntry(ni(i), pi(j), 1);
          mat[negate(v)] = mm;
        }
      for (int i = 0; i < n; ++i) {
        SparseMat m;
        m.addEntry(pi(i), ni(i), 1);
        EpsVec v(edim_, 0);
        v[i] = 4;
        mat[v] = m;
        SparseMat mm;
        mm.addEntry(ni(i), pi(i), 1);
        mat[negate(v)] = mm;
      }
      break;
    }
    case Family::D: {
      auto pi = [&](int i) { return i; };
      auto ni = [&](int i) { return n + i; };
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) {
            SparseMat m;
            m.addEntry(pi(i), pi(j), 1);
            m.addEntry(ni(j), ni(i), -1);
            mat[diffv(i, j)] = m;
          }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          SparseMat m;
          m.addEntry(pi(i), ni(j), 1);
          m.addEntry(pi(j), ni(i), -1);
          EpsVec v(edim_, 0);
          v[i] = 2;
          v[j] = 2;
          mat[v] = m;
          SparseMat mm;
          mm.addEntry(ni(j), pi(i), 1);
          mm.addEntry(ni(i), pi(j), -1);
          mat[negate(v)] = mm;
        }
      break;
    }
  }

  // Raw structure constants from the matrices.
  const int S = 2 * P;
  sum_.assign(S, std::vector<int>(S, -1));
  nconst_.assign(S, std::vector<int64_t>(S, 0));

  std::map<EpsVec, int> signed_of;
  for (int i = 0; i < S; ++i) signed_of[signed_root(i)] = i;

  for (int a = 0; a < S; ++a) {
    for (int b = 0; b < S; ++b) {
      if (a == b || neg(a) == b) continue;
      EpsVec s = add(signed_root(a), signed_root(b));
      auto it = signed_of.find(s);
      if (it == signed_of.end()) continue;
      sum_[a][b] = it->second;
      SparseMat br = bracket(mat.at(signed_root(a)), mat.at(signed_root(b)));
      int64_t c = scalar_ratio(br, mat.at(s));
      assert(c != 0);
      nconst_[a][b] = c;
    }
  }

  // Normalize signs so every extraspecial constant is positive.  Flipping
  // x_{+-gamma} by eta_gamma multiplies N_{a,b} by eta_a eta_b eta_{a+b}.
  std::vector<int> eta(P, 0);
  for (int i = 0; i < n; ++i) eta[positive_index(simple_[i])] = 1;
  for (int r = 0; r < P; ++r) {
    if (eta[r] != 0) continue;  // simple
    int a = -1, b = -1;
    for (int cand = 0; cand < P; ++cand) {
      EpsVec rest(positive_[r]);
      for (int k = 0; k < edim_; ++k) rest[k] -= positive_[cand][k];
      int bi = positive_index(rest);
      if (bi >= 0) {
        a = cand;
        b = bi;
        break;
      }
    }
    assert(a >= 0 && eta[a] != 0 && eta[b] != 0);
    int64_t raw = nconst_[a][b];
    eta[r] = (eta[a] * eta[b] * raw > 0) ? 1 : -1;
  }
  auto eta_signed = [&](int s) { return eta[s < P ? s : s - P]; };
  for (int a = 0; a < S; ++a)
    for (int b = 0; b < S; ++b)
      if (sum_[a][b] >= 0)
        nconst_[a][b] *= eta_signed(a) * eta_signed(b) * eta_signed(sum_[a][b]);

  // Consistency of the Cartan normalization: [x_a, x_{-a}] must act on each
  // root vector x_b by <beta, alpha^vee>.
  for (int a = 0; a < P; ++a) {
    SparseMat xa = mat.at(positive_[a]);
    SparseMat xna = mat.at(negate(positive_[a]));
    SparseMat h = bracket(xa, xna);
    for (int b = 0; b < S && b < 8; ++b) {
      SparseMat hb = bracket(h, mat.at(signed_root(b)));
      int64_t want = pairing(signed_root(b), positive_[a]);
      if (want == 0) {
        assert(hb.zero());
      } else {
        assert(scalar_ratio(hb, mat.at(signed_root(b))) == want);
      }
    }
  }
}

int64_t RootSystem::pairing(const EpsVec& weight, const EpsVec& root) const {
  if (weight.size() != static_cast<size_t>(edim_) || root.size() != static_cast<size_t>(edim_))
    throw InvalidInput("pairing: vectors over a different group");
  int64_t num = 2 * dot(weight, root);
  int64_t den = dot(root, root);
  if (num % den != 0) throw InvalidInput("pairing: weight not in the weight lattice");
  return num / den;
}

int64_t RootSystem::delta(const EpsVec& w) const {
  if (!is_dominant(w)) throw InvalidInput("delta requires a dominant weight");
  return pairing(w, alpha_max_);
}

bool RootSystem::is_dominant(const EpsVec& v) const {
  const int n = g_.rank;
  switch (g_.family) {
    case Family::A:
      for (int i = 0; i + 1 <= n; ++i)
        if (v[i] < v[i + 1]) return false;
      return true;
    case Family::B:
    case Family::C:
      for (int i = 0; i + 1 < n; ++i)
        if (v[i] < v[i + 1]) return false;
      return v[n - 1] >= 0;
    case Family::D:
      for (int i = 0; i + 1 < n; ++i)
        if (v[i] < v[i + 1]) return false;
      return n >= 2 && v[n - 2] >= std::abs(v[n - 1]);
  }
  return false;
}

EpsVec RootSystem::canonical(EpsVec v) const {
  if (g_.family != Family::A) return v;
  int64_t m = *std::min_element(v.begin(), v.end());
  for (auto& x : v) x -= m;
  return v;
}

EpsVec RootSystem::dominant_rep(const EpsVec& w) const {
  EpsVec v(w);
  switch (g_.family) {
    case Family::A:
      std::sort(v.begin(), v.end(), std::greater<int64_t>());
      return canonical(std::move(v));
    case Family::B:
    case Family::C:
      for (auto& x : v) x = std::abs(x);
      std::sort(v.begin(), v.end(), std::greater<int64_t>());
      return v;
    case Family::D: {
      int negs = 0;
      for (auto& x : v) {
        if (x < 0) {
          ++negs;
          x = -x;
        }
      }
      std::sort(v.begin(), v.end(), std::greater<int64_t>());
      if (negs % 2 == 1) v.back() = -v.back();
      return v;
    }
  }
  return v;
}

std::vector<EpsVec> RootSystem::weyl_orbit(const EpsVec& w) const {
  EpsVec dom = dominant_rep(w);
  std::vector<EpsVec> out;
  EpsVec base(dom);
  if (g_.family == Family::D && base.back() < 0) base.back() = -base.back();
  std::sort(base.begin(), base.end());
  bool odd_start = (g_.family == Family::D && dom.back() < 0);
  do {
    if (g_.family == Family::A) {
      out.push_back(canonical(base));
      continue;
    }
    // sign patterns on the nonzero entries
    std::vector<int> nz;
    for (size_t i = 0; i < base.size(); ++i)
      if (base[i] != 0) nz.push_back(static_cast<int>(i));
    bool has_zero = nz.size() < base.size();
    int k = static_cast<int>(nz.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
      int minus = __builtin_popcount(mask);
      if (g_.family == Family::D && !has_zero && (minus % 2) != (odd_start ? 1 : 0)) continue;
      EpsVec v(base);
      for (int t = 0; t < k; ++t)
        if (mask & (1 << t)) v[nz[t]] = -v[nz[t]];
      out.push_back(v);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

int64_t RootSystem::orbit_size(const EpsVec& dom) const {
  switch (g_.family) {
    case Family::A:
      return multinomial_count(dom);
    case Family::B:
    case Family::C: {
      EpsVec a(dom);
      int nz = 0;
      for (auto& x : a) {
        x = std::abs(x);
        if (x != 0) nz++;
      }
      return multinomial_count(a) << nz;
    }
    case Family::D: {
      EpsVec a(dom);
      int nz = 0;
      for (auto& x : a) {
        x = std::abs(x);
        if (x != 0) nz++;
      }
      bool has_zero = nz < static_cast<int>(a.size());
      int64_t arr = multinomial_count(a);
      if (nz == 0) return arr;
      return has_zero ? (arr << nz) : (arr << (nz - 1));
    }
  }
  return 0;
}

bool RootSystem::nonneg_root_combination(const EpsVec& vin, std::vector<int64_t>* coeffs) const {
  const int n = g_.rank;
  EpsVec v(vin);
  if (g_.family == Family::A) {
    int64_t s = std::accumulate(v.begin(), v.end(), int64_t{0});
    if (s % (n + 1) != 0) return false;
    int64_t shift = s / (n + 1);
    if (shift % 2 != 0) return false;  // doubled coords: true shift must be integral
    for (auto& x : v) x -= shift;
  }
  std::vector<int64_t> c(n, 0);
  int64_t run = 0;
  switch (g_.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) {
        run += v[i];
        if (run < 0 || run % 2 != 0) return false;
        c[i] = run / 2;
      }
      run += v[n];
      if (run != 0) return false;
      break;
    case Family::B:
      for (int i = 0; i < n; ++i) {
        run += v[i];
        if (run < 0 || run % 2 != 0) return false;
        c[i] = run / 2;
      }
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) {
        run += v[i];
        if (run < 0 || run % 2 != 0) return false;
        c[i] = run / 2;
      }
      run += v[n - 1];
      if (run < 0 || run % 4 != 0) return false;
      c[n - 1] = run / 4;
      break;
    case Family::D: {
      for (int i = 0; i + 2 < n; ++i) {
        run += v[i];
        if (run < 0 || run % 2 != 0) return false;
        c[i] = run / 2;
      }
      int64_t pm1 = run + v[n - 2];          // 2(c_{n-1} + c_n)
      int64_t pn = pm1 + v[n - 1];           // 4 c_n
      if (pn < 0 || pn % 4 != 0) return false;
      int64_t cn = pn / 4;
      int64_t cm1_num = pm1 - 2 * cn;        // 2 c_{n-1}
      if (cm1_num < 0 || cm1_num % 2 != 0) return false;
      c[n - 1] = cn;
      c[n - 2] = cm1_num / 2;
      break;
    }
  }
  if (coeffs) *coeffs = std::move(c);
  return true;
}

bool RootSystem::dominance_leq(const EpsVec& mu, const EpsVec& lambda) const {
  EpsVec d(lambda);
  for (int i = 0; i < edim_; ++i) d[i] -= mu[i];
  return nonneg_root_combination(d);
}

const RootSystem& root_system(const GroupId& g) {
  static std::mutex mu;
  static std::map<std::tuple<char, int, int64_t>, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(family_letter(g.family), g.rank, g.p);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<RootSystem>(g)).first;
  return *it->second;
}

}  // namespace wdeg

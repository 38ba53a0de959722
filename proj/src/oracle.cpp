#include "wdeg/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace wdeg {

namespace {

int64_t dot_d(const EpsVec& a, const EpsVec& b) {
  int64_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

using CacheKey = std::pair<std::string, std::vector<int64_t>>;
CacheKey key_of(const GroupId& g, const Weight& w) { return {g.str(), w.fw}; }

// ---------------------------------------------------------------------
// Straightening engine for the universal highest-weight module: vectors
// are integer combinations of ordered monomials in the lowering operators
// (exponent vectors over the positive roots in PBW order) applied to the
// highest weight vector.
// ---------------------------------------------------------------------

using Mono = std::vector<int32_t>;

struct MonoHash {
  size_t operator()(const Mono& m) const {
    size_t h = 1469598103934665603ull;
    for (int32_t x : m) h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

class VermaSpace {
 public:
  using Vec = std::map<Mono, mpz_class>;

  VermaSpace(const RootSystem& rs, EpsVec lambda_eps)
      : rs_(rs), lam_(std::move(lambda_eps)), P_(rs.num_positive()) {
    ecache_.resize(P_);
    fcache_.resize(P_);
  }

  // weight of the vector f^m v+ as a doubled eps vector
  EpsVec mono_weight(const Mono& m) const {
    EpsVec w(lam_);
    for (int r = 0; r < P_; ++r) {
      if (m[r] == 0) continue;
      const EpsVec& a = rs_.positive_root(r);
      for (size_t j = 0; j < w.size(); ++j) w[j] -= m[r] * a[j];
    }
    return w;
  }

  // left multiplication by the lowering operator of positive root b
  const Vec& mul_f_mono(int b, const Mono& m) {
    auto it = fcache_[b].find(m);
    if (it != fcache_[b].end()) return it->second;
    Vec out;
    int i = first_index(m);
    if (i < 0 || b <= i) {
      Mono t(m);
      t[b] += 1;
      out[std::move(t)] = 1;
    } else {
      Mono rest(m);
      rest[i] -= 1;
      // f_b f_i X = f_i f_b X + [f_b, f_i] X
      for (const auto& [mm, c] : mul_f_mono(b, rest)) {
        Mono t(mm);
        t[i] += 1;
        out[std::move(t)] += c;
      }
      int s = rs_.sum_index(b, i);
      if (s >= 0) {
        int64_t N = rs_.structure_constant(rs_.neg(b), rs_.neg(i));
        for (const auto& [mm, c] : mul_f_mono(s, rest)) out[mm] += N * c;
      }
      prune(out);
    }
    return fcache_[b].emplace(m, std::move(out)).first->second;
  }

  // application of the raising operator of positive root a
  const Vec& apply_e(int a, const Mono& m) {
    auto it = ecache_[a].find(m);
    if (it != ecache_[a].end()) return it->second;
    Vec out;
    int i = first_index(m);
    if (i >= 0) {
      Mono rest(m);
      rest[i] -= 1;
      // e_a f_i X = f_i e_a X + [e_a, f_i] X
      for (const auto& [mm, c] : apply_e(a, rest))
        for (const auto& [mm2, c2] : mul_f_mono(i, mm)) out[mm2] += c * c2;
      if (a == i) {
        int64_t sc = rs_.pairing(mono_weight(rest), rs_.positive_root(i));
        out[rest] += sc;
      } else {
        int s = rs_.sum_index(a, rs_.neg(i));
        if (s >= 0) {
          int64_t N = rs_.structure_constant(a, rs_.neg(i));
          if (s < P_) {
            for (const auto& [mm, c] : apply_e(s, rest)) out[mm] += N * c;
          } else {
            for (const auto& [mm, c] : mul_f_mono(s - P_, rest)) out[mm] += N * c;
          }
        }
      }
      prune(out);
    }
    return ecache_[a].emplace(m, std::move(out)).first->second;
  }

  Vec apply_e_vec(int a, const Vec& v) {
    Vec out;
    for (const auto& [m, c] : v)
      for (const auto& [mm, c2] : apply_e(a, m)) out[mm] += c * c2;
    prune(out);
    return out;
  }

 private:
  const RootSystem& rs_;
  EpsVec lam_;
  int P_;
  std::vector<std::unordered_map<Mono, Vec, MonoHash>> ecache_;
  std::vector<std::unordered_map<Mono, Vec, MonoHash>> fcache_;

  static int first_index(const Mono& m) {
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) return static_cast<int>(i);
    return -1;
  }
  static void prune(Vec& v) {
    for (auto it = v.begin(); it != v.end();)
      it = (it->second == 0) ? v.erase(it) : std::next(it);
  }
};

// exponent vectors over the positive roots with prescribed simple-root content
std::vector<Mono> enumerate_monomials(const RootSystem& rs, const std::vector<int64_t>& content,
                                      int cap) {
  const int P = rs.num_positive();
  const int n = rs.rank();
  std::vector<Mono> out;
  Mono cur(P, 0);
  std::vector<int64_t> rem(content);
  std::function<void(int)> rec = [&](int r) {
    if (static_cast<int>(out.size()) > cap) return;
    if (std::all_of(rem.begin(), rem.end(), [](int64_t x) { return x == 0; })) {
      out.push_back(cur);
      return;
    }
    if (r < 0) return;
    const auto& co = rs.simple_coeffs(r);
    int64_t emax = INT64_MAX;
    for (int j = 0; j < n; ++j)
      if (co[j] > 0) emax = std::min(emax, rem[j] / co[j]);
    for (int64_t e = emax; e >= 0; --e) {
      cur[r] = static_cast<int32_t>(e);
      for (int j = 0; j < n; ++j) rem[j] -= e * co[j];
      rec(r - 1);
      for (int j = 0; j < n; ++j) rem[j] += e * co[j];
      cur[r] = 0;
    }
  };
  rec(P - 1);
  return out;
}

mpz_class mono_factorial(const Mono& m) {
  mpz_class r = 1;
  for (int32_t e : m)
    for (int32_t i = 2; i <= e; ++i) r *= i;
  return r;
}

EpsVec rho_doubled(const RootSystem& rs) {
  EpsVec rho(rs.eps_dim(), 0);
  for (const auto& f : rs.fundamental_weights())
    for (size_t j = 0; j < rho.size(); ++j) rho[j] += f[j];
  return rho;
}

// type A: shift a difference vector into the sum-zero representative
EpsVec normalize_difference(const RootSystem& rs, EpsVec d) {
  if (rs.group().family != Family::A) return d;
  int64_t s = std::accumulate(d.begin(), d.end(), int64_t{0});
  int64_t m = static_cast<int64_t>(d.size());
  if (s % m != 0) throw std::logic_error("difference not in the root lattice");
  int64_t shift = s / m;
  for (auto& x : d) x -= shift;
  return d;
}

}  // namespace

void Oracle::guard(const GroupId& g, const Weight& lambda) const {
  g.validate(GroupId::Strictness::Internal);
  if (g.rank > lim_.max_rank)
    throw ResourceRefusal("rank " + std::to_string(g.rank) + " exceeds the configured limit " +
                          std::to_string(lim_.max_rank));
  if (!lambda.is_dominant()) throw InvalidInput("oracle needs a dominant weight");
  if (lambda.group != g) throw InvalidInput("weight is over a different group");
}

mpz_class Oracle::weyl_dim(const GroupId& g, const Weight& lambda) const {
  guard(g, lambda);
  const RootSystem& rs = root_system(g);
  EpsVec rho = rho_doubled(rs);
  EpsVec lr = lambda.eps();
  for (size_t i = 0; i < lr.size(); ++i) lr[i] += rho[i];
  mpq_class prod = 1;
  for (const auto& a : rs.positive_roots()) {
    prod *= mpq_class(dot_d(lr, a), dot_d(rho, a));
  }
  prod.canonicalize();
  if (prod.get_den() != 1) throw std::logic_error("Weyl dimension not integral");
  return prod.get_num();
}

std::vector<Weight> Oracle::dominant_below(const GroupId& g, const Weight& lambda) const {
  guard(g, lambda);
  const RootSystem& rs = root_system(g);
  const int n = g.rank;
  // invert the Cartan matrix over the rationals
  std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) inv[i][j] = rs.cartan()[i][j];
    inv[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (inv[piv][col] == 0) ++piv;
    std::swap(inv[col], inv[piv]);
    mpq_class d = inv[col][col];
    for (int c = 0; c < 2 * n; ++c) inv[col][c] /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || inv[r][col] == 0) continue;
      mpq_class f = inv[r][col];
      for (int c = 0; c < 2 * n; ++c) inv[r][c] -= f * inv[col][c];
    }
  }
  // c = (C^T)^{-1} (lambda - mu), so with mu >= 0 componentwise and the
  // inverse entries positive, c_i <= sum_j invC[j][i] lambda_j
  std::vector<int64_t> bound(n, 0);
  mpz_class box = 1;
  for (int i = 0; i < n; ++i) {
    mpq_class s = 0;
    for (int j = 0; j < n; ++j) {
      assert(inv[j][n + i] > 0);
      s += inv[j][n + i] * lambda.fw[j];
    }
    mpz_class fl = s.get_num() / s.get_den();
    bound[i] = fl.get_si();
    box *= bound[i] + 1;
  }
  if (box > 5000000)
    throw ResourceRefusal("dominant-weight enumeration box too large (" + box.get_str() + ")");

  std::vector<Weight> out;
  std::vector<int64_t> c(n, 0), fw(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      for (int j = 0; j < n; ++j) {
        fw[j] = lambda.fw[j];
        for (int t = 0; t < n; ++t) fw[j] -= c[t] * rs.cartan()[t][j];
        if (fw[j] < 0) return;
      }
      out.emplace_back(g, fw);
      return;
    }
    for (c[i] = 0; c[i] <= bound[i]; ++c[i]) rec(i + 1);
    c[i] = 0;
  };
  rec(0);
  // deterministic order only; the recursion sorts by true height itself
  std::sort(out.begin(), out.end());
  return out;
}

FormalCharacter Oracle::freudenthal_char(const GroupId& g, const Weight& lambda) {
  guard(g, lambda);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = freudenthal_cache_.find(key_of(g, lambda));
    if (it != freudenthal_cache_.end()) return it->second;
  }
  const RootSystem& rs = root_system(g);
  EpsVec rho = rho_doubled(rs);
  EpsVec lam = lambda.eps();

  std::vector<Weight> doms = dominant_below(g, lambda);
  // order by the height of lambda - mu
  std::vector<std::pair<int64_t, Weight>> byht;
  for (const auto& mu : doms) {
    EpsVec d(lam);
    EpsVec me = mu.eps();
    for (size_t i = 0; i < d.size(); ++i) d[i] -= me[i];
    std::vector<int64_t> c;
    bool ok = rs.nonneg_root_combination(d, &c);
    assert(ok);
    (void)ok;
    byht.push_back({std::accumulate(c.begin(), c.end(), int64_t{0}), mu});
  }
  std::sort(byht.begin(), byht.end(),
            [](const auto& a, const auto& b) { return a.first != b.first ? a.first < b.first : a.second.fw < b.second.fw; });

  std::map<EpsVec, int64_t> mult;  // dominant rep (doubled eps) -> multiplicity
  for (const auto& [ht, mu] : byht) {
    EpsVec me = mu.eps();
    if (ht == 0) {
      mult[me] = 1;
      continue;
    }
    int64_t num = 0;
    for (const auto& alpha : rs.positive_roots()) {
      for (int64_t k = 1;; ++k) {
        EpsVec nu(me);
        for (size_t i = 0; i < nu.size(); ++i) nu[i] += k * alpha[i];
        auto it = mult.find(rs.dominant_rep(rs.canonical(nu)));
        if (it == mult.end()) break;
        num += it->second * dot_d(nu, alpha);
      }
    }
    EpsVec d(lam);
    for (size_t i = 0; i < d.size(); ++i) d[i] -= me[i];
    d = normalize_difference(rs, d);
    EpsVec s(lam);
    for (size_t i = 0; i < s.size(); ++i) s[i] += me[i] + 2 * rho[i];
    int64_t denom = dot_d(d, s);
    assert(denom > 0);
    assert((2 * num) % denom == 0);
    int64_t m = 2 * num / denom;
    assert(m > 0);
    mult[me] = m;
  }
  FormalCharacter chi(g, std::move(mult));
  assert(chi.dim() == weyl_dim(g, lambda));
  std::lock_guard<std::mutex> lock(mu_);
  return freudenthal_cache_.emplace(key_of(g, lambda), std::move(chi)).first->second;
}

FormalCharacter Oracle::simple_char_gram(const GroupId& g, const Weight& lambda,
                                         std::vector<GramReport>* reports) {
  mpz_class wd = weyl_dim(g, lambda);
  if (wd > lim_.max_weyl_dim)
    throw ResourceRefusal("Weyl dimension " + wd.get_str() + " exceeds the configured limit " +
                          std::to_string(lim_.max_weyl_dim));
  const RootSystem& rs = root_system(g);
  FormalCharacter weyl = freudenthal_char(g, lambda);
  EpsVec lam = lambda.eps();
  VermaSpace vs(rs, lam);

  FormalCharacter out(g);
  for (const auto& [me, wmult] : weyl.dominant_entries()) {
    EpsVec d(lam);
    for (size_t i = 0; i < d.size(); ++i) d[i] -= me[i];
    std::vector<int64_t> content;
    bool ok = rs.nonneg_root_combination(d, &content);
    assert(ok);
    (void)ok;
    std::vector<Mono> monos = enumerate_monomials(rs, content, lim_.max_weight_space);
    if (static_cast<int>(monos.size()) > lim_.max_weight_space)
      throw ResourceRefusal("weight space spanning set exceeds " +
                            std::to_string(lim_.max_weight_space) + " monomials");
    const int K = static_cast<int>(monos.size());
    std::map<Mono, int> index;
    for (int i = 0; i < K; ++i) index[monos[i]] = i;

    IntMatrix gram(K, std::vector<mpz_class>(K, 0));
    std::vector<mpz_class> facts(K);
    for (int i = 0; i < K; ++i) facts[i] = mono_factorial(monos[i]);

    // one column per monomial B: raise by all exponent patterns A with the
    // same simple-root content, sharing prefixes of the raising chain
    const int n = g.rank;
    const int P = rs.num_positive();
    for (int bcol = 0; bcol < K; ++bcol) {
      VermaSpace::Vec w0;
      w0[monos[bcol]] = 1;
      Mono acur(P, 0);
      std::vector<int64_t> rem(content);
      std::function<void(int, const VermaSpace::Vec&)> rec = [&](int r, const VermaSpace::Vec& w) {
        if (w.empty()) return;
        bool done = std::all_of(rem.begin(), rem.end(), [](int64_t x) { return x == 0; });
        if (done) {
          auto it = w.find(Mono(P, 0));
          if (it != w.end()) {
            auto ia = index.find(acur);
            assert(ia != index.end());
            mpz_class val = it->second;
            mpq_class q(val);
            q /= facts[ia->second];
            q /= facts[bcol];
            q.canonicalize();
            if (q.get_den() != 1)
              throw std::logic_error("contravariant Gram entry is not integral");
            gram[ia->second][bcol] = q.get_num();
          }
          // continue: larger exponent patterns cannot re-enter (content is zero)
          return;
        }
        if (r == P) return;
        // exponent 0 on root r
        rec(r + 1, w);
        const auto& co = rs.simple_coeffs(r);
        VermaSpace::Vec cur(w);
        int step = 0;
        while (true) {
          bool feasible = true;
          for (int j = 0; j < n; ++j)
            if (rem[j] < co[j]) feasible = false;
          if (!feasible) break;
          cur = vs.apply_e_vec(r, cur);
          if (cur.empty()) {
            // restore rem before unwinding
            break;
          }
          ++step;
          acur[r] += 1;
          for (int j = 0; j < n; ++j) rem[j] -= co[j];
          rec(r + 1, cur);
        }
        acur[r] -= step;
        for (int j = 0; j < n; ++j) rem[j] += step * co[j];
      };
      rec(0, w0);
    }

    // symmetry of the contravariant form doubles as a consistency check
    for (int i = 0; i < K; ++i)
      for (int j = i + 1; j < K; ++j)
        if (gram[i][j] != gram[j][i]) throw std::logic_error("Gram matrix asymmetric");

    int rq = rank_over_q(gram);
    if (rq != wmult)
      throw std::logic_error("rational Gram rank disagrees with the recursion multiplicity");
    int rp = rank_mod_p(gram, g.p);
    if (reports) {
      GramReport rep;
      rep.mu = weight_from_eps(g, me);
      rep.weyl_multiplicity = wmult;
      rep.spanning_size = K;
      rep.gram = gram;
      rep.rank_q = rq;
      rep.rank_p = rp;
      reports->push_back(std::move(rep));
    }
    if (rp > 0) out.add(me, rp);
  }
  assert(out.multiplicity(lambda) == 1);
  return out;
}

namespace {

std::string disk_key(const GroupId& g, const Weight& w) {
  std::string k = "simple-v1_" + g.short_str() + "_p" + std::to_string(g.p) + "_";
  for (size_t i = 0; i < w.fw.size(); ++i) {
    if (i) k += "-";
    k += std::to_string(w.fw[i]);
  }
  return k;
}

std::string serialize_char(const FormalCharacter& chi) {
  std::string s;
  for (const auto& [eps, m] : chi.dominant_entries()) {
    Weight w = weight_from_eps(chi.group(), eps);
    for (size_t i = 0; i < w.fw.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(w.fw[i]);
    }
    s += "=" + std::to_string(m) + "\n";
  }
  return s;
}

bool deserialize_char(const GroupId& g, const std::string& payload, FormalCharacter* out) {
  FormalCharacter chi(g);
  size_t pos = 0;
  while (pos < payload.size()) {
    size_t nl = payload.find('\n', pos);
    if (nl == std::string::npos) nl = payload.size();
    std::string line = payload.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) return false;
    try {
      Weight w = parse_weight(g, line.substr(0, eq));
      chi.add(w.eps(), std::stoll(line.substr(eq + 1)));
    } catch (const std::exception&) {
      return false;
    }
  }
  if (chi.empty()) return false;
  *out = std::move(chi);
  return true;
}

}  // namespace

FormalCharacter Oracle::simple_char(const GroupId& g, const Weight& lambda, bool direct) {
  guard(g, lambda);
  if (!direct) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = simple_cache_.find(key_of(g, lambda));
    if (it != simple_cache_.end()) return it->second;
  }
  if (!direct && disk_load_) {
    std::string payload;
    FormalCharacter cached(g);
    if (disk_load_(disk_key(g, lambda), &payload) && deserialize_char(g, payload, &cached)) {
      std::lock_guard<std::mutex> lock(mu_);
      simple_cache_.emplace(key_of(g, lambda), cached);
      return cached;
    }
  }
  auto sd = steinberg_decompose(lambda);
  FormalCharacter result(g);
  if (!direct && sd.layers.size() > 1) {
    result = simple_char(g, sd.layers[0]);
    for (size_t k = 1; k < sd.layers.size(); ++k)
      result = tensor(result, frobenius_twist(simple_char(g, sd.layers[k]), static_cast<int>(k)));
  } else {
    result = simple_char_gram(g, lambda, nullptr);
  }
  if (!direct) {
    if (disk_store_) disk_store_(disk_key(g, lambda), serialize_char(result));
    std::lock_guard<std::mutex> lock(mu_);
    simple_cache_.emplace(key_of(g, lambda), result);
  }
  return result;
}

int64_t Oracle::wdeg(const GroupId& g, const Weight& lambda) {
  return simple_char(g, lambda).wdeg();
}

std::vector<GramReport> Oracle::gram_reports(const GroupId& g, const Weight& lambda) {
  guard(g, lambda);
  std::vector<GramReport> reports;
  simple_char_gram(g, lambda, &reports);
  return reports;
}

Oracle& shared_oracle() {
  static Oracle oracle;
  return oracle;
}

}  // namespace wdeg

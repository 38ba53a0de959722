#include "wdeg/classify.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>

namespace wdeg {

namespace {

// support indices (1-based) of nonzero fundamental coefficients
std::vector<int> support(const Weight& w) {
  std::vector<int> s;
  for (int i = 0; i < w.group.rank; ++i)
    if (w.fw[i] != 0) s.push_back(i + 1);
  return s;
}

bool is_c2_w1(const Weight& w) { return w == fundamental_weight(w.group, 1); }
bool is_c2_wn(const Weight& w) { return w == fundamental_weight(w.group, w.group.rank); }
bool is_c2_w1wn(const Weight& w) {
  return w == add_weights(fundamental_weight(w.group, 1), fundamental_weight(w.group, w.group.rank));
}

}  // namespace

mpz_class factorial(int64_t n) {
  mpz_class r = 1;
  for (int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

bool in_omega_p(const GroupId& g, const Weight& lambda) {
  g.validate();
  if (!lambda.is_dominant()) throw InvalidInput("in_omega_p needs a dominant weight");
  if (!is_p_restricted(lambda)) throw InvalidInput("in_omega_p needs a p-restricted weight");
  const int n = g.rank;
  auto s = support(lambda);
  switch (g.family) {
    case Family::A: {
      if (s.empty()) return true;
      if (s.size() == 1) {
        int k = s[0];
        int64_t a = lambda.fw[k - 1];
        return a == 1 || a == g.p - 1 || k == 1 || k == n;
      }
      if (s.size() == 2 && s[1] == s[0] + 1)
        return lambda.fw[s[0] - 1] + lambda.fw[s[1] - 1] == g.p - 1;
      return false;
    }
    case Family::B:
      return lambda.is_zero() || lambda == fundamental_weight(g, 1) ||
             lambda == fundamental_weight(g, n);
    case Family::C: {
      if (g.p == 2)
        return lambda.is_zero() || is_c2_w1(lambda) || is_c2_wn(lambda);
      if (lambda.is_zero() || lambda == fundamental_weight(g, 1)) return true;
      std::vector<int64_t> half(n, 0);
      half[n - 1] = (g.p - 1) / 2;
      if (lambda == Weight(g, half)) return true;
      std::vector<int64_t> mixed(n, 0);
      if (n >= 2) {
        mixed[n - 2] = 1;
        mixed[n - 1] = (g.p - 3) / 2;
        if (lambda == Weight(g, mixed)) return true;
      }
      return false;
    }
    case Family::D:
      return lambda.is_zero() || lambda == fundamental_weight(g, 1) ||
             lambda == fundamental_weight(g, n - 1) || lambda == fundamental_weight(g, n);
  }
  return false;
}

bool in_omega(const GroupId& g, const Weight& lambda) {
  g.validate();
  if (!lambda.is_dominant()) throw InvalidInput("in_omega needs a dominant weight");
  auto sd = steinberg_decompose(lambda);
  for (const auto& layer : sd.layers)
    if (!in_omega_p(g, layer)) return false;
  if (g.family == Family::C && g.p == 2) {
    for (size_t j = 0; j + 1 < sd.layers.size(); ++j)
      if (is_c2_wn(sd.layers[j]) && is_c2_w1(sd.layers[j + 1])) return false;
  }
  return true;
}

int64_t c2_rank_gap(int n) { return n - 4 - (n % 4); }

C2WdegClass c2_wdeg_class(const GroupId& g, const Weight& lambda) {
  g.validate();
  if (g.family != Family::C || g.p != 2)
    throw InvalidInput("c2_wdeg_class applies to type C in characteristic 2");
  if (!lambda.is_dominant()) throw InvalidInput("c2_wdeg_class needs a dominant weight");

  C2WdegClass out;
  auto sd = steinberg_decompose(lambda);
  out.layers_in_extended_catalog = true;
  for (const auto& layer : sd.layers) {
    if (layer.is_zero() || is_c2_w1(layer) || is_c2_wn(layer)) continue;
    if (is_c2_w1wn(layer)) {
      out.l++;
      continue;
    }
    out.layers_in_extended_catalog = false;
  }
  auto heavy = [&](const Weight& w) { return is_c2_wn(w) || is_c2_w1wn(w); };
  auto light = [&](const Weight& w) { return is_c2_w1(w) || is_c2_w1wn(w); };
  for (size_t j = 0; j + 1 < sd.layers.size(); ++j)
    if (heavy(sd.layers[j]) && light(sd.layers[j + 1])) out.excluded_pair_present = true;

  if (out.layers_in_extended_catalog && !out.excluded_pair_present) {
    mpz_class e = 1;
    e <<= out.l;
    out.exact = e;
  } else {
    out.lower = c2_rank_gap(g.rank);
    if (g.rank < 8) out.condition = "rank >= 8";
  }
  return out;
}

int64_t kleshchev_f(const std::vector<int64_t>& u) {
  if (u.empty()) throw InvalidInput("kleshchev_f needs a nonempty sequence");
  for (size_t i = 0; i + 1 < u.size(); ++i)
    if (u[i] >= u[i + 1]) throw InvalidInput("kleshchev_f needs a strictly increasing sequence");
  std::function<int64_t(size_t)> f = [&](size_t start) -> int64_t {
    size_t len = u.size() - start;
    if (len == 0) return 1;  // empty tail term in the three-term recursion
    if (len == 1) return 1;
    if (len == 2) return u[start + 1] - u[start];
    return (u[start + 1] - u[start]) * f(start + 1) + f(start + 2);
  };
  return f(0);
}

std::optional<int64_t> twist_gap_lower(const GroupId& g, const Weight& lambda) {
  if (g.family != Family::A) return std::nullopt;
  auto sd = steinberg_decompose(lambda);
  size_t s = sd.layers.size() - 1;
  if (s == 0) return std::nullopt;
  const Weight& top = sd.layers[s];
  if (top.is_zero()) return std::nullopt;
  // head = sum of the lower layers as a single weight
  Weight head = zero_weight(g);
  int64_t pk = 1;
  bool head_zero = true;
  size_t head_top = 0;
  for (size_t t = 0; t < s; ++t) {
    if (!sd.layers[t].is_zero()) {
      head_zero = false;
      head_top = t;
    }
    head = add_weights(head, scale_weight(sd.layers[t], pk));
    pk *= g.p;
  }
  if (head_zero || head_top + 1 != s) return std::nullopt;
  if (delta(head) < ipow(g.p, static_cast<int>(s))) return std::nullopt;
  auto hs = support(head);
  auto ts = support(top);
  // leading-support head against trailing-support twisted factor
  {
    int i = hs.back(), l = ts.front();
    if (i < l - 1) return l - i - 1;
  }
  // mirror: trailing-support head against leading-support twisted factor
  {
    int i = ts.back(), l = hs.front();
    if (i < l - 1) return l - i - 1;
  }
  return std::nullopt;
}

mpz_class WdegVerdict::best_lower() const {
  mpz_class best = 1;
  if (exact) return *exact;
  for (const auto& b : lower) best = std::max(best, b.value);
  return best;
}

std::optional<mpz_class> WdegVerdict::best_upper() const {
  if (exact) return exact;
  std::optional<mpz_class> best;
  for (const auto& b : upper)
    if (!best || b.value < *best) best = b.value;
  return best;
}

bool WdegVerdict::contains(const mpz_class& v) const {
  if (exact) return v == *exact;
  if (v < best_lower()) return false;
  auto up = best_upper();
  return !up || v <= *up;
}

namespace {

void add_bound(WdegVerdict& v, mpz_class value, const std::string& source, bool is_upper,
               const std::string& condition = "") {
  WdegBound b{std::move(value), source, is_upper, condition};
  if (!condition.empty()) {
    v.conditional.push_back(std::move(b));
  } else if (is_upper) {
    v.upper.push_back(std::move(b));
  } else if (b.value >= 2) {
    v.lower.push_back(std::move(b));
  }
}

void set_exact(WdegVerdict& v, mpz_class value, const std::string& source) {
  if (v.exact) {
    assert(*v.exact == value);
    return;
  }
  v.exact = std::move(value);
  v.exact_source = source;
}

}  // namespace

WdegVerdict wdeg_verdict(const GroupId& g, const Weight& lambda) {
  g.validate();
  if (!lambda.is_dominant()) throw InvalidInput("wdeg_verdict needs a dominant weight");
  const int n = g.rank;
  WdegVerdict v;
  v.lower.push_back({1, "trivial", false, ""});

  const bool c2 = (g.family == Family::C && g.p == 2);
  if (c2) {
    auto cls = c2_wdeg_class(g, lambda);
    if (cls.exact) {
      set_exact(v, *cls.exact, "char2-symplectic-series");
    } else {
      add_bound(v, *cls.lower, "rank-gap-lower", false, cls.condition);
    }
  } else if (in_omega(g, lambda)) {
    set_exact(v, 1, "multiplicity-free-catalog");
  } else if (g.family != Family::A) {
    add_bound(v, c2_rank_gap(n), "rank-gap-lower", false, n >= 8 ? "" : "rank >= 8");
  }

  auto sd = steinberg_decompose(lambda);
  const bool restricted = sd.layers.size() == 1;

  if (g.family == Family::A && restricted && !in_omega_p(g, lambda)) {
    auto supp = support(lambda);
    if (supp.size() >= 2) {
      std::vector<int64_t> u(supp.begin(), supp.end());
      add_bound(v, kleshchev_f(u), "support-spread-lower", false);
    }
    int64_t d = min_pdeg(lambda);
    if (d <= n) {
      add_bound(v, d - 2, "poly-degree-lower", false);
      add_bound(v, factorial(d), "poly-degree-factorial-upper", true);
    } else {
      // strict bound wdeg > sqrt(n)/p - 1 cast as an integer lower bound
      int64_t isq = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
      while ((isq + 1) * (isq + 1) <= n) ++isq;
      while (isq * isq > n) --isq;
      int64_t lb = (isq - g.p) / g.p + 1;  // floor(isq/p - 1) + 1
      add_bound(v, lb, "schur-functor-lower", false, n >= 16 ? "" : "rank >= 16");
    }
  }
  if (g.family == Family::A && restricted && in_omega_p(g, lambda)) {
    // members of the restricted catalog still obey the factorial cap
    int64_t d = min_pdeg(lambda);
    if (d <= n) add_bound(v, factorial(d), "poly-degree-factorial-upper", true);
  }

  if (!restricted) {
    // product lower bound from the twisted tensor factorization
    mpz_class prod = 1;
    for (const auto& layer : sd.layers) {
      if (layer.is_zero()) continue;
      prod *= wdeg_verdict(g, layer).best_lower();
    }
    add_bound(v, prod, "twist-product-lower", false);

    if (g.family == Family::A) {
      // split at a twist gap where every weight of the head meets the tail
      // uniquely; wdeg is multiplicative across such a split
      for (size_t t = 1; t < sd.layers.size(); ++t) {
        Weight head = zero_weight(g);
        int64_t pk = 1;
        for (size_t j = 0; j < t; ++j) {
          head = add_weights(head, scale_weight(sd.layers[j], pk));
          pk *= g.p;
        }
        bool tail_nonzero = false;
        Weight tail = zero_weight(g);
        int64_t qk = 1;
        for (size_t j = t; j < sd.layers.size(); ++j) {
          if (!sd.layers[j].is_zero()) tail_nonzero = true;
          tail = add_weights(tail, scale_weight(sd.layers[j], qk));
          qk *= g.p;
        }
        if (!tail_nonzero || head.is_zero()) continue;
        if (delta(head) >= ipow(g.p, static_cast<int>(t))) continue;
        WdegVerdict hv = wdeg_verdict(g, head);
        WdegVerdict tv = wdeg_verdict(g, tail);
        if (hv.exact && tv.exact)
          set_exact(v, *hv.exact * *tv.exact, "twist-split-exact");
        add_bound(v, hv.best_lower() * tv.best_lower(), "twist-split-exact", false);
        if (hv.best_upper() && tv.best_upper())
          add_bound(v, *hv.best_upper() * *tv.best_upper(), "twist-split-exact", true);
        break;
      }

      // blocked factorial cap: group layers into catalog blocks and maximal
      // one-sided runs, with the twist-gap hypotheses between blocks
      struct Block {
        size_t lo, hi;  // layer index range, inclusive
        int kind;       // 0 catalog, 1 left-supported, 2 right-supported
      };
      std::vector<Block> blocks;
      bool ok = true;
      int64_t d_common = 0;
      for (size_t j = 0; j < sd.layers.size(); ++j) {
        const Weight& lay = sd.layers[j];
        int kind;
        if (in_omega_p(g, lay))
          kind = 0;
        else if (pdeg(lay) <= pdeg(dual_weight(lay)))
          kind = 1;
        else
          kind = 2;
        if (kind != 0) d_common = std::max(d_common, min_pdeg(lay));
        if (!blocks.empty() && blocks.back().kind == kind && kind != 0)
          blocks.back().hi = j;
        else
          blocks.push_back({j, j, kind});
      }
      // delta condition between blocks
      for (size_t b = 0; b + 1 < blocks.size() && ok; ++b) {
        Weight acc = zero_weight(g);
        int64_t pk = 1;
        for (size_t j = 0; j <= blocks[b].hi; ++j) {
          acc = add_weights(acc, scale_weight(sd.layers[j], pk));
          pk *= g.p;
        }
        if (delta(acc) >= pk) ok = false;
      }
      if (ok && d_common > 0) {
        mpz_class cap = 1;
        int64_t dmax = 0;
        for (const auto& blk : blocks) {
          if (blk.kind == 0) continue;
          int64_t geo = 0, pk = 1;
          for (size_t j = blk.lo; j <= blk.hi; ++j) {
            geo += pk;
            pk *= g.p;
          }
          int64_t dj = d_common * geo;
          dmax = std::max(dmax, dj);
          cap *= factorial(dj);
        }
        add_bound(v, cap, "blocked-factorial-upper", true,
                  n >= dmax ? "" : "rank >= " + std::to_string(dmax));
      }
    }
  }

  if (auto t = twist_gap_lower(g, lambda)) add_bound(v, *t, "twist-gap-lower", false);

  // interval sanity
  if (!v.exact) {
    auto up = v.best_upper();
    assert(!up || v.best_lower() <= *up);
  }
  return v;
}

std::vector<Weight> enumerate_small_pdeg_weights(const GroupId& g, int64_t d) {
  if (g.family != Family::A) throw InvalidInput("small-pdeg enumeration is type A only");
  if (d < 0 || d > 64) throw InvalidInput("degree bound out of the supported range");
  std::vector<Weight> out;
  std::vector<int64_t> fw(g.rank, 0);
  int maxi = static_cast<int>(std::min<int64_t>(d, g.rank));
  std::function<void(int, int64_t)> rec = [&](int i, int64_t rem) {
    if (i > maxi) {
      out.emplace_back(g, fw);
      return;
    }
    for (int64_t a = 0; a * i <= rem; ++a) {
      fw[i - 1] = a;
      rec(i + 1, rem - a * i);
    }
    fw[i - 1] = 0;
  };
  rec(1, d);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wdeg

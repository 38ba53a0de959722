#include "wdeg/inductive.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace wdeg {

namespace {

Weight truncated_hw_a(const GroupId& g, int64_t d) {
  const int64_t pm1 = g.p - 1;
  int64_t k = d / pm1, a = d % pm1;
  std::vector<int64_t> fw(g.rank, 0);
  if (k >= 1 && k <= g.rank) fw[k - 1] = pm1 - a;
  if (a > 0 && k + 1 <= g.rank) fw[k] = a;
  return Weight(g, fw);
}

Weight cl_weight(const GroupId& g, const std::vector<int64_t>& a) {
  std::vector<int64_t> fw(g.rank, 0);
  for (size_t i = 0; i < a.size(); ++i) fw[i] = a[i];
  return Weight(g, fw);
}

Weight cr_weight(const GroupId& g, const std::vector<int64_t>& a) {
  std::vector<int64_t> fw(g.rank, 0);
  for (size_t i = 0; i < a.size(); ++i) fw[g.rank - 1 - i] = a[i];
  return Weight(g, fw);
}

int family_min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return 4;
  }
  return 1;
}

// levels of a singly-generated chain system: the factor sets of the
// restrictions of the generators stabilize once the generator level is far
// enough above; two consecutive lookaheads must agree
std::set<Weight> chain_levels(const GroupId& g, const std::function<Weight(const GroupId&)>& gen,
                              int min_gen_rank, CharProvider& provider) {
  std::set<Weight> prev, cur;
  for (int t = std::max(g.rank + 1, min_gen_rank);; ++t) {
    GroupId gt{g.family, t, g.p};
    auto f = irr_k(gt, gen(gt), g.rank, provider);
    std::set<Weight> next(prev);
    next.insert(f.begin(), f.end());
    if (t > std::max(g.rank + 1, min_gen_rank) && next == prev) break;
    prev = std::move(next);
    if (t > g.rank + 12) throw std::logic_error("chain levels failed to stabilize");
  }
  return prev;
}

}  // namespace

std::string Atom::str() const {
  auto vec = [&](const char* name, const std::vector<int64_t>& v) {
    std::ostringstream os;
    os << name << '[';
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) os << ',';
      os << v[i];
    }
    os << ']';
    return os.str();
  };
  switch (kind) {
    case AtomKind::O: return "O";
    case AtomKind::L: return "L";
    case AtomKind::F: return "F";
    case AtomKind::T: return "T";
    case AtomKind::S: return "S";
    case AtomKind::Sp: return "S'";
    case AtomKind::Q: return "Q";
    case AtomKind::CL: return vec("CL", coeffs);
    case AtomKind::CR: return vec("CR", coeffs);
    case AtomKind::Ld: return "Ld[" + std::to_string(d) + "]";
    case AtomKind::Rd: return "Rd[" + std::to_string(d) + "]";
  }
  return "?";
}

std::string SystemDescriptor::str() const {
  std::ostringstream os;
  for (size_t k = 0; k < atoms.size(); ++k) {
    if (k) os << " * ";
    if (k == 0)
      os << atoms[k].str();
    else if (k == 1)
      os << "Fr(" << atoms[k].str() << ")";
    else
      os << "Fr^" << k << "(" << atoms[k].str() << ")";
  }
  return os.str();
}

SystemDescriptor parse_descriptor(Family family, int64_t p, const std::string& text) {
  SystemDescriptor d;
  d.family = family;
  d.p = p;
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  auto parse_atom = [&](std::string s) {
    Atom a;
    if (s == "O") a.kind = AtomKind::O;
    else if (s == "L") a.kind = AtomKind::L;
    else if (s == "F") a.kind = AtomKind::F;
    else if (s == "T") a.kind = AtomKind::T;
    else if (s == "S") a.kind = AtomKind::S;
    else if (s == "S'") a.kind = AtomKind::Sp;
    else if (s == "Q") a.kind = AtomKind::Q;
    else if (s.rfind("CL[", 0) == 0 || s.rfind("CR[", 0) == 0 || s.rfind("Ld[", 0) == 0 ||
             s.rfind("Rd[", 0) == 0) {
      if (s.back() != ']') throw InvalidInput("unterminated atom '" + s + "'");
      std::string head = s.substr(0, 2);
      std::string body = s.substr(3, s.size() - 4);
      std::vector<int64_t> vals;
      if (!body.empty()) {
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) vals.push_back(std::stoll(trim(tok)));
      }
      if (head == "CL") {
        a.kind = AtomKind::CL;
        a.coeffs = vals;
      } else if (head == "CR") {
        a.kind = AtomKind::CR;
        a.coeffs = vals;
      } else {
        a.kind = (head == "Ld") ? AtomKind::Ld : AtomKind::Rd;
        if (vals.size() != 1) throw InvalidInput("Ld/Rd take a single degree");
        a.d = vals[0];
      }
    } else {
      throw InvalidInput("unknown atom '" + s + "'");
    }
    return a;
  };
  std::vector<std::string> factors;
  {
    size_t pos = 0;
    while (pos < text.size()) {
      size_t star = text.find('*', pos);
      factors.push_back(trim(text.substr(pos, star == std::string::npos ? star : star - pos)));
      if (star == std::string::npos) break;
      pos = star + 1;
    }
  }
  for (size_t k = 0; k < factors.size(); ++k) {
    std::string f = factors[k];
    if (f.empty()) throw InvalidInput("empty factor in descriptor");
    if (f.rfind("Fr", 0) == 0) {
      size_t open = f.find('(');
      if (open == std::string::npos || f.back() != ')')
        throw InvalidInput("malformed twist factor '" + f + "'");
      std::string pw = f.substr(2, open - 2);
      int twist = 1;
      if (!pw.empty()) {
        if (pw[0] != '^') throw InvalidInput("malformed twist power '" + f + "'");
        twist = std::stoi(pw.substr(1));
      }
      if (twist != static_cast<int>(k))
        throw InvalidInput("twist powers must appear in order 0,1,2,...");
      d.atoms.push_back(parse_atom(trim(f.substr(open + 1, f.size() - open - 2))));
    } else {
      if (k != 0) throw InvalidInput("untwisted atom allowed only in position 0");
      d.atoms.push_back(parse_atom(f));
    }
  }
  if (d.atoms.empty()) throw InvalidInput("empty descriptor");
  for (const auto& a : d.atoms)
    if (!atom_legal(a, family, p))
      throw InvalidInput("atom " + a.str() + " is not available for " +
                         std::string(1, family_letter(family)) + " at p=" + std::to_string(p));
  return d;
}

bool atom_legal(const Atom& a, Family f, int64_t p) {
  switch (a.kind) {
    case AtomKind::O:
    case AtomKind::L:
      return true;
    case AtomKind::F:
    case AtomKind::T:
      return f == Family::A;
    case AtomKind::CL:
    case AtomKind::CR:
      if (f != Family::A) return false;
      for (auto c : a.coeffs)
        if (c < 0 || c >= p) return false;
      return true;
    case AtomKind::Ld:
    case AtomKind::Rd:
      return f == Family::A && a.d >= 0;
    case AtomKind::S:
      return f == Family::B || f == Family::D || (f == Family::C && p > 2);
    case AtomKind::Sp:
    case AtomKind::Q:
      return f == Family::C && p == 2;
  }
  return false;
}

int atom_min_rank(const Atom& a, Family f) {
  int base = family_min_rank(f);
  switch (a.kind) {
    case AtomKind::CL:
    case AtomKind::CR:
      return std::max<int>(base, static_cast<int>(a.coeffs.size()));
    case AtomKind::Q:
      return std::max(base, 1);
    default:
      return base;
  }
}

std::set<Weight> atom_level(const Atom& a, const GroupId& g, CharProvider& provider) {
  const int n = g.rank;
  std::set<Weight> out;
  switch (a.kind) {
    case AtomKind::O:
      out.insert(zero_weight(g));
      return out;
    case AtomKind::L:
      out.insert(zero_weight(g));
      out.insert(fundamental_weight(g, 1));
      return out;
    case AtomKind::F:
      for (int i = 0; i <= n; ++i) out.insert(fundamental_weight(g, i));
      return out;
    case AtomKind::T:
      for (int64_t deg = 0; deg <= (g.p - 1) * (n + 1); ++deg)
        out.insert(truncated_hw_a(g, deg));
      return out;
    case AtomKind::S: {
      if (g.family == Family::B) {
        out.insert(fundamental_weight(g, n));
      } else if (g.family == Family::D) {
        out.insert(fundamental_weight(g, n - 1));
        out.insert(fundamental_weight(g, n));
      } else {
        std::vector<int64_t> even(n, 0);
        even[n - 1] = (g.p - 1) / 2;
        out.insert(Weight(g, even));
        std::vector<int64_t> odd(n, 0);
        odd[n - 2] = 1;
        odd[n - 1] = (g.p - 3) / 2;
        out.insert(Weight(g, odd));
      }
      return out;
    }
    case AtomKind::Sp:
      out.insert(fundamental_weight(g, n));
      return out;
    case AtomKind::Q: {
      if (n >= 2) {
        out.insert(add_weights(fundamental_weight(g, 1), fundamental_weight(g, n)));
        out.insert(fundamental_weight(g, n));
        return out;
      }
      // bottom level is defined by restriction from the level above
      GroupId g2{g.family, 2, g.p};
      for (const auto& w : atom_level(a, g2, provider))
        for (const auto& f : irr_k(g2, w, 1, provider)) out.insert(f);
      return out;
    }
    case AtomKind::CL: {
      auto levels = chain_levels(
          g, [&](const GroupId& gt) { return cl_weight(gt, a.coeffs); },
          static_cast<int>(a.coeffs.size()), provider);
      return levels;
    }
    case AtomKind::CR: {
      auto levels = chain_levels(
          g, [&](const GroupId& gt) { return cr_weight(gt, a.coeffs); },
          static_cast<int>(a.coeffs.size()), provider);
      return levels;
    }
    case AtomKind::Ld:
      for (const auto& w : enumerate_small_pdeg_weights(g, a.d)) out.insert(w);
      return out;
    case AtomKind::Rd:
      for (const auto& w : enumerate_small_pdeg_weights(g, a.d)) out.insert(dual_weight(w));
      return out;
  }
  return out;
}

bool InductiveWindow::closure_ok() const {
  for (const auto& [n, s] : closure) {
    (void)n;
    if (s.rfind("FAILED", 0) == 0) return false;
  }
  return true;
}

bool InductiveWindow::closure_fully_verified() const {
  for (const auto& [n, s] : closure) {
    (void)n;
    if (s != "verified") return false;
  }
  return !closure.empty();
}

namespace {

// combine one member per position into simple factors, by layer reassembly
// when the twist layers stay disjoint, else by decomposing the product
// character
std::set<Weight> combine_tuple(const GroupId& g, const std::vector<Weight>& members,
                               CharProvider& provider) {
  std::set<Weight> out;
  std::vector<Weight> layers;  // final layer at each p-power position
  bool collision = false;
  for (size_t k = 0; k < members.size(); ++k) {
    auto sd = steinberg_decompose(members[k]);
    for (size_t j = 0; j < sd.layers.size(); ++j) {
      size_t pos = k + j;
      if (layers.size() <= pos) layers.resize(pos + 1, zero_weight(g));
      if (sd.layers[j].is_zero()) continue;
      if (!layers[pos].is_zero()) {
        collision = true;
        break;
      }
      layers[pos] = sd.layers[j];
    }
    if (collision) break;
  }
  if (!collision) {
    Weight w = zero_weight(g);
    int64_t pk = 1;
    for (const auto& l : layers) {
      w = add_weights(w, scale_weight(l, pk));
      pk *= g.p;
    }
    out.insert(w);
    return out;
  }
  FormalCharacter chi = provider.simple(g, members[0]);
  for (size_t k = 1; k < members.size(); ++k)
    chi = tensor(chi, frobenius_twist(provider.simple(g, members[k]), static_cast<int>(k)));
  for (const auto& [w, m] : decompose(chi, provider)) {
    (void)m;
    out.insert(w);
  }
  return out;
}

std::set<Weight> product_levels(const GroupId& g, const std::vector<std::set<Weight>>& sets,
                                CharProvider& provider) {
  std::set<Weight> out;
  std::vector<Weight> tuple;
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == sets.size()) {
      auto c = combine_tuple(g, tuple, provider);
      out.insert(c.begin(), c.end());
      return;
    }
    for (const auto& w : sets[k]) {
      tuple.push_back(w);
      rec(k + 1);
      tuple.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

InductiveWindow realize(const SystemDescriptor& d, int n_min, int n_max, CharProvider& provider) {
  if (d.atoms.empty()) throw InvalidInput("empty descriptor");
  int lo = n_min;
  for (const auto& a : d.atoms) {
    if (!atom_legal(a, d.family, d.p))
      throw InvalidInput("atom " + a.str() + " is not available for this family/characteristic");
    lo = std::max(lo, atom_min_rank(a, d.family));
  }
  if (lo > n_max) throw InvalidInput("window is empty after the family/atom rank guards");
  InductiveWindow w;
  w.family = d.family;
  w.p = d.p;
  w.n_min = lo;
  w.n_max = n_max;
  w.provenance = d.str();
  for (int n = lo; n <= n_max; ++n) {
    GroupId g{d.family, n, d.p};
    std::vector<std::set<Weight>> sets;
    sets.reserve(d.atoms.size());
    for (const auto& a : d.atoms) sets.push_back(atom_level(a, g, provider));
    w.levels[n] = product_levels(g, sets, provider);
  }
  return w;
}

InductiveWindow fr_twist_window(const InductiveWindow& w, int k) {
  if (k < 0) throw InvalidInput("twist power must be nonnegative");
  InductiveWindow out(w);
  out.closure.clear();
  out.provenance = k == 0 ? w.provenance : "Fr^" + std::to_string(k) + "(" + w.provenance + ")";
  if (k == 0) return out;
  int64_t pk = ipow(w.p, k);
  for (auto& [n, lvl] : out.levels) {
    (void)n;
    std::set<Weight> t;
    for (const auto& x : lvl) t.insert(scale_weight(x, pk));
    lvl = std::move(t);
  }
  return out;
}

InductiveWindow tensor_windows(const InductiveWindow& a, const InductiveWindow& b,
                               CharProvider& provider) {
  if (a.family != b.family || a.p != b.p)
    throw InvalidInput("tensor of windows over different families or characteristics");
  InductiveWindow out;
  out.family = a.family;
  out.p = a.p;
  out.n_min = std::max(a.n_min, b.n_min);
  out.n_max = std::min(a.n_max, b.n_max);
  if (out.n_min > out.n_max) throw InvalidInput("windows do not overlap");
  out.provenance = "(" + a.provenance + ") * (" + b.provenance + ")";
  for (int n = out.n_min; n <= out.n_max; ++n) {
    GroupId g{out.family, n, out.p};
    out.levels[n] = product_levels(g, {a.level(n), b.level(n)}, provider);
  }
  return out;
}

InductiveWindow union_windows(const InductiveWindow& a, const InductiveWindow& b) {
  if (a.family != b.family || a.p != b.p)
    throw InvalidInput("union of windows over different families or characteristics");
  InductiveWindow out;
  out.family = a.family;
  out.p = a.p;
  out.n_min = std::max(a.n_min, b.n_min);
  out.n_max = std::min(a.n_max, b.n_max);
  if (out.n_min > out.n_max) throw InvalidInput("windows do not overlap");
  out.provenance = "(" + a.provenance + ") u (" + b.provenance + ")";
  for (int n = out.n_min; n <= out.n_max; ++n) {
    std::set<Weight> lvl = a.level(n);
    const auto& bl = b.level(n);
    lvl.insert(bl.begin(), bl.end());
    out.levels[n] = std::move(lvl);
  }
  return out;
}

InductiveWindow generate(Family family, int64_t p, const std::map<int, std::set<Weight>>& gens,
                         int n_min, int n_max, int stabilization, CharProvider& provider) {
  if (gens.empty()) throw InvalidInput("no generators");
  for (const auto& [t, R] : gens) {
    if (R.empty()) throw InvalidInput("empty generator set at level " + std::to_string(t));
    if (t > n_max) throw InvalidInput("generator level above the window top");
  }
  auto compute = [&](int top) {
    std::map<int, std::set<Weight>> lv;
    for (int n = n_min; n < top; ++n) {
      std::set<Weight> s;
      for (const auto& [t, R] : gens) {
        if (t <= n || t > top) continue;
        GroupId gt{family, t, p};
        for (const auto& y : R)
          for (const auto& f : irr_k(gt, y, n, provider)) s.insert(f);
      }
      lv[n] = std::move(s);
    }
    return lv;
  };
  auto full = compute(n_max);
  InductiveWindow w;
  w.family = family;
  w.p = p;
  w.n_min = n_min;
  w.n_max = n_max - 1;
  w.levels = full;
  w.provenance = "generated";
  if (stabilization > 0 && n_max - stabilization > n_min) {
    auto low = compute(n_max - stabilization);
    bool ok = true;
    for (int n = n_min; n < n_max - stabilization; ++n)
      if (low.at(n) != full.at(n)) ok = false;
    w.stable = ok;
    w.stability_note =
        ok ? "levels agree with the top-" + std::to_string(n_max - stabilization) + " recomputation"
           : "unstable - raise the window top";
  } else {
    w.stable = std::nullopt;
    w.stability_note = "stabilization not checked";
  }
  // hypothesis: generators reappear among the generated levels
  for (const auto& [t, R] : gens) {
    if (t >= n_max) continue;
    for (const auto& y : R)
      if (!full.at(t).count(y)) {
        w.stability_note += "; generator " + y.str() + " missing at level " + std::to_string(t);
        w.stable = false;
      }
  }
  return w;
}

InductiveWindow difference_windows(const InductiveWindow& a, const InductiveWindow& b,
                                   int stabilization, CharProvider& provider) {
  if (a.family != b.family || a.p != b.p)
    throw InvalidInput("difference of windows over different families or characteristics");
  int lo = std::max(a.n_min, b.n_min);
  int hi = std::min(a.n_max, b.n_max);
  if (lo > hi) throw InvalidInput("windows do not overlap");
  std::map<int, std::set<Weight>> gens;
  bool proper = false;
  for (int n = lo; n <= hi; ++n) {
    const auto& al = a.level(n);
    const auto& bl = b.level(n);
    for (const auto& x : bl)
      if (!al.count(x))
        throw InvalidInput("subtrahend is not contained in the window at level " +
                           std::to_string(n));
    std::set<Weight> diff;
    for (const auto& x : al)
      if (!bl.count(x)) diff.insert(x);
    if (!diff.empty()) {
      gens[n] = std::move(diff);
      proper = true;
    }
  }
  if (!proper) throw InvalidInput("difference is empty (the systems coincide on the window)");
  auto w = generate(a.family, a.p, gens, lo, hi, stabilization, provider);
  w.provenance = "(" + a.provenance + ") \\ (" + b.provenance + ")";
  return w;
}

void check_closure(InductiveWindow& w, CharProvider& provider) {
  for (int n = w.n_min; n < w.n_max; ++n) {
    GroupId up{w.family, n + 1, w.p};
    try {
      std::set<Weight> computed;
      for (const auto& phi : w.level(n + 1))
        for (const auto& f : irr_k(up, phi, n, provider)) computed.insert(f);
      if (computed == w.level(n)) {
        w.closure[n] = "verified";
      } else {
        std::ostringstream os;
        os << "FAILED:";
        for (const auto& x : computed)
          if (!w.level(n).count(x)) os << " +" << x.str();
        for (const auto& x : w.level(n))
          if (!computed.count(x)) os << " -" << x.str();
        w.closure[n] = os.str();
      }
    } catch (const ResourceRefusal& e) {
      w.closure[n] = std::string("unverified: ") + e.what();
    }
  }
}

void check_delta(InductiveWindow& w) {
  std::optional<int64_t> common;
  bool constant = true;
  int start = w.n_min;
  if (w.family == Family::B) start = std::max(start, 3);
  for (int n = start; n <= w.n_max; ++n) {
    if (!w.levels.count(n)) continue;
    int64_t dv = 0;
    for (const auto& x : w.level(n)) dv = std::max(dv, delta(x));
    if (!common) {
      common = dv;
    } else if (*common != dv) {
      constant = false;
    }
  }
  w.delta_value = common;
  w.delta_note = constant ? "constant across levels" : "FAILED: level maxima differ";
}

namespace {

int64_t atom_delta(const Atom& a, int64_t p) {
  switch (a.kind) {
    case AtomKind::O: return 0;
    case AtomKind::F: return 1;
    case AtomKind::T: return p - 1;
    case AtomKind::CL:
    case AtomKind::CR: {
      int64_t s = 0;
      for (auto c : a.coeffs) s += c;
      return s;
    }
    case AtomKind::Ld:
    case AtomKind::Rd:
      return a.d;
    default:
      return 1;  // not used for the type A analysis
  }
}

int64_t atom_pdeg(const Atom& a) {
  switch (a.kind) {
    case AtomKind::CL:
    case AtomKind::CR: {
      int64_t s = 0;
      for (size_t i = 0; i < a.coeffs.size(); ++i) s += static_cast<int64_t>(i + 1) * a.coeffs[i];
      return s;
    }
    case AtomKind::L:
      return 1;
    case AtomKind::Ld:
    case AtomKind::Rd:
      return a.d;
    default:
      return 0;
  }
}

enum class Side { Neutral, Left, Right, Catalog };

Side atom_side(const Atom& a) {
  switch (a.kind) {
    case AtomKind::O: return Side::Neutral;
    case AtomKind::L:  // {0, w1} sits inside the pdeg-1 left family
    case AtomKind::CL:
    case AtomKind::Ld:
      return Side::Left;
    case AtomKind::CR:
    case AtomKind::Rd:
      return Side::Right;
    case AtomKind::F:
    case AtomKind::T:
      return Side::Catalog;
    default:
      return Side::Catalog;
  }
}

struct ABlock {
  size_t lo = 0, hi = 0;
  Side side = Side::Neutral;
};

std::vector<ABlock> group_blocks(const std::vector<Atom>& atoms) {
  std::vector<ABlock> blocks;
  for (size_t k = 0; k < atoms.size(); ++k) {
    Side s = atom_side(atoms[k]);
    if (s == Side::Catalog) {
      blocks.push_back({k, k, Side::Catalog});
      continue;
    }
    if (!blocks.empty() && blocks.back().hi == k - 1 && blocks.back().side != Side::Catalog &&
        (blocks.back().side == s || s == Side::Neutral || blocks.back().side == Side::Neutral)) {
      blocks.back().hi = k;
      if (blocks.back().side == Side::Neutral) blocks.back().side = s;
      continue;
    }
    blocks.push_back({k, k, s});
  }
  return blocks;
}

// weight of the heaviest member of an atom, used for growth certificates
Weight atom_heavy_weight(const Atom& a, const GroupId& g) {
  switch (a.kind) {
    case AtomKind::O: return zero_weight(g);
    case AtomKind::L: return fundamental_weight(g, 1);
    case AtomKind::F: return fundamental_weight(g, g.rank);
    case AtomKind::T: {
      std::vector<int64_t> fw(g.rank, 0);
      fw[g.rank - 1] = g.p - 1;
      return Weight(g, fw);
    }
    case AtomKind::CL: return cl_weight(g, a.coeffs);
    case AtomKind::CR: return cr_weight(g, a.coeffs);
    case AtomKind::Ld: {
      std::vector<int64_t> fw(g.rank, 0);
      fw[0] = a.d;
      return Weight(g, fw);
    }
    case AtomKind::Rd: {
      std::vector<int64_t> fw(g.rank, 0);
      fw[g.rank - 1] = a.d;
      return Weight(g, fw);
    }
    default:
      throw std::logic_error("atom_heavy_weight: type A atoms only");
  }
}

}  // namespace

BwmEnumeration enumerate_bwm(Family family, int64_t p, int s, const BwmBudget& budget) {
  if (s < 0 || s > 6) throw InvalidInput("twist depth out of range");
  BwmEnumeration out;
  const int positions = s + 1;
  if (family != Family::A) {
    std::vector<Atom> pool;
    if (family == Family::C && p == 2) {
      pool = {{AtomKind::O, {}, 0}, {AtomKind::L, {}, 0}, {AtomKind::Q, {}, 0}, {AtomKind::Sp, {}, 0}};
    } else {
      pool = {{AtomKind::O, {}, 0}, {AtomKind::L, {}, 0}, {AtomKind::S, {}, 0}};
    }
    std::vector<Atom> cur(positions, pool[0]);
    std::function<void(int)> rec = [&](int k) {
      if (k == positions) {
        if (family == Family::C && p == 2) {
          auto heavy = [](AtomKind kk) { return kk == AtomKind::Sp || kk == AtomKind::Q; };
          auto light = [](AtomKind kk) { return kk == AtomKind::L || kk == AtomKind::Q; };
          for (int j = 0; j + 1 < positions; ++j)
            if (heavy(cur[j].kind) && light(cur[j + 1].kind)) return;
        }
        out.descriptors.push_back({family, p, cur});
        return;
      }
      for (const auto& a : pool) {
        cur[k] = a;
        rec(k + 1);
      }
    };
    rec(0);
    return out;
  }
  // type A: catalog singletons and one-sided coefficient atoms under the budget
  std::vector<Atom> pool;
  pool.push_back({AtomKind::O, {}, 0});
  pool.push_back({AtomKind::F, {}, 0});
  if (p > 2) pool.push_back({AtomKind::T, {}, 0});  // T coincides with F at p=2
  // coefficient vectors with sum i*a_i <= budget, entries < p, trailing
  // entry nonzero (canonical form)
  std::vector<std::vector<int64_t>> cvecs;
  {
    std::vector<int64_t> v;
    std::function<void(int64_t)> rec3 = [&](int64_t rem) {
      if (!v.empty() && v.back() != 0) cvecs.push_back(v);
      int64_t pos = static_cast<int64_t>(v.size()) + 1;
      if (pos > budget.max_pdeg) return;
      for (int64_t c = 0; c < p && c * pos <= rem; ++c) {
        v.push_back(c);
        rec3(rem - c * pos);
        v.pop_back();
      }
    };
    rec3(budget.max_pdeg);
    std::sort(cvecs.begin(), cvecs.end());
    cvecs.erase(std::unique(cvecs.begin(), cvecs.end()), cvecs.end());
  }
  for (const auto& cv : cvecs) {
    pool.push_back({AtomKind::CL, cv, 0});
    pool.push_back({AtomKind::CR, cv, 0});
  }
  out.budget_limited = true;
  out.note = "coefficient atoms truncated at pdeg <= " + std::to_string(budget.max_pdeg);

  std::vector<Atom> cur(positions, pool[0]);
  std::function<void(int)> rec = [&](int k) {
    if (k == positions) {
      // special-system twist-gap conditions between the grouped blocks
      auto blocks = group_blocks(cur);
      bool pass = true;
      for (size_t b = 0; b + 1 < blocks.size() && pass; ++b) {
        int64_t dsum = 0;
        for (size_t j = blocks[b].lo; j <= blocks[b].hi; ++j)
          dsum += ipow(p, static_cast<int>(j)) * atom_delta(cur[j], p);
        if (dsum >= ipow(p, static_cast<int>(blocks[b].hi) + 1)) pass = false;
      }
      if (pass) out.descriptors.push_back({family, p, cur});
      return;
    }
    for (const auto& a : pool) {
      cur[k] = a;
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(out.descriptors.begin(), out.descriptors.end());
  return out;
}

BwmVerdict bwm_check(const SystemDescriptor& d, int n_max, CharProvider& provider) {
  BwmVerdict v;
  const int64_t p = d.p;
  if (d.family != Family::A) {
    bool c2 = (d.family == Family::C && p == 2);
    if (c2) {
      auto heavy = [](AtomKind kk) { return kk == AtomKind::Sp || kk == AtomKind::Q; };
      auto light = [](AtomKind kk) { return kk == AtomKind::L || kk == AtomKind::Q; };
      int bad = -1;
      for (size_t j = 0; j + 1 < d.atoms.size(); ++j)
        if (heavy(d.atoms[j].kind) && light(d.atoms[j + 1].kind)) bad = static_cast<int>(j);
      if (bad >= 0) {
        v.kind = BwmVerdict::Kind::Unbounded;
        // certificate family: the excluded adjacent member choice
        for (int n : {8, 12, 16, 20}) {
          GroupId g{d.family, n, p};
          Weight w = zero_weight(g);
          int64_t pk = 1;
          for (size_t j = 0; j < d.atoms.size(); ++j) {
            Weight member = zero_weight(g);
            switch (d.atoms[j].kind) {
              case AtomKind::Sp: member = fundamental_weight(g, n); break;
              case AtomKind::Q:
                member = (static_cast<int>(j) == bad || static_cast<int>(j) == bad + 1)
                             ? add_weights(fundamental_weight(g, 1), fundamental_weight(g, n))
                             : fundamental_weight(g, n);
                break;
              case AtomKind::L:
                member = (static_cast<int>(j) == bad + 1) ? fundamental_weight(g, 1)
                                                          : zero_weight(g);
                break;
              default: break;
            }
            w = add_weights(w, scale_weight(member, pk));
            pk *= p;
          }
          auto cls = c2_wdeg_class(g, w);
          if (cls.lower) v.growth.push_back({n, *cls.lower});
          if (n == 8) v.certificate = "member family with weight " + w.str() + " at rank 8";
        }
        v.note = "excluded adjacent pair at twist position " + std::to_string(bad);
        return v;
      }
      int nq = 0;
      for (const auto& a : d.atoms)
        if (a.kind == AtomKind::Q) ++nq;
      v.kind = BwmVerdict::Kind::Bounded;
      mpz_class cap = 1;
      cap <<= nq;
      v.cap = cap;
    } else {
      v.kind = BwmVerdict::Kind::Bounded;
      v.cap = 1;
    }
  } else {
    auto blocks = group_blocks(d.atoms);
    int fail_block = -1;
    for (size_t b = 0; b + 1 < blocks.size(); ++b) {
      int64_t dsum = 0;
      for (size_t j = blocks[b].lo; j <= blocks[b].hi; ++j)
        dsum += ipow(p, static_cast<int>(j)) * atom_delta(d.atoms[j], p);
      if (dsum >= ipow(p, static_cast<int>(blocks[b].hi) + 1)) {
        fail_block = static_cast<int>(b);
        break;
      }
    }
    if (fail_block < 0) {
      v.kind = BwmVerdict::Kind::Bounded;
      int64_t dcommon = 0;
      for (const auto& a : d.atoms) dcommon = std::max(dcommon, atom_pdeg(a));
      mpz_class cap = 1;
      int64_t dmax = 0;
      for (const auto& blk : blocks) {
        if (blk.side != Side::Left && blk.side != Side::Right) continue;
        int64_t geo = 0, pk = 1;
        for (size_t j = blk.lo; j <= blk.hi; ++j) {
          geo += pk;
          pk *= p;
        }
        int64_t dj = dcommon * geo;
        if (dj == 0) continue;
        dmax = std::max(dmax, dj);
        cap *= factorial(dj);
      }
      v.cap = cap;
      if (dmax > 0) v.cap_condition = "rank >= " + std::to_string(dmax);
    } else {
      v.kind = BwmVerdict::Kind::Unbounded;
      const auto& blk = blocks[fail_block];
      const auto& next = blocks[fail_block + 1];
      for (int n : {8, 12, 16, 20}) {
        GroupId g{Family::A, n, p};
        Weight w = zero_weight(g);
        int64_t pk = 1;
        for (size_t j = blk.lo; j <= blk.hi; ++j) {
          w = add_weights(w, scale_weight(atom_heavy_weight(d.atoms[j], g), pk));
          pk *= p;
        }
        Weight t = atom_heavy_weight(d.atoms[next.lo], g);
        w = add_weights(w, scale_weight(t, pk));
        if (auto lb = twist_gap_lower(g, w)) {
          v.growth.push_back({n, *lb});
          if (v.certificate.empty())
            v.certificate = "member family with weight " + w.str() + " at rank " + std::to_string(n);
        }
      }
      v.note = "twist-gap condition fails at block " + std::to_string(fail_block);
      if (v.growth.size() < 2) v.kind = BwmVerdict::Kind::Inconclusive;
      return v;
    }
  }

  // realized evidence over the window
  try {
    auto w = realize(d, family_min_rank(d.family), n_max, provider);
    int64_t mx = 0;
    for (const auto& [n, lvl] : w.levels) {
      GroupId g{d.family, n, p};
      for (const auto& x : lvl) {
        auto verdict = wdeg_verdict(g, x);
        int64_t val;
        if (verdict.exact) {
          val = verdict.exact->get_si();
        } else {
          val = provider.simple(g, x).wdeg();
        }
        mx = std::max(mx, val);
      }
    }
    v.realized_max = mx;
    if (v.cap && mx > *v.cap) {
      v.kind = BwmVerdict::Kind::Inconclusive;
      v.note += "; realized wdeg exceeds the certified cap";
    }
  } catch (const ResourceRefusal& e) {
    v.note += std::string("; realized evidence incomplete: ") + e.what();
  }
  return v;
}

BwmVerdict bwm_check_window(const InductiveWindow& w, CharProvider& provider) {
  BwmVerdict v;
  int64_t mx = 0;
  bool complete = true;
  for (const auto& [n, lvl] : w.levels) {
    GroupId g{w.family, n, w.p};
    for (const auto& x : lvl) {
      auto verdict = wdeg_verdict(g, x);
      if (verdict.exact) {
        mx = std::max(mx, verdict.exact->get_si());
        continue;
      }
      try {
        mx = std::max(mx, provider.simple(g, x).wdeg());
      } catch (const ResourceRefusal&) {
        complete = false;
      }
    }
  }
  v.realized_max = mx;
  v.kind = complete ? BwmVerdict::Kind::Bounded : BwmVerdict::Kind::Inconclusive;
  v.note = complete ? "window evidence only (finite levels)" : "some levels refused by the oracle";
  return v;
}

}  // namespace wdeg

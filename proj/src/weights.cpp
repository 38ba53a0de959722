#include "wdeg/weights.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wdeg {

Weight::Weight(const GroupId& g, std::vector<int64_t> coords) : group(g), fw(std::move(coords)) {
  if (static_cast<int>(fw.size()) != g.rank)
    throw InvalidInput("weight has " + std::to_string(fw.size()) + " coordinates, rank is " +
                       std::to_string(g.rank));
}

bool Weight::is_zero() const {
  return std::all_of(fw.begin(), fw.end(), [](int64_t a) { return a == 0; });
}

bool Weight::is_dominant() const {
  return std::all_of(fw.begin(), fw.end(), [](int64_t a) { return a >= 0; });
}

int64_t Weight::coeff_sum() const {
  return std::accumulate(fw.begin(), fw.end(), int64_t{0});
}

EpsVec Weight::eps() const {
  const RootSystem& rs = root_system(group);
  EpsVec v(rs.eps_dim(), 0);
  for (int i = 0; i < group.rank; ++i) {
    if (fw[i] == 0) continue;
    const EpsVec& f = rs.fundamental_weights()[i];
    for (int j = 0; j < rs.eps_dim(); ++j) v[j] += fw[i] * f[j];
  }
  return rs.canonical(std::move(v));
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < fw.size(); ++i) {
    if (i) os << ',';
    os << fw[i];
  }
  os << ']';
  return os.str();
}

Weight weight_from_eps(const GroupId& g, const EpsVec& eps) {
  const RootSystem& rs = root_system(g);
  std::vector<int64_t> fw(g.rank);
  for (int i = 0; i < g.rank; ++i) fw[i] = rs.pairing(eps, rs.simple_roots()[i]);
  return Weight(g, std::move(fw));
}

Weight zero_weight(const GroupId& g) { return Weight(g, std::vector<int64_t>(g.rank, 0)); }

Weight fundamental_weight(const GroupId& g, int i) {
  if (i == 0 || i == g.rank + 1) return zero_weight(g);
  if (i < 0 || i > g.rank) throw InvalidInput("fundamental weight index out of range");
  std::vector<int64_t> fw(g.rank, 0);
  fw[i - 1] = 1;
  return Weight(g, std::move(fw));
}

Weight parse_weight(const GroupId& g, const std::string& text) {
  std::vector<int64_t> coords;
  std::string body = text;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw InvalidInput("unterminated weight literal: " + text);
    body = body.substr(1, body.size() - 2);
  }
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      coords.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw InvalidInput("bad weight coordinate '" + tok + "'");
    }
  }
  return Weight(g, std::move(coords));
}

Weight add_weights(const Weight& a, const Weight& b) {
  if (a.group != b.group) throw InvalidInput("adding weights over different groups");
  std::vector<int64_t> fw(a.fw);
  for (size_t i = 0; i < fw.size(); ++i) fw[i] += b.fw[i];
  return Weight(a.group, std::move(fw));
}

Weight scale_weight(const Weight& a, int64_t c) {
  std::vector<int64_t> fw(a.fw);
  for (auto& x : fw) x *= c;
  return Weight(a.group, std::move(fw));
}

bool is_p_restricted(const Weight& w) {
  return std::all_of(w.fw.begin(), w.fw.end(), [&](int64_t a) { return a >= 0 && a < w.group.p; });
}

Weight SteinbergDecomposition::reassemble() const {
  if (layers.empty()) throw InvalidInput("empty decomposition");
  Weight acc = zero_weight(layers[0].group);
  int64_t pk = 1;
  for (const auto& l : layers) {
    acc = add_weights(acc, scale_weight(l, pk));
    pk *= p;
  }
  return acc;
}

SteinbergDecomposition steinberg_decompose(const Weight& w) {
  if (!w.is_dominant()) throw InvalidInput("steinberg decomposition needs a dominant weight");
  SteinbergDecomposition out;
  out.p = w.group.p;
  std::vector<int64_t> rem(w.fw);
  bool all_zero = std::all_of(rem.begin(), rem.end(), [](int64_t a) { return a == 0; });
  if (all_zero) {
    out.layers.push_back(zero_weight(w.group));
    return out;
  }
  while (!std::all_of(rem.begin(), rem.end(), [](int64_t a) { return a == 0; })) {
    std::vector<int64_t> digit(rem.size());
    for (size_t i = 0; i < rem.size(); ++i) {
      digit[i] = rem[i] % out.p;
      rem[i] /= out.p;
    }
    out.layers.emplace_back(w.group, std::move(digit));
  }
  return out;
}

Weight dual_weight(const Weight& w) {
  if (w.group.family != Family::A)
    throw InvalidInput("dual_weight in coefficient-reversal form is defined for type A only");
  std::vector<int64_t> fw(w.fw.rbegin(), w.fw.rend());
  return Weight(w.group, std::move(fw));
}

int64_t pdeg(const Weight& w) {
  if (w.group.family != Family::A) throw InvalidInput("pdeg is defined for type A only");
  if (!w.is_dominant()) throw InvalidInput("pdeg needs a dominant weight");
  int64_t s = 0;
  for (size_t k = 0; k < w.fw.size(); ++k) s += static_cast<int64_t>(k + 1) * w.fw[k];
  return s;
}

int64_t min_pdeg(const Weight& w) { return std::min(pdeg(w), pdeg(dual_weight(w))); }

int64_t delta(const Weight& w) {
  if (!w.is_dominant()) throw InvalidInput("delta needs a dominant weight");
  return root_system(w.group).delta(w.eps());
}

Weight restrict_weight(const Weight& w, int k) {
  const GroupId& g = w.group;
  if (k >= g.rank || k < 1) throw InvalidInput("restriction target rank must be in [1, n)");
  GroupId h{g.family, k, g.p};
  h.validate(GroupId::Strictness::Internal);
  EpsVec e = w.eps();
  int keep = (g.family == Family::A) ? k + 1 : k;
  EpsVec tail(e.end() - keep, e.end());
  return weight_from_eps(h, root_system(h).canonical(std::move(tail)));
}

}  // namespace wdeg

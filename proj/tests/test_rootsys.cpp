#include <doctest.h>

#include <numeric>
#include <set>

#include "wdeg/rootsys.hpp"
#include "wdeg/weights.hpp"

using namespace wdeg;

namespace {
const std::vector<GroupId> kGroups = {
    {Family::A, 2, 3}, {Family::A, 4, 2}, {Family::B, 3, 3}, {Family::B, 2, 5},
    {Family::C, 3, 2}, {Family::C, 2, 3}, {Family::D, 4, 3}, {Family::D, 5, 2},
};
}

TEST_CASE("positive root counts per family") {
  CHECK(root_system({Family::A, 2, 3}).num_positive() == 3);
  CHECK(root_system({Family::B, 3, 3}).num_positive() == 9);
  CHECK(root_system({Family::C, 3, 3}).num_positive() == 9);
  CHECK(root_system({Family::D, 4, 3}).num_positive() == 12);
}

TEST_CASE("group id guards") {
  CHECK_THROWS_AS(GroupId({Family::B, 3, 2}).validate(), InvalidInput);  // B at p=2
  CHECK_THROWS_AS(GroupId({Family::D, 3, 3}).validate(), InvalidInput);  // user-facing D needs 4
  CHECK_NOTHROW(GroupId({Family::D, 3, 3}).validate(GroupId::Strictness::Internal));
  CHECK_THROWS_AS(GroupId({Family::A, 2, 4}).validate(), InvalidInput);  // p not prime
}

TEST_CASE("fundamental weights pair to the Kronecker delta") {
  for (const auto& g : kGroups) {
    const RootSystem& rs = root_system(g);
    for (int i = 1; i <= g.rank; ++i)
      for (int j = 0; j < g.rank; ++j)
        CHECK(rs.pairing(fundamental_weight(g, i).eps(), rs.simple_roots()[j]) ==
              (i - 1 == j ? 1 : 0));
  }
}

TEST_CASE("maximal root dominates every positive root") {
  for (const auto& g : kGroups) {
    const RootSystem& rs = root_system(g);
    for (const auto& a : rs.positive_roots()) CHECK(rs.dominance_leq(a, rs.alpha_max()));
  }
}

TEST_CASE("C3 maximal root is the doubled first coordinate") {
  const RootSystem& rs = root_system({Family::C, 3, 3});
  CHECK(rs.alpha_max() == EpsVec{4, 0, 0});
  CHECK(rs.pairing(fundamental_weight({Family::C, 3, 3}, 3).eps(), rs.alpha_max()) == 1);
}

TEST_CASE("structure constants: |N| = q+1, antisymmetry, negative pairs") {
  for (const auto& g : kGroups) {
    const RootSystem& rs = root_system(g);
    const int S = rs.signed_count();
    for (int a = 0; a < S; ++a)
      for (int b = 0; b < S; ++b) {
        if (rs.sum_index(a, b) < 0) continue;
        EpsVec va = rs.signed_root(a), vb = rs.signed_root(b);
        // q = largest k with vb - k va a root
        int q = 0;
        for (int k = 1;; ++k) {
          EpsVec t(vb);
          for (size_t i = 0; i < t.size(); ++i) t[i] -= k * va[i];
          bool isroot = false;
          for (int r = 0; r < rs.num_positive() && !isroot; ++r) {
            if (rs.positive_root(r) == t) isroot = true;
            EpsVec m(rs.positive_root(r));
            for (auto& x : m) x = -x;
            if (m == t) isroot = true;
          }
          if (!isroot) break;
          q = k;
        }
        int64_t N = rs.structure_constant(a, b);
        CHECK(std::abs(N) == q + 1);
        CHECK(rs.structure_constant(b, a) == -N);
        CHECK(rs.structure_constant(rs.neg(a), rs.neg(b)) == -N);
      }
  }
}

TEST_CASE("structure constants satisfy the Jacobi identity on root triples") {
  for (const auto& g : kGroups) {
    const RootSystem& rs = root_system(g);
    const int S = rs.signed_count();
    auto term = [&](int x, int y, int z) -> int64_t {
      // N_{x,y} N_{x+y,z} when both brackets land on roots, else 0
      int s = rs.sum_index(x, y);
      if (s < 0) return 0;
      int t = rs.sum_index(s, z);
      if (t < 0) return 0;
      return rs.structure_constant(x, y) * rs.structure_constant(s, z);
    };
    int checked = 0;
    for (int a = 0; a < S; ++a)
      for (int b = 0; b < S; ++b)
        for (int c = 0; c < S; ++c) {
          // restrict to triples with pairwise sums and the full sum all roots
          if (rs.sum_index(a, b) < 0 || rs.sum_index(b, c) < 0 || rs.sum_index(c, a) < 0) continue;
          int full = rs.sum_index(rs.sum_index(a, b), c);
          if (full < 0) continue;
          CHECK(term(a, b, c) + term(b, c, a) + term(c, a, b) == 0);
          ++checked;
        }
    (void)checked;
  }
}

TEST_CASE("extraspecial constants are positive") {
  for (const auto& g : kGroups) {
    const RootSystem& rs = root_system(g);
    for (int r = 0; r < rs.num_positive(); ++r) {
      if (rs.height(r) == 1) continue;
      for (int a = 0; a < rs.num_positive(); ++a) {
        EpsVec rest(rs.positive_root(r));
        const EpsVec& va = rs.positive_root(a);
        for (size_t i = 0; i < rest.size(); ++i) rest[i] -= va[i];
        int b = rs.positive_index(rest);
        if (b >= 0) {
          CHECK(rs.structure_constant(a, b) > 0);  // minimal a: extraspecial pair
          break;
        }
      }
    }
  }
}

TEST_CASE("orbits: sizes, dominant member, divisibility of the Weyl order") {
  for (const auto& g : kGroups) {
    const RootSystem& rs = root_system(g);
    int64_t weyl = 1;
    switch (g.family) {
      case Family::A:
        for (int i = 2; i <= g.rank + 1; ++i) weyl *= i;
        break;
      case Family::B:
      case Family::C:
        for (int i = 2; i <= g.rank; ++i) weyl *= i;
        weyl <<= g.rank;
        break;
      case Family::D:
        for (int i = 2; i <= g.rank; ++i) weyl *= i;
        weyl <<= (g.rank - 1);
        break;
    }
    std::vector<Weight> samples = {zero_weight(g), fundamental_weight(g, 1),
                                   fundamental_weight(g, g.rank)};
    {
      std::vector<int64_t> fw(g.rank, 0);
      fw[0] = 1;
      fw[g.rank - 1] += 1;
      samples.emplace_back(g, fw);
    }
    for (const auto& w : samples) {
      auto orbit = rs.weyl_orbit(w.eps());
      CHECK(static_cast<int64_t>(orbit.size()) == rs.orbit_size(w.eps()));
      CHECK(weyl % orbit.size() == 0);
      int dominant = 0;
      std::set<EpsVec> distinct;
      for (const auto& v : orbit) {
        distinct.insert(v);
        if (rs.is_dominant(v)) ++dominant;
        CHECK(rs.dominant_rep(v) == w.eps());
      }
      CHECK(dominant == 1);
      CHECK(distinct.size() == orbit.size());
    }
  }
}

TEST_CASE("orbit counts from the text") {
  GroupId a2{Family::A, 2, 3};
  CHECK(root_system(a2).weyl_orbit(fundamental_weight(a2, 1).eps()).size() == 3);
  GroupId b3{Family::B, 3, 3};
  CHECK(root_system(b3).weyl_orbit(fundamental_weight(b3, 3).eps()).size() == 8);
  CHECK(root_system(a2).weyl_orbit(zero_weight(a2).eps()).size() == 1);
}

TEST_CASE("delta agrees with the orbit maximum of the pairing against long roots") {
  for (const auto& g : kGroups) {
    const RootSystem& rs = root_system(g);
    // one long root: alpha_max itself
    std::vector<Weight> samples = {fundamental_weight(g, 1), fundamental_weight(g, g.rank)};
    {
      std::vector<int64_t> fw(g.rank, 0);
      fw[0] = 2;
      if (g.rank >= 2) fw[1] = 1;
      samples.emplace_back(g, fw);
    }
    for (const auto& w : samples) {
      int64_t dv = delta(w);
      int64_t best = INT64_MIN;
      for (const auto& v : rs.weyl_orbit(w.eps()))
        best = std::max(best, rs.pairing(v, rs.alpha_max()));
      CHECK(best == dv);
    }
  }
}

TEST_CASE("delta examples") {
  GroupId a5{Family::A, 5, 3};
  CHECK(delta(Weight(a5, {1, 0, 2, 0, 0})) == 3);  // coefficient sum for type A
  GroupId c3{Family::C, 3, 3};
  CHECK(delta(fundamental_weight(c3, 3)) == 1);
  CHECK(delta(zero_weight(c3)) == 0);
}

TEST_CASE("dominance order sanity") {
  GroupId a3{Family::A, 3, 2};
  const RootSystem& rs = root_system(a3);
  CHECK(rs.dominance_leq(Weight(a3, {0, 1, 0}).eps(), Weight(a3, {2, 0, 0}).eps()));
  CHECK(!rs.dominance_leq(Weight(a3, {2, 0, 0}).eps(), Weight(a3, {0, 1, 0}).eps()));
  GroupId b3{Family::B, 3, 3};
  CHECK(root_system(b3).dominance_leq(zero_weight(b3).eps(), Weight(b3, {0, 1, 0}).eps()));
  CHECK(!root_system(b3).dominance_leq(zero_weight(b3).eps(),
                                       fundamental_weight(b3, 3).eps()));  // spin coset
}

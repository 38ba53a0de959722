#include <doctest.h>

#include <random>

#include "wdeg/chars.hpp"
#include "wdeg/oracle.hpp"

using namespace wdeg;

TEST_CASE("Weyl character dimensions and small examples") {
  Oracle o;
  GroupId a2{Family::A, 2, 3};
  auto adj = o.freudenthal_char(a2, Weight(a2, {1, 1}));
  CHECK(adj.dim() == 8);
  CHECK(adj.multiplicity(zero_weight(a2)) == 2);
  GroupId b3{Family::B, 3, 3};
  CHECK(o.freudenthal_char(b3, fundamental_weight(b3, 3)).dim() == 8);
  // minuscule weights give plain orbit characters
  GroupId a5{Family::A, 5, 2};
  auto w3 = o.freudenthal_char(a5, fundamental_weight(a5, 3));
  CHECK(w3 == orbit_char(a5, fundamental_weight(a5, 3)));
  CHECK(w3.dim() == 20);
}

TEST_CASE("Weyl dimension formula on random weights equals the recursion") {
  Oracle o;
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    GroupId g;
    switch (trial % 4) {
      case 0: g = {Family::A, 3, 3}; break;
      case 1: g = {Family::B, 3, 5}; break;
      case 2: g = {Family::C, 3, 2}; break;
      case 3: g = {Family::D, 4, 3}; break;
    }
    std::vector<int64_t> fw(g.rank, 0);
    for (auto& x : fw) x = rng() % 2;
    Weight w(g, fw);
    CHECK(o.freudenthal_char(g, w).dim() == o.weyl_dim(g, w));
  }
}

TEST_CASE("restricted simple characters by Gram rank") {
  Oracle o;
  GroupId a2{Family::A, 2, 3};
  auto s = o.simple_char(a2, Weight(a2, {1, 1}));
  CHECK(s.dim() == 7);  // the zero weight space drops from 2 to 1
  CHECK(s.wdeg() == 1);
  CHECK(s.multiplicity(zero_weight(a2)) == 1);

  GroupId a1{Family::A, 1, 5};
  CHECK(o.simple_char(a1, Weight(a1, {4})).dim() == 5);  // Steinberg weight

  GroupId a4{Family::A, 4, 3};
  CHECK(o.simple_char(a4, Weight(a4, {2, 0, 0, 0})) == truncated_sym_char(a4, 2));
}

TEST_CASE("Gram reports carry matching rational ranks") {
  Oracle o;
  GroupId b3{Family::B, 3, 3};
  auto reports = o.gram_reports(b3, Weight(b3, {0, 1, 0}));
  auto weyl = o.freudenthal_char(b3, Weight(b3, {0, 1, 0}));
  for (const auto& r : reports) {
    CHECK(r.rank_q == r.weyl_multiplicity);
    CHECK(r.rank_q == weyl.multiplicity(r.mu));
    CHECK(r.rank_p <= r.rank_q);
    CHECK(r.rank_q <= r.spanning_size);
  }
}

TEST_CASE("adjoint weight degree drops in the dividing characteristic") {
  Oracle o;
  // the A_2 adjoint at p=3 keeps only one zero-weight line
  GroupId a2{Family::A, 2, 3};
  CHECK(o.wdeg(a2, Weight(a2, {1, 1})) == 1);
  // away from the dividing prime the adjoint keeps both
  GroupId a2b{Family::A, 2, 5};
  CHECK(o.wdeg(a2b, Weight(a2b, {1, 1})) == 2);
}

TEST_CASE("factorized and direct routes agree off the restricted range") {
  Oracle o;
  GroupId a2{Family::A, 2, 2};
  Weight w(a2, {2, 1});  // layers (0,1), (1,0)
  CHECK(o.simple_char(a2, w) == o.simple_char(a2, w, true));
  GroupId c3{Family::C, 3, 2};
  Weight q(c3, {2, 0, 1});
  CHECK(o.simple_char(c3, q) == o.simple_char(c3, q, true));
}

TEST_CASE("deep-alcove agreement with the characteristic-0 character") {
  Oracle o;
  GroupId a3{Family::A, 3, 23};
  for (auto fw : {std::vector<int64_t>{1, 0, 1}, {2, 0, 0}, {0, 1, 1}}) {
    Weight w(a3, fw);
    CHECK(o.simple_char(a3, w) == o.freudenthal_char(a3, w));
  }
}

TEST_CASE("resource refusals are loud and typed") {
  Oracle tight(OracleLimits{3, 50, 10});
  GroupId a4{Family::A, 4, 3};
  CHECK_THROWS_AS(tight.simple_char(a4, fundamental_weight(a4, 1)), ResourceRefusal);
  GroupId a3{Family::A, 3, 3};
  CHECK_THROWS_AS(tight.simple_char(a3, Weight(a3, {2, 2, 2})), ResourceRefusal);
  CHECK_THROWS_AS(tight.simple_char(a3, Weight(a3, {-1, 0, 0})), InvalidInput);
}

TEST_CASE("steinberg consistency at a handful of non-restricted weights") {
  Oracle o;
  GroupId a2{Family::A, 2, 3};
  for (auto fw : {std::vector<int64_t>{3, 0}, {4, 1}, {0, 3}}) {
    Weight w(a2, fw);
    auto sd = steinberg_decompose(w);
    FormalCharacter prod = o.simple_char(a2, sd.layers[0]);
    for (size_t k = 1; k < sd.layers.size(); ++k)
      prod = tensor(prod, frobenius_twist(o.simple_char(a2, sd.layers[k]), static_cast<int>(k)));
    CHECK(o.simple_char(a2, w, true) == prod);
  }
}

TEST_CASE("spin and oscillator models agree with the oracle at desk scale") {
  Oracle o;
  GroupId b3{Family::B, 3, 3};
  CHECK(o.simple_char(b3, fundamental_weight(b3, 3)) == spin_char(b3));
  GroupId d4{Family::D, 4, 3};
  CHECK(o.simple_char(d4, fundamental_weight(d4, 4)) == half_spin_char(d4, true));
  GroupId c3{Family::C, 3, 2};
  CHECK(o.simple_char(c3, fundamental_weight(c3, 3)) == c2_spin_char(c3));
}

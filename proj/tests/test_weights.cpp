#include <doctest.h>

#include <random>

#include "wdeg/weights.hpp"

using namespace wdeg;

TEST_CASE("fw <-> eps round trip") {
  std::mt19937 rng(7);
  for (const auto& g : {GroupId{Family::A, 4, 3}, GroupId{Family::B, 3, 5},
                        GroupId{Family::C, 3, 3}, GroupId{Family::D, 4, 2}}) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int64_t> fw(g.rank);
      for (auto& x : fw) x = rng() % 5;
      Weight w(g, fw);
      CHECK(weight_from_eps(g, w.eps()) == w);
    }
  }
}

TEST_CASE("p-restrictedness") {
  GroupId a2{Family::A, 2, 3};
  CHECK(is_p_restricted(Weight(a2, {2, 2})));
  CHECK(!is_p_restricted(Weight(a2, {3, 0})));
  GroupId c3{Family::C, 3, 2};
  CHECK(is_p_restricted(Weight(c3, {1, 0, 1})));
}

TEST_CASE("steinberg decomposition: examples and round trip") {
  GroupId a1{Family::A, 1, 2};
  auto sd = steinberg_decompose(Weight(a1, {3}));
  REQUIRE(sd.layers.size() == 2);
  CHECK(sd.layers[0] == Weight(a1, {1}));
  CHECK(sd.layers[1] == Weight(a1, {1}));

  GroupId c4{Family::C, 4, 2};
  auto sd2 = steinberg_decompose(Weight(c4, {2, 0, 0, 1}));  // 2w1 + wn
  REQUIRE(sd2.layers.size() == 2);
  CHECK(sd2.layers[0] == fundamental_weight(c4, 4));
  CHECK(sd2.layers[1] == fundamental_weight(c4, 1));

  GroupId a3{Family::A, 3, 3};
  auto sd3 = steinberg_decompose(Weight(a3, {0, 5, 0}));
  REQUIRE(sd3.layers.size() == 2);
  CHECK(sd3.layers[0] == Weight(a3, {0, 2, 0}));
  CHECK(sd3.layers[1] == Weight(a3, {0, 1, 0}));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    GroupId g{Family::A, 4, trial % 2 ? 2 : 5};
    std::vector<int64_t> fw(g.rank);
    for (auto& x : fw) x = rng() % 30;
    Weight w(g, fw);
    auto dec = steinberg_decompose(w);
    for (const auto& l : dec.layers) CHECK(is_p_restricted(l));
    CHECK(dec.reassemble() == w);
    CHECK((dec.layers.size() == 1 || !dec.layers.back().is_zero()));
  }
}

TEST_CASE("duals and pdeg") {
  GroupId a3{Family::A, 3, 2};
  CHECK(dual_weight(fundamental_weight(a3, 1)) == fundamental_weight(a3, 3));
  CHECK(dual_weight(Weight(a3, {0, 2, 0})) == Weight(a3, {0, 2, 0}));
  GroupId a4{Family::A, 4, 2};
  CHECK(dual_weight(Weight(a4, {1, 3, 0, 0})) == Weight(a4, {0, 0, 3, 1}));
  CHECK(pdeg(fundamental_weight(a4, 1)) == 1);
  CHECK(pdeg(Weight(a4, {2, 1, 0, 0})) == 4);
  CHECK(min_pdeg(Weight(a4, {0, 0, 0, 2})) == 2);
  CHECK(pdeg(dual_weight(dual_weight(Weight(a4, {1, 2, 0, 1})))) ==
        pdeg(Weight(a4, {1, 2, 0, 1})));
  GroupId b3{Family::B, 3, 3};
  CHECK_THROWS_AS(pdeg(fundamental_weight(b3, 1)), InvalidInput);
}

TEST_CASE("weight restriction along the chain") {
  GroupId a3{Family::A, 3, 3};
  CHECK(restrict_weight(Weight(a3, {0, 1, 0}), 2) == Weight({Family::A, 2, 3}, {1, 0}));
  CHECK(restrict_weight(Weight(a3, {1, 0, 0}), 2).is_zero());
  GroupId b3{Family::B, 3, 3};
  CHECK(restrict_weight(fundamental_weight(b3, 3), 2) ==
        fundamental_weight({Family::B, 2, 3}, 2));
  GroupId a5{Family::A, 5, 3};
  // trailing coefficients survive
  CHECK(restrict_weight(Weight(a5, {1, 2, 0, 1, 2}), 3) == Weight({Family::A, 3, 3}, {0, 1, 2}));
  CHECK_THROWS_AS(restrict_weight(Weight(a5, {1, 0, 0, 0, 0}), 5), InvalidInput);
}

TEST_CASE("delta does not grow under restriction of the trailing block") {
  // Smith-factor weight of the chain restriction
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    GroupId g{Family::A, 5, 3};
    std::vector<int64_t> fw(g.rank);
    for (auto& x : fw) x = rng() % 3;
    Weight w(g, fw);
    for (int k = 2; k < g.rank; ++k) CHECK(delta(restrict_weight(w, k)) <= delta(w));
  }
}

TEST_CASE("weight text form") {
  GroupId a3{Family::A, 3, 2};
  CHECK(parse_weight(a3, "[1,0,2]") == Weight(a3, {1, 0, 2}));
  CHECK(parse_weight(a3, "1, 0, 2") == Weight(a3, {1, 0, 2}));
  CHECK(Weight(a3, {1, 0, 2}).str() == "[1,0,2]");
  CHECK_THROWS_AS(parse_weight(a3, "[1,2]"), InvalidInput);
  CHECK_THROWS_AS(parse_weight(a3, "[1,x,2]"), InvalidInput);
}

#include <doctest.h>

#include <functional>

#include "wdeg/classify.hpp"

using namespace wdeg;

TEST_CASE("restricted catalog membership, type A") {
  GroupId a4{Family::A, 4, 3};
  CHECK(in_omega_p(a4, zero_weight(a4)));
  for (int i = 1; i <= 4; ++i) CHECK(in_omega_p(a4, fundamental_weight(a4, i)));
  CHECK(in_omega_p(a4, Weight(a4, {2, 0, 0, 0})));      // symmetric power
  CHECK(in_omega_p(a4, Weight(a4, {0, 1, 1, 0})));      // 1+1 = p-1
  CHECK(in_omega_p(a4, Weight(a4, {0, 2, 0, 0})));      // (p-1) on one node
  CHECK(in_omega_p(a4, Weight(a4, {0, 0, 0, 2})));      // last node
  CHECK(!in_omega_p(a4, Weight(a4, {1, 0, 0, 1})));     // non-adjacent support
  CHECK(!in_omega_p(a4, Weight(a4, {1, 1, 0, 0})));     // pair sum 2 != p-1
  GroupId a4p5{Family::A, 4, 5};
  CHECK(!in_omega_p(a4p5, Weight(a4p5, {0, 1, 1, 0})));  // 2 != p-1
  CHECK(in_omega_p(a4p5, Weight(a4p5, {0, 3, 1, 0})));   // 3+1 = p-1
  CHECK_THROWS_AS(in_omega_p(a4, Weight(a4, {3, 0, 0, 0})), InvalidInput);  // not restricted
}

TEST_CASE("restricted catalog membership, other families") {
  GroupId b3{Family::B, 3, 3};
  CHECK(in_omega_p(b3, fundamental_weight(b3, 1)));
  CHECK(in_omega_p(b3, fundamental_weight(b3, 3)));
  CHECK(!in_omega_p(b3, fundamental_weight(b3, 2)));
  GroupId c3{Family::C, 3, 5};
  CHECK(in_omega_p(c3, Weight(c3, {0, 0, 2})));   // (p-1)/2 on the last node
  CHECK(in_omega_p(c3, Weight(c3, {0, 1, 1})));   // w_{n-1} + (p-3)/2 w_n
  CHECK(!in_omega_p(c3, Weight(c3, {0, 0, 1})));
  GroupId d4{Family::D, 4, 3};
  CHECK(in_omega_p(d4, fundamental_weight(d4, 3)));
  CHECK(in_omega_p(d4, fundamental_weight(d4, 4)));
  CHECK(!in_omega_p(d4, fundamental_weight(d4, 2)));
}

TEST_CASE("layered catalog membership") {
  GroupId a4{Family::A, 4, 3};
  CHECK(in_omega(a4, Weight(a4, {1, 3, 0, 0})));   // w1 + 3 w2
  CHECK(!in_omega(a4, Weight(a4, {1, 0, 0, 1})));
  GroupId c4{Family::C, 4, 2};
  CHECK(!in_omega(c4, Weight(c4, {2, 0, 0, 1})));  // heavy layer before light: excluded
  CHECK(in_omega(c4, Weight(c4, {1, 0, 0, 2})));   // light before heavy: allowed
  CHECK(in_omega(c4, Weight(c4, {1, 0, 0, 0})));
  // zero layer between the pair members disarms the exclusion
  CHECK(in_omega(c4, Weight(c4, {4, 0, 0, 1})));   // layers (wn, 0, w1)
}

TEST_CASE("characteristic-2 symplectic series") {
  GroupId c8{Family::C, 8, 2};
  auto one = c2_wdeg_class(c8, add_weights(fundamental_weight(c8, 1), fundamental_weight(c8, 8)));
  REQUIRE(one.exact.has_value());
  CHECK(*one.exact == 2);
  CHECK(one.l == 1);
  auto zero = c2_wdeg_class(c8, fundamental_weight(c8, 8));
  REQUIRE(zero.exact.has_value());
  CHECK(*zero.exact == 1);
  auto bad = c2_wdeg_class(c8, Weight(c8, {2, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(!bad.exact.has_value());
  REQUIRE(bad.lower.has_value());
  CHECK(*bad.lower == 4);  // 8 - 4 - 0
  CHECK(bad.condition.empty());
  auto low_rank = c2_wdeg_class({Family::C, 3, 2},
                                Weight({Family::C, 3, 2}, {2, 0, 1}));
  CHECK(!low_rank.condition.empty());
  CHECK(c2_rank_gap(9) == 4);
  CHECK(c2_rank_gap(12) == 8);
}

TEST_CASE("kleshchev recursion") {
  CHECK(kleshchev_f({5}) == 1);
  CHECK(kleshchev_f({1, 3}) == 2);
  CHECK(kleshchev_f({1, 2, 4}) == 3);  // (2-1) f(2,4) + f(4) = 2 + 1
  CHECK_THROWS_AS(kleshchev_f({3, 1}), InvalidInput);
  CHECK_THROWS_AS(kleshchev_f({}), InvalidInput);
}

TEST_CASE("kleshchev value dominates the endpoint spread, exhaustively in [1,12]") {
  // every strictly increasing sequence with entries in [1,12]
  std::vector<int64_t> u;
  long checked = 0;
  std::function<void(int64_t)> rec = [&](int64_t lo) {
    if (!u.empty()) {
      CHECK(kleshchev_f(u) >= u.back() - u.front());
      ++checked;
    }
    for (int64_t next = lo; next <= 12; ++next) {
      u.push_back(next);
      rec(next + 1);
      u.pop_back();
    }
  };
  rec(1);
  CHECK(checked == (1 << 12) - 1);
}

TEST_CASE("verdicts: catalog members are exactly multiplicity free") {
  GroupId a4{Family::A, 4, 3};
  auto v = wdeg_verdict(a4, fundamental_weight(a4, 2));
  REQUIRE(v.exact.has_value());
  CHECK(*v.exact == 1);
  CHECK(v.exact_source == "multiplicity-free-catalog");
}

TEST_CASE("verdicts: support spread and poly-degree bounds") {
  GroupId a10{Family::A, 10, 3};
  auto v = wdeg_verdict(a10, Weight(a10, {0, 1, 0, 0, 0, 0, 0, 1, 0, 0}));
  CHECK(!v.exact.has_value());
  CHECK(v.best_lower() >= 6);  // endpoint spread 8 - 2
  // min-pdeg d = 4 within rank: the factorial interval
  auto v2 = wdeg_verdict(a10, Weight(a10, {2, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(v2.best_lower() >= 2);
  REQUIRE(v2.best_upper().has_value());
  CHECK(*v2.best_upper() <= factorial(4));
  CHECK(v2.contains(2));
  CHECK(!v2.contains(100));
}

TEST_CASE("verdicts: twisted products multiply lower bounds") {
  GroupId a6{Family::A, 6, 2};
  // layers (w2+w4, w2+w4): each has spread bound 2
  Weight lam = add_weights(Weight(a6, {0, 1, 0, 1, 0, 0}),
                           scale_weight(Weight(a6, {0, 1, 0, 1, 0, 0}), 2));
  auto v = wdeg_verdict(a6, lam);
  CHECK(v.best_lower() >= 4);
}

TEST_CASE("verdict intervals are consistent") {
  GroupId c8{Family::C, 8, 2};
  auto v = wdeg_verdict(c8, Weight(c8, {2, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(v.best_lower() >= 4);
  GroupId b8{Family::B, 8, 3};
  auto v2 = wdeg_verdict(b8, fundamental_weight(b8, 4));
  CHECK(v2.best_lower() >= 4);  // rank gap at n = 8
}

TEST_CASE("small-pdeg enumeration") {
  GroupId a5{Family::A, 5, 3};
  auto w1 = enumerate_small_pdeg_weights(a5, 1);
  CHECK(w1.size() == 2);  // 0 and w1
  auto w2 = enumerate_small_pdeg_weights(a5, 2);
  CHECK(w2.size() == 4);  // 0, w1, 2w1, w2
  auto w0 = enumerate_small_pdeg_weights(a5, 0);
  CHECK(w0.size() == 1);
  for (const auto& w : enumerate_small_pdeg_weights(a5, 4)) CHECK(pdeg(w) <= 4);
  auto w4 = enumerate_small_pdeg_weights(a5, 4);
  CHECK(w4.size() == 12);  // partition-like count: sum i*a_i <= 4
}

#include <doctest.h>

#include "wdeg/chars.hpp"
#include "wdeg/oracle.hpp"

using namespace wdeg;

TEST_CASE("trivial and natural characters") {
  GroupId b3{Family::B, 3, 3};
  CHECK(trivial_char(b3).dim() == 1);
  CHECK(trivial_char(b3).wdeg() == 1);
  CHECK(natural_char(b3).dim() == 7);
  CHECK(natural_char({Family::A, 4, 2}).dim() == 5);
  CHECK(natural_char({Family::C, 3, 2}).dim() == 6);
  CHECK(natural_char({Family::D, 4, 3}).dim() == 8);
}

TEST_CASE("wedge characters") {
  GroupId a3{Family::A, 3, 2};
  auto w2 = wedge_char(a3, 2);
  CHECK(w2.dim() == 6);
  CHECK(w2.wdeg() == 1);
  CHECK(w2.highest_weight() == fundamental_weight(a3, 2));
  CHECK(wedge_char(a3, 1) == natural_char(a3));
  CHECK(wedge_char(a3, 0) == trivial_char(a3));
  CHECK_THROWS_AS(wedge_char(a3, 5), InvalidInput);
}

TEST_CASE("tensor basics") {
  GroupId a2{Family::A, 2, 3};
  auto nat = natural_char(a2);
  CHECK(tensor(nat, trivial_char(a2)) == nat);
  CHECK(tensor(nat, nat).dim() == 9);
}

TEST_CASE("power of the natural module reaches the factorial weight degree") {
  for (int d = 1; d <= 3; ++d) {
    GroupId g{Family::A, 4, 3};
    FormalCharacter t = natural_char(g);
    int64_t fact = 1;
    for (int j = 2; j <= d; ++j) {
      t = tensor(t, natural_char(g));
      fact *= j;
    }
    CHECK(t.wdeg() == fact);
  }
}

TEST_CASE("frobenius twist preserves dim and wdeg") {
  GroupId a2{Family::A, 2, 3};
  auto chi = tensor(natural_char(a2), natural_char(a2));
  auto tw = frobenius_twist(chi, 2);
  CHECK(tw.dim() == chi.dim());
  CHECK(tw.wdeg() == chi.wdeg());
  CHECK(frobenius_twist(chi, 0) == chi);
}

TEST_CASE("duals") {
  GroupId a3{Family::A, 3, 2};
  CHECK(dual(natural_char(a3)).highest_weight() == fundamental_weight(a3, 3));
  GroupId c3{Family::C, 3, 3};
  CHECK(dual(natural_char(c3)) == natural_char(c3));
}

TEST_CASE("truncated symmetric powers") {
  GroupId a2{Family::A, 2, 3};
  auto t2 = truncated_sym_char(a2, 2);
  CHECK(t2.dim() == 6);
  CHECK(t2.wdeg() == 1);
  CHECK(t2.highest_weight() == Weight(a2, {2, 0}));
  CHECK(truncated_sym_char(a2, 0) == trivial_char(a2));
  // total truncated dimension over all degrees is p^(n+1)
  int64_t total = 0;
  for (int64_t d = 0; d <= 2 * 3; ++d) total += truncated_sym_char(a2, d).dim();
  CHECK(total == 27);
  CHECK_THROWS_AS(truncated_sym_char(a2, 7), InvalidInput);
  for (int64_t d = 0; d <= 6; ++d) CHECK(truncated_sym_char(a2, d).wdeg() == 1);
}

TEST_CASE("spin characters") {
  GroupId b3{Family::B, 3, 3};
  CHECK(spin_char(b3).dim() == 8);
  CHECK(spin_char(b3).wdeg() == 1);
  GroupId b4{Family::B, 4, 3};
  CHECK(spin_char(b4).dim() == 16);
  GroupId d4{Family::D, 4, 3};
  CHECK(half_spin_char(d4, true).dim() == 8);
  CHECK(half_spin_char(d4, false).dim() == 8);
  CHECK(half_spin_char(d4, true).highest_weight() == fundamental_weight(d4, 4));
  CHECK(half_spin_char(d4, false).highest_weight() == fundamental_weight(d4, 3));
}

TEST_CASE("oscillator halves: dims, highest weights, truncated-model sum") {
  for (auto g : {GroupId{Family::C, 2, 3}, GroupId{Family::C, 3, 3}, GroupId{Family::C, 2, 5}}) {
    auto [odd, even] = oscillator_chars(g);
    int64_t pn = 1;
    for (int i = 0; i < g.rank; ++i) pn *= g.p;
    CHECK(even.dim() == (pn + 1) / 2);
    CHECK(odd.dim() == (pn - 1) / 2);
    CHECK(even.wdeg() == 1);
    CHECK(odd.wdeg() == 1);
    CHECK(even.dim() + odd.dim() == pn);
  }
  GroupId c2{Family::C, 2, 3};
  auto [odd, even] = oscillator_chars(c2);
  CHECK(even.dim() == 5);
  CHECK(odd.dim() == 4);
  CHECK(even.highest_weight() == Weight(c2, {0, 1}));
  CHECK(odd.highest_weight() == Weight(c2, {1, 0}));
  CHECK_THROWS_AS(oscillator_chars(GroupId{Family::C, 2, 2}), InvalidInput);
}

TEST_CASE("oscillator dimensions cross-checked against the Gram oracle") {
  Oracle o;
  for (auto g : {GroupId{Family::C, 2, 3}, GroupId{Family::C, 3, 3}}) {
    auto [odd, even] = oscillator_chars(g);
    CHECK(o.simple_char(g, even.highest_weight()) == even);
    CHECK(o.simple_char(g, odd.highest_weight()) == odd);
  }
}

TEST_CASE("characteristic-2 symplectic models") {
  GroupId c3{Family::C, 3, 2};
  CHECK(c2_spin_char(c3).dim() == 8);
  auto q = c2_q_char(c3);
  CHECK(q.dim() == 48);
  CHECK(q.wdeg() == 2);
  CHECK(q.highest_weight() ==
        add_weights(fundamental_weight(c3, 1), fundamental_weight(c3, 3)));
}

TEST_CASE("builders produce a unique maximal dominant weight") {
  GroupId a4{Family::A, 4, 3};
  for (int64_t d = 0; d <= 10; ++d) CHECK_NOTHROW(truncated_sym_char(a4, d).highest_weight());
  GroupId d4{Family::D, 4, 3};
  CHECK_NOTHROW(natural_char(d4).highest_weight());
}

TEST_CASE("twisted tensor multiplies wdeg when the twist gap clears delta") {
  // brute-force convolution check of the unique-decomposition regime
  GroupId a3{Family::A, 3, 2};
  auto a = tensor(natural_char(a3), natural_char(a3));  // delta 2
  auto b = wedge_char(a3, 2);
  // delta(2w1-ish support) = 2 < p^2
  auto prod = tensor(a, frobenius_twist(b, 2));
  CHECK(prod.wdeg() == a.wdeg() * b.wdeg());
}

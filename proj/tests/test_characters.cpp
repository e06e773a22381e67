#include <doctest.h>

#include "twistlab/characters.hpp"

using namespace twistlab;

namespace {

int fixed_points(const MonomialMatrix& g) {
  int k = 0;
  for (int i = 0; i < g.n(); ++i) k += g.perm(i) == i;
  return k;
}

// S_n as the permutation matrices inside G(1,1,n).
std::vector<MonomialMatrix> symmetric_group(int n) { return enumerate(reflection_group(1, 1, n)); }

}  // namespace

TEST_CASE("S_3 characters against explicit representations") {
  for (const auto& g : symmetric_group(3)) {
    const auto ct = cycle_type(g);
    const int sign = g.perm_sign();
    CHECK(sn_character(Partition{{3}}, ct) == 1);
    CHECK(sn_character(Partition{{1, 1, 1}}, ct) == sign);
    // permutation representation = trivial + standard
    CHECK(sn_character(Partition{{2, 1}}, ct) == fixed_points(g) - 1);
  }
}

TEST_CASE("S_4 characters: standard and its sign twist") {
  for (const auto& g : symmetric_group(4)) {
    const auto ct = cycle_type(g);
    CHECK(sn_character(Partition{{3, 1}}, ct) == fixed_points(g) - 1);
    CHECK(sn_character(Partition{{2, 1, 1}}, ct) == g.perm_sign() * (fixed_points(g) - 1));
  }
}

TEST_CASE("S_n column orthogonality at the identity") {
  for (int n = 1; n <= 6; ++n) {
    Integer sum = 0, fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    for (const auto& p : partitions(n)) {
      const Integer d = sn_character(p, std::vector<int>(n, 1));
      sum += d * d;
      CHECK(sn_character(dual_partition(p), std::vector<int>(n, 1)) == d);
    }
    CHECK(sum == fact);
  }
  CHECK(partitions(5).size() == 7);
  CHECK_THROWS_AS(sn_character(Partition{{2}}, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("B_n character tables are orthonormal and complete") {
  const auto ctx = CycloContext::get(4);
  for (int n = 1; n <= 3; ++n) {
    const auto table = bn_character_table(ctx, n);
    CHECK(table.size() == bipartitions(n).size());
    CHECK(table.size() == table.front().chi.data().classes.size());
    for (std::size_t i = 0; i < table.size(); ++i)
      for (std::size_t j = 0; j < table.size(); ++j)
        CHECK(inner_product(table[i].chi, table[j].chi) == CycloScalar(ctx, i == j ? 1L : 0L));
    CycloScalar squares(ctx, 0L);
    const auto id = table.front().chi.data().elements.front();
    for (const auto& lc : table) squares += lc.chi(id) * lc.chi(id);
    CHECK(squares == CycloScalar(ctx, long(table.front().chi.data().elements.size())));
  }
}

TEST_CASE("B_1 and B_2 labels") {
  const auto ctx = CycloContext::get(4);
  const auto b1 = bn_character_table(ctx, 1);
  REQUIRE(b1.size() == 2);
  const auto t = gen_t(2, 1, 0, 1);
  CHECK(b1[0].chi(t) == CycloScalar(ctx, 1L));   // ((1),())
  CHECK(b1[1].chi(t) == CycloScalar(ctx, -1L));  // ((),(1))
  CHECK(bn_character_table(ctx, 2).size() == 5);
  CHECK(bn_character_table(ctx, 3).size() == 10);
}

TEST_CASE("twisting identities for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(verify_b_twist(n).ok);
    CHECK(verify_j1_equals_jminusi(n).ok);
    CHECK(verify_epsilon_labeling(n).ok);
    CHECK(verify_eps_prime_twist(n).ok);
  }
  CHECK(verify_d_bijection(2).ok);
  CHECK(verify_d_bijection(3).ok);
}

TEST_CASE("mutation: the identity map does not realise the label permutation") {
  const auto ctx = CycloContext::get(4);
  const auto table = bn_character_table(ctx, 2);
  const auto data = table.front().chi.data_ptr();
  AlgebraMap identity = [&](const MonomialMatrix& g) { return GroupAlgebraElement(ctx, g); };
  bool all_match = true;
  for (const auto& lc : table) {
    const Bipartition target{lc.label.first, dual_partition(lc.label.second)};
    for (const auto& other : table)
      if (other.label == target && !(pullback(lc.chi, identity, data) == other.chi)) all_match = false;
  }
  CHECK_FALSE(all_match);
}

TEST_CASE("inner witness for J_-i J_1 on B_2, none for J_1 alone") {
  const auto ctx = CycloContext::get(4);
  const auto spec = reflection_group(2, 1, 2);
  const auto J1 = j_map_of(CycloScalar(ctx, 1L));
  const auto minus_i = -CycloScalar::root_of_unity(ctx, 1);
  AlgebraMap both = [&](const MonomialMatrix& g) { return j_map(minus_i, J1(g)); };
  const auto X = find_inner_witness(both, ctx, spec);
  REQUIRE(X.has_value());
  for (const auto& g : enumerate(spec)) CHECK(both(g) * *X == *X * GroupAlgebraElement(ctx, g));
  CHECK_FALSE(find_inner_witness(J1, ctx, spec).has_value());
}

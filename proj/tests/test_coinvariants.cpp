#include <doctest.h>

#include "twistlab/characters.hpp"
#include "twistlab/coinvariants.hpp"

using namespace twistlab;

namespace {

// Hilbert series prod_i (1 - t^{d_i}) / (1 - t) = prod_i (1 + t + ... + t^{d_i - 1}).
std::vector<int> hilbert_oracle(const std::vector<int>& degrees) {
  std::vector<int> h{1};
  for (int d : degrees) {
    std::vector<int> next(h.size() + d - 1, 0);
    for (std::size_t i = 0; i < h.size(); ++i)
      for (int k = 0; k < d; ++k) next[i + k] += h[i];
    h = next;
  }
  return h;
}

}  // namespace

TEST_CASE("invariant degrees") {
  CHECK(invariant_degrees(2, 1, 2) == std::vector<int>{2, 4});
  CHECK(invariant_degrees(2, 2, 2) == std::vector<int>{2, 2});
  CHECK(invariant_degrees(4, 2, 3) == std::vector<int>{4, 8, 6});
}

TEST_CASE("graded dimensions match the Hilbert series oracle") {
  struct Case {
    int m, p, n;
    bool mystic;
  };
  for (auto c : {Case{2, 1, 1, false}, Case{2, 1, 2, false}, Case{2, 2, 2, false}, Case{2, 2, 2, true},
                 Case{4, 2, 2, false}, Case{4, 2, 2, true}, Case{2, 1, 3, false}, Case{2, 2, 3, true}}) {
    const auto spec = c.mystic ? mystic_group(c.m, c.p, c.n) : reflection_group(c.m, c.p, c.n);
    const auto ctx = CycloContext::get(c.m);
    const auto q = coinvariant_quotient(ctx, spec);
    CHECK(q.graded_dims() == hilbert_oracle(invariant_degrees(c.m, c.p, c.n)));
    CHECK(static_cast<long>(q.total_dim()) == spec.order());
  }
  const auto q = coinvariant_quotient(CycloContext::get(2), mystic_group(2, 2, 2));
  CHECK(q.graded_dims() == std::vector<int>{1, 2, 1});
}

TEST_CASE("coinvariant characters are regular") {
  for (const auto& spec : {reflection_group(2, 1, 1), reflection_group(2, 1, 2), reflection_group(2, 2, 2),
                           mystic_group(2, 2, 2), reflection_group(2, 1, 3), mystic_group(4, 2, 2)})
    CHECK_MESSAGE(check_coinvariant_regular(spec).ok, spec.name());
}

TEST_CASE("invariance, ideals and the twisted product") {
  CHECK(check_generator_invariance(2, 2, 2).ok);
  CHECK(check_generator_invariance(4, 2, 3).ok);
  CHECK(check_one_sided_spans(mystic_group(2, 2, 2), 4).ok);
  CHECK(check_ideal_equality(2, 2, 2, 6).ok);
  CHECK(check_ideal_equality(2, 1, 3, 5).ok);
  CHECK(check_twisted_coinvariant_product(2, 2, 2).ok);
  CHECK(check_twisted_coinvariant_product(2, 1, 2).ok);
  CHECK(check_hilbert_series(2, 2, 2).ok);
}

TEST_CASE("mutation: an untwisted product is caught at G(2,1,2)") {
  CHECK_FALSE(check_twisted_coinvariant_product(2, 1, 2, true).ok);
}

TEST_CASE("traces and the regular character identity") {
  CHECK(check_trace_invariance(2, 1, 2).ok);
  CHECK(check_trace_invariance(2, 2, 2, 10, 3).ok);
  CHECK(check_regular_character_lemma(2, 1, 2).ok);
  CHECK(check_twisted_action_lemma(2, 2, 2, 3).ok);
}

TEST_CASE("reduction is idempotent and respects degree") {
  const auto ctx = CycloContext::get(2);
  const auto q = coinvariant_quotient(ctx, reflection_group(2, 1, 2));
  for (int d = 0; d <= 5; ++d)
    for (const auto& e : monomials_of_degree(2, d)) {
      const auto r = q.reduce(SkewPoly::monomial(ctx, 2, 1, e));
      CHECK(q.reduce(r) == r);
      if (d > q.top_degree()) CHECK(r.is_zero());
    }
}

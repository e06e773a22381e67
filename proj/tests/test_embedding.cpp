#include <doctest.h>

#include "twistlab/element_syntax.hpp"
#include "twistlab/embedding.hpp"
#include "twistlab/torus_hopf.hpp"

using namespace twistlab;

namespace {

bool all_ok(const std::vector<NamedResult>& rs) {
  for (const auto& r : rs)
    if (!r.ok) return false;
  return !rs.empty();
}

}  // namespace

TEST_CASE("embedding relations hold for target sign -1") {
  const Rational c(3, 5);
  CHECK(all_ok(EtaPhiEmbedding(CycloContext::get(2), 2, 1, 2, 1, c, {{1, c}}).check_relations()));
  CHECK(all_ok(EtaPhiEmbedding(CycloContext::get(2), 2, 2, 2, 1, c, {}).check_relations()));
  CHECK(all_ok(EtaPhiEmbedding(CycloContext::get(4), 4, 2, 2, 1, c, {{2, c}}).check_relations()));
}

TEST_CASE("mutation: target sign +1 breaks the relations") {
  const Rational c(1);
  CHECK_FALSE(all_ok(EtaPhiEmbedding(CycloContext::get(2), 2, 1, 2, 1, c, {{1, c}}, +1).check_relations()));
  CHECK_FALSE(all_ok(EtaPhiEmbedding(CycloContext::get(2), 2, 2, 2, 1, c, {}, +1).check_relations()));
}

TEST_CASE("embedding is bijective on low degrees when m/p is even") {
  const Rational c(1);
  CHECK(EtaPhiEmbedding(CycloContext::get(2), 2, 1, 2, 1, c, {{1, c}}).check_bijective(2).ok);
  EtaPhiEmbedding E(CycloContext::get(4), 4, 2, 2, 1, c, {{2, c}});
  CHECK(E.target_p() == 2);
  CHECK(E.check_bijective(2).ok);
}

TEST_CASE("embedding images of generators") {
  const Rational c(1);
  EtaPhiEmbedding E(CycloContext::get(2), 2, 1, 2, 1, c, {{1, c}});
  // degree is preserved: x_1 maps to x_1 times a group element
  const auto img = E.image_x(0);
  CHECK_FALSE(img.empty());
  CHECK(E.image_group(MonomialMatrix(2, 2)) == E.target().one());
}

TEST_CASE("Psi twist and its mutation") {
  for (int p : {1, 2}) {
    const auto ctx = CycloContext::get(2);
    const auto spec = reflection_group(2, p, 2);
    CherednikAlgebra H(ctx, spec, make_params(ctx, spec, CherednikFlavor::rational, 1, Rational(1), {}));
    const auto F = cocycle_F(ctx, 2);
    CHECK(check_psi_twist(H, F, F, 2).ok);
    CHECK_FALSE(check_psi_twist(H, F, TensorElement::one(ctx, 2), 2).ok);
  }
}

TEST_CASE("standard modules") {
  const auto ctx = CycloContext::get(2);
  const auto spec = reflection_group(2, 1, 2);
  CHECK(is_representation(trivial_rep(ctx, spec)));
  CHECK(is_representation(det_rep(ctx, spec)));
  const Rational c(2, 3);
  for (const char* rep : {"trivial", "det"}) {
    CHECK_MESSAGE(check_standard_module_twist(2, 1, 2, c, {{1, c}}, rep, 2).ok, rep);
    CHECK_MESSAGE(!check_standard_module_twist(2, 1, 2, c, {{1, c}}, rep, 2, +1).ok, rep);
  }
}

TEST_CASE("standard module: y kills the lowest weight space") {
  const auto ctx = CycloContext::get(2);
  const auto spec = reflection_group(2, 1, 2);
  CherednikAlgebra H(ctx, spec, make_params(ctx, spec, CherednikFlavor::rational, 1, Rational(1), {{1, Rational(1)}}));
  StandardModule M(H, trivial_rep(ctx, spec), 2);
  CHECK(M.basis().size() == 6);  // 1 + 2 + 3 monomials
  const ModuleKey v{Exps{}, 0};
  CHECK(M.act(parse_element(H, "y1"), Sparse<ModuleKey>{{v, CycloScalar(ctx, 1L)}}).empty());
}

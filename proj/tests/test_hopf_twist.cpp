#include <doctest.h>

#include <functional>

#include "twistlab/group_algebra.hpp"
#include "twistlab/skew_poly.hpp"
#include "twistlab/twist.hpp"
#include "twistlab/verify.hpp"

using namespace twistlab;

namespace {

// Inverse Fourier transform on T = (Z/2)^n: the element of kT (x) kT whose
// value under the characters (a, b) is omega(a, b).
TensorElement from_characters(const ContextPtr& ctx, int n, const std::function<int(Mask, Mask)>& omega) {
  TensorElement F{ctx, n, {}};
  const Mask N = Mask(1) << n;
  const Rational scale(1, static_cast<long>(N) * static_cast<long>(N));
  for (Mask A = 0; A < N; ++A)
    for (Mask B = 0; B < N; ++B) {
      long sum = 0;
      for (Mask a = 0; a < N; ++a)
        for (Mask b = 0; b < N; ++b) sum += omega(a, b) * parity_sign(a, A) * parity_sign(b, B);
      if (sum) F.terms[{A, B}] = CycloScalar(ctx, Rational(sum) * scale);
    }
  return F;
}

int skew_sign(Mask a, Mask b, int n) {
  int e = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) e += ((a >> i) & 1) & ((b >> j) & 1);
  return e % 2 ? -1 : 1;
}

}  // namespace

TEST_CASE("F equals the Fourier transform of the skew sign") {
  const auto ctx = CycloContext::get(2);
  for (int n = 1; n <= 4; ++n) {
    const auto F = cocycle_F(ctx, n);
    CHECK(F == from_characters(ctx, n, [n](Mask a, Mask b) { return skew_sign(a, b, n); }));
    for (Mask a = 0; a < (Mask(1) << n); ++a)
      for (Mask b = 0; b < (Mask(1) << n); ++b) CHECK(F.evaluate(a, b) == CycloScalar(ctx, long(skew_sign(a, b, n))));
  }
}

TEST_CASE("cocycle axioms, involution and Drinfeld element") {
  const auto ctx = CycloContext::get(2);
  for (int n = 1; n <= 4; ++n) {
    const auto F = cocycle_F(ctx, n);
    CHECK(check_cocycle(F).ok());
    CHECK(F * F == TensorElement::one(ctx, n));
    CHECK(*F.inverse() == F);
    const auto U = drinfeld_u(F);
    CHECK(U * U == TorusElement::one(ctx, n));
    for (Mask a = 0; a < (Mask(1) << n); ++a) {
      const auto h = TorusElement::basis(ctx, n, a);
      CHECK(twisted_antipode(F, h) == h);
      // kT is commutative and cocommutative, so the twisted coproduct is the original one.
      TensorElement delta{ctx, n, {{{a, a}, CycloScalar(ctx, 1L)}}};
      CHECK(twisted_coproduct(F, h) == delta);
    }
  }
  CHECK(check_cocycle_ranks(4).ok);
}

TEST_CASE("mutation: a counital non-cocycle is rejected") {
  const auto ctx = CycloContext::get(2);
  const int n = 2;
  auto omega = [](Mask a, Mask b) { return (a == 1 && b == 1) ? -1 : 1; };
  const auto bad = from_characters(ctx, n, omega);
  const auto rep = check_cocycle(bad);
  CHECK(rep.left_counit);
  CHECK(rep.right_counit);
  CHECK_FALSE(rep.cocycle_equation);
}

TEST_CASE("twisted product on the polynomial ring is the skew product") {
  const auto ctx = CycloContext::get(2);
  for (int n = 2; n <= 3; ++n) {
    const auto Finv = *cocycle_F(ctx, n).inverse();
    const auto S = polynomial_module_algebra(ctx, n, 1);
    std::vector<Exps> sample;
    for (int d = 0; d <= 2; ++d)
      for (const auto& e : monomials_of_degree(n, d)) sample.push_back(e);
    CHECK(check_module_algebra(S, sample));
    for (const auto& a : sample)
      for (const auto& b : sample) {
        auto prod = twisted_mul(S, Finv, a, b);
        REQUIRE(prod.size() == 1);
        CHECK(prod.begin()->first == add_exps(a, b));
        CHECK(prod.begin()->second == CycloScalar(ctx, long(monomial_product_sign(-1, a, b))));
      }
  }
}

TEST_CASE("Kulish-Mudrov map and eta") {
  CHECK(check_smash_isomorphism(2, 1, 2).ok);
  CHECK(check_smash_isomorphism(2, 2, 3).ok);
  CHECK(check_eta_multiplicative(2, 1, 2).ok);
  CHECK(check_eta_multiplicative(4, 2, 2).ok);
  for (const auto& r : check_eta_images(3, Rational(5, 7))) CHECK_MESSAGE(r.ok, r.name);
}

TEST_CASE("Kulish-Mudrov examples") {
  const auto ctx = CycloContext::get(2);
  const auto Finv = *cocycle_F(ctx, 2).inverse();
  const auto S = polynomial_module_algebra(ctx, 2, 1);
  // 1 # h -> 1 # h
  for (Mask h = 0; h < 4; ++h) {
    auto img = kulish_mudrov(S, Finv, SmashKey<Exps>{Exps{}, h});
    REQUIRE(img.size() == 1);
    CHECK(img.begin()->first == SmashKey<Exps>{Exps{}, h});
  }
  // x1 # 1 is fixed: gamma_2 acts trivially on x1
  auto img = kulish_mudrov(S, Finv, SmashKey<Exps>{unit_exps(0), 0});
  CHECK(img.size() == 1);
  CHECK(img.begin()->first.first == unit_exps(0));
  // x2 # 1 -> x2 # gamma_1 since F^{-1}(gamma_2, gamma_1) = -1
  auto img2 = kulish_mudrov(S, Finv, SmashKey<Exps>{unit_exps(1), 0});
  REQUIRE(img2.size() == 1);
  CHECK(img2.begin()->first == SmashKey<Exps>{unit_exps(1), 1});
  CHECK(img2.begin()->second == CycloScalar(ctx, 1L));
}

TEST_CASE("J_c") {
  const auto ctx = CycloContext::get(4);
  const int m = 2, n = 2;
  const auto s = gen_s(m, n, 0, 1, 0);
  // J_1(s_1) = s_1 (1 + t_1 + t_2 - t_1 t_2) / 2
  GroupAlgebraElement expected(ctx);
  const CycloScalar h(ctx, Rational(1, 2));
  expected.add_term(s, h);
  expected.add_term(s * torus_element(m, n, 1), h);
  expected.add_term(s * torus_element(m, n, 2), h);
  expected.add_term(s * torus_element(m, n, 3), -h);
  CHECK(j_map(CycloScalar(ctx, 1L), s) == expected);

  const auto c = CycloScalar(ctx, Rational(2, 3)) + CycloScalar::root_of_unity(ctx, 1);
  for (const auto& g : enumerate(reflection_group(2, 1, 3))) {
    GroupAlgebraElement x(ctx, g);
    const auto jx = j_map(c, x);
    CHECK(j_map(c.inverse(), jx) == x);
    if (g.is_diagonal()) CHECK(jx == x);
  }
  CHECK(check_phi_consistency(2, 1, 2).ok);
  CHECK(check_phi_consistency(2, 1, 3).ok);
  CHECK(check_phi_consistency(4, 2, 2).ok);
}

TEST_CASE("eta(phi(sigma_1)) = J_1(sigma_1)") {
  const auto ctx = CycloContext::get(2);
  const auto Finv = *cocycle_F(ctx, 2).inverse();
  const auto sigma = gen_sigma(2, 2, 0, 1, 0);
  const auto phi_sigma = phi_generators(ctx, Finv, sigma);
  CHECK(phi_sigma == GroupAlgebraElement(ctx, gen_s(2, 2, 0, 1, 1)));
  CHECK(eta(Finv, phi_sigma) == j_map(CycloScalar(ctx, 1L), sigma));
}

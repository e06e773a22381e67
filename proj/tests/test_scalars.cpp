#include <doctest.h>

#include <complex>
#include <random>

#include "twistlab/cyclotomic.hpp"

using namespace twistlab;

namespace {

CycloScalar random_scalar(const ContextPtr& ctx, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> c(ctx->degree());
  for (auto& q : c) {
    q = Rational(num(rng), den(rng));
    q.canonicalize();
  }
  return CycloScalar(ctx, c);
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == IntPolynomial{-1, 1});
  CHECK(cyclotomic_polynomial(2) == IntPolynomial{1, 1});
  CHECK(cyclotomic_polynomial(4) == IntPolynomial{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == IntPolynomial{1, -1, 1});
  CHECK(cyclotomic_polynomial(8) == IntPolynomial{1, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == IntPolynomial{1, 0, -1, 0, 1});
  for (int m = 1; m <= 24; ++m) CHECK(static_cast<int>(cyclotomic_polynomial(m).size()) - 1 == euler_phi(m));
}

TEST_CASE("roots of unity") {
  for (int m : {1, 2, 3, 4, 6, 8, 12}) {
    const auto ctx = CycloContext::get(m);
    const auto z = CycloScalar::root_of_unity(ctx, 1);
    CHECK(z.pow(m).is_one());
    for (int k = 1; k < m; ++k) CHECK_FALSE(z.pow(k).is_one());
    CycloScalar sum(ctx, 0L);
    for (int k = 0; k < m; ++k) sum += CycloScalar::root_of_unity(ctx, k);
    CHECK(sum == CycloScalar(ctx, m == 1 ? 1L : 0L));
  }
  const auto g = CycloContext::get(4);
  const auto i = CycloScalar::root_of_unity(g, 1);
  CHECK(i * i == CycloScalar(g, -1L));
  CHECK(i.str() == "i");
  CHECK(i.conj() == -i);
}

TEST_CASE("field axioms against floating point evaluation") {
  std::mt19937 rng(7);
  for (int m : {3, 4, 5, 8, 12}) {
    const auto ctx = CycloContext::get(m);
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = random_scalar(ctx, rng), b = random_scalar(ctx, rng);
      CHECK(close((a * b).approx(), a.approx() * b.approx()));
      CHECK(close((a + b).approx(), a.approx() + b.approx()));
      CHECK(close(a.conj().approx(), std::conj(a.approx())));
      if (!b.is_zero()) {
        CHECK(close((a / b).approx(), a.approx() / b.approx()));
        CHECK((b * b.inverse()).is_one());
      }
      CHECK(a * (a + b) == a * a + a * b);
    }
  }
}

TEST_CASE("rational values are canonical") {
  const auto ctx = CycloContext::get(2);
  Rational raw;
  mpq_set_si(raw.get_mpq_t(), 8, 8);
  CHECK(CycloScalar(ctx, raw).is_one());
  CHECK(CycloScalar(ctx, Rational(6, 4)) == CycloScalar(ctx, Rational(3, 2)));
  CHECK(CycloScalar(ctx, Rational(3, 2)).rational_value() == Rational(3, 2));
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("errors") {
  const auto a = CycloContext::get(3), b = CycloContext::get(4);
  CHECK_THROWS_AS(CycloScalar(a, 1L) + CycloScalar(b, 1L), ContextMismatch);
  CHECK_THROWS_AS(CycloScalar(a, 0L).inverse(), DivisionByZero);
  CycloScalar unbound;
  unbound += CycloScalar(a, 2L);
  CHECK(unbound == CycloScalar(a, 2L));
}

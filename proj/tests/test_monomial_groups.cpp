#include <doctest.h>

#include <complex>
#include <set>

#include "twistlab/monomial_group.hpp"

using namespace twistlab;

namespace {

// Brute-force oracle: explicit complex matrices, closure under products.
using CMat = std::vector<std::vector<std::complex<double>>>;

CMat to_cmat(const MonomialMatrix& g) {
  const int n = g.n();
  CMat a(n, std::vector<std::complex<double>>(n));
  for (int i = 0; i < n; ++i) a[g.perm(i)][i] = std::polar(1.0, 2 * M_PI * g.exp(i) / g.m());
  return a;
}

CMat cmul(const CMat& a, const CMat& b) {
  const std::size_t n = a.size();
  CMat c(n, std::vector<std::complex<double>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

std::vector<long> key(const CMat& a) {
  std::vector<long> k;
  for (const auto& row : a)
    for (const auto& z : row) {
      k.push_back(std::lround(z.real() * 1000));
      k.push_back(std::lround(z.imag() * 1000));
    }
  return k;
}

std::size_t closure_size(const std::vector<MonomialMatrix>& gens) {
  std::set<std::vector<long>> seen;
  std::vector<CMat> frontier;
  const int n = gens.front().n();
  CMat id(n, std::vector<std::complex<double>>(n));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  seen.insert(key(id));
  frontier.push_back(id);
  while (!frontier.empty()) {
    auto a = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      auto b = cmul(to_cmat(g), a);
      if (seen.insert(key(b)).second) frontier.push_back(b);
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("composition agrees with matrix multiplication") {
  const auto elements = enumerate(reflection_group(4, 2, 3));
  for (std::size_t i = 0; i < elements.size(); i += 7)
    for (std::size_t j = 0; j < elements.size(); j += 5)
      CHECK(key(to_cmat(elements[i] * elements[j])) == key(cmul(to_cmat(elements[i]), to_cmat(elements[j]))));
}

TEST_CASE("group orders: closed formula, enumeration and brute-force closure") {
  struct Case {
    int m, p, n;
    long order;
  };
  for (auto c : {Case{2, 1, 1, 2}, Case{2, 1, 2, 8}, Case{2, 2, 2, 4}, Case{2, 1, 3, 48}, Case{2, 2, 3, 24},
                 Case{4, 2, 2, 16}, Case{4, 1, 2, 32}, Case{3, 3, 2, 6}, Case{6, 2, 2, 36}}) {
    const auto spec = reflection_group(c.m, c.p, c.n);
    CHECK(spec.order() == c.order);
    const auto elements = enumerate(spec);
    CHECK(static_cast<long>(elements.size()) == c.order);
    CHECK(closure_size(generating_set(spec)) == elements.size());
    if (c.m % 2 == 0) {
      const auto mu = mystic_group(c.m, c.p, c.n);
      CHECK(static_cast<long>(enumerate(mu).size()) == mu.order());
      CHECK(closure_size(generating_set(mu)) == enumerate(mu).size());
    }
  }
}

TEST_CASE("the mystic group of G(2,2,2) is cyclic of order 4") {
  const auto sigma = gen_sigma(2, 2, 0, 1, 0);
  CHECK(sigma.act_on_x(0) == std::pair<int, int>{1, 0});
  CHECK(sigma.act_on_x(1) == std::pair<int, int>{0, 1});
  const auto elements = enumerate(mystic_group(2, 2, 2));
  REQUIRE(elements.size() == 4);
  std::set<MonomialMatrix> powers;
  MonomialMatrix g(2, 2);
  for (int k = 0; k < 4; ++k) {
    powers.insert(g);
    g = g * sigma;
  }
  CHECK(g.is_identity());
  CHECK(powers == std::set<MonomialMatrix>(elements.begin(), elements.end()));
  CHECK(conjugacy_classes(mystic_group(2, 2, 2)).size() == 4);
}

TEST_CASE("conjugacy classes partition the group") {
  for (const auto& spec : {reflection_group(2, 1, 3), reflection_group(2, 2, 3), mystic_group(2, 2, 3)}) {
    const auto classes = conjugacy_classes(spec);
    std::size_t total = 0;
    for (const auto& c : classes) total += c.size();
    CHECK(total == enumerate(spec).size());
  }
  CHECK(conjugacy_classes(reflection_group(2, 1, 3)).size() == 10);
  CHECK(conjugacy_classes(reflection_group(2, 1, 2)).size() == 5);
}

TEST_CASE("tokens round trip and bad input is rejected") {
  for (const auto& g : enumerate(reflection_group(4, 1, 2))) CHECK(parse_group_token(g.token(), 4, 2) == g);
  CHECK_THROWS_AS(reflection_group(4, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(mystic_group(3, 1, 2), std::invalid_argument);
  CHECK_THROWS(enumerate(reflection_group(2, 1, 8), 100));
}

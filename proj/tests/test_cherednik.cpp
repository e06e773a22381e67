#include <doctest.h>

#include <random>
#include <tuple>

#include "twistlab/cherednik.hpp"
#include "twistlab/element_syntax.hpp"

using namespace twistlab;

namespace {

// Naive rewriting oracle.  Words are sequences of letters x_i, g, y_i; a
// pass finds the first out-of-order adjacent pair and rewrites it, until
// every word reads x...x g y...y.
enum Kind { X = 0, G = 1, Y = 2 };
using Letter = std::tuple<int, int, MonomialMatrix>;
using Word = std::vector<Letter>;
using Poly = std::map<Word, CycloScalar>;

struct Oracle {
  ContextPtr ctx;
  int m, n;
  bool braided;
  // [y_k, x_j]_{+/-} = corr[k][j], as group algebra terms
  std::vector<std::vector<std::vector<std::pair<MonomialMatrix, CycloScalar>>>> corr;

  CycloScalar zeta(int k) const { return CycloScalar::root_of_unity(ctx, k); }

  void add(Poly& p, Word w, const CycloScalar& c) const {
    auto& slot = p[std::move(w)];
    slot += c;
  }

  Poly normalize(Poly p) const {
    Poly done;
    while (!p.empty()) {
      auto [w, c] = *p.begin();
      p.erase(p.begin());
      if (c.is_zero()) continue;
      bool rewritten = false;
      for (std::size_t i = 0; i + 1 < w.size() && !rewritten; ++i) {
        const auto& [ka, ia, ga] = w[i];
        const auto& [kb, ib, gb] = w[i + 1];
        auto splice = [&](std::vector<Letter> mid, const CycloScalar& s) {
          Word v(w.begin(), w.begin() + i);
          v.insert(v.end(), mid.begin(), mid.end());
          v.insert(v.end(), w.begin() + i + 2, w.end());
          add(p, std::move(v), c * s);
        };
        const CycloScalar one(ctx, 1L);
        const CycloScalar swap(ctx, braided ? -1L : 1L);
        if (ka == G && kb == G) {
          splice({{G, 0, ga * gb}}, one);
        } else if (ka == G && kb == X) {
          auto [j, e] = ga.act_on_x(ib);
          splice({{X, j, MonomialMatrix()}, {G, 0, ga}}, zeta(e));
        } else if (ka == Y && kb == G) {
          auto [j, e] = gb.inverse().act_on_y(ia);
          splice({{G, 0, gb}, {Y, j, MonomialMatrix()}}, zeta(e));
        } else if (ka == Y && kb == X) {
          splice({{X, ib, MonomialMatrix()}, {Y, ia, MonomialMatrix()}}, ia == ib ? one : swap);
          for (const auto& [g, s] : corr[ia][ib]) splice({{G, 0, g}}, s);
        } else if (ka == X && kb == X && ia > ib) {
          splice({w[i + 1], w[i]}, swap);
        } else if (ka == Y && kb == Y && ia > ib) {
          splice({w[i + 1], w[i]}, swap);
        } else if (ka == G && kb == Y) {
          continue;
        } else if (ka == X && kb == G) {
          continue;
        } else if (ka > kb) {
          FAIL("unexpected pair");
        }
        rewritten = ka == G ? (kb == G || kb == X) : ka == Y ? (kb == G || kb == X || (kb == Y && ia > ib))
                                                               : (kb == X && ia > ib);
      }
      if (!rewritten) add(done, w, c);
    }
    Poly clean;
    for (auto& [w, c] : done)
      if (!c.is_zero()) clean[w] = c;
    return clean;
  }

  Word word(const NormalWord& nw) const {
    Word w;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < nw.x[i]; ++k) w.push_back({X, i, MonomialMatrix()});
    w.push_back({G, 0, nw.g});
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < nw.y[i]; ++k) w.push_back({Y, i, MonomialMatrix()});
    return w;
  }

  CherednikElement to_element(const Poly& p) const {
    CherednikElement e;
    for (const auto& [w, c] : p) {
      NormalWord nw{Exps{}, MonomialMatrix(m, n), Exps{}};
      for (const auto& [k, i, g] : w) {
        if (k == X) ++nw.x[i];
        if (k == G) nw.g = g;
        if (k == Y) ++nw.y[i];
      }
      accumulate(e, nw, c);
    }
    return e;
  }
};

// [y_k, x_j] = t <y_k, x_j> - sum_s c_s <y_k, (1 - s) x_j> s over the
// reflections s of G(2,1,n); reflections are the involutions of trace n - 2.
Oracle rational_oracle(const ContextPtr& ctx, int n, const Rational& t, const Rational& c1, const Rational& ct) {
  Oracle o{ctx, 2, n, false, {}};
  o.corr.assign(n, std::vector<std::vector<std::pair<MonomialMatrix, CycloScalar>>>(n));
  const MonomialMatrix id(2, n);
  for (int k = 0; k < n; ++k) o.corr[k][k].push_back({id, CycloScalar(ctx, t)});
  for (const auto& s : enumerate(reflection_group(2, 1, n))) {
    if (s.is_identity() || !(s * s).is_identity()) continue;
    int trace = 0;
    for (int i = 0; i < n; ++i)
      if (s.perm(i) == i) trace += s.exp(i) ? -1 : 1;
    if (trace != n - 2) continue;
    const Rational cs = s.is_diagonal() ? ct : c1;
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        // <y_k, (1 - s) x_j> = delta_kj - (coefficient of x_k in s(x_j))
        auto [img, e] = s.act_on_x(j);
        CycloScalar pairing(ctx, k == j ? 1L : 0L);
        if (img == k) pairing -= o.zeta(e);
        if (!pairing.is_zero()) o.corr[k][j].push_back({s, -(CycloScalar(ctx, cs) * pairing)});
      }
  }
  return o;
}

// y_k x_j + x_j y_k = c1 (sg_kj - sg_kj^(-1)) for k != j;
// y_k x_k - x_k y_k = t + c1 sum_{l != k} (sg_kl + sg_kl^(-1)).
Oracle braided_oracle(const ContextPtr& ctx, int n, const Rational& t, const Rational& c1) {
  Oracle o{ctx, 2, n, true, {}};
  o.corr.assign(n, std::vector<std::vector<std::pair<MonomialMatrix, CycloScalar>>>(n));
  const CycloScalar c(ctx, c1);
  for (int k = 0; k < n; ++k) {
    o.corr[k][k].push_back({MonomialMatrix(2, n), CycloScalar(ctx, t)});
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      o.corr[k][j].push_back({gen_sigma(2, n, k, j, 0), c});
      o.corr[k][j].push_back({gen_sigma(2, n, k, j, 1), -c});
      o.corr[k][k].push_back({gen_sigma(2, n, k, j, 0), c});
      o.corr[k][k].push_back({gen_sigma(2, n, k, j, 1), c});
    }
  }
  return o;
}

std::vector<NormalWord> sample_words(const GroupSpec& spec, int max_degree) {
  std::vector<NormalWord> out;
  const auto elements = enumerate(spec);
  std::vector<Exps> monos;
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& e : monomials_of_degree(spec.n, d)) monos.push_back(e);
  for (const auto& a : monos)
    for (const auto& g : elements)
      for (const auto& b : monos)
        if (degree(a) + degree(b) <= max_degree) out.push_back({a, g, b});
  return out;
}

void compare_with_oracle(const CherednikAlgebra& H, const Oracle& o, int samples, unsigned seed) {
  const auto words = sample_words(H.spec(), 2);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  for (int s = 0; s < samples; ++s) {
    const auto& a = words[pick(rng)];
    const auto& b = words[pick(rng)];
    Word w = o.word(a);
    const Word wb = o.word(b);
    w.insert(w.end(), wb.begin(), wb.end());
    const auto expected = o.to_element(o.normalize(Poly{{w, CycloScalar(o.ctx, 1L)}}));
    const auto got = H.mul(a, b);
    CHECK_MESSAGE(sparse_equal(got, expected), (CherednikAlgebra::word_str(a, H.n()) + " * " +
                                                    CherednikAlgebra::word_str(b, H.n()) + " = " + H.str(got) +
                                                    ", oracle " + H.str(expected)));
  }
}

}  // namespace

TEST_CASE("rank one presentation: yx = xy + t - 2c s") {
  const auto ctx = CycloContext::get(2);
  const auto spec = reflection_group(2, 1, 1);
  const Rational c(3, 5);
  CherednikAlgebra H(ctx, spec, make_params(ctx, spec, CherednikFlavor::rational, 1, c, {{1, 2 * c}}));
  const auto s = H.group(gen_t(2, 1, 0, 1));
  auto rhs = H.add(H.mul(H.x(0), H.y(0)), H.one());
  rhs = H.sub(rhs, H.scale(CycloScalar(ctx, 2 * c), s));
  CHECK(sparse_equal(H.mul(H.y(0), H.x(0)), rhs));
  CHECK(sparse_equal(H.mul(s, H.x(0)), H.scale(CycloScalar(ctx, -1L), H.mul(H.x(0), s))));
}

TEST_CASE("rational G(2,1,n) products agree with the naive rewriter") {
  const auto ctx = CycloContext::get(2);
  for (int n : {1, 2, 3}) {
    const auto spec = reflection_group(2, 1, n);
    const Rational t(1), c1(2, 3), ct(5, 7);
    CherednikAlgebra H(ctx, spec, make_params(ctx, spec, CherednikFlavor::rational, t, c1, {{1, 2 * ct}}));
    compare_with_oracle(H, rational_oracle(ctx, n, t, c1, ct), n == 3 ? 60 : 150, 11 + n);
  }
}

TEST_CASE("braided mu(G(2,2,n)) products agree with the naive rewriter") {
  const auto ctx = CycloContext::get(2);
  for (int n : {2, 3}) {
    const auto spec = mystic_group(2, 2, n);
    const Rational t(0), c1(4, 3);
    CherednikAlgebra H(ctx, spec, make_params(ctx, spec, CherednikFlavor::braided, t, c1));
    compare_with_oracle(H, braided_oracle(ctx, n, t, c1), n == 3 ? 60 : 150, 29 + n);
  }
}

TEST_CASE("mutation: the rewriter detects a wrong sign in the correction") {
  const auto ctx = CycloContext::get(2);
  const auto spec = reflection_group(2, 1, 2);
  CherednikAlgebra H(ctx, spec, make_params(ctx, spec, CherednikFlavor::rational, 1, Rational(1), {{1, Rational(2)}}));
  auto wrong = rational_oracle(ctx, 2, 1, Rational(-1), Rational(1));
  Word w = wrong.word({Exps{}, MonomialMatrix(2, 2), unit_exps(0)});
  const Word wb = wrong.word({unit_exps(1), MonomialMatrix(2, 2), Exps{}});
  w.insert(w.end(), wb.begin(), wb.end());
  const auto expected = wrong.to_element(wrong.normalize(Poly{{w, CycloScalar(ctx, 1L)}}));
  CHECK_FALSE(sparse_equal(H.mul(H.y(0), H.x(1)), expected));
}

TEST_CASE("associativity on random triples") {
  for (bool br : {false, true}) {
    const auto ctx = CycloContext::get(4);
    const auto spec = br ? mystic_group(4, 2, 2) : reflection_group(4, 2, 2);
    CherednikAlgebra H(ctx, spec,
                       make_params(ctx, spec, br ? CherednikFlavor::braided : CherednikFlavor::rational, 1,
                                   Rational(1, 2), {{2, Rational(3, 2)}}));
    const auto words = sample_words(spec, 1);
    std::mt19937 rng(br ? 5 : 6);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (int s = 0; s < 60; ++s) {
      const auto a = H.basis(words[pick(rng)]), b = H.basis(words[pick(rng)]), c = H.basis(words[pick(rng)]);
      CHECK(sparse_equal(H.mul(H.mul(a, b), c), H.mul(a, H.mul(b, c))));
    }
  }
}

TEST_CASE("parameter validation") {
  const auto ctx = CycloContext::get(2);
  CHECK_THROWS(make_params(ctx, reflection_group(2, 2, 2), CherednikFlavor::rational, 0, 1, {{1, Rational(1)}}));
  CHECK_THROWS(CherednikAlgebra(ctx, reflection_group(2, 1, 2),
                                make_params(ctx, reflection_group(2, 1, 2), CherednikFlavor::braided, 0, 1)));
  CHECK_THROWS(CherednikAlgebra(CycloContext::get(3), reflection_group(2, 1, 2),
                                make_params(ctx, reflection_group(2, 1, 2), CherednikFlavor::rational, 0, 1)));
}

TEST_CASE("element syntax") {
  const auto ctx = CycloContext::get(2);
  const auto spec = reflection_group(2, 1, 2);
  CherednikAlgebra H(ctx, spec, make_params(ctx, spec, CherednikFlavor::rational, 1, 1, {{1, Rational(2)}}));
  const auto e = parse_element(H, "x1*x2*s(1,2;1)*y1 - 1/2*c^2*s(1,2;0)", {{"c", CycloScalar(ctx, 2L)}});
  CHECK(H.str(e) == H.str(parse_element(H, H.str(e))));
  CHECK(sparse_equal(parse_element(H, "y1*x1"), H.mul(H.y(0), H.x(0))));
  CHECK(sparse_equal(parse_element(H, "(x1 + x2)^2"),
                     H.add(H.add(H.mul(H.x(0), H.x(0)), H.mul(H.x(1), H.x(1))),
                           H.scale(CycloScalar(ctx, 2L), H.mul(H.x(0), H.x(1))))));
  CHECK_THROWS_AS(parse_element(H, "x1 +"), ParseError);
  CHECK_THROWS_AS(parse_element(H, "x3"), ParseError);
  CHECK_THROWS_AS(parse_element(H, "q*x1"), ParseError);
  CHECK_THROWS_AS(parse_element(H, "s(1,2;0"), ParseError);
  const auto g = parse_group_element(ctx, 2, 2, "1/2*(1 + t(1;1))");
  CHECK(g.coefficient(MonomialMatrix(2, 2)) == CycloScalar(ctx, Rational(1, 2)));
  CHECK(!element_to_json(e, 2).empty());
}

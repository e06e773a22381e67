#include "twistlab/restricted.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#ifndef TWISTLAB_DEFAULT_DATA_DIR
#define TWISTLAB_DEFAULT_DATA_DIR "data"
#endif

namespace twistlab {

RestrictedAlgebra::RestrictedAlgebra(ContextPtr ctx, GroupSpec spec, CherednikParams params) : ctx_(ctx) {
  if (!params.t.is_zero()) throw std::invalid_argument("RestrictedAlgebra: t must be zero");
  H_ = std::make_unique<CherednikAlgebra>(ctx, spec, std::move(params));
  quotient_ = std::make_unique<GradedQuotient>(coinvariant_quotient(ctx, spec));
  for (const auto& X : quotient_->basis())
    for (const auto& g : enumerate(spec))
      for (const auto& Y : quotient_->basis()) {
        index_[NormalWord{X, g, Y}] = words_.size();
        words_.push_back(NormalWord{X, g, Y});
      }
  std::vector<std::string> labels;
  for (const auto& w : words_) labels.push_back(CherednikAlgebra::word_str(w, spec.n));
  Vec unit(words_.size(), CycloScalar(ctx, 0L));
  unit[index_.at(NormalWord{Exps{}, MonomialMatrix(spec.m, spec.n), Exps{}})] = CycloScalar(ctx, 1L);
  algebra_ = std::make_unique<FiniteAlgebra>(
      ctx, std::move(labels), [this](std::size_t i, std::size_t j) { return reduce(H_->mul(words_[i], words_[j])); },
      std::move(unit));
}

Vec RestrictedAlgebra::reduce(const CherednikElement& e) const {
  Vec v(words_.size(), CycloScalar(ctx_, 0L));
  const int n = H_->n(), sign = quotient_->sign();
  std::map<Exps, SkewPoly> memo;
  auto reduced = [&](const Exps& a) -> const SkewPoly& {
    auto it = memo.find(a);
    if (it == memo.end()) it = memo.emplace(a, quotient_->reduce(SkewPoly::monomial(ctx_, n, sign, a))).first;
    return it->second;
  };
  for (const auto& [w, c] : e) {
    const SkewPoly& xs = reduced(w.x);
    if (xs.is_zero()) continue;
    const SkewPoly& ys = reduced(w.y);
    for (const auto& [X, cx] : xs.terms())
      for (const auto& [Y, cy] : ys.terms()) v[index_.at(NormalWord{X, w.g, Y})] += c * cx * cy;
  }
  return v;
}

CherednikElement RestrictedAlgebra::lift(const Vec& v) const {
  CherednikElement e;
  for (std::size_t i = 0; i < v.size(); ++i) accumulate(e, words_[i], v[i]);
  return e;
}

Vec RestrictedAlgebra::x(int i) const { return reduce(H_->x(i)); }
Vec RestrictedAlgebra::y(int i) const { return reduce(H_->y(i)); }
Vec RestrictedAlgebra::group(const MonomialMatrix& g) const { return reduce(H_->group(g)); }

std::vector<Vec> RestrictedAlgebra::generators() const {
  std::vector<Vec> out;
  for (int i = 0; i < H_->n(); ++i) {
    out.push_back(x(i));
    out.push_back(y(i));
  }
  for (const auto& g : generating_set(H_->spec())) out.push_back(group(g));
  return out;
}

Vec RestrictedAlgebra::parse(const std::string& text, const SymbolTable& symbols) const {
  return reduce(parse_element(*H_, text, symbols));
}

std::pair<std::size_t, CycloScalar> RestrictedAlgebra::torus_act(Mask a, std::size_t i) const {
  auto [w, s] = H_->module_algebra().act(a, words_[i]);
  return {index_.at(w), s};
}

CherednikParams rank_one_params(const ContextPtr& ctx, const Rational& c) {
  return make_params(ctx, reflection_group(2, 1, 1), CherednikFlavor::rational, 0, c, {{1, Rational(2 * c)}});
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : data) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string data_dir() {
  if (const char* env = std::getenv("TWISTLAB_DATA_DIR")) return env;
  return TWISTLAB_DEFAULT_DATA_DIR;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const ContextPtr& rationals() {
  static const ContextPtr ctx = CycloContext::get(2);
  return ctx;
}

std::unique_ptr<RestrictedAlgebra> rank_one(const Rational& c) {
  return std::make_unique<RestrictedAlgebra>(rationals(), reflection_group(2, 1, 1), rank_one_params(rationals(), c));
}

std::unique_ptr<RestrictedAlgebra> klein(const Rational& c) {
  const auto spec = reflection_group(2, 2, 2);
  return std::make_unique<RestrictedAlgebra>(rationals(), spec,
                                             make_params(rationals(), spec, CherednikFlavor::rational, 0, c));
}

std::unique_ptr<RestrictedAlgebra> braided_cyclic(const Rational& c1) {
  const auto spec = mystic_group(2, 2, 2);
  return std::make_unique<RestrictedAlgebra>(rationals(), spec,
                                             make_params(rationals(), spec, CherednikFlavor::braided, 0, c1));
}

std::string rstr(const Rational& c) { return to_string(c); }

}  // namespace

std::string gamma_fixture_text() {
  const std::string dir = data_dir();
  const std::string text = read_file(dir + "/gamma.txt");
  std::string expected = read_file(dir + "/gamma.txt.fnv1a");
  while (!expected.empty() && std::isspace(static_cast<unsigned char>(expected.back()))) expected.pop_back();
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(text);
  if (os.str() != expected) throw std::runtime_error("gamma.txt checksum mismatch: " + os.str() + " != " + expected);
  return text;
}

NamedResult check_rank_one_presentation(const Rational& c) {
  NamedResult res{"H_c(G(2,1,1)) at c = " + rstr(c) + ": dim 8, x^2 = y^2 = 0, yx = xy - 2cs", true, ""};
  const auto R = rank_one(c);
  const auto& A = R->algebra();
  const Vec x = R->x(0), y = R->y(0), s = R->group(gen_t(2, 1, 0, 1));
  const CycloScalar cc(rationals(), c);
  std::vector<std::pair<std::string, bool>> rel{
      {"dim 8", R->dim() == 8},
      {"x^2 = 0", A.is_zero(A.mul(x, x))},
      {"y^2 = 0", A.is_zero(A.mul(y, y))},
      {"s^2 = 1", A.mul(s, s) == A.unit()},
      {"sx = -xs", A.is_zero(A.add(A.mul(s, x), A.mul(x, s)))},
      {"ys = -sy", A.is_zero(A.add(A.mul(y, s), A.mul(s, y)))},
      {"yx = xy - 2cs", A.mul(y, x) == A.sub(A.mul(x, y), A.scale(CycloScalar(rationals(), 2L) * cc, s))},
  };
  for (const auto& [name, ok] : rel)
    if (!ok) {
      res.ok = false;
      res.detail += (res.detail.empty() ? "fails: " : ", ") + name;
    }
  if (res.ok) res.detail = "all relations hold";
  return res;
}

NamedResult check_restricted_dims(const Rational& c) {
  NamedResult res{"dim H_c(G(2,2,2)) = dim H_c(mu(G(2,2,2))) = 64", true, ""};
  const auto K = klein(c);
  const auto B = braided_cyclic(c);
  res.ok = K->dim() == 64 && B->dim() == 64;
  res.detail = std::to_string(K->dim()) + " and " + std::to_string(B->dim());
  return res;
}

NamedResult check_center_dims(const Rational& c) {
  NamedResult res{"centers: dim Z(H_c(G(2,1,1))) = 2, dim Z(H_c(G(2,2,2))) = 4", true, ""};
  const auto R = rank_one(c);
  const auto K = klein(c);
  const auto z1 = center(R->algebra(), R->generators());
  const auto z2 = center(K->algebra(), K->generators());
  res.ok = z1.size() == 2 && z2.size() == 4 && z2.size() == z1.size() * z1.size();
  res.detail = std::to_string(z1.size()) + " and " + std::to_string(z2.size());
  return res;
}

int gamma_sign(const Rational& c) {
  const std::string text = gamma_fixture_text();
  const SymbolTable symbols{{"c", CycloScalar(rationals(), c)}};
  for (int sign : {1, -1}) {
    const auto B = braided_cyclic(c * sign);
    if (B->algebra().commutes_with_basis(B->parse(text, symbols))) return sign;
  }
  return 0;
}

std::vector<NamedResult> check_not_isomorphic(const Rational& c) {
  std::vector<NamedResult> out;
  const CycloScalar cc(rationals(), c);
  {
    NamedResult r{"z = xy - cs is central in H_c(G(2,1,1)) with z^2 = c^2", true, ""};
    const auto R = rank_one(c);
    const auto& A = R->algebra();
    const Vec z = A.sub(A.mul(R->x(0), R->y(0)), A.scale(cc, R->group(gen_t(2, 1, 0, 1))));
    const bool central = A.commutes_with_basis(z);
    const bool square = A.mul(z, z) == A.scalar(cc * cc);
    r.ok = central && square;
    r.detail = std::string(central ? "central" : "not central") + ", z^2 " + (square ? "= c^2" : "!= c^2");
    out.push_back(r);
  }
  const int sign = gamma_sign(c);
  const auto B = braided_cyclic(c * (sign ? sign : 1));
  const auto& BA = B->algebra();
  const Vec gamma = B->parse(gamma_fixture_text(), {{"c", cc}});
  {
    NamedResult r{"gamma is central in the braided mu(G(2,2,2)) algebra, gamma^2 is not scalar, gamma^4 = c^4", true,
                  ""};
    const Vec g2 = BA.mul(gamma, gamma);
    const bool central = sign != 0;
    const bool not_scalar = !BA.is_scalar(g2);
    const bool fourth = BA.mul(g2, g2) == BA.scalar(cc * cc * cc * cc);
    r.ok = central && not_scalar && fourth;
    r.detail = std::string(central ? "central with c_1 = " + std::string(sign > 0 ? "c" : "-c") : "not central") +
               (not_scalar ? ", gamma^2 not scalar" : ", gamma^2 scalar") + (fourth ? ", gamma^4 = c^4" : ", gamma^4 != c^4");
    out.push_back(r);
  }
  {
    NamedResult r{"Z(H_c(G(2,2,2))) splits into four rank-one idempotents over Q", true, ""};
    const auto K = klein(c);
    const auto Z = center(K->algebra(), K->generators());
    const auto split = split_idempotents(K->algebra(), Z);
    r.ok = split.complete && split.idempotents.size() == 4;
    r.detail = std::to_string(split.idempotents.size()) + " idempotents" + (split.complete ? "" : " (incomplete)");
    out.push_back(r);
  }
  {
    NamedResult r{"minpoly(gamma) = T^4 - c^4", true, ""};
    const auto mp = minimal_polynomial(BA, gamma);
    std::vector<CycloScalar> expected(5, CycloScalar(rationals(), 0L));
    expected[0] = -(cc * cc * cc * cc);
    expected[4] = CycloScalar(rationals(), 1L);
    r.ok = mp == expected;
    r.detail = "minpoly " + polynomial_str(mp);
    out.push_back(r);
  }
  return out;
}

NamedResult check_restricted_iso_even_case(int m, int p, int n, const Rational& c, bool mutate) {
  NamedResult res{"eta: twisted restricted H_c(G(" + std::to_string(m) + "," + std::to_string(p) + "," +
                      std::to_string(n) + ")) -> H_c is an isomorphism",
                  true, ""};
  if (m % 2 || (m / p) % 2) throw std::invalid_argument("check_restricted_iso_even_case: m/p must be even");
  const auto ctx = CycloContext::get(m);
  const auto spec = reflection_group(m, p, n);
  std::map<int, Rational> cz;
  for (int k = p; k < m; k += p) cz[k] = 2 * c;
  RestrictedAlgebra R(ctx, spec, make_params(ctx, spec, CherednikFlavor::rational, 0, c, cz));
  const auto& A = R.algebra();
  const auto Finv = *cocycle_F(ctx, n).inverse();
  auto act = [&](Mask t, const Vec& v) {
    Vec r = A.zero();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      auto [j, s] = R.torus_act(t, i);
      r[j] += s * v[i];
    }
    return r;
  };
  std::vector<Vec> torus;
  for (Mask t = 0; t < (Mask(1) << n); ++t) torus.push_back(R.group(torus_element(m, n, t)));
  auto eta = [&](const Vec& v) {
    Vec r = A.zero();
    for (const auto& [k, f] : Finv.terms) r = A.add(r, A.scale(f, A.mul(mutate ? v : act(k.first, v), torus[k.second])));
    return r;
  };
  auto twisted = [&](const Vec& a, const Vec& b) {
    Vec r = A.zero();
    for (const auto& [k, f] : Finv.terms) r = A.add(r, A.scale(f, A.mul(act(k.first, a), act(k.second, b))));
    return r;
  };
  const auto gens = R.generators();
  std::size_t pairs = 0;
  for (const auto& g : gens) {
    const Vec eg = eta(g);
    for (std::size_t j = 0; j < A.dim(); ++j) {
      const Vec b = A.basis(j);
      ++pairs;
      if (eta(twisted(g, b)) != A.mul(eg, eta(b))) {
        res.ok = false;
        res.detail = "not multiplicative at " + R.str(g) + " * " + A.labels()[j];
        return res;
      }
    }
  }
  Matrix M(ctx, A.dim(), A.dim());
  for (std::size_t j = 0; j < A.dim(); ++j) {
    const Vec e = eta(A.basis(j));
    for (std::size_t i = 0; i < A.dim(); ++i) M(i, j) = e[i];
  }
  if (rank(M) != A.dim()) {
    res.ok = false;
    res.detail = "eta is not bijective";
    return res;
  }
  res.detail = "dim " + std::to_string(A.dim()) + ", " + std::to_string(pairs) + " generator-basis pairs";
  return res;
}

NamedResult check_restricted_associativity(const GroupSpec& spec, const Rational& c) {
  NamedResult res{"associativity of H_c(" + spec.name() + ")", true, ""};
  const auto ctx = CycloContext::get(spec.m);
  std::map<int, Rational> cz;
  for (int k = spec.p; k < spec.m; k += spec.p) cz[k] = 2 * c;
  RestrictedAlgebra R(ctx, spec,
                      make_params(ctx, spec,
                                  spec.flavor == Flavor::mystic ? CherednikFlavor::braided : CherednikFlavor::rational,
                                  0, c, cz));
  res.ok = check_associativity(R.algebra());
  res.detail = "dim " + std::to_string(R.dim());
  return res;
}

}  // namespace twistlab

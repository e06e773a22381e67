#include "twistlab/group_algebra.hpp"

#include <sstream>

#include "twistlab/linalg.hpp"

namespace twistlab {

GroupAlgebraElement::GroupAlgebraElement(ContextPtr ctx, const MonomialMatrix& g) : ctx_(std::move(ctx)) {
  terms_[g] = CycloScalar(ctx_, 1L);
}

CycloScalar GroupAlgebraElement::coefficient(const MonomialMatrix& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? CycloScalar(ctx_, 0L) : it->second;
}

void GroupAlgebraElement::add_term(const MonomialMatrix& g, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(g, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  GroupAlgebraElement r(a.ctx_ ? a.ctx_ : b.ctx_);
  for (const auto& [g, x] : a.terms_)
    for (const auto& [h, y] : b.terms_) r.add_term(g * h, x * y);
  return r;
}

GroupAlgebraElement operator*(const CycloScalar& c, const GroupAlgebraElement& a) {
  GroupAlgebraElement r(a.ctx_);
  for (const auto& [g, x] : a.terms_) r.add_term(g, c * x);
  return r;
}

GroupAlgebraElement operator*(const Rational& c, const GroupAlgebraElement& a) {
  GroupAlgebraElement r(a.ctx_);
  for (const auto& [g, x] : a.terms_) r.add_term(g, x * c);
  return r;
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [g, x] : a.terms_) {
    auto it = b.terms_.find(g);
    if (it == b.terms_.end() || it->second != x) return false;
  }
  return true;
}

CycloScalar GroupAlgebraElement::augmentation() const {
  CycloScalar s(ctx_, 0L);
  for (const auto& [g, x] : terms_) s += x;
  return s;
}

bool GroupAlgebraElement::supported_in(const GroupSpec& spec) const {
  for (const auto& [g, x] : terms_)
    if (!is_member(g, spec)) return false;
  return true;
}

std::string GroupAlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, x] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << x.str() << ")*" << g.token();
  }
  return os.str();
}

MonomialMatrix torus_element(int m, int n, Mask a) {
  if (m % 2) throw std::invalid_argument("torus_element: needs an even modulus");
  std::vector<int> exps(n, 0);
  for (int i = 0; i < n; ++i)
    if (a >> i & 1) exps[i] = m / 2;
  return diagonal(m, exps);
}

MonomialMatrix torus_conjugate(Mask a, const MonomialMatrix& g) {
  if (a == 0) return g;
  auto t = torus_element(g.m(), g.n(), a);
  return t * g * t;
}

GroupAlgebraElement torus_conjugate(Mask a, const GroupAlgebraElement& x) {
  GroupAlgebraElement r(x.context());
  for (const auto& [g, c] : x.terms()) r.add_term(torus_conjugate(a, g), c);
  return r;
}

GroupAlgebraElement j_map(const CycloScalar& c, const MonomialMatrix& g) {
  const auto& ctx = c.context();
  if (!ctx || c.is_zero()) throw std::invalid_argument("J_c: c must be a nonzero bound scalar");
  const int m = g.m(), n = g.n();
  const CycloScalar cinv = c.inverse();
  const CycloScalar two(ctx, 2L);
  const Rational quarter(1, 4);
  GroupAlgebraElement result(ctx, g);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (g.perm(i) < g.perm(j)) continue;
      const Mask ti = Mask(1) << i, tj = Mask(1) << j;
      GroupAlgebraElement factor(ctx);
      const CycloScalar sum = (c + cinv) * quarter;
      factor.add_term(MonomialMatrix(m, n), sum);
      factor.add_term(torus_element(m, n, ti | tj), -sum);
      factor.add_term(torus_element(m, n, ti), (c - cinv + two) * quarter);
      factor.add_term(torus_element(m, n, tj), (cinv - c + two) * quarter);
      result = result * factor;
    }
  return result;
}

GroupAlgebraElement j_map(const CycloScalar& c, const GroupAlgebraElement& x) {
  GroupAlgebraElement r(c.context());
  for (const auto& [g, coef] : x.terms()) r += coef * j_map(c, g);
  return r;
}

GroupAlgebraElement eta(const TensorElement& Finv, const GroupAlgebraElement& a) {
  GroupAlgebraElement r(a.context());
  if (a.is_zero()) return r;
  const auto& any = a.terms().begin()->first;
  for (const auto& [k, f] : Finv.terms) {
    auto left = torus_conjugate(k.first, a);
    r += f * (left * GroupAlgebraElement(a.context(), torus_element(any.m(), any.n(), k.second)));
  }
  return r;
}

GroupAlgebraElement twisted_mul(const TensorElement& Finv, const GroupAlgebraElement& a,
                                const GroupAlgebraElement& b) {
  GroupAlgebraElement r(a.context() ? a.context() : b.context());
  for (const auto& [k, f] : Finv.terms) r += f * (torus_conjugate(k.first, a) * torus_conjugate(k.second, b));
  return r;
}

std::pair<std::vector<int>, MonomialMatrix> sigma_decomposition(const MonomialMatrix& w) {
  const int m = w.m(), n = w.n();
  std::vector<int> perm = w.perm_vector();
  std::vector<int> word;
  // Peel right descents: perm = perm' o s_i whenever perm(i) > perm(i+1).
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i)
      if (perm[i] > perm[i + 1]) {
        std::swap(perm[i], perm[i + 1]);
        word.push_back(i);
        changed = true;
        break;
      }
  }
  std::reverse(word.begin(), word.end());
  MonomialMatrix prefix(m, n);
  for (int i : word) prefix = prefix * gen_sigma(m, n, i, i + 1, 0);
  MonomialMatrix rest = prefix.inverse() * w;
  if (!rest.is_diagonal()) throw std::logic_error("sigma_decomposition: remainder is not diagonal");
  return {word, rest};
}

GroupAlgebraElement phi_generators(const ContextPtr& ctx, const TensorElement& Finv, const MonomialMatrix& w) {
  const int m = w.m(), n = w.n();
  auto [word, rest] = sigma_decomposition(w);
  GroupAlgebraElement acc(ctx, MonomialMatrix(m, n));
  for (int i : word) acc = twisted_mul(Finv, acc, GroupAlgebraElement(ctx, gen_s(m, n, i, i + 1, m / 2)));
  return twisted_mul(Finv, acc, GroupAlgebraElement(ctx, rest));
}

PhiViaJ1::PhiViaJ1(const ContextPtr& ctx, const GroupSpec& spec) : ctx_(ctx) {
  if (spec.m % 2 || (spec.m / spec.p) % 2)
    throw std::invalid_argument("PhiViaJ1: needs m/p even so that T lies in the group");
  basis_ = enumerate(spec);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
  const auto Finv = *cocycle_F(ctx, spec.n).inverse();
  const std::size_t N = basis_.size();
  Matrix eta_matrix(ctx, N, N);
  for (std::size_t col = 0; col < N; ++col) {
    auto image = eta(Finv, GroupAlgebraElement(ctx, basis_[col]));
    for (const auto& [g, c] : image.terms()) {
      auto it = index_.find(g);
      if (it == index_.end()) throw std::logic_error("PhiViaJ1: eta leaves the group algebra");
      eta_matrix(it->second, col) = c;
    }
  }
  auto inv = inverse(eta_matrix);
  if (!inv) throw std::logic_error("PhiViaJ1: eta is singular on the group basis");
  inverse_.assign(N, std::vector<CycloScalar>(N));
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) inverse_[c][r] = (*inv)(r, c);
}

GroupAlgebraElement PhiViaJ1::operator()(const MonomialMatrix& w) const {
  auto target = j_map(CycloScalar(ctx_, 1L), w);
  GroupAlgebraElement r(ctx_);
  for (const auto& [g, c] : target.terms()) {
    auto it = index_.find(g);
    if (it == index_.end()) throw std::logic_error("PhiViaJ1: J_1 leaves the group algebra");
    for (std::size_t row = 0; row < basis_.size(); ++row)
      if (!inverse_[it->second][row].is_zero()) r.add_term(basis_[row], c * inverse_[it->second][row]);
  }
  return r;
}

}  // namespace twistlab

#include "twistlab/torus_hopf.hpp"

#include <stdexcept>

namespace twistlab {

namespace {

template <class Map>
void prune_map(Map& terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second.is_zero())
      it = terms.erase(it);
    else
      ++it;
  }
}

using Triple = std::array<Mask, 3>;
using Tensor3 = std::map<Triple, CycloScalar>;

Tensor3 mul3(const Tensor3& a, const Tensor3& b) {
  Tensor3 r;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) r[{ka[0] ^ kb[0], ka[1] ^ kb[1], ka[2] ^ kb[2]}] += va * vb;
  prune_map(r);
  return r;
}

}  // namespace

TorusElement TorusElement::one(ContextPtr ctx, int n) { return basis(std::move(ctx), n, 0); }

TorusElement TorusElement::basis(ContextPtr ctx, int n, Mask a) {
  TorusElement e{ctx, n, {}};
  e.terms[a] = CycloScalar(ctx, 1L);
  return e;
}

TorusElement TorusElement::operator*(const TorusElement& o) const {
  TorusElement r{ctx, n, {}};
  for (const auto& [a, x] : terms)
    for (const auto& [b, y] : o.terms) r.terms[a ^ b] += x * y;
  r.prune();
  return r;
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
  TorusElement r = *this;
  for (const auto& [b, y] : o.terms) r.terms[b] += y;
  r.prune();
  return r;
}

TorusElement TorusElement::operator-(const TorusElement& o) const {
  TorusElement r = *this;
  for (const auto& [b, y] : o.terms) r.terms[b] -= y;
  r.prune();
  return r;
}

bool TorusElement::operator==(const TorusElement& o) const {
  TorusElement d = *this - o;
  return d.terms.empty();
}

CycloScalar TorusElement::counit() const {
  CycloScalar s(ctx, 0L);
  for (const auto& [a, x] : terms) s += x;
  return s;
}

CycloScalar TorusElement::evaluate(Mask chi) const {
  CycloScalar s(ctx, 0L);
  for (const auto& [a, x] : terms) s += parity_sign(chi, a) > 0 ? x : -x;
  return s;
}

std::optional<TorusElement> TorusElement::inverse() const {
  const Mask size = Mask(1) << n;
  std::vector<CycloScalar> inv_values(size);
  for (Mask chi = 0; chi < size; ++chi) {
    CycloScalar v = evaluate(chi);
    if (v.is_zero()) return std::nullopt;
    inv_values[chi] = v.inverse();
  }
  TorusElement r{ctx, n, {}};
  const Rational norm(1, size);
  for (Mask a = 0; a < size; ++a) {
    CycloScalar s(ctx, 0L);
    for (Mask chi = 0; chi < size; ++chi) s += parity_sign(chi, a) > 0 ? inv_values[chi] : -inv_values[chi];
    r.terms[a] = s * norm;
  }
  r.prune();
  return r;
}

void TorusElement::prune() { prune_map(terms); }

TensorElement TensorElement::one(ContextPtr ctx, int n) {
  TensorElement e{ctx, n, {}};
  e.terms[{0, 0}] = CycloScalar(ctx, 1L);
  return e;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
  TensorElement r{ctx, n, {}};
  for (const auto& [a, x] : terms)
    for (const auto& [b, y] : o.terms) r.terms[{a.first ^ b.first, a.second ^ b.second}] += x * y;
  r.prune();
  return r;
}

bool TensorElement::operator==(const TensorElement& o) const {
  TensorElement d = *this;
  for (const auto& [b, y] : o.terms) d.terms[b] -= y;
  d.prune();
  return d.terms.empty();
}

CycloScalar TensorElement::evaluate(Mask a, Mask b) const {
  CycloScalar s(ctx, 0L);
  for (const auto& [k, x] : terms) s += parity_sign(a, k.first) * parity_sign(b, k.second) > 0 ? x : -x;
  return s;
}

std::optional<TensorElement> TensorElement::inverse() const {
  const Mask size = Mask(1) << n;
  std::vector<CycloScalar> inv(size * size);
  for (Mask a = 0; a < size; ++a)
    for (Mask b = 0; b < size; ++b) {
      CycloScalar v = evaluate(a, b);
      if (v.is_zero()) return std::nullopt;
      inv[a * size + b] = v.inverse();
    }
  TensorElement r{ctx, n, {}};
  const Rational norm(1, size * size);
  for (Mask ka = 0; ka < size; ++ka)
    for (Mask kb = 0; kb < size; ++kb) {
      CycloScalar s(ctx, 0L);
      for (Mask a = 0; a < size; ++a)
        for (Mask b = 0; b < size; ++b) {
          const auto& v = inv[a * size + b];
          s += parity_sign(a, ka) * parity_sign(b, kb) > 0 ? v : -v;
        }
      if (!s.is_zero()) r.terms[{ka, kb}] = s * norm;
    }
  return r;
}

void TensorElement::prune() { prune_map(terms); }

TensorElement cocycle_factor(const ContextPtr& ctx, int n, int i, int j) {
  TensorElement f{ctx, n, {}};
  const Rational half(1, 2);
  const Mask gi = Mask(1) << i, gj = Mask(1) << j;
  f.terms[{0, 0}] = CycloScalar(ctx, half);
  f.terms[{gi, 0}] = CycloScalar(ctx, half);
  f.terms[{0, gj}] = CycloScalar(ctx, half);
  f.terms[{gi, gj}] = CycloScalar(ctx, -half);
  return f;
}

TensorElement cocycle_F(const ContextPtr& ctx, int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("cocycle_F: rank out of range");
  TensorElement F = TensorElement::one(ctx, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) F = F * cocycle_factor(ctx, n, i, j);
  if (F * F != TensorElement::one(ctx, n)) throw std::logic_error("cocycle_F: F*F != 1(x)1");
  return F;
}

CocycleReport check_cocycle(const TensorElement& F) {
  CocycleReport rep;
  Tensor3 f12, f23, delta_left, delta_right;
  for (const auto& [k, v] : F.terms) {
    f12[{k.first, k.second, 0}] += v;
    f23[{0, k.first, k.second}] += v;
    delta_left[{k.first, k.first, k.second}] += v;
    delta_right[{k.first, k.second, k.second}] += v;
  }
  rep.cocycle_equation = mul3(f12, delta_left) == mul3(f23, delta_right);
  TorusElement left{F.ctx, F.n, {}}, right{F.ctx, F.n, {}};
  for (const auto& [k, v] : F.terms) {
    left.terms[k.second] += v;
    right.terms[k.first] += v;
  }
  auto one = TorusElement::one(F.ctx, F.n);
  rep.left_counit = left == one;
  rep.right_counit = right == one;
  return rep;
}

TensorElement twisted_coproduct(const TensorElement& F, const TorusElement& h) {
  auto Finv = F.inverse();
  if (!Finv) throw std::invalid_argument("twisted_coproduct: F is not invertible");
  TensorElement dh{F.ctx, F.n, {}};
  for (const auto& [a, x] : h.terms) dh.terms[{a, a}] += x;
  return F * dh * *Finv;
}

TorusElement drinfeld_u(const TensorElement& F) {
  TorusElement u{F.ctx, F.n, {}};
  for (const auto& [k, v] : F.terms) u.terms[k.first ^ k.second] += v;
  u.prune();
  return u;
}

TorusElement twisted_antipode(const TensorElement& F, const TorusElement& h) {
  TorusElement u = drinfeld_u(F);
  auto uinv = u.inverse();
  if (!uinv) throw std::invalid_argument("twisted_antipode: U is not invertible");
  return u * h.antipode() * *uinv;
}

}  // namespace twistlab

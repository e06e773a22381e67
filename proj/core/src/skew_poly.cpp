#include "twistlab/skew_poly.hpp"

#include <sstream>

namespace twistlab {

int monomial_product_sign(int sign, const Exps& a, const Exps& b) {
  if (sign > 0) return 1;
  int s = 0;
  for (int i = 0; i < kMaxRank; ++i)
    for (int j = 0; j < i; ++j) s += a[i] * b[j];
  return s % 2 ? -1 : 1;
}

std::pair<Exps, CycloScalar> act_monomial(const ContextPtr& ctx, int sign, const MonomialMatrix& g, const Exps& a,
                                          bool dual) {
  const int n = g.n(), m = g.m();
  if (ctx->conductor() % m) throw ContextMismatch("act_monomial: conductor must be a multiple of m");
  Exps r{};
  long zexp = 0;
  int inversions = 0;
  for (int i = 0; i < n; ++i) {
    if (!a[i]) continue;
    r[g.perm(i)] = a[i];
    zexp += static_cast<long>(dual ? m - g.exp(i) : g.exp(i)) * a[i];
    if (sign < 0)
      for (int j = i + 1; j < n; ++j)
        if (g.perm(i) > g.perm(j)) inversions += a[i] * a[j];
  }
  CycloScalar s = CycloScalar::root_of_unity(ctx, zexp * (ctx->conductor() / m));
  if (inversions % 2) s = -s;
  return {r, s};
}

SkewPoly SkewPoly::monomial(ContextPtr ctx, int n, int sign, const Exps& a) {
  SkewPoly p(ctx, n, sign);
  p.add_term(a, CycloScalar(ctx, 1L));
  return p;
}

SkewPoly SkewPoly::variable(ContextPtr ctx, int n, int sign, int i) { return monomial(ctx, n, sign, unit_exps(i)); }

bool SkewPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree(terms_.begin()->first);
  for (const auto& [a, c] : terms_)
    if (degree(a) != d) return false;
  return true;
}

SkewPoly& SkewPoly::operator+=(const SkewPoly& o) {
  if (!ctx_) *this = SkewPoly(o.ctx_, o.n_, o.sign_);
  accumulate(terms_, o.terms_, CycloScalar(ctx_, 1L));
  return *this;
}

SkewPoly& SkewPoly::operator-=(const SkewPoly& o) {
  if (!ctx_) *this = SkewPoly(o.ctx_, o.n_, o.sign_);
  accumulate(terms_, o.terms_, CycloScalar(ctx_, -1L));
  return *this;
}

SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
  if (a.sign_ != b.sign_ || a.n_ != b.n_) throw std::invalid_argument("SkewPoly: mismatched rings");
  SkewPoly r(a.ctx_, a.n_, a.sign_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      CycloScalar c = ca * cb;
      if (monomial_product_sign(a.sign_, ea, eb) < 0) c = -c;
      r.add_term(add_exps(ea, eb), c);
    }
  return r;
}

SkewPoly operator*(const CycloScalar& c, const SkewPoly& a) {
  SkewPoly r(a.ctx_, a.n_, a.sign_);
  for (const auto& [e, v] : a.terms_) r.add_term(e, c * v);
  return r;
}

bool operator==(const SkewPoly& a, const SkewPoly& b) {
  return a.n_ == b.n_ && a.sign_ == b.sign_ && sparse_equal(a.terms_, b.terms_);
}

SkewPoly SkewPoly::act(const MonomialMatrix& g, bool dual) const {
  SkewPoly r(ctx_, n_, sign_);
  for (const auto& [a, c] : terms_) {
    auto [a2, s] = act_monomial(ctx_, sign_, g, a, dual);
    r.add_term(a2, c * s);
  }
  return r;
}

std::string SkewPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [a, c] = *it;
    if (!first) os << " + ";
    first = false;
    std::string mono;
    for (int i = 0; i < n_; ++i) {
      if (!a[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (a[i] > 1) mono += "^" + std::to_string(a[i]);
    }
    if (mono.empty())
      os << "(" << c << ")";
    else if (c.is_one())
      os << mono;
    else
      os << "(" << c << ")*" << mono;
  }
  return os.str();
}

std::vector<int> invariant_degrees(int m, int p, int n) {
  std::vector<int> d;
  for (int k = 1; k < n; ++k) d.push_back(k * m);
  d.push_back(n * m / p);
  return d;
}

std::vector<SkewPoly> invariant_generators(const ContextPtr& ctx, int m, int p, int n, int sign) {
  if (p <= 0 || m % p) throw std::invalid_argument("invariant_generators: p must divide m");
  std::vector<SkewPoly> out;
  for (int k = 1; k < n; ++k) {
    SkewPoly f(ctx, n, sign);
    for (int i = 0; i < n; ++i) {
      Exps a{};
      a[i] = k * m;
      f.add_term(a, CycloScalar(ctx, 1L));
    }
    out.push_back(f);
  }
  Exps a{};
  for (int i = 0; i < n; ++i) a[i] = m / p;
  out.push_back(SkewPoly::monomial(ctx, n, sign, a));
  return out;
}

ModuleAlgebra<Exps> polynomial_module_algebra(const ContextPtr& ctx, int n, int sign) {
  ModuleAlgebra<Exps> alg;
  alg.ctx = ctx;
  alg.n = n;
  alg.unit = Exps{};
  alg.mul = [ctx, sign](const Exps& a, const Exps& b) {
    Sparse<Exps> r;
    accumulate(r, add_exps(a, b), CycloScalar(ctx, static_cast<long>(monomial_product_sign(sign, a, b))));
    return r;
  };
  alg.act = [ctx](Mask t, const Exps& a) {
    int s = 0;
    for (int i = 0; i < kMaxRank; ++i)
      if (t >> i & 1) s += a[i];
    return std::make_pair(a, CycloScalar(ctx, s % 2 ? -1L : 1L));
  };
  return alg;
}

}  // namespace twistlab

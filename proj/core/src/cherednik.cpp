#include "twistlab/cherednik.hpp"

#include <functional>
#include <sstream>

namespace twistlab {

int degree(const Exps& a) {
  int d = 0;
  for (auto v : a) d += v;
  return d;
}

Exps unit_exps(int i) {
  Exps e{};
  e[i] = 1;
  return e;
}

Exps add_exps(const Exps& a, const Exps& b) {
  Exps r{};
  for (int i = 0; i < kMaxRank; ++i) r[i] = a[i] + b[i];
  return r;
}

std::vector<Exps> monomials_of_degree(int n, int d) {
  std::vector<Exps> out;
  Exps cur{};
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur[i] = a;
      rec(i + 1, left - a);
    }
    cur[i] = 0;
  };
  if (n == 0) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  rec(0, d);
  return out;
}

CherednikParams make_params(const ContextPtr& ctx, const GroupSpec& spec, CherednikFlavor flavor,
                            const Rational& t, const Rational& c1, std::map<int, Rational> c_zeta) {
  CherednikParams p;
  p.t = CycloScalar(ctx, t);
  p.c1 = CycloScalar(ctx, c1);
  p.flavor = flavor;
  for (int k = spec.p; k < spec.m; k += spec.p) p.c_zeta[k] = CycloScalar(ctx, c_zeta.count(k) ? c_zeta[k] : Rational(0));
  for (const auto& [k, v] : c_zeta)
    if (!p.c_zeta.count(k)) throw std::invalid_argument("make_params: c_zeta key " + std::to_string(k) + " not in C_{m/p}\\{1}");
  return p;
}

CherednikAlgebra::CherednikAlgebra(ContextPtr ctx, GroupSpec spec, CherednikParams params)
    : ctx_(std::move(ctx)), spec_(spec), params_(std::move(params)) {
  spec_.validate();
  if (ctx_->conductor() % spec_.m) throw ContextMismatch("CherednikAlgebra: conductor must be a multiple of m");
  scale_ = ctx_->conductor() / spec_.m;
  const bool br = braided();
  if (br && spec_.flavor != Flavor::mystic) throw std::invalid_argument("braided algebra needs a mystic group");
  if (!br && spec_.flavor != Flavor::reflection) throw std::invalid_argument("rational algebra needs a reflection group");
  if (br && spec_.m % 2) throw std::invalid_argument("braided algebra needs m even");
  for (const auto& [k, v] : params_.c_zeta)
    if (k <= 0 || k >= spec_.m || k % spec_.p) throw std::invalid_argument("CherednikParams: bad c_zeta key");
  if (!params_.t.bound()) params_.t = CycloScalar(ctx_, 0L);
  if (!params_.c1.bound()) params_.c1 = CycloScalar(ctx_, 0L);

  const int n = spec_.n, m = spec_.m;
  const MonomialMatrix id(m, n);
  corrections_.assign(n * n, GroupAlgebraElement(ctx_));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      GroupAlgebraElement& c = corrections_[k * n + j];
      if (k != j) {
        for (int e = 0; e < m; ++e) {
          auto g = br ? gen_sigma(m, n, k, j, e) : gen_s(m, n, k, j, e);
          c.add_term(g, params_.c1 * zeta_power(e));
        }
        continue;
      }
      const CycloScalar sgn = CycloScalar(ctx_, br ? 1L : -1L);
      c.add_term(id, params_.t);
      for (int l = 0; l < n; ++l) {
        if (l == k) continue;
        for (int e = 0; e < m; ++e) c.add_term(br ? gen_sigma(m, n, k, l, e) : gen_s(m, n, k, l, e), sgn * params_.c1);
      }
      for (const auto& [z, cz] : params_.c_zeta) c.add_term(gen_t(m, n, k, z), sgn * cz);
    }
  for (const auto& c : corrections_)
    if (!c.supported_in(spec_)) throw std::logic_error("CherednikAlgebra: relation leaves the group");
}

CycloScalar CherednikAlgebra::zeta_power(long k) const { return CycloScalar::root_of_unity(ctx_, k * scale_); }

CherednikElement CherednikAlgebra::one() const { return basis({Exps{}, MonomialMatrix(spec_.m, spec_.n), Exps{}}); }

CherednikElement CherednikAlgebra::scalar(const CycloScalar& c) const {
  CherednikElement r;
  accumulate(r, NormalWord{Exps{}, MonomialMatrix(spec_.m, spec_.n), Exps{}}, c);
  return r;
}

CherednikElement CherednikAlgebra::x(int i) const {
  return basis({unit_exps(i), MonomialMatrix(spec_.m, spec_.n), Exps{}});
}

CherednikElement CherednikAlgebra::y(int i) const {
  return basis({Exps{}, MonomialMatrix(spec_.m, spec_.n), unit_exps(i)});
}

CherednikElement CherednikAlgebra::group(const MonomialMatrix& g) const {
  if (!is_member(g, spec_)) throw std::invalid_argument(g.token() + " is not in " + spec_.name());
  return basis({Exps{}, g, Exps{}});
}

CherednikElement CherednikAlgebra::group(const GroupAlgebraElement& a) const {
  CherednikElement r;
  for (const auto& [g, c] : a.terms()) {
    if (!is_member(g, spec_)) throw std::invalid_argument(g.token() + " is not in " + spec_.name());
    accumulate(r, NormalWord{Exps{}, g, Exps{}}, c);
  }
  return r;
}

CherednikElement CherednikAlgebra::basis(const NormalWord& w) const { return {{w, CycloScalar(ctx_, 1L)}}; }

int CherednikAlgebra::x_product_sign(const Exps& a, const Exps& b) const {
  if (!braided()) return 1;
  int s = 0;
  for (int i = 0; i < spec_.n; ++i)
    for (int j = 0; j < i; ++j) s += a[i] * b[j];
  return s % 2 ? -1 : 1;
}

std::pair<Exps, CycloScalar> CherednikAlgebra::act_x(const MonomialMatrix& g, const Exps& a) const {
  Exps r{};
  long zexp = 0;
  int inversions = 0;
  for (int i = 0; i < spec_.n; ++i) {
    if (!a[i]) continue;
    r[g.perm(i)] = a[i];
    zexp += static_cast<long>(g.exp(i)) * a[i];
    if (braided())
      for (int j = i + 1; j < spec_.n; ++j)
        if (g.perm(i) > g.perm(j)) inversions += a[i] * a[j];
  }
  CycloScalar s = zeta_power(zexp);
  if (inversions % 2) s = -s;
  return {r, s};
}

std::pair<Exps, CycloScalar> CherednikAlgebra::act_y(const MonomialMatrix& g, const Exps& b) const {
  Exps r{};
  long zexp = 0;
  int inversions = 0;
  for (int i = 0; i < spec_.n; ++i) {
    if (!b[i]) continue;
    r[g.perm(i)] = b[i];
    zexp -= static_cast<long>(g.exp(i)) * b[i];
    if (braided())
      for (int j = i + 1; j < spec_.n; ++j)
        if (g.perm(i) > g.perm(j)) inversions += b[i] * b[j];
  }
  CycloScalar s = zeta_power(zexp);
  if (inversions % 2) s = -s;
  return {r, s};
}

void CherednikAlgebra::append_group_y(CherednikElement& out, const NormalWord& w, const MonomialMatrix& h,
                                      const Exps& y2, const CycloScalar& c) const {
  auto [ymoved, s] = act_y(h.inverse(), w.y);
  if (x_product_sign(ymoved, y2) < 0) s = -s;
  accumulate(out, NormalWord{w.x, w.g * h, add_exps(ymoved, y2)}, c * s);
}

CherednikElement CherednikAlgebra::yk_x(int k, const Exps& x) const {
  if (degree(x) == 0) return basis({Exps{}, MonomialMatrix(spec_.m, spec_.n), unit_exps(k)});
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = ykx_memo_.find({k, x}); it != ykx_memo_.end()) return it->second;
  }
  int j = 0;
  while (!x[j]) ++j;
  Exps rest = x;
  --rest[j];
  CherednikElement out;
  const Exps ej = unit_exps(j);
  const int s = swap_sign(k, j);
  for (const auto& [w, c] : yk_x(k, rest)) {
    const int sign = s * x_product_sign(ej, w.x);
    accumulate(out, NormalWord{add_exps(ej, w.x), w.g, w.y}, sign > 0 ? c : -c);
  }
  for (const auto& [h, ch] : correction(k, j).terms()) {
    auto [xm, lam] = act_x(h, rest);
    accumulate(out, NormalWord{xm, h, Exps{}}, ch * lam);
  }
  std::lock_guard lock(memo_mutex_);
  ykx_memo_.emplace(std::make_pair(k, x), out);
  return out;
}

CherednikElement CherednikAlgebra::yx(const Exps& y, const Exps& x) const {
  const MonomialMatrix id(spec_.m, spec_.n);
  if (degree(y) == 0) return basis({x, id, Exps{}});
  if (degree(x) == 0) return basis({Exps{}, id, y});
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = yx_memo_.find({y, x}); it != yx_memo_.end()) return it->second;
  }
  int k = spec_.n - 1;
  while (!y[k]) --k;
  Exps ylead = y;
  --ylead[k];
  CherednikElement inner = yk_x(k, x);
  CherednikElement out;
  if (degree(ylead) == 0) {
    out = std::move(inner);
  } else {
    for (const auto& [w, c] : inner)
      for (const auto& [w2, d] : yx(ylead, w.x)) append_group_y(out, w2, w.g, w.y, c * d);
  }
  std::lock_guard lock(memo_mutex_);
  yx_memo_.emplace(std::make_pair(y, x), out);
  return out;
}

CherednikElement CherednikAlgebra::mul(const NormalWord& a, const NormalWord& b) const {
  CherednikElement out;
  for (const auto& [w, c] : yx(a.y, b.x)) {
    auto [xm, lam] = act_x(a.g, w.x);
    if (x_product_sign(a.x, xm) < 0) lam = -lam;
    NormalWord mid{add_exps(a.x, xm), a.g * w.g, w.y};
    append_group_y(out, mid, b.g, b.y, c * lam);
  }
  return out;
}

CherednikElement CherednikAlgebra::mul(const CherednikElement& a, const CherednikElement& b) const {
  CherednikElement out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) accumulate(out, mul(wa, wb), ca * cb);
  return out;
}

CherednikElement CherednikAlgebra::add(const CherednikElement& a, const CherednikElement& b) const {
  CherednikElement r = a;
  accumulate(r, b, CycloScalar(ctx_, 1L));
  return r;
}

CherednikElement CherednikAlgebra::sub(const CherednikElement& a, const CherednikElement& b) const {
  CherednikElement r = a;
  accumulate(r, b, CycloScalar(ctx_, -1L));
  return r;
}

CherednikElement CherednikAlgebra::scale(const CycloScalar& c, const CherednikElement& a) const {
  CherednikElement r;
  accumulate(r, a, c);
  return r;
}

ModuleAlgebra<NormalWord> CherednikAlgebra::module_algebra() const {
  if (spec_.m % 2) throw std::invalid_argument("module_algebra: the T-action needs m even");
  ModuleAlgebra<NormalWord> alg;
  alg.ctx = ctx_;
  alg.n = spec_.n;
  alg.unit = NormalWord{Exps{}, MonomialMatrix(spec_.m, spec_.n), Exps{}};
  alg.mul = [this](const NormalWord& a, const NormalWord& b) { return mul(a, b); };
  auto ctx = ctx_;
  alg.act = [ctx](Mask mask, const NormalWord& w) {
    int odd = 0;
    for (int i = 0; i < kMaxRank; ++i)
      if (mask >> i & 1) odd += w.x[i] + w.y[i];
    NormalWord r{w.x, torus_conjugate(mask, w.g), w.y};
    return std::make_pair(r, CycloScalar(ctx, odd % 2 ? -1L : 1L));
  };
  return alg;
}

std::string CherednikAlgebra::word_str(const NormalWord& w, int n) {
  std::vector<std::string> parts;
  for (int i = 0; i < n; ++i)
    if (w.x[i]) parts.push_back("x" + std::to_string(i + 1) + (w.x[i] > 1 ? "^" + std::to_string(w.x[i]) : ""));
  if (!w.g.is_identity()) parts.push_back(w.g.token());
  for (int i = 0; i < n; ++i)
    if (w.y[i]) parts.push_back("y" + std::to_string(i + 1) + (w.y[i] > 1 ? "^" + std::to_string(w.y[i]) : ""));
  if (parts.empty()) return "1";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += "*" + parts[i];
  return s;
}

std::string CherednikAlgebra::str(const CherednikElement& e) const {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : e) {
    if (!first) os << " + ";
    first = false;
    auto ws = word_str(w, spec_.n);
    if (c.is_one())
      os << ws;
    else if (ws == "1")
      os << "(" << c.str() << ")";
    else
      os << "(" << c.str() << ")*" << ws;
  }
  return os.str();
}

}  // namespace twistlab

#include "twistlab/finite_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace twistlab {

FiniteAlgebra::FiniteAlgebra(ContextPtr ctx, std::vector<std::string> labels, Product product, Vec unit)
    : ctx_(std::move(ctx)), labels_(std::move(labels)), product_(std::move(product)), unit_(std::move(unit)) {
  if (unit_.size() != labels_.size()) throw std::invalid_argument("FiniteAlgebra: unit has the wrong length");
  cache_.resize(labels_.size() * labels_.size());
}

const Vec& FiniteAlgebra::basis_product(std::size_t i, std::size_t j) const {
  const std::size_t k = i * dim() + j;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (cache_[k]) return *cache_[k];
  }
  Vec v = product_(i, j);
  if (v.size() != dim()) throw std::logic_error("FiniteAlgebra: product has the wrong length");
  std::lock_guard<std::mutex> lock(mutex_);
  if (!cache_[k]) cache_[k] = std::move(v);
  return *cache_[k];
}

Vec FiniteAlgebra::mul(const Vec& a, const Vec& b) const {
  Vec r = zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      const CycloScalar c = a[i] * b[j];
      const Vec& p = basis_product(i, j);
      for (std::size_t k = 0; k < dim(); ++k)
        if (!p[k].is_zero()) r[k] += c * p[k];
    }
  }
  return r;
}

Vec FiniteAlgebra::pow(const Vec& a, int k) const {
  Vec r = unit_;
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

Vec FiniteAlgebra::basis(std::size_t i) const {
  Vec v = zero();
  v[i] = CycloScalar(ctx_, 1L);
  return v;
}

Vec FiniteAlgebra::scalar(const CycloScalar& c) const { return scale(c, unit_); }

Vec FiniteAlgebra::add(const Vec& a, const Vec& b) const {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec FiniteAlgebra::sub(const Vec& a, const Vec& b) const {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec FiniteAlgebra::scale(const CycloScalar& c, const Vec& a) const {
  Vec r = a;
  for (auto& x : r) x = c * x;
  return r;
}

bool FiniteAlgebra::is_zero(const Vec& a) const {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

bool FiniteAlgebra::is_scalar(const Vec& a) const {
  Matrix m(ctx_, 2, dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    m(0, i) = unit_[i];
    m(1, i) = a[i];
  }
  return rank(m) <= 1;
}

bool FiniteAlgebra::commutes_with_basis(const Vec& a) const {
  for (std::size_t j = 0; j < dim(); ++j) {
    const Vec b = basis(j);
    if (!is_zero(sub(mul(a, b), mul(b, a)))) return false;
  }
  return true;
}

std::string FiniteAlgebra::str(const Vec& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << a[i] << ")*" << labels_[i];
  }
  return first ? "0" : os.str();
}

bool check_associativity(const FiniteAlgebra& a) {
  const std::size_t N = a.dim();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      const Vec& ij = a.basis_product(i, j);
      for (std::size_t k = 0; k < N; ++k) {
        const Vec left = a.mul(ij, a.basis(k));
        const Vec right = a.mul(a.basis(i), a.basis_product(j, k));
        if (left != right) return false;
      }
    }
  return true;
}

std::vector<Vec> center(const FiniteAlgebra& a, const std::vector<Vec>& generators) {
  const std::size_t N = a.dim();
  Matrix eqs(a.context(), 0, N);
  for (const auto& g : generators) {
    Matrix block(a.context(), N, N);
    for (std::size_t j = 0; j < N; ++j) {
      const Vec b = a.basis(j);
      const Vec comm = a.sub(a.mul(b, g), a.mul(g, b));
      for (std::size_t r = 0; r < N; ++r) block(r, j) = comm[r];
    }
    eqs.append_rows(block);
  }
  auto kernel = nullspace(eqs);
  for (const auto& z : kernel)
    if (!a.commutes_with_basis(z)) throw std::logic_error("center: a kernel vector fails to commute with the basis");
  return kernel;
}

std::vector<CycloScalar> minimal_polynomial(const FiniteAlgebra& a, const Vec& v) {
  const std::size_t N = a.dim();
  std::vector<Vec> powers{a.unit()};
  while (true) {
    const Vec next = a.mul(powers.back(), v);
    const std::size_t k = powers.size();
    Matrix m(a.context(), N, k);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t r = 0; r < N; ++r) m(r, c) = powers[c][r];
    if (auto sol = solve(m, next)) {
      std::vector<CycloScalar> coeffs;
      for (const auto& s : *sol) coeffs.push_back(-s);
      coeffs.push_back(CycloScalar(a.context(), 1L));
      return coeffs;
    }
    powers.push_back(next);
    if (powers.size() > N + 1) throw std::logic_error("minimal_polynomial: no relation found");
  }
}

std::string polynomial_str(const std::vector<CycloScalar>& coeffs, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const auto& c = coeffs[k];
    if (c.is_zero()) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string coef = c.str();
    bool negative = c.is_rational() && c.rational_value() < 0;
    if (negative) coef = (-c).str();
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    if (mono.empty())
      os << coef;
    else if (coef == "1")
      os << mono;
    else
      os << (c.is_rational() ? coef : "(" + coef + ")") << "*" << mono;
  }
  return first ? "0" : os.str();
}

namespace {

std::vector<Integer> divisors(Integer v) {
  if (v < 0) v = -v;
  std::vector<Integer> d;
  for (Integer k = 1; k * k <= v; ++k)
    if (v % k == 0) {
      d.push_back(k);
      if (k * k != v) d.push_back(v / k);
    }
  return d;
}

Rational evaluate(const std::vector<Rational>& p, const Rational& x) {
  Rational r = 0;
  for (std::size_t k = p.size(); k-- > 0;) r = r * x + p[k];
  return r;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<CycloScalar>& coeffs) {
  std::vector<Rational> p;
  for (const auto& c : coeffs) {
    if (!c.is_rational()) return {};
    p.push_back(c.rational_value());
  }
  while (!p.empty() && p.back() == 0) p.pop_back();
  std::vector<Rational> roots;
  if (p.size() <= 1) return roots;
  std::size_t shift = 0;
  while (p[shift] == 0) ++shift;
  if (shift) roots.push_back(0);
  std::vector<Rational> q(p.begin() + shift, p.end());
  Integer lcm = 1;
  for (const auto& c : q) lcm = lcm * c.get_den() / gcd(lcm, Integer(c.get_den()));
  std::vector<Integer> z;
  for (const auto& c : q) z.push_back(Integer(c * lcm));
  if (z.size() > 1)
    for (const auto& a : divisors(z.front()))
      for (const auto& b : divisors(z.back()))
        for (int s : {1, -1}) {
          Rational cand(a * s, b);
          cand.canonicalize();
          if (evaluate(q, cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
        }
  std::sort(roots.begin(), roots.end());
  return roots;
}

IdempotentSplit split_idempotents(const FiniteAlgebra& a, const std::vector<Vec>& center_basis) {
  const auto& ctx = a.context();
  IdempotentSplit out;
  std::vector<Vec> current{a.unit()};
  for (const auto& z : center_basis) {
    std::vector<Vec> next;
    for (const auto& e : current) {
      const Vec w = a.mul(e, z);
      // Minimal polynomial of w inside the corner e Z, whose unit is e.
      std::vector<Vec> powers{e};
      std::vector<CycloScalar> poly;
      while (true) {
        const Vec p = a.mul(powers.back(), w);
        Matrix m(ctx, a.dim(), powers.size());
        for (std::size_t c = 0; c < powers.size(); ++c)
          for (std::size_t r = 0; r < a.dim(); ++r) m(r, c) = powers[c][r];
        if (auto sol = solve(m, p)) {
          for (const auto& s : *sol) poly.push_back(-s);
          poly.push_back(CycloScalar(ctx, 1L));
          break;
        }
        powers.push_back(p);
      }
      const auto roots = rational_roots(poly);
      if (roots.size() + 1 != poly.size()) {
        next.push_back(e);
        continue;
      }
      for (const auto& r : roots) {
        Vec f = e;
        for (const auto& s : roots) {
          if (s == r) continue;
          const Vec factor = a.sub(w, a.scale(CycloScalar(ctx, s), e));
          f = a.scale(CycloScalar(ctx, Rational(1) / (r - s)), a.mul(f, factor));
        }
        next.push_back(f);
      }
    }
    current = std::move(next);
  }
  out.idempotents = current;
  Vec sum = a.zero();
  bool ok = true;
  for (std::size_t i = 0; i < current.size(); ++i) {
    sum = a.add(sum, current[i]);
    if (a.mul(current[i], current[i]) != current[i]) ok = false;
    for (std::size_t j = i + 1; j < current.size(); ++j)
      if (!a.is_zero(a.mul(current[i], current[j]))) ok = false;
    for (const auto& z : center_basis) {
      const Vec ez = a.mul(current[i], z);
      Matrix m(ctx, 2, a.dim());
      for (std::size_t k = 0; k < a.dim(); ++k) {
        m(0, k) = current[i][k];
        m(1, k) = ez[k];
      }
      if (rank(m) > 1) ok = false;
    }
  }
  out.complete = ok && sum == a.unit() && current.size() == center_basis.size();
  return out;
}

}  // namespace twistlab

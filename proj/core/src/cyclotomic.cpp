#include "twistlab/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace twistlab {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("malformed rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto digits_ok = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer d(den);
  if (d == 0) throw bad();
  Rational q{Integer(num), d};
  q.canonicalize();
  return q;
}

namespace {

// Exact division of integer polynomials; the divisor is monic.
IntPolynomial divide_monic(IntPolynomial num, const IntPolynomial& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {Integer(0)};
  IntPolynomial quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    Integer coef = num[k];
    quot[k - dn] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= coef * den[j];
  }
  return quot;
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Polynomial long division over Q: returns quotient, leaves remainder in a.
QPoly divmod(QPoly& a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() < b.size()) return q;
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k] == 0) continue;
    Rational coef = a[k] / lead;
    q[k - (b.size() - 1)] = coef;
    for (std::size_t j = 0; j < b.size(); ++j) a[k - (b.size() - 1) + j] -= coef * b[j];
    if (k == b.size() - 1) break;
  }
  trim(a);
  return q;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

}  // namespace

IntPolynomial cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  static std::mutex mu;
  static std::map<int, IntPolynomial> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  IntPolynomial p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  std::lock_guard lock(mu);
  cache.emplace(m, p);
  return p;
}

int euler_phi(int m) {
  int result = m;
  for (int q = 2; q * q <= m; ++q) {
    if (m % q) continue;
    while (m % q == 0) m /= q;
    result -= result / q;
  }
  if (m > 1) result -= result / m;
  return result;
}

CycloContext::CycloContext(int m) : m_(m), modulus_(cyclotomic_polynomial(m)) {
  degree_ = static_cast<int>(modulus_.size()) - 1;
  const int top = std::max(2 * degree_ - 1, m_);
  // x^k mod Phi_m by repeated multiplication by x.
  std::vector<Rational> cur(degree_, Rational(0));
  cur[0] = 1;
  std::vector<std::vector<Rational>> all;
  all.reserve(top);
  for (int k = 0; k < top; ++k) {
    all.push_back(cur);
    // cur *= x
    Rational carry = cur[degree_ - 1];
    for (int j = degree_ - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (carry != 0)
      for (int j = 0; j < degree_; ++j) cur[j] -= carry * Rational(modulus_[j]);
  }
  powers_.assign(all.begin(), all.begin() + std::max(2 * degree_ - 1, 1));
  roots_.assign(all.begin(), all.begin() + m_);
}

std::shared_ptr<const CycloContext> CycloContext::get(int m) {
  if (m < 1) throw std::invalid_argument("CycloContext: conductor must be positive");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CycloContext>> interned;
  std::lock_guard lock(mu);
  auto& slot = interned[m];
  if (!slot) slot = std::make_shared<const CycloContext>(m);
  return slot;
}

CycloScalar::CycloScalar(ContextPtr ctx, const Rational& value) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("CycloScalar: null context");
  c_.assign(ctx_->degree(), Rational(0));
  c_[0] = value;
  c_[0].canonicalize();
}

CycloScalar::CycloScalar(ContextPtr ctx, std::vector<Rational> coeffs) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("CycloScalar: null context");
  const int d = ctx_->degree();
  if (static_cast<int>(coeffs.size()) <= d) {
    coeffs.resize(d, Rational(0));
    for (auto& q : coeffs) q.canonicalize();
    c_ = std::move(coeffs);
    return;
  }
  // Reduce a longer representative via x^k -> residues.
  c_.assign(d, Rational(0));
  CycloScalar x_pow = root_of_unity(ctx_, 0);
  CycloScalar x = ctx_->conductor() == 1 ? root_of_unity(ctx_, 0)
                                         : CycloScalar(ctx_, std::vector<Rational>(ctx_->root_coeffs(1)));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0)
      for (int j = 0; j < d; ++j) c_[j] += coeffs[k] * x_pow.c_[j];
    x_pow *= x;
  }
}

CycloScalar CycloScalar::root_of_unity(const ContextPtr& ctx, long k) {
  const long m = ctx->conductor();
  long r = ((k % m) + m) % m;
  return CycloScalar(ctx, std::vector<Rational>(ctx->root_coeffs(static_cast<int>(r))));
}

bool CycloScalar::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool CycloScalar::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool CycloScalar::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycloScalar::rational_value() const {
  if (!is_rational()) throw std::domain_error("CycloScalar: value is not rational: " + str());
  return c_.empty() ? Rational(0) : c_[0];
}

void CycloScalar::adopt(const CycloScalar& o) {
  if (!o.ctx_) return;
  if (!ctx_) {
    ctx_ = o.ctx_;
    c_.assign(ctx_->degree(), Rational(0));
    return;
  }
  if (ctx_ != o.ctx_)
    throw ContextMismatch("cyclotomic contexts differ: m=" + std::to_string(ctx_->conductor()) +
                          " vs m=" + std::to_string(o.ctx_->conductor()));
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
  adopt(o);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) {
  adopt(o);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloScalar& CycloScalar::operator*=(const Rational& q) {
  for (auto& c : c_) c *= q;
  return *this;
}

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
  if (!a.ctx_ || !b.ctx_) {
    CycloScalar z;
    if (a.ctx_) z.adopt(a);
    if (b.ctx_) z.adopt(b);
    return z;
  }
  if (a.ctx_ != b.ctx_)
    throw ContextMismatch("cyclotomic contexts differ: m=" + std::to_string(a.ctx_->conductor()) +
                          " vs m=" + std::to_string(b.ctx_->conductor()));
  const int d = a.ctx_->degree();
  CycloScalar r;
  r.ctx_ = a.ctx_;
  if (d == 1) {
    r.c_ = {a.c_[0] * b.c_[0]};
    return r;
  }
  std::vector<Rational> conv(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      if (b.c_[j] != 0) conv[i + j] += a.c_[i] * b.c_[j];
  }
  r.c_.assign(d, Rational(0));
  for (int k = 0; k < 2 * d - 1; ++k) {
    if (conv[k] == 0) continue;
    if (k < d) {
      r.c_[k] += conv[k];
      continue;
    }
    const auto& res = a.ctx_->power_residue(k);
    for (int j = 0; j < d; ++j)
      if (res[j] != 0) r.c_[j] += conv[k] * res[j];
  }
  return r;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) { return *this = *this * o; }

CycloScalar& CycloScalar::operator/=(const CycloScalar& o) { return *this = *this * o.inverse(); }

CycloScalar CycloScalar::operator-() const {
  CycloScalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("CycloScalar: division by zero");
  const int d = ctx_->degree();
  if (d == 1) return CycloScalar(ctx_, Rational(1) / c_[0]);
  // Extended Euclid: find s with s*a = g (a nonzero constant) modulo Phi_m.
  QPoly r0(ctx_->modulus().begin(), ctx_->modulus().end());
  QPoly r1 = c_;
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    QPoly q = divmod(r0, r1);
    std::swap(r0, r1);  // r0 <- old r1, r1 <- remainder
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant: s1 * a == r1[0] mod Phi.
  Rational g = r1[0];
  for (auto& c : s1) c /= g;
  return CycloScalar(ctx_, std::move(s1));
}

CycloScalar CycloScalar::pow(long e) const {
  if (!ctx_) {
    if (e == 0) throw std::domain_error("CycloScalar::pow on unbound zero");
    return *this;
  }
  if (e < 0) return inverse().pow(-e);
  CycloScalar result(ctx_, Rational(1));
  CycloScalar base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CycloScalar CycloScalar::conj() const {
  if (!ctx_) return *this;
  CycloScalar r(ctx_, Rational(0));
  for (int k = 0; k < ctx_->degree(); ++k)
    if (c_[k] != 0) r += root_of_unity(ctx_, -k) * c_[k];
  return r;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  if (!a.ctx_ || !b.ctx_) return a.is_zero() && b.is_zero();
  if (a.ctx_ != b.ctx_) return false;
  return a.c_ == b.c_;
}

std::string CycloScalar::str() const {
  if (!ctx_ || is_zero()) return "0";
  const std::string z = ctx_->conductor() == 4 ? "i" : "z";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& q = c_[k];
    if (q == 0) continue;
    Rational a = abs(q);
    if (first) {
      if (q < 0) os << "-";
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << z;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::complex<double> CycloScalar::approx() const {
  if (!ctx_) return {0.0, 0.0};
  const double theta = 2.0 * std::numbers::pi / ctx_->conductor();
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t k = 0; k < c_.size(); ++k)
    acc += c_[k].get_d() * std::polar(1.0, theta * static_cast<double>(k));
  return acc;
}

std::ostream& operator<<(std::ostream& os, const CycloScalar& s) { return os << s.str(); }

}  // namespace twistlab

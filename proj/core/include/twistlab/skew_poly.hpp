#pragma once

// Polynomials on the shared space of standard monomials, multiplied either
// commutatively (sign +1, S(V)) or with x_j x_i = -x_i x_j (sign -1, S_{-1}(V)).

#include <string>
#include <vector>

#include "twistlab/exps.hpp"
#include "twistlab/twist.hpp"

namespace twistlab {

/// x^a x^b = sign x^{a+b}.
int monomial_product_sign(int sign, const Exps& a, const Exps& b);

/// g(x^a) = scalar x^{a'}, with g acting on V (dual = false) or on V* (dual = true).
std::pair<Exps, CycloScalar> act_monomial(const ContextPtr& ctx, int sign, const MonomialMatrix& g, const Exps& a,
                                          bool dual = false);

class SkewPoly {
 public:
  SkewPoly() = default;
  SkewPoly(ContextPtr ctx, int n, int sign) : ctx_(std::move(ctx)), n_(n), sign_(sign) {}
  static SkewPoly monomial(ContextPtr ctx, int n, int sign, const Exps& a);
  static SkewPoly variable(ContextPtr ctx, int n, int sign, int i);

  const ContextPtr& context() const { return ctx_; }
  int n() const { return n_; }
  int sign() const { return sign_; }
  const Sparse<Exps>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;

  void add_term(const Exps& a, const CycloScalar& c) { accumulate(terms_, a, c); }

  SkewPoly& operator+=(const SkewPoly& o);
  SkewPoly& operator-=(const SkewPoly& o);
  friend SkewPoly operator+(SkewPoly a, const SkewPoly& b) { return a += b; }
  friend SkewPoly operator-(SkewPoly a, const SkewPoly& b) { return a -= b; }
  friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b);
  friend SkewPoly operator*(const CycloScalar& c, const SkewPoly& a);
  friend bool operator==(const SkewPoly& a, const SkewPoly& b);

  SkewPoly act(const MonomialMatrix& g, bool dual = false) const;
  std::string str() const;

 private:
  ContextPtr ctx_;
  int n_ = 0, sign_ = 1;
  Sparse<Exps> terms_;
};

/// p_k = sum_i x_i^{km} for k = 1..n-1, then r = (x_1 ... x_n)^{m/p}.
std::vector<SkewPoly> invariant_generators(const ContextPtr& ctx, int m, int p, int n, int sign);
/// Degrees {m, 2m, ..., (n-1)m, nm/p}.
std::vector<int> invariant_degrees(int m, int p, int n);

/// The multiplication of S as a T-module algebra (m even: t_i x_j = (-1)^{delta_ij} x_j).
ModuleAlgebra<Exps> polynomial_module_algebra(const ContextPtr& ctx, int n, int sign);

}  // namespace twistlab

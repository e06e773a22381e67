#pragma once

// Group algebras of finite monomial groups over a cyclotomic field, the
// T-action by conjugation, the maps J_c, eta and phi.

#include <map>
#include <optional>
#include <vector>

#include "twistlab/monomial_group.hpp"
#include "twistlab/torus_hopf.hpp"

namespace twistlab {

class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  GroupAlgebraElement(ContextPtr ctx, const MonomialMatrix& g);

  const ContextPtr& context() const { return ctx_; }
  const std::map<MonomialMatrix, CycloScalar>& terms() const { return terms_; }
  CycloScalar coefficient(const MonomialMatrix& g) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MonomialMatrix& g, const CycloScalar& c);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator*(const CycloScalar& c, const GroupAlgebraElement& a);
  friend GroupAlgebraElement operator*(const Rational& c, const GroupAlgebraElement& a);
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

  /// Sum of coefficients.
  CycloScalar augmentation() const;
  /// True when every group element in the support belongs to spec.
  bool supported_in(const GroupSpec& spec) const;

  std::string str() const;

 private:
  ContextPtr ctx_;
  std::map<MonomialMatrix, CycloScalar> terms_;
};

/// t_A = prod_{i in A} t_i^{(-1)}; needs m even.
MonomialMatrix torus_element(int m, int n, Mask a);
/// t_A g t_A.
MonomialMatrix torus_conjugate(Mask a, const MonomialMatrix& g);
GroupAlgebraElement torus_conjugate(Mask a, const GroupAlgebraElement& x);

/// J_c on a single monomial matrix g = w t of an even modulus; c must be
/// nonzero and live in the coefficient context.
GroupAlgebraElement j_map(const CycloScalar& c, const MonomialMatrix& g);
GroupAlgebraElement j_map(const CycloScalar& c, const GroupAlgebraElement& x);

/// eta(a) = sum F^{-1}(A,B) (t_A a t_A) t_B.
GroupAlgebraElement eta(const TensorElement& Finv, const GroupAlgebraElement& a);
/// a * b = sum F^{-1}(A,B) (t_A a t_A)(t_B b t_B).
GroupAlgebraElement twisted_mul(const TensorElement& Finv, const GroupAlgebraElement& a,
                                const GroupAlgebraElement& b);

/// w = sigma_{i_1} ... sigma_{i_k} t with t diagonal; returns (i_1..i_k, t).
std::pair<std::vector<int>, MonomialMatrix> sigma_decomposition(const MonomialMatrix& w);

/// phi on a group element of mu(G(m,p,n)) (m even): sigma_i -> sbar_i,
/// t -> t, extended multiplicatively with the twisted product of CG.
GroupAlgebraElement phi_generators(const ContextPtr& ctx, const TensorElement& Finv, const MonomialMatrix& w);

/// phi = eta^{-1} o J_1 on a group element, for m/p even: inverts the
/// matrix of eta on the basis of CG(m,p,n).  Throws std::logic_error if
/// eta is singular.
class PhiViaJ1 {
 public:
  PhiViaJ1(const ContextPtr& ctx, const GroupSpec& spec);
  GroupAlgebraElement operator()(const MonomialMatrix& w) const;

 private:
  ContextPtr ctx_;
  std::vector<MonomialMatrix> basis_;
  std::map<MonomialMatrix, std::size_t> index_;
  std::vector<std::vector<CycloScalar>> inverse_;  // column-major: inverse_[col][row]
};

}  // namespace twistlab

#pragma once

// Finite-dimensional algebras given by a basis product, with centers,
// minimal polynomials and splitting of the center into idempotents.

#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "twistlab/linalg.hpp"

namespace twistlab {

using Vec = std::vector<CycloScalar>;

class FiniteAlgebra {
 public:
  using Product = std::function<Vec(std::size_t, std::size_t)>;

  FiniteAlgebra(ContextPtr ctx, std::vector<std::string> labels, Product product, Vec unit);
  FiniteAlgebra(const FiniteAlgebra&) = delete;
  FiniteAlgebra& operator=(const FiniteAlgebra&) = delete;

  const ContextPtr& context() const { return ctx_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// b_i b_j, computed once.
  const Vec& basis_product(std::size_t i, std::size_t j) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec pow(const Vec& a, int k) const;
  const Vec& unit() const { return unit_; }
  Vec zero() const { return Vec(dim(), CycloScalar(ctx_, 0L)); }
  Vec basis(std::size_t i) const;
  Vec scalar(const CycloScalar& c) const;

  Vec add(const Vec& a, const Vec& b) const;
  Vec sub(const Vec& a, const Vec& b) const;
  Vec scale(const CycloScalar& c, const Vec& a) const;
  bool is_zero(const Vec& a) const;
  /// a lies in the span of the unit.
  bool is_scalar(const Vec& a) const;
  bool commutes_with_basis(const Vec& a) const;

  std::string str(const Vec& a) const;

 private:
  ContextPtr ctx_;
  std::vector<std::string> labels_;
  Product product_;
  Vec unit_;
  mutable std::mutex mutex_;
  mutable std::vector<std::optional<Vec>> cache_;
};

/// All basis triples (exhaustive); intended for dim <= 64.
bool check_associativity(const FiniteAlgebra& a);

/// Basis of the center: nullspace of the commutators with the generators,
/// each result then checked against the full basis (std::logic_error otherwise).
std::vector<Vec> center(const FiniteAlgebra& a, const std::vector<Vec>& generators);

/// Monic minimal polynomial of a, coefficients from the constant term up.
std::vector<CycloScalar> minimal_polynomial(const FiniteAlgebra& a, const Vec& v);
std::string polynomial_str(const std::vector<CycloScalar>& coeffs, const std::string& var = "T");

/// Rational roots of a polynomial with rational coefficients.
std::vector<Rational> rational_roots(const std::vector<CycloScalar>& coeffs);

struct IdempotentSplit {
  std::vector<Vec> idempotents;
  /// Every idempotent e has e Z = Q e and the e sum to 1.
  bool complete = false;
};

/// Splits the commutative algebra spanned by center_basis into orthogonal
/// idempotents using rational eigenvalues of its elements.
IdempotentSplit split_idempotents(const FiniteAlgebra& a, const std::vector<Vec>& center_basis);

}  // namespace twistlab

#pragma once

// Graded ideals generated by invariants, coinvariant algebras S_G and
// S_W (skew), and the checks relating them.

#include <memory>
#include <vector>

#include "twistlab/characters.hpp"
#include "twistlab/linalg.hpp"
#include "twistlab/report.hpp"
#include "twistlab/skew_poly.hpp"

namespace twistlab {

struct GradedComponent {
  int degree = 0;
  std::vector<Exps> monomials;  // lexicographically decreasing
  Matrix ideal;                 // reduced row echelon form, nonzero rows only
  std::vector<std::size_t> pivots;
  std::vector<Exps> complement;  // non-pivot monomials, the quotient basis
};

/// Degree-d pieces of the ideal generated by homogeneous gens, d = 0..D.
/// Left multiples M * f span each piece; two_sided adds M * f * N.
std::vector<GradedComponent> graded_ideal(const std::vector<SkewPoly>& gens, int D, bool two_sided = false);

/// True when both spans have the same row space in every degree.
bool same_spans(const std::vector<GradedComponent>& a, const std::vector<GradedComponent>& b);

class GradedQuotient {
 public:
  /// Builds components up to top + 1; throws std::logic_error unless the
  /// quotient vanishes in degree top + 1.
  GradedQuotient(const ContextPtr& ctx, int n, int sign, std::vector<SkewPoly> gens, int top);

  const ContextPtr& context() const { return ctx_; }
  int n() const { return n_; }
  int sign() const { return sign_; }
  int top_degree() const { return top_; }
  const std::vector<GradedComponent>& components() const { return components_; }
  std::vector<int> graded_dims() const;
  std::size_t total_dim() const { return basis_.size(); }
  /// Complement monomials, degree by degree.
  const std::vector<Exps>& basis() const { return basis_; }

  /// Normal form: a combination of complement monomials.
  SkewPoly reduce(const SkewPoly& f) const;
  std::vector<CycloScalar> coordinates(const SkewPoly& f) const;
  SkewPoly mul(const SkewPoly& a, const SkewPoly& b) const { return reduce(a * b); }
  /// Matrix of f -> reduce(g(f)) on the basis (columns are images).
  Matrix action_matrix(const MonomialMatrix& g, bool dual = false) const;

 private:
  ContextPtr ctx_;
  int n_, sign_, top_;
  std::vector<SkewPoly> gens_;
  std::vector<GradedComponent> components_;
  std::vector<Exps> basis_;
  std::map<Exps, std::size_t> index_;
};

/// S(V)/I_G for a reflection-flavored spec, S_{-1}(V)/I_W for a mystic one.
/// Throws std::logic_error unless the total dimension is |group|.
GradedQuotient coinvariant_quotient(const ContextPtr& ctx, const GroupSpec& spec);

ClassFunction coinvariant_character(const GradedQuotient& q, const std::shared_ptr<const ClassData>& data);

/// Every generator is fixed by G on S(V) and by mu(G) on S_{-1}(V).
NamedResult check_generator_invariance(int m, int p, int n);
/// The coinvariant character is the regular one.
NamedResult check_coinvariant_regular(const GroupSpec& spec);
/// One-sided and two-sided spans agree up to degree D.
NamedResult check_one_sided_spans(const GroupSpec& spec, int D);
/// I_G = I_W in every degree <= D, and the common space is T-stable.
NamedResult check_ideal_equality(int m, int p, int n, int D);
/// The product of S_W equals the F-twisted product of S_G on all basis pairs.
/// mutate replaces the skew product by the commutative one.
NamedResult check_twisted_coinvariant_product(int m, int p, int n, bool mutate = false);
/// Tr(a |>) = Tr(a |>_F) on S_G for random a in CG, phi(sigma_12) and torus elements.
NamedResult check_trace_invariance(int m, int p, int n, int samples = 20, unsigned seed = 20261018);
/// |G| [1](phi(w)) = |W| [w = 1] for every w in mu(G).
NamedResult check_regular_character_lemma(int m, int p, int n);
/// w on S_{-1}(V) equals phi(w) |>_F on S(V), degree by degree up to D.
NamedResult check_twisted_action_lemma(int m, int p, int n, int D);
/// Invariant dimensions of S_{-1}(V)^{mu(G)} match a free polynomial
/// algebra on the generator degrees, up to twice the top degree.
NamedResult check_hilbert_series(int m, int p, int n);

}  // namespace twistlab

#pragma once

// Restricted Cherednik algebras H_{0,c}(G)/(I, I'), with basis
// (coinvariant x-monomial) x g x (coinvariant y-monomial), and the
// computations distinguishing H_c(G(2,2,2)) from its braided partner.

#include <memory>
#include <string>

#include "twistlab/cherednik.hpp"
#include "twistlab/coinvariants.hpp"
#include "twistlab/element_syntax.hpp"
#include "twistlab/finite_algebra.hpp"
#include "twistlab/report.hpp"

namespace twistlab {

class RestrictedAlgebra {
 public:
  /// params.t must be zero.
  RestrictedAlgebra(ContextPtr ctx, GroupSpec spec, CherednikParams params);

  const CherednikAlgebra& cherednik() const { return *H_; }
  const GradedQuotient& quotient() const { return *quotient_; }
  const FiniteAlgebra& algebra() const { return *algebra_; }
  const std::vector<NormalWord>& words() const { return words_; }
  std::size_t dim() const { return words_.size(); }

  /// Reduces x- and y-parts of every PBW term modulo the invariant ideals.
  Vec reduce(const CherednikElement& e) const;
  CherednikElement lift(const Vec& v) const;
  Vec x(int i) const;
  Vec y(int i) const;
  Vec group(const MonomialMatrix& g) const;
  /// x_i, y_i and a generating set of the group.
  std::vector<Vec> generators() const;
  Vec parse(const std::string& text, const SymbolTable& symbols = {}) const;
  std::string str(const Vec& v) const { return H_->str(lift(v)); }

  /// gamma^A |> b_i = sign b_j for the T-action (m even).
  std::pair<std::size_t, CycloScalar> torus_act(Mask a, std::size_t i) const;

 private:
  ContextPtr ctx_;
  std::unique_ptr<CherednikAlgebra> H_;
  std::unique_ptr<GradedQuotient> quotient_;
  std::vector<NormalWord> words_;
  std::map<NormalWord, std::size_t> index_;
  std::unique_ptr<FiniteAlgebra> algebra_;
};

/// H_c(G(2,1,1)) with yx = xy - 2cs: c_zeta = 2c on zeta = -1.
CherednikParams rank_one_params(const ContextPtr& ctx, const Rational& c);

/// 64-bit FNV-1a, used as the checksum of data fixtures.
std::uint64_t fnv1a64(const std::string& data);
/// Directory holding gamma.txt; TWISTLAB_DATA_DIR overrides the built-in path.
std::string data_dir();
/// Contents of gamma.txt, checked against gamma.txt.fnv1a (std::runtime_error on mismatch).
std::string gamma_fixture_text();

/// dim H_c(G(2,1,1)) = 8 and its presentation: x^2 = y^2 = 0, s^2 = 1,
/// sx = -xs, ys = -sy, yx = xy - 2cs.
NamedResult check_rank_one_presentation(const Rational& c);
/// Dimensions 64 for H_c(G(2,2,2)) and the braided mu(G(2,2,2)) algebra.
NamedResult check_restricted_dims(const Rational& c);
/// dim Z = 2 for G(2,1,1), 4 for G(2,2,2), and 4 = 2^2.
NamedResult check_center_dims(const Rational& c);
/// z, gamma, the rational idempotents of Z(H_c(G(2,2,2))) and minpoly(gamma).
std::vector<NamedResult> check_not_isomorphic(const Rational& c);
/// Which sign of c_1 in the braided mu(G(2,2,2)) algebra makes the
/// transcribed gamma central; 0 when neither does.
int gamma_sign(const Rational& c);
/// For m/p even, eta: (H_c(G))_F -> H_c(G) is an algebra isomorphism,
/// checked on generator x basis pairs.  mutate drops the T-action inside eta.
NamedResult check_restricted_iso_even_case(int m, int p, int n, const Rational& c, bool mutate = false);
/// Associativity of the structure constants, all basis triples.
NamedResult check_restricted_associativity(const GroupSpec& spec, const Rational& c);

}  // namespace twistlab

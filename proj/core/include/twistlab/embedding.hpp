#pragma once

// The embedding of a negative braided Cherednik algebra into a rational
// Cherednik algebra, the twist of the PBW factorisation map Psi, and
// truncated standard modules.

#include <memory>
#include <string>
#include <vector>

#include "twistlab/cherednik.hpp"
#include "twistlab/linalg.hpp"
#include "twistlab/report.hpp"

namespace twistlab {

class EtaPhiEmbedding {
 public:
  /// Source: braided H_{t, c}(mu(G(m,p,n))) with c1 and c_zeta as given;
  /// target: rational H_{t, c'}(G(m,p',n)) with c'_1 = -c1, c'_zeta = -c_zeta
  /// (zero on the new roots), p' = p or p/2.  target_sign = +1 flips the
  /// target parameters, which breaks the relations.
  EtaPhiEmbedding(ContextPtr ctx, int m, int p, int n, const Rational& t, const Rational& c1,
                  std::map<int, Rational> c_zeta = {}, int target_sign = -1);

  const CherednikAlgebra& source() const { return *source_; }
  const CherednikAlgebra& target() const { return *target_; }
  int target_p() const { return p_target_; }

  CherednikElement image_x(int i) const;
  CherednikElement image_y(int i) const;
  CherednikElement image_sigma(int i) const;
  CherednikElement image_group(const MonomialMatrix& g) const;
  CherednikElement image(const NormalWord& w) const;
  CherednikElement image(const CherednikElement& e) const;

  /// Images of all defining relations of the source; each must normalise to zero.
  std::vector<NamedResult> check_relations() const;
  /// For m/p even: on every (X, Y) block with deg X + deg Y <= D the image
  /// of the source block lies in the target block and has full rank.
  NamedResult check_bijective(int D) const;

 private:
  ContextPtr ctx_;
  int m_, p_, n_, p_target_;
  std::unique_ptr<CherednikAlgebra> source_, target_;
};

/// Psi_{C_F} computed from the twisted product, compared with
/// (F |>) Psi_C (F^{-1} |>) on b (x) a with b = g y^Y, a = x^X, deg X, deg Y <= D.
/// f_conj is the cocycle used for the conjugation (the same F unless a
/// mutation test wants otherwise).
NamedResult check_psi_twist(const CherednikAlgebra& H, const TensorElement& f_twist, const TensorElement& f_conj,
                            int D);

/// A representation of a finite group by matrices over the coefficient context.
struct GroupRep {
  int dim = 1;
  std::map<MonomialMatrix, Matrix> matrices;
  const Matrix& operator()(const MonomialMatrix& g) const { return matrices.at(g); }
};

GroupRep trivial_rep(const ContextPtr& ctx, const GroupSpec& spec);
GroupRep det_rep(const ContextPtr& ctx, const GroupSpec& spec);
/// True when g -> matrices is multiplicative on all pairs.
bool is_representation(const GroupRep& rep);

using ModuleKey = std::pair<Exps, int>;  // x-monomial (x) basis vector of tau

/// Truncated standard module: span{x^X (x) v : deg X <= D}, y acting by zero on tau.
class StandardModule {
 public:
  StandardModule(const CherednikAlgebra& H, GroupRep tau, int D);

  const std::vector<ModuleKey>& basis() const { return basis_; }
  int cap() const { return cap_; }
  const GroupRep& rep() const { return tau_; }
  /// u |> (x^X (x) v), components of degree > D discarded.
  Sparse<ModuleKey> act(const NormalWord& u, const ModuleKey& b) const;
  Sparse<ModuleKey> act(const CherednikElement& u, const Sparse<ModuleKey>& v) const;

 private:
  const CherednikAlgebra& H_;
  GroupRep tau_;
  int cap_;
  std::vector<ModuleKey> basis_;
};

/// Compares the standard module of H_{1,-c}(G(m,p,n)) twisted by F and
/// pulled back along phi with the standard module of the braided algebra
/// H_{1,c}(mu(G(m,p,n))) induced from tau o J_{-i}.  c_sign = -1 is the
/// correct target parameter; +1 gives the mutation.
NamedResult check_standard_module_twist(int m, int p, int n, const Rational& c1, std::map<int, Rational> c_zeta,
                                        const std::string& rep_name, int D, int c_sign = -1);

}  // namespace twistlab

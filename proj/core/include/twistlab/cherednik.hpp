#pragma once

// Rational Cherednik algebras H_{t,c}(G(m,p,n)) and negative braided
// Cherednik algebras H_{t,c}(mu(G(m,p,n))) in PBW normal form
//   x_1^{a_1} ... x_n^{a_n} . g . y_1^{b_1} ... y_n^{b_n}.

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "twistlab/exps.hpp"
#include "twistlab/group_algebra.hpp"
#include "twistlab/twist.hpp"

namespace twistlab {

struct NormalWord {
  Exps x{};
  MonomialMatrix g;
  Exps y{};
  friend auto operator<=>(const NormalWord&, const NormalWord&) = default;
  friend bool operator==(const NormalWord&, const NormalWord&) = default;
};

enum class CherednikFlavor { rational, braided };

struct CherednikParams {
  CycloScalar t;
  CycloScalar c1;
  /// c_zeta keyed by the exponent k of zeta = zeta_m^k, for k in {p, 2p, ..., m-p}.
  std::map<int, CycloScalar> c_zeta;
  CherednikFlavor flavor = CherednikFlavor::rational;
};

/// Parameters with every c_zeta key present (zero unless given).
CherednikParams make_params(const ContextPtr& ctx, const GroupSpec& spec, CherednikFlavor flavor,
                            const Rational& t, const Rational& c1, std::map<int, Rational> c_zeta = {});

using CherednikElement = Sparse<NormalWord>;

class CherednikAlgebra {
 public:
  /// spec must be reflection flavored for the rational algebra and mystic
  /// flavored for the braided one.  The coefficient context's conductor
  /// must be a multiple of m.
  CherednikAlgebra(ContextPtr ctx, GroupSpec spec, CherednikParams params);

  const ContextPtr& context() const { return ctx_; }
  const GroupSpec& spec() const { return spec_; }
  const CherednikParams& params() const { return params_; }
  bool braided() const { return params_.flavor == CherednikFlavor::braided; }
  int n() const { return spec_.n; }

  CycloScalar zeta_power(long k) const;

  NormalWord word(const Exps& x, const MonomialMatrix& g, const Exps& y) const { return {x, g, y}; }
  CherednikElement one() const;
  CherednikElement scalar(const CycloScalar& c) const;
  CherednikElement x(int i) const;
  CherednikElement y(int i) const;
  CherednikElement group(const MonomialMatrix& g) const;
  CherednikElement group(const GroupAlgebraElement& a) const;
  CherednikElement basis(const NormalWord& w) const;

  CherednikElement mul(const NormalWord& a, const NormalWord& b) const;
  CherednikElement mul(const CherednikElement& a, const CherednikElement& b) const;
  CherednikElement add(const CherednikElement& a, const CherednikElement& b) const;
  CherednikElement sub(const CherednikElement& a, const CherednikElement& b) const;
  CherednikElement scale(const CycloScalar& c, const CherednikElement& a) const;

  /// x^a x^b = sign x^{a+b}.
  int x_product_sign(const Exps& a, const Exps& b) const;
  /// g(x^a) = scalar x^{a'}.
  std::pair<Exps, CycloScalar> act_x(const MonomialMatrix& g, const Exps& a) const;
  /// g(y^b) = scalar y^{b'}.
  std::pair<Exps, CycloScalar> act_y(const MonomialMatrix& g, const Exps& b) const;

  /// The correction term C in y_k x_j = s x_j y_k + C, as a group algebra
  /// element (the scalar t appears as a multiple of the identity).
  const GroupAlgebraElement& correction(int k, int j) const { return corrections_[k * spec_.n + j]; }
  /// The sign s above.
  int swap_sign(int k, int j) const { return (braided() && k != j) ? -1 : 1; }

  /// The T-module-algebra structure (m even): t_i |> g = t_i g t_i, t_i |> x_j, y_j = (-1)^{delta_ij}.
  ModuleAlgebra<NormalWord> module_algebra() const;

  std::string str(const CherednikElement& e) const;
  static std::string word_str(const NormalWord& w, int n);

 private:
  CherednikElement yx(const Exps& y, const Exps& x) const;
  CherednikElement yk_x(int k, const Exps& x) const;
  /// word(X1, g, Y1) * (h Y2) with no y-x crossing.
  void append_group_y(CherednikElement& out, const NormalWord& w, const MonomialMatrix& h, const Exps& y2,
                      const CycloScalar& c) const;

  ContextPtr ctx_;
  GroupSpec spec_;
  CherednikParams params_;
  int scale_;
  std::vector<GroupAlgebraElement> corrections_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<Exps, Exps>, CherednikElement> yx_memo_;
  mutable std::map<std::pair<int, Exps>, CherednikElement> ykx_memo_;
};

}  // namespace twistlab

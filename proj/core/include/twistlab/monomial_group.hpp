#pragma once

// Monomial matrices w*t with entries in C_m, and the finite groups
// G(m,p,n), mu(G(m,p,n)), T(m,p,n) built from them.
//
// Indices are 0-based throughout the API; the textual tokens ("s(1,2;e)")
// are 1-based.  An element g with perm p and exponents e acts on V by
//   g(x_i) = zeta_m^{e_i} x_{p(i)},
// and on V* by the dual action g(y_i) = zeta_m^{-e_i} y_{p(i)}.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "twistlab/cyclotomic.hpp"

namespace twistlab {

inline constexpr int kMaxRank = 8;

class MonomialMatrix {
 public:
  MonomialMatrix() = default;
  /// Identity of rank n over C_m.
  MonomialMatrix(int m, int n);
  MonomialMatrix(int m, const std::vector<int>& perm, const std::vector<int>& exps);

  int m() const { return m_; }
  int n() const { return n_; }
  int perm(int i) const { return perm_[i]; }
  int exp(int i) const { return exps_[i]; }
  std::vector<int> perm_vector() const { return {perm_.begin(), perm_.begin() + n_}; }
  std::vector<int> exp_vector() const { return {exps_.begin(), exps_.begin() + n_}; }

  bool is_identity() const;
  bool is_diagonal() const;
  int exp_sum() const;
  /// +1 or -1.
  int perm_sign() const;

  /// g(x_i) = zeta^{k} x_j, returned as (j, k).
  std::pair<int, int> act_on_x(int i) const { return {perm_[i], exps_[i]}; }
  /// g(y_i) = zeta^{k} y_j, returned as (j, k).
  std::pair<int, int> act_on_y(int i) const { return {perm_[i], (m_ - exps_[i]) % m_}; }

  /// det(g) in the given context (whose conductor must be a multiple of m).
  CycloScalar det(const ContextPtr& ctx) const;

  /// Explicit n x n matrix; column i holds the image of x_i.
  std::vector<std::vector<CycloScalar>> to_matrix(const ContextPtr& ctx) const;

  /// "1", "s(i,j;e)", "t(i;e)", "sg(i,j;e)" or "w(p1,...,pn;e1,...,en)".
  std::string token() const;

  friend MonomialMatrix operator*(const MonomialMatrix& g, const MonomialMatrix& h);
  MonomialMatrix inverse() const;

  friend auto operator<=>(const MonomialMatrix&, const MonomialMatrix&) = default;
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

 private:
  std::uint8_t m_ = 1, n_ = 0;
  std::array<std::uint8_t, kMaxRank> perm_{};
  std::array<std::uint8_t, kMaxRank> exps_{};
};

/// g*h, i.e. apply h first; (g*h)(x) = g(h(x)).
MonomialMatrix compose(const MonomialMatrix& g, const MonomialMatrix& h);

/// s_{ij}^{(eps)} with eps = zeta_m^e: x_i -> eps^-1 x_j, x_j -> eps x_i.
MonomialMatrix gen_s(int m, int n, int i, int j, int e);
/// t_i^{(eps)}: x_i -> eps x_i.
MonomialMatrix gen_t(int m, int n, int i, int e);
/// sigma_{ij}^{(eps)}: x_i -> eps^-1 x_j, x_j -> -eps x_i.  Needs m even.
MonomialMatrix gen_sigma(int m, int n, int i, int j, int e);
/// Diagonal element prod_i t_i^{(zeta^{e_i})}.
MonomialMatrix diagonal(int m, const std::vector<int>& exps);

/// Parses a token produced by MonomialMatrix::token() (and "1").
MonomialMatrix parse_group_token(const std::string& text, int m, int n);

enum class Flavor { reflection, mystic, torus, full_monomial, symmetric };

std::string flavor_name(Flavor f);

struct GroupSpec {
  int m = 1, p = 1, n = 1;
  Flavor flavor = Flavor::reflection;

  /// Throws std::invalid_argument unless p | m, 1 <= n <= kMaxRank (and m even for mu).
  void validate() const;
  /// Expected order from the closed formula.
  long order() const;
  std::string name() const;
  bool operator==(const GroupSpec&) const = default;
};

GroupSpec reflection_group(int m, int p, int n);
GroupSpec mystic_group(int m, int p, int n);

bool is_member(const MonomialMatrix& g, const GroupSpec& spec);

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All elements, identity first, sorted otherwise.
std::vector<MonomialMatrix> enumerate(const GroupSpec& spec, long cap = 10000);

/// A small generating set chosen greedily from reflections and mystic
/// reflections of the group.
std::vector<MonomialMatrix> generating_set(const GroupSpec& spec);

/// Conjugacy classes; each class sorted, classes ordered by first element.
std::vector<std::vector<MonomialMatrix>> conjugacy_classes(const GroupSpec& spec);

/// Product t_{k-1} ... t_1 (all with eps = -1) for 0-based index k; needs m even.
MonomialMatrix torus_prefix(int m, int n, int k);

}  // namespace twistlab

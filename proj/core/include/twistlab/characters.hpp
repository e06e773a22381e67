#pragma once

// Partitions, irreducible characters of S_n and B_n = G(2,1,n), their
// restrictions to D_n and mu(D_n), and pullbacks along the J maps.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twistlab/group_algebra.hpp"
#include "twistlab/report.hpp"

namespace twistlab {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  int size() const;
  std::string str() const;
  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;
};

Partition dual_partition(const Partition& p);
/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions(int n);

/// Murnaghan-Nakayama.  Throws std::invalid_argument on a size mismatch.
Integer sn_character(const Partition& lambda, const std::vector<int>& cycle_type);
/// Cycle lengths of the underlying permutation, sorted decreasingly.
std::vector<int> cycle_type(const MonomialMatrix& g);

struct Bipartition {
  Partition first, second;

  int n() const { return first.size() + second.size(); }
  std::string str() const;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

std::vector<Bipartition> bipartitions(int n);

/// Elements and conjugacy classes of a finite group, shared by all class
/// functions on it.
struct ClassData {
  ContextPtr ctx;
  GroupSpec spec;
  std::vector<MonomialMatrix> elements;
  std::vector<std::vector<MonomialMatrix>> classes;
  std::map<MonomialMatrix, std::size_t> class_of;

  static std::shared_ptr<const ClassData> build(const ContextPtr& ctx, const GroupSpec& spec);
};

class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(std::shared_ptr<const ClassData> data, std::vector<CycloScalar> values);
  /// Evaluates f on every class representative.
  static ClassFunction from(std::shared_ptr<const ClassData> data,
                           const std::function<CycloScalar(const MonomialMatrix&)>& f);

  const ClassData& data() const { return *data_; }
  const std::shared_ptr<const ClassData>& data_ptr() const { return data_; }
  const std::vector<CycloScalar>& values() const { return values_; }
  CycloScalar operator()(const MonomialMatrix& g) const { return values_[data_->class_of.at(g)]; }
  /// Linear extension to the group algebra.
  CycloScalar operator()(const GroupAlgebraElement& a) const;

  friend bool operator==(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);

 private:
  std::shared_ptr<const ClassData> data_;
  std::vector<CycloScalar> values_;
};

/// <a, b> = 1/|G| sum a(g) conj(b(g)).
CycloScalar inner_product(const ClassFunction& a, const ClassFunction& b);

/// chi_{(lambda, mu)} = Ind_{B_a x B_b} (chi~_lambda x (eps'_b (x) chi~_mu)), by
/// the averaging formula over the enumerated group; data must be B_n.
ClassFunction bn_character(const std::shared_ptr<const ClassData>& data, const Bipartition& bp);

struct LabeledCharacter {
  Bipartition label;
  ClassFunction chi;
};

/// All irreducible characters of B_n, labels in the order of bipartitions(n).
std::vector<LabeledCharacter> bn_character_table(const ContextPtr& ctx, int n);

/// eps'(g) = (-1)^{number of sign changes}, the linear character with t_i -> -1, s_i -> 1.
ClassFunction eps_prime(const std::shared_ptr<const ClassData>& data);
/// eps(g) = det(g).
ClassFunction eps_det(const std::shared_ptr<const ClassData>& data);

/// Restriction to a subgroup whose elements form data.
ClassFunction restrict_character(const ClassFunction& chi, const std::shared_ptr<const ClassData>& data);

using AlgebraMap = std::function<GroupAlgebraElement(const MonomialMatrix&)>;

/// (chi o J)(g) = chi(J(g)) for g in the source group.
ClassFunction pullback(const ClassFunction& chi, const AlgebraMap& J, const std::shared_ptr<const ClassData>& source);

AlgebraMap j_map_of(const CycloScalar& c);

/// chi_{(lambda,mu)} o J_1 = chi_{(lambda,mu*)} for all labels of B_n.
NamedResult verify_b_twist(int n);
/// chi o J_1 = chi o J_{-i} for every irreducible of B_n.
NamedResult verify_j1_equals_jminusi(int n);
/// chi^{D_n}_{(lambda,mu)} o J_{-i} = Res^{mu(D_n)} chi_{(lambda,mu*)} and irreducible,
/// for lambda != mu; split labels must have norm 2 on D_n.
NamedResult verify_d_bijection(int n);
/// det (x) chi_{(lambda,mu)} = chi_{(mu*,lambda*)}: detects a swapped labelling.
NamedResult verify_epsilon_labeling(int n);
/// eps' o J_1 = eps on B_n, elementwise.
NamedResult verify_eps_prime_twist(int n);

/// X invertible with J(g) X = X g for every g of a generating set, or
/// nothing.  J must be an algebra automorphism of CG.
std::optional<GroupAlgebraElement> find_inner_witness(const AlgebraMap& J, const ContextPtr& ctx,
                                                      const GroupSpec& spec);

}  // namespace twistlab

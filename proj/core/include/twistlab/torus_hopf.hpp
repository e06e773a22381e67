#pragma once

// The Hopf algebra kT for T = (C_2)^n, its tensor powers, and the 2-cocycle
//   F = prod_{j<i} f_ij,  f_ij = 1/2 (1(x)1 + g_i(x)1 + 1(x)g_j - g_i(x)g_j).
// Group elements of T are bit masks: bit i set means the generator g_i
// (acting as t_i = t_i^{(-1)}) is present.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "twistlab/cyclotomic.hpp"

namespace twistlab {

using Mask = std::uint32_t;

inline int popcount(Mask a) { return __builtin_popcount(a); }
/// (-1)^{|a & b|}: the value of the character a on the group element b.
inline int parity_sign(Mask a, Mask b) { return popcount(a & b) % 2 ? -1 : 1; }

struct TorusElement {
  ContextPtr ctx;
  int n = 0;
  std::map<Mask, CycloScalar> terms;

  static TorusElement one(ContextPtr ctx, int n);
  static TorusElement basis(ContextPtr ctx, int n, Mask a);

  TorusElement operator*(const TorusElement& o) const;
  TorusElement operator+(const TorusElement& o) const;
  TorusElement operator-(const TorusElement& o) const;
  bool operator==(const TorusElement& o) const;
  CycloScalar counit() const;
  /// Antipode; the identity on kT since every element is an involution.
  TorusElement antipode() const { return *this; }
  /// Value under the character indexed by a.
  CycloScalar evaluate(Mask a) const;
  std::optional<TorusElement> inverse() const;
  void prune();
};

struct TensorElement {
  ContextPtr ctx;
  int n = 0;
  std::map<std::pair<Mask, Mask>, CycloScalar> terms;

  static TensorElement one(ContextPtr ctx, int n);
  TensorElement operator*(const TensorElement& o) const;
  bool operator==(const TensorElement& o) const;
  bool operator!=(const TensorElement& o) const { return !(*this == o); }
  CycloScalar evaluate(Mask a, Mask b) const;
  /// Inverse computed on the character side: kT (x) kT is a product of
  /// copies of the base field indexed by pairs of characters.
  std::optional<TensorElement> inverse() const;
  void prune();
};

/// The single factor f_ij (0-based, i != j).
TensorElement cocycle_factor(const ContextPtr& ctx, int n, int i, int j);

/// The cocycle F for rank n; asserts F*F = 1 (x) 1 and throws std::logic_error otherwise.
TensorElement cocycle_F(const ContextPtr& ctx, int n);

struct CocycleReport {
  bool cocycle_equation = false;
  bool left_counit = false;
  bool right_counit = false;
  bool ok() const { return cocycle_equation && left_counit && right_counit; }
};

/// (F(x)1)(Delta(x)id)(F) = (1(x)F)(id(x)Delta)(F) and counitality, exactly in kT^{(x)3}.
CocycleReport check_cocycle(const TensorElement& F);

/// Delta_F(h) = F Delta(h) F^{-1}.
TensorElement twisted_coproduct(const TensorElement& F, const TorusElement& h);

/// U = F_1 S(F_2).
TorusElement drinfeld_u(const TensorElement& F);

/// S_F(h) = U S(h) U^{-1}.
TorusElement twisted_antipode(const TensorElement& F, const TorusElement& h);

}  // namespace twistlab

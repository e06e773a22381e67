#pragma once

// Cocycle twisting over kT, generic in the module algebra.  A carrier is
// described by its basis keys, a product of basis elements and the action
// of T on basis elements (every carrier in scope has T acting by signed
// permutations of its basis).

#include <functional>
#include <map>
#include <utility>

#include "twistlab/torus_hopf.hpp"

namespace twistlab {

template <class Key>
using Sparse = std::map<Key, CycloScalar>;

template <class Key>
void accumulate(Sparse<Key>& into, const Key& k, const CycloScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = into.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

template <class Key>
void accumulate(Sparse<Key>& into, const Sparse<Key>& from, const CycloScalar& scale) {
  for (const auto& [k, c] : from) accumulate(into, k, c * scale);
}

template <class Key>
bool sparse_equal(const Sparse<Key>& a, const Sparse<Key>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [k, c] : a) {
    auto it = b.find(k);
    if (it == b.end() || it->second != c) return false;
  }
  return true;
}

template <class Key>
struct ModuleAlgebra {
  ContextPtr ctx;
  int n = 0;  // rank of T
  std::function<Sparse<Key>(const Key&, const Key&)> mul;
  /// gamma^A acting on a basis element: a scalar multiple of another basis element.
  std::function<std::pair<Key, CycloScalar>(Mask, const Key&)> act;
  Key unit;
};

template <class Key>
Sparse<Key> act_on(const ModuleAlgebra<Key>& alg, Mask a, const Sparse<Key>& x) {
  Sparse<Key> r;
  for (const auto& [k, c] : x) {
    auto [k2, s] = alg.act(a, k);
    accumulate(r, k2, s * c);
  }
  return r;
}

template <class Key>
Sparse<Key> multiply(const ModuleAlgebra<Key>& alg, const Sparse<Key>& a, const Sparse<Key>& b) {
  Sparse<Key> r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) accumulate(r, alg.mul(ka, kb), ca * cb);
  return r;
}

/// Checks that each gamma_i acts by an algebra map, gamma_i^2 = 1 and the
/// gamma_i commute, on the given basis sample.
template <class Key>
bool check_module_algebra(const ModuleAlgebra<Key>& alg, const std::vector<Key>& sample) {
  for (int i = 0; i < alg.n; ++i) {
    const Mask gi = Mask(1) << i;
    for (const auto& a : sample) {
      Sparse<Key> single{{a, CycloScalar(alg.ctx, 1L)}};
      if (!sparse_equal(act_on(alg, gi, act_on(alg, gi, single)), single)) return false;
      for (int j = 0; j < alg.n; ++j) {
        const Mask gj = Mask(1) << j;
        if (!sparse_equal(act_on(alg, gi, act_on(alg, gj, single)), act_on(alg, gj, act_on(alg, gi, single))))
          return false;
      }
      for (const auto& b : sample) {
        Sparse<Key> sb{{b, CycloScalar(alg.ctx, 1L)}};
        auto lhs = act_on(alg, gi, alg.mul(a, b));
        auto rhs = multiply(alg, act_on(alg, gi, single), act_on(alg, gi, sb));
        if (!sparse_equal(lhs, rhs)) return false;
      }
    }
  }
  return true;
}

/// a * b = m(F^{-1} |> (a (x) b)).
template <class Key>
Sparse<Key> twisted_mul(const ModuleAlgebra<Key>& alg, const TensorElement& Finv, const Key& a, const Key& b) {
  Sparse<Key> r;
  for (const auto& [k, f] : Finv.terms) {
    auto [a2, sa] = alg.act(k.first, a);
    auto [b2, sb] = alg.act(k.second, b);
    accumulate(r, alg.mul(a2, b2), f * sa * sb);
  }
  return r;
}

template <class Key>
Sparse<Key> twisted_mul(const ModuleAlgebra<Key>& alg, const TensorElement& Finv, const Sparse<Key>& a,
                        const Sparse<Key>& b) {
  Sparse<Key> r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) accumulate(r, twisted_mul(alg, Finv, ka, kb), ca * cb);
  return r;
}

/// An algebra map u: kT -> A given on group elements of T.
template <class Key>
using TorusEmbedding = std::function<Sparse<Key>(Mask)>;

/// gamma^A |> a = u(gamma^A) a u(gamma^A)^{-1} on the sample (S = id on kT).
template <class Key>
bool check_adjoint(const ModuleAlgebra<Key>& alg, const TorusEmbedding<Key>& u, const std::vector<Key>& sample) {
  for (Mask a = 0; a < (Mask(1) << alg.n); ++a)
    for (const auto& k : sample) {
      Sparse<Key> single{{k, CycloScalar(alg.ctx, 1L)}};
      auto lhs = act_on(alg, a, single);
      auto rhs = multiply(alg, multiply(alg, u(a), single), u(a));
      if (!sparse_equal(lhs, rhs)) return false;
    }
  return true;
}

/// eta(a) = sum F^{-1}(A,B) (gamma^A |> a) u(gamma^B).
template <class Key>
Sparse<Key> eta(const ModuleAlgebra<Key>& alg, const TorusEmbedding<Key>& u, const TensorElement& Finv,
                const Key& a) {
  Sparse<Key> r;
  for (const auto& [k, f] : Finv.terms) {
    auto [a2, s] = alg.act(k.first, a);
    Sparse<Key> left{{a2, s}};
    accumulate(r, multiply(alg, left, u(k.second)), f);
  }
  return r;
}

template <class Key>
Sparse<Key> eta(const ModuleAlgebra<Key>& alg, const TorusEmbedding<Key>& u, const TensorElement& Finv,
                const Sparse<Key>& a) {
  Sparse<Key> r;
  for (const auto& [k, c] : a) accumulate(r, eta(alg, u, Finv, k), c);
  return r;
}

// Smash product A # kT with basis pairs (a, A).

template <class Key>
using SmashKey = std::pair<Key, Mask>;

/// (a1 # h1)(a2 # h2) = a1 (h1 |> a2) # h1 h2, where the product of A is
/// either the original one (Finv empty) or the twisted one.
template <class Key>
Sparse<SmashKey<Key>> smash_mul(const ModuleAlgebra<Key>& alg, const TensorElement* Finv, const SmashKey<Key>& x,
                                const SmashKey<Key>& y) {
  auto [a2, s] = alg.act(x.second, y.first);
  Sparse<Key> prod = Finv ? twisted_mul(alg, *Finv, x.first, a2) : alg.mul(x.first, a2);
  Sparse<SmashKey<Key>> r;
  for (const auto& [k, c] : prod) accumulate(r, SmashKey<Key>{k, x.second ^ y.second}, c * s);
  return r;
}

template <class Key>
Sparse<SmashKey<Key>> smash_mul(const ModuleAlgebra<Key>& alg, const TensorElement* Finv,
                                const Sparse<SmashKey<Key>>& x, const Sparse<SmashKey<Key>>& y) {
  Sparse<SmashKey<Key>> r;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) accumulate(r, smash_mul(alg, Finv, kx, ky), cx * cy);
  return r;
}

/// Kulish-Mudrov map A_F # kT -> A # kT, a # h -> sum F^{-1}(A,B) (gamma^A |> a) # gamma^B h.
template <class Key>
Sparse<SmashKey<Key>> kulish_mudrov(const ModuleAlgebra<Key>& alg, const TensorElement& Finv,
                                    const SmashKey<Key>& x) {
  Sparse<SmashKey<Key>> r;
  for (const auto& [k, f] : Finv.terms) {
    auto [a2, s] = alg.act(k.first, x.first);
    accumulate(r, SmashKey<Key>{a2, k.second ^ x.second}, f * s);
  }
  return r;
}

template <class Key>
Sparse<SmashKey<Key>> kulish_mudrov(const ModuleAlgebra<Key>& alg, const TensorElement& Finv,
                                    const Sparse<SmashKey<Key>>& x) {
  Sparse<SmashKey<Key>> r;
  for (const auto& [k, c] : x) accumulate(r, kulish_mudrov(alg, Finv, k), c);
  return r;
}

/// A module V of an algebra A, both carrying T-actions by signed basis permutations.
template <class AKey, class VKey>
struct ModuleOver {
  std::function<Sparse<VKey>(const AKey&, const VKey&)> act;
  std::function<std::pair<VKey, CycloScalar>(Mask, const VKey&)> torus;
};

template <class VKey, class AKey>
Sparse<VKey> module_act(const ModuleOver<AKey, VKey>& mod, const Sparse<AKey>& a, const Sparse<VKey>& v) {
  Sparse<VKey> r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kv, cv] : v) accumulate(r, mod.act(ka, kv), ca * cv);
  return r;
}

/// h |> (a |> v) = (h |> a) |> (h |> v) for group elements h of T.
template <class AKey, class VKey>
bool check_compatibility(const ModuleAlgebra<AKey>& alg, const ModuleOver<AKey, VKey>& mod,
                         const std::vector<AKey>& as, const std::vector<VKey>& vs) {
  for (Mask h = 0; h < (Mask(1) << alg.n); ++h)
    for (const auto& a : as)
      for (const auto& v : vs) {
        Sparse<VKey> lhs;
        for (const auto& [k, c] : mod.act(a, v)) {
          auto [k2, s] = mod.torus(h, k);
          accumulate(lhs, k2, c * s);
        }
        auto [a2, sa] = alg.act(h, a);
        auto [v2, sv] = mod.torus(h, v);
        Sparse<VKey> rhs;
        accumulate(rhs, mod.act(a2, v2), sa * sv);
        if (!sparse_equal(lhs, rhs)) return false;
      }
  return true;
}

/// Giaquinto-Zhang twisted action a |>_F v = sum F^{-1}(A,B) (gamma^A |> a) |> (gamma^B |> v).
template <class AKey, class VKey>
Sparse<VKey> gz_act(const ModuleAlgebra<AKey>& alg, const ModuleOver<AKey, VKey>& mod, const TensorElement& Finv,
                    const AKey& a, const VKey& v) {
  Sparse<VKey> r;
  for (const auto& [k, f] : Finv.terms) {
    auto [a2, sa] = alg.act(k.first, a);
    auto [v2, sv] = mod.torus(k.second, v);
    accumulate(r, mod.act(a2, v2), f * sa * sv);
  }
  return r;
}

template <class AKey, class VKey>
Sparse<VKey> gz_act(const ModuleAlgebra<AKey>& alg, const ModuleOver<AKey, VKey>& mod, const TensorElement& Finv,
                    const Sparse<AKey>& a, const Sparse<VKey>& v) {
  Sparse<VKey> r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kv, cv] : v) accumulate(r, gz_act(alg, mod, Finv, ka, kv), ca * cv);
  return r;
}

}  // namespace twistlab

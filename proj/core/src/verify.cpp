#include "twistlab/verify.hpp"

#include <json.hpp>
#include <algorithm>
#include <stdexcept>

#include "twistlab/characters.hpp"
#include "twistlab/cherednik.hpp"
#include "twistlab/coinvariants.hpp"
#include "twistlab/embedding.hpp"
#include "twistlab/group_algebra.hpp"
#include "twistlab/linalg.hpp"
#include "twistlab/restricted.hpp"
#include "twistlab/twist.hpp"

namespace twistlab {

namespace {

std::string group_name(int m, int p, int n) {
  return "G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
}

ModuleAlgebra<MonomialMatrix> group_module_algebra(const ContextPtr& ctx, int m, int n) {
  ModuleAlgebra<MonomialMatrix> alg;
  alg.ctx = ctx;
  alg.n = n;
  alg.mul = [ctx](const MonomialMatrix& g, const MonomialMatrix& h) {
    return Sparse<MonomialMatrix>{{g * h, CycloScalar(ctx, 1L)}};
  };
  alg.act = [ctx](Mask a, const MonomialMatrix& g) {
    return std::pair<MonomialMatrix, CycloScalar>{torus_conjugate(a, g), CycloScalar(ctx, 1L)};
  };
  alg.unit = diagonal(m, std::vector<int>(n, 0));
  return alg;
}

Sparse<MonomialMatrix> to_sparse(const GroupAlgebraElement& a) {
  return Sparse<MonomialMatrix>(a.terms().begin(), a.terms().end());
}

}  // namespace

NamedResult check_cocycle_ranks(int max_n) {
  NamedResult res{"cocycle F for ranks 1.." + std::to_string(max_n), true, ""};
  const auto ctx = CycloContext::get(2);
  for (int n = 1; n <= max_n; ++n) {
    const auto F = cocycle_F(ctx, n);
    const auto rep = check_cocycle(F);
    const auto inv = F.inverse();
    const auto U = drinfeld_u(F);
    std::string bad;
    if (!rep.cocycle_equation) bad = "cocycle equation";
    else if (!rep.left_counit || !rep.right_counit) bad = "counitality";
    else if (!(F * F == TensorElement::one(ctx, n))) bad = "F*F != 1(x)1";
    else if (!inv || !(*inv == F)) bad = "F^{-1} != F";
    else if (!(U * U == TorusElement::one(ctx, n))) bad = "U^2 != 1";
    if (!bad.empty()) {
      res.ok = false;
      res.detail = bad + " at n = " + std::to_string(n);
      return res;
    }
  }
  res.detail = "cocycle equation, counitality, F*F = 1(x)1, U^2 = 1";
  return res;
}

NamedResult check_smash_isomorphism(int m, int p, int n) {
  NamedResult res{"Kulish-Mudrov map on C" + group_name(m, p, n) + " # kT", true, ""};
  const auto ctx = CycloContext::get(m);
  const auto spec = reflection_group(m, p, n);
  const auto alg = group_module_algebra(ctx, m, n);
  const auto Finv = *cocycle_F(ctx, n).inverse();
  std::vector<SmashKey<MonomialMatrix>> basis;
  for (const auto& g : enumerate(spec))
    for (Mask a = 0; a < (Mask(1) << n); ++a) basis.push_back({g, a});
  std::map<SmashKey<MonomialMatrix>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

  std::vector<Sparse<SmashKey<MonomialMatrix>>> images;
  for (const auto& b : basis) images.push_back(kulish_mudrov(alg, Finv, b));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto lhs = kulish_mudrov(alg, Finv, smash_mul(alg, &Finv, basis[i], basis[j]));
      auto rhs = smash_mul(alg, static_cast<const TensorElement*>(nullptr), images[i], images[j]);
      if (!sparse_equal(lhs, rhs)) {
        res.ok = false;
        res.detail = "not multiplicative at (" + basis[i].first.token() + "#" + std::to_string(basis[i].second) +
                     ")(" + basis[j].first.token() + "#" + std::to_string(basis[j].second) + ")";
        return res;
      }
    }
  Matrix M(ctx, basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [k, c] : images[j]) {
      auto it = index.find(k);
      if (it == index.end()) {
        res.ok = false;
        res.detail = "image leaves the smash product";
        return res;
      }
      M(it->second, j) = c;
    }
  if (rank(M) != basis.size()) {
    res.ok = false;
    res.detail = "not bijective";
    return res;
  }
  res.detail = std::to_string(basis.size() * basis.size()) + " basis pairs, bijective";
  return res;
}

NamedResult check_eta_multiplicative(int m, int p, int n) {
  NamedResult res{"eta on C" + group_name(m, p, n), true, ""};
  const auto ctx = CycloContext::get(m);
  const auto spec = reflection_group(m, p, n);
  const auto alg = group_module_algebra(ctx, m, n);
  const auto Finv = *cocycle_F(ctx, n).inverse();
  const auto elements = enumerate(spec);
  TorusEmbedding<MonomialMatrix> u = [&](Mask a) {
    return Sparse<MonomialMatrix>{{torus_element(m, n, a), CycloScalar(ctx, 1L)}};
  };
  if (!check_adjoint(alg, u, elements)) {
    res.ok = false;
    res.detail = "T-action is not adjoint";
    return res;
  }
  for (const auto& a : elements) {
    const auto ea = eta(alg, u, Finv, a);
    if (!sparse_equal(ea, to_sparse(twistlab::eta(Finv, GroupAlgebraElement(ctx, a))))) {
      res.ok = false;
      res.detail = "generic and group-algebra eta disagree at " + a.token();
      return res;
    }
    for (const auto& b : elements) {
      auto lhs = eta(alg, u, Finv, twisted_mul(alg, Finv, a, b));
      auto rhs = multiply(alg, ea, eta(alg, u, Finv, b));
      if (!sparse_equal(lhs, rhs)) {
        res.ok = false;
        res.detail = "eta(a*b) != eta(a)eta(b) at " + a.token() + ", " + b.token();
        return res;
      }
    }
  }
  res.detail = std::to_string(elements.size() * elements.size()) + " pairs";
  return res;
}

std::vector<NamedResult> check_eta_images(int n, const Rational& c) {
  std::vector<NamedResult> out;
  const int m = 2;
  const auto ctx = CycloContext::get(m);
  const auto spec = reflection_group(m, 1, n);
  const auto Finv = *cocycle_F(ctx, n).inverse();

  CherednikAlgebra H(ctx, spec, make_params(ctx, spec, CherednikFlavor::rational, 1, c, {{1, c}}));
  const auto halg = H.module_algebra();
  TorusEmbedding<NormalWord> uh = [&](Mask a) { return H.group(torus_element(m, n, a)); };
  for (int k = 0; k < n; ++k) {
    auto lhs = eta(halg, uh, Finv, H.x(k));
    auto rhs = H.mul(H.x(k), H.group(torus_prefix(m, n, k)));
    out.push_back({"eta(x" + std::to_string(k + 1) + ") = x" + std::to_string(k + 1) + " t_{k-1}...t_1",
                   sparse_equal(lhs, rhs), sparse_equal(lhs, rhs) ? "" : H.str(lhs)});
  }

  const auto galg = group_module_algebra(ctx, m, n);
  TorusEmbedding<MonomialMatrix> ug = [&](Mask a) {
    return Sparse<MonomialMatrix>{{torus_element(m, n, a), CycloScalar(ctx, 1L)}};
  };
  bool torus_ok = true;
  for (Mask a = 0; a < (Mask(1) << n); ++a) {
    const auto t = torus_element(m, n, a);
    if (!sparse_equal(eta(galg, ug, Finv, t), Sparse<MonomialMatrix>{{t, CycloScalar(ctx, 1L)}})) torus_ok = false;
  }
  out.push_back({"eta(t) = t", torus_ok, ""});

  const CycloScalar h(ctx, Rational(1, 2));
  for (int k = 0; k + 1 < n; ++k) {
    GroupAlgebraElement expected(ctx);
    expected.add_term(gen_s(m, n, k, k + 1, 0), h);
    expected.add_term(gen_s(m, n, k, k + 1, m / 2), h);
    expected.add_term(gen_sigma(m, n, k, k + 1, 0), h);
    expected.add_term(gen_sigma(m, n, k, k + 1, 0).inverse(), -h);
    auto got = eta(galg, ug, Finv, gen_s(m, n, k, k + 1, m / 2));
    const bool ok = sparse_equal(got, to_sparse(expected));
    out.push_back({"eta(sbar" + std::to_string(k + 1) + ") = (s + sbar + sigma - sigma^-1)/2", ok, ""});
  }
  return out;
}

NamedResult check_phi_consistency(int m, int p, int n) {
  NamedResult res{"phi = eta^-1 J_1 on mu(" + group_name(m, p, n) + ")", true, ""};
  const auto ctx = CycloContext::get(m);
  const auto Finv = *cocycle_F(ctx, n).inverse();
  PhiViaJ1 phi(ctx, reflection_group(m, p, n));
  const auto elements = enumerate(mystic_group(m, p, n));
  std::map<MonomialMatrix, GroupAlgebraElement> image;
  for (const auto& w : elements) {
    image[w] = phi(w);
    if (!(image[w] == phi_generators(ctx, Finv, w))) {
      res.ok = false;
      res.detail = "generator-wise phi differs at " + w.token();
      return res;
    }
    if (!(twistlab::eta(Finv, image[w]) == j_map(CycloScalar(ctx, 1L), w))) {
      res.ok = false;
      res.detail = "eta(phi(w)) != J_1(w) at " + w.token();
      return res;
    }
  }
  for (int k = 0; k + 1 < n; ++k)
    if (!(phi(gen_sigma(m, n, k, k + 1, 0)) == GroupAlgebraElement(ctx, gen_s(m, n, k, k + 1, m / 2)))) {
      res.ok = false;
      res.detail = "phi(sigma" + std::to_string(k + 1) + ") != sbar";
      return res;
    }
  for (Mask a = 0; a < (Mask(1) << n); ++a) {
    const auto t = torus_element(m, n, a);
    if (!(phi(t) == GroupAlgebraElement(ctx, t))) {
      res.ok = false;
      res.detail = "phi(t) != t";
      return res;
    }
  }
  for (const auto& a : elements)
    for (const auto& b : elements)
      if (!(image[a * b] == twisted_mul(Finv, image[a], image[b]))) {
        res.ok = false;
        res.detail = "phi not multiplicative at " + a.token() + ", " + b.token();
        return res;
      }
  res.detail = std::to_string(elements.size()) + " elements";
  return res;
}

namespace {

std::vector<NamedResult> one(NamedResult r) { return {std::move(r)}; }

std::vector<CheckEntry> build_registry() {
  std::vector<CheckEntry> r;
  r.push_back({"cocycle", "F is a counital 2-cocycle on kT for ranks 1..4 and an involution", 16, 0, 0,
               [](const VerifyOptions&) { return one(check_cocycle_ranks(4)); }});
  r.push_back({"kulish-mudrov", "the Kulish-Mudrov map is an algebra isomorphism for CG(2,1,2)", 8, 32, 0,
               [](const VerifyOptions&) { return one(check_smash_isomorphism(2, 1, 2)); }});
  r.push_back({"eta-multiplicative", "eta is an algebra map from (CG)_F to CG for G(2,1,2)", 8, 8, 0,
               [](const VerifyOptions&) { return one(check_eta_multiplicative(2, 1, 2)); }});
  r.push_back({"eta-images", "eta on x_k, torus elements and sbar_k agrees with the closed formulas", 8, 0, 1,
               [](const VerifyOptions& o) { return check_eta_images(2, o.c); }});
  r.push_back({"phi-consistency", "phi = eta^-1 J_1 sends sigma_k to sbar_k and is multiplicative", 32, 32, 0,
               [](const VerifyOptions&) {
                 return std::vector<NamedResult>{check_phi_consistency(2, 1, 2), check_phi_consistency(4, 2, 2)};
               }});
  r.push_back({"embedding-relations", "images of the braided Cherednik relations vanish in the rational Cherednik algebra", 32, 0, 2,
               [](const VerifyOptions& o) {
                 std::vector<NamedResult> out;
                 for (auto [m, p, n] : std::vector<std::array<int, 3>>{{2, 1, 2}, {2, 2, 2}, {4, 2, 2}}) {
                   std::map<int, Rational> cz;
                   if (p < m) cz[p] = o.c;
                   EtaPhiEmbedding E(CycloContext::get(m), m, p, n, 1, o.c, cz);
                   bool ok = true;
                   std::string detail;
                   for (const auto& rel : E.check_relations())
                     if (!rel.ok && ok) {
                       ok = false;
                       detail = rel.name + ": " + rel.detail;
                     }
                   out.push_back({"relations for mu(" + group_name(m, p, n) + ")", ok, detail});
                 }
                 return out;
               }});
  r.push_back({"embedding-bijective", "for m/p even the embedding is bijective in degrees <= 2", 32, 0, 2,
               [](const VerifyOptions& o) {
                 std::vector<NamedResult> out;
                 for (auto [m, p, n] : std::vector<std::array<int, 3>>{{2, 1, 2}, {4, 2, 2}}) {
                   std::map<int, Rational> cz;
                   if (p < m) cz[p] = o.c;
                   EtaPhiEmbedding E(CycloContext::get(m), m, p, n, 1, o.c, cz);
                   out.push_back(E.check_bijective(2));
                 }
                 return out;
               }});
  r.push_back({"b-twist", "chi_(lambda,mu) o J_1 = chi_(lambda,mu*) on B_n, n <= 3", 48, 0, 0,
               [](const VerifyOptions&) {
                 std::vector<NamedResult> out;
                 for (int n = 1; n <= 3; ++n) out.push_back(verify_b_twist(n));
                 return out;
               }});
  r.push_back({"j1-vs-jminusi", "pullbacks along J_1 and J_-i agree on B_n, n <= 3", 48, 0, 0,
               [](const VerifyOptions&) {
                 std::vector<NamedResult> out;
                 for (int n = 1; n <= 3; ++n) out.push_back(verify_j1_equals_jminusi(n));
                 return out;
               }});
  r.push_back({"d-bijection", "J_-i carries irreducibles of D_3 to irreducibles of mu(D_3)", 24, 0, 0,
               [](const VerifyOptions&) { return one(verify_d_bijection(3)); }});
  r.push_back({"labeling", "det and eps' tensoring permute bipartition labels as expected", 48, 0, 0,
               [](const VerifyOptions&) {
                 std::vector<NamedResult> out;
                 for (int n = 1; n <= 3; ++n) {
                   out.push_back(verify_epsilon_labeling(n));
                   out.push_back(verify_eps_prime_twist(n));
                 }
                 return out;
               }});
  r.push_back({"inner-witness", "J_-i J_1 is inner on Q(i)B_2", 8, 8, 0, [](const VerifyOptions&) {
                 const auto ctx = CycloContext::get(4);
                 const auto spec = reflection_group(2, 1, 2);
                 auto J1 = j_map_of(CycloScalar(ctx, 1L));
                 const auto minus_i = -CycloScalar::root_of_unity(ctx, 1);
                 AlgebraMap both = [&](const MonomialMatrix& g) { return j_map(minus_i, J1(g)); };
                 auto w = find_inner_witness(both, ctx, spec);
                 if (!w) return one({"witness X with XuX^-1 = J_-i J_1(u)", false, "none found"});
                 for (const auto& g : enumerate(spec))
                   if (!(both(g) * *w == *w * GroupAlgebraElement(ctx, g)))
                     return one({"witness X with XuX^-1 = J_-i J_1(u)", false, "fails at " + g.token()});
                 return one({"witness X with XuX^-1 = J_-i J_1(u)", true, w->str()});
               }});
  r.push_back({"coinvariant-regular", "coinvariant algebras carry the regular representation", 8, 8, 4,
               [](const VerifyOptions&) {
                 std::vector<NamedResult> out;
                 for (const auto& s : {reflection_group(2, 1, 1), reflection_group(2, 1, 2),
                                       reflection_group(2, 2, 2), mystic_group(2, 2, 2)})
                   out.push_back(check_coinvariant_regular(s));
                 out.push_back(check_hilbert_series(2, 2, 2));
                 return out;
               }});
  r.push_back({"ideal-equality", "invariant ideals of G and mu(G) agree and the products differ by the twist", 8, 8, 6, [](const VerifyOptions&) {
                 return std::vector<NamedResult>{check_generator_invariance(2, 2, 2), check_ideal_equality(2, 2, 2, 6),
                                                 check_twisted_coinvariant_product(2, 2, 2),
                                                 check_twisted_coinvariant_product(2, 1, 2)};
               }});
  r.push_back({"trace-invariance", "traces of the twisted and untwisted actions agree", 8, 8, 4,
               [](const VerifyOptions&) {
                 return std::vector<NamedResult>{check_trace_invariance(2, 1, 2), check_regular_character_lemma(2, 1, 2),
                                                 check_twisted_action_lemma(2, 2, 2, 3)};
               }});
  r.push_back({"restricted-dims", "restricted Cherednik algebras have the stated dimensions and centres", 8, 64, 4,
               [](const VerifyOptions& o) {
                 return std::vector<NamedResult>{check_rank_one_presentation(o.c), check_restricted_dims(o.c),
                                                 check_center_dims(o.c)};
               }});
  r.push_back({"not-isom", "central elements z and gamma separate the two restricted algebras at c = 1", 4, 64, 4, [](const VerifyOptions&) { return check_not_isomorphic(Rational(1)); }});
  r.push_back({"restricted-iso", "eta identifies the twisted restricted algebra with H_c for m/p even", 2, 8, 2,
               [](const VerifyOptions& o) { return one(check_restricted_iso_even_case(2, 1, 1, o.c)); }});
  r.push_back({"restricted-iso-rank2", "as restricted-iso, for G(2,1,2)", 8, 512, 4,
               [](const VerifyOptions& o) { return one(check_restricted_iso_even_case(2, 1, 2, o.c)); }});
  r.push_back({"psi-twist", "the PBW factorisation map of the twisted algebra is the conjugated one", 8, 0, 4,
               [](const VerifyOptions& o) {
                 std::vector<NamedResult> out;
                 for (auto [m, p, n] : std::vector<std::array<int, 3>>{{2, 1, 2}, {2, 2, 2}}) {
                   const auto ctx = CycloContext::get(m);
                   const auto spec = reflection_group(m, p, n);
                   CherednikAlgebra H(ctx, spec, make_params(ctx, spec, CherednikFlavor::rational, 1, o.c, {}));
                   const auto F = cocycle_F(ctx, n);
                   out.push_back(check_psi_twist(H, F, F, 2));
                 }
                 return out;
               }});
  r.push_back({"standard-module", "standard modules of B_2 twist into standard modules", 8, 0, 2,
               [](const VerifyOptions& o) {
                 std::vector<NamedResult> out;
                 for (const char* rep : {"trivial", "det"})
                   out.push_back(check_standard_module_twist(2, 1, 2, o.c, {{1, o.c}}, rep, 2));
                 return out;
               }});
  r.push_back({"associativity", "the braided restricted algebra of mu(G(2,2,2)) is associative", 4, 64, 4,
               [](const VerifyOptions& o) { return one(check_restricted_associativity(mystic_group(2, 2, 2), o.c)); }});
  return r;
}

}  // namespace

const std::vector<CheckEntry>& check_registry() {
  static const std::vector<CheckEntry> registry = build_registry();
  return registry;
}

std::vector<CheckOutcome> run_checks(const VerifyOptions& options) {
  const auto& registry = check_registry();
  if (options.selector != "all" &&
      std::none_of(registry.begin(), registry.end(), [&](const CheckEntry& e) { return e.name == options.selector; }))
    throw std::invalid_argument("unknown check: " + options.selector);
  std::vector<CheckOutcome> out;
  for (const auto& entry : registry) {
    if (options.selector != "all" && entry.name != options.selector) continue;
    CheckOutcome o{entry.name, entry.anchor, CheckStatus::fail, "", {}};
    if (entry.order > options.cap_order || entry.dim > options.cap_dim || entry.degree > options.cap_degree) {
      o.status = CheckStatus::skipped;
      o.details = "exceeds caps (order " + std::to_string(entry.order) + ", dim " + std::to_string(entry.dim) +
                  ", degree " + std::to_string(entry.degree) + ")";
      out.push_back(std::move(o));
      continue;
    }
    try {
      o.results = entry.run(options);
      bool ok = !o.results.empty();
      for (const auto& r : o.results) {
        ok = ok && r.ok;
        if (!o.details.empty()) o.details += "; ";
        o.details += (r.ok ? "" : "FAILED ") + r.name + (r.detail.empty() ? "" : ": " + r.detail);
      }
      o.status = ok ? CheckStatus::pass : CheckStatus::fail;
    } catch (const std::exception& e) {
      o.details = std::string("error: ") + e.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

bool overall(const std::vector<CheckOutcome>& outcomes) {
  for (const auto& o : outcomes)
    if (o.status == CheckStatus::fail) return false;
  return true;
}

std::string checks_to_json(const std::vector<CheckOutcome>& outcomes, int indent) {
  nlohmann::ordered_json j;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& o : outcomes) {
    nlohmann::ordered_json c;
    c["name"] = o.name;
    c["anchor"] = o.anchor;
    c["status"] = o.status == CheckStatus::pass ? "pass" : o.status == CheckStatus::fail ? "fail" : "skipped";
    c["details"] = o.details;
    c["assertions"] = nlohmann::ordered_json::array();
    for (const auto& r : o.results)
      c["assertions"].push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    j["checks"].push_back(std::move(c));
  }
  j["overall"] = overall(outcomes);
  return j.dump(indent);
}

}  // namespace twistlab

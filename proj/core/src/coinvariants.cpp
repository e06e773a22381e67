#include "twistlab/coinvariants.hpp"

#include <random>

namespace twistlab {

namespace {

std::vector<CycloScalar> dense(const ContextPtr& ctx, const std::vector<Exps>& monomials,
                               const std::map<Exps, std::size_t>& index, const SkewPoly& f) {
  std::vector<CycloScalar> v(monomials.size(), CycloScalar(ctx, 0L));
  for (const auto& [a, c] : f.terms()) v[index.at(a)] = c;
  return v;
}

GradedComponent make_component(const ContextPtr& ctx, int n, int d, const std::vector<SkewPoly>& rows) {
  GradedComponent comp;
  comp.degree = d;
  comp.monomials = monomials_of_degree(n, d);
  std::map<Exps, std::size_t> index;
  for (std::size_t i = 0; i < comp.monomials.size(); ++i) index[comp.monomials[i]] = i;
  Matrix a(ctx, rows.size(), comp.monomials.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto v = dense(ctx, comp.monomials, index, rows[r]);
    for (std::size_t c = 0; c < v.size(); ++c) a(r, c) = v[c];
  }
  comp.pivots = rref(a);
  comp.ideal = Matrix(ctx, comp.pivots.size(), comp.monomials.size());
  for (std::size_t r = 0; r < comp.pivots.size(); ++r)
    for (std::size_t c = 0; c < comp.monomials.size(); ++c) comp.ideal(r, c) = a(r, c);
  std::vector<bool> is_pivot(comp.monomials.size(), false);
  for (auto p : comp.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < comp.monomials.size(); ++c)
    if (!is_pivot[c]) comp.complement.push_back(comp.monomials[c]);
  return comp;
}

}  // namespace

std::vector<GradedComponent> graded_ideal(const std::vector<SkewPoly>& gens, int D, bool two_sided) {
  if (gens.empty()) throw std::invalid_argument("graded_ideal: no generators");
  const auto& ctx = gens.front().context();
  const int n = gens.front().n(), sign = gens.front().sign();
  std::vector<GradedComponent> out;
  for (int d = 0; d <= D; ++d) {
    std::vector<SkewPoly> rows;
    for (const auto& f : gens) {
      if (f.is_zero()) continue;
      if (!f.is_homogeneous()) throw std::invalid_argument("graded_ideal: generators must be homogeneous");
      const int e = degree(f.terms().begin()->first);
      if (e > d) continue;
      for (int left = 0; left <= d - e; ++left) {
        if (!two_sided && left != d - e) continue;
        for (const auto& M : monomials_of_degree(n, left)) {
          const SkewPoly mf = SkewPoly::monomial(ctx, n, sign, M) * f;
          for (const auto& N : monomials_of_degree(n, d - e - left)) rows.push_back(mf * SkewPoly::monomial(ctx, n, sign, N));
        }
      }
    }
    out.push_back(make_component(ctx, n, d, rows));
  }
  return out;
}

bool same_spans(const std::vector<GradedComponent>& a, const std::vector<GradedComponent>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t d = 0; d < a.size(); ++d)
    if (a[d].pivots != b[d].pivots || a[d].ideal != b[d].ideal) return false;
  return true;
}

GradedQuotient::GradedQuotient(const ContextPtr& ctx, int n, int sign, std::vector<SkewPoly> gens, int top)
    : ctx_(ctx), n_(n), sign_(sign), top_(top), gens_(std::move(gens)) {
  components_ = graded_ideal(gens_, top + 1);
  if (!components_.back().complement.empty())
    throw std::logic_error("GradedQuotient: quotient does not vanish above the top degree");
  for (const auto& comp : components_)
    for (const auto& a : comp.complement) {
      index_[a] = basis_.size();
      basis_.push_back(a);
    }
}

std::vector<int> GradedQuotient::graded_dims() const {
  std::vector<int> d;
  for (int k = 0; k <= top_; ++k) d.push_back(static_cast<int>(components_[k].complement.size()));
  return d;
}

SkewPoly GradedQuotient::reduce(const SkewPoly& f) const {
  SkewPoly out(ctx_, n_, sign_);
  std::map<int, SkewPoly> by_degree;
  for (const auto& [a, c] : f.terms()) {
    const int d = degree(a);
    // The ideal contains every monomial of degree top + 1, hence all higher ones.
    if (d > top_) continue;
    auto [it, fresh] = by_degree.try_emplace(d, ctx_, n_, sign_);
    it->second.add_term(a, c);
  }
  for (const auto& [d, part] : by_degree) {
    const auto& comp = components_[d];
    std::map<Exps, std::size_t> index;
    for (std::size_t i = 0; i < comp.monomials.size(); ++i) index[comp.monomials[i]] = i;
    auto v = dense(ctx_, comp.monomials, index, part);
    for (std::size_t r = 0; r < comp.pivots.size(); ++r) {
      const CycloScalar lead = v[comp.pivots[r]];
      if (lead.is_zero()) continue;
      for (std::size_t c = 0; c < v.size(); ++c)
        if (!comp.ideal(r, c).is_zero()) v[c] -= lead * comp.ideal(r, c);
    }
    for (std::size_t c = 0; c < v.size(); ++c) out.add_term(comp.monomials[c], v[c]);
  }
  return out;
}

std::vector<CycloScalar> GradedQuotient::coordinates(const SkewPoly& f) const {
  std::vector<CycloScalar> v(basis_.size(), CycloScalar(ctx_, 0L));
  const SkewPoly r = reduce(f);
  for (const auto& [a, c] : r.terms()) v[index_.at(a)] = c;
  return v;
}

Matrix GradedQuotient::action_matrix(const MonomialMatrix& g, bool dual) const {
  Matrix a(ctx_, basis_.size(), basis_.size());
  for (std::size_t col = 0; col < basis_.size(); ++col) {
    auto v = coordinates(SkewPoly::monomial(ctx_, n_, sign_, basis_[col]).act(g, dual));
    for (std::size_t r = 0; r < v.size(); ++r) a(r, col) = v[r];
  }
  return a;
}

GradedQuotient coinvariant_quotient(const ContextPtr& ctx, const GroupSpec& spec) {
  const int sign = spec.flavor == Flavor::mystic ? -1 : 1;
  if (spec.flavor != Flavor::mystic && spec.flavor != Flavor::reflection)
    throw std::invalid_argument("coinvariant_quotient: needs a reflection or mystic group");
  int top = 0;
  for (int d : invariant_degrees(spec.m, spec.p, spec.n)) top += d - 1;
  GradedQuotient q(ctx, spec.n, sign, invariant_generators(ctx, spec.m, spec.p, spec.n, sign), top);
  if (static_cast<long>(q.total_dim()) != spec.order())
    throw std::logic_error("coinvariant_quotient: dimension " + std::to_string(q.total_dim()) + " != |" +
                           spec.name() + "|");
  return q;
}

ClassFunction coinvariant_character(const GradedQuotient& q, const std::shared_ptr<const ClassData>& data) {
  return ClassFunction::from(data, [&](const MonomialMatrix& g) { return q.action_matrix(g).trace(); });
}

NamedResult check_generator_invariance(int m, int p, int n) {
  NamedResult res{"invariant generators of G(" + std::to_string(m) + "," + std::to_string(p) + "," +
                      std::to_string(n) + ") and its mystic partner",
                  true, ""};
  const auto ctx = CycloContext::get(m);
  for (int sign : {1, -1}) {
    const auto spec = sign > 0 ? reflection_group(m, p, n) : mystic_group(m, p, n);
    const auto gens = invariant_generators(ctx, m, p, n, sign);
    for (const auto& g : enumerate(spec))
      for (const auto& f : gens)
        if (!(f.act(g) == f) || !(f.act(g, true) == f)) {
          res.ok = false;
          res.detail = f.str() + " is moved by " + g.token() + " in " + spec.name();
          return res;
        }
  }
  res.detail = "all generators fixed";
  return res;
}

NamedResult check_coinvariant_regular(const GroupSpec& spec) {
  NamedResult res{"coinvariants of " + spec.name() + " afford the regular representation", true, ""};
  const auto ctx = CycloContext::get(spec.m);
  const auto q = coinvariant_quotient(ctx, spec);
  const auto data = ClassData::build(ctx, spec);
  const auto chi = coinvariant_character(q, data);
  for (const auto& g : data->elements) {
    const CycloScalar expected(ctx, g.is_identity() ? spec.order() : 0L);
    if (chi(g) != expected) {
      res.ok = false;
      res.detail = "trace of " + g.token() + " is " + chi(g).str();
      return res;
    }
  }
  std::string dims;
  for (int d : q.graded_dims()) dims += (dims.empty() ? "" : ",") + std::to_string(d);
  res.detail = "graded dims (" + dims + "), total " + std::to_string(q.total_dim());
  return res;
}

NamedResult check_one_sided_spans(const GroupSpec& spec, int D) {
  NamedResult res{"left multiples span the two-sided ideal of " + spec.name(), true, ""};
  const auto ctx = CycloContext::get(spec.m);
  const int sign = spec.flavor == Flavor::mystic ? -1 : 1;
  const auto gens = invariant_generators(ctx, spec.m, spec.p, spec.n, sign);
  res.ok = same_spans(graded_ideal(gens, D), graded_ideal(gens, D, true));
  res.detail = "degrees <= " + std::to_string(D);
  return res;
}

NamedResult check_ideal_equality(int m, int p, int n, int D) {
  NamedResult res{"I_G = I_W in degrees <= " + std::to_string(D), true, ""};
  const auto ctx = CycloContext::get(m);
  const auto IG = graded_ideal(invariant_generators(ctx, m, p, n, 1), D);
  const auto IW = graded_ideal(invariant_generators(ctx, m, p, n, -1), D);
  if (!same_spans(IG, IW)) {
    res.ok = false;
    res.detail = "row spaces differ";
    return res;
  }
  const auto alg = polynomial_module_algebra(ctx, n, 1);
  for (const auto& comp : IG)
    for (int i = 0; i < n; ++i) {
      Matrix moved = comp.ideal;
      for (std::size_t c = 0; c < comp.monomials.size(); ++c) {
        const CycloScalar s = alg.act(Mask(1) << i, comp.monomials[c]).second;
        for (std::size_t r = 0; r < moved.rows(); ++r) moved(r, c) = moved(r, c) * s;
      }
      Matrix stacked = comp.ideal;
      stacked.append_rows(moved);
      if (rank(stacked) != comp.pivots.size()) {
        res.ok = false;
        res.detail = "degree " + std::to_string(comp.degree) + " is not T-stable";
        return res;
      }
    }
  res.detail = "equal and T-stable";
  return res;
}

NamedResult check_twisted_coinvariant_product(int m, int p, int n, bool mutate) {
  NamedResult res{"S_W is the cocycle twist of S_G", true, ""};
  const auto ctx = CycloContext::get(m);
  const auto qG = coinvariant_quotient(ctx, reflection_group(m, p, n));
  const auto qW = coinvariant_quotient(ctx, mystic_group(m, p, n));
  if (qG.basis() != qW.basis()) {
    res.ok = false;
    res.detail = "quotient bases differ";
    return res;
  }
  const auto Finv = *cocycle_F(ctx, n).inverse();
  const auto alg = polynomial_module_algebra(ctx, n, 1);
  const int w_sign = mutate ? 1 : -1;
  std::size_t pairs = 0;
  for (const auto& a : qG.basis())
    for (const auto& b : qG.basis()) {
      SkewPoly twisted(ctx, n, -1);
      for (const auto& [k, c] : twisted_mul(alg, Finv, a, b)) twisted.add_term(k, c);
      SkewPoly skew = SkewPoly::monomial(ctx, n, w_sign, a) * SkewPoly::monomial(ctx, n, w_sign, b);
      SkewPoly lhs(ctx, n, -1);
      for (const auto& [k, c] : skew.terms()) lhs.add_term(k, c);
      ++pairs;
      if (!(qW.reduce(lhs) == qW.reduce(twisted))) {
        res.ok = false;
        res.detail = "mismatch at a pair of degree " + std::to_string(degree(a)) + " and " + std::to_string(degree(b));
        return res;
      }
    }
  res.detail = std::to_string(pairs) + " basis pairs";
  return res;
}

namespace {

// Matrix of a |>_F (or a |> when Finv is null) on the quotient basis.
Matrix twisted_action_matrix(const GradedQuotient& q, const GroupAlgebraElement& a, const TensorElement* Finv) {
  const auto& ctx = q.context();
  const int n = q.n();
  const auto alg = polynomial_module_algebra(ctx, n, 1);
  Matrix out(ctx, q.total_dim(), q.total_dim());
  const TensorElement one = TensorElement::one(ctx, n);
  const TensorElement& F = Finv ? *Finv : one;
  for (std::size_t col = 0; col < q.basis().size(); ++col) {
    SkewPoly image(ctx, n, q.sign());
    for (const auto& [k, f] : F.terms) {
      const auto left = torus_conjugate(k.first, a);
      auto [v, s] = alg.act(k.second, q.basis()[col]);
      const SkewPoly mono = SkewPoly::monomial(ctx, n, q.sign(), v);
      for (const auto& [g, c] : left.terms()) image += (f * s * c) * mono.act(g);
    }
    auto coords = q.coordinates(image);
    for (std::size_t r = 0; r < coords.size(); ++r) out(r, col) = coords[r];
  }
  return out;
}

}  // namespace

NamedResult check_trace_invariance(int m, int p, int n, int samples, unsigned seed) {
  NamedResult res{"Tr(a |>) = Tr(a |>_F) on S_G", true, ""};
  const auto ctx = CycloContext::get(m);
  const auto spec = reflection_group(m, p, n);
  const auto q = coinvariant_quotient(ctx, spec);
  const auto Finv = *cocycle_F(ctx, n).inverse();
  const auto elements = enumerate(spec);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<std::pair<std::string, GroupAlgebraElement>> tests;
  for (int k = 0; k < samples; ++k) {
    GroupAlgebraElement a(ctx);
    for (const auto& g : elements) a.add_term(g, CycloScalar(ctx, static_cast<long>(coef(rng))));
    tests.emplace_back("random element " + std::to_string(k + 1), a);
  }
  for (Mask t = 0; t < (Mask(1) << n); ++t)
    if (is_member(torus_element(m, n, t), spec))
      tests.emplace_back("torus element", GroupAlgebraElement(ctx, torus_element(m, n, t)));
  if (n >= 2) tests.emplace_back("phi(sigma_12)", phi_generators(ctx, Finv, gen_sigma(m, n, 0, 1, 0)));
  for (const auto& [name, a] : tests) {
    const auto plain = twisted_action_matrix(q, a, nullptr).trace();
    const auto twisted = twisted_action_matrix(q, a, &Finv).trace();
    if (plain != twisted) {
      res.ok = false;
      res.detail = name + ": " + plain.str() + " vs " + twisted.str();
      return res;
    }
  }
  res.detail = std::to_string(tests.size()) + " elements";
  return res;
}

NamedResult check_regular_character_lemma(int m, int p, int n) {
  NamedResult res{"chi_CG o phi = chi_CW", true, ""};
  const auto ctx = CycloContext::get(m);
  const auto G = reflection_group(m, p, n);
  const auto W = mystic_group(m, p, n);
  PhiViaJ1 phi(ctx, G);
  const MonomialMatrix id(m, n);
  const auto order_g = CycloScalar(ctx, G.order());
  const auto W_elements = enumerate(W);
  for (const auto& w : W_elements) {
    const auto lhs = order_g * phi(w).coefficient(id);
    const CycloScalar rhs(ctx, w.is_identity() ? W.order() : 0L);
    if (lhs != rhs) {
      res.ok = false;
      res.detail = "fails at " + w.token();
      return res;
    }
  }
  res.detail = std::to_string(W_elements.size()) + " elements";
  return res;
}

NamedResult check_twisted_action_lemma(int m, int p, int n, int D) {
  NamedResult res{"phi intertwines the mu(G)-action on S_-1(V) with the twisted G-action", true, ""};
  const auto ctx = CycloContext::get(m);
  const auto Finv = *cocycle_F(ctx, n).inverse();
  const auto alg = polynomial_module_algebra(ctx, n, 1);
  std::size_t checked = 0;
  for (const auto& w : enumerate(mystic_group(m, p, n))) {
    const auto a = phi_generators(ctx, Finv, w);
    for (int d = 0; d <= D; ++d)
      for (const auto& mono : monomials_of_degree(n, d)) {
        const SkewPoly lhs = SkewPoly::monomial(ctx, n, -1, mono).act(w);
        SkewPoly rhs(ctx, n, 1);
        for (const auto& [k, f] : Finv.terms) {
          auto [v, s] = alg.act(k.second, mono);
          const SkewPoly vm = SkewPoly::monomial(ctx, n, 1, v);
          const auto conj = torus_conjugate(k.first, a);
          for (const auto& [g, c] : conj.terms()) rhs += (f * s * c) * vm.act(g);
        }
        if (!sparse_equal(lhs.terms(), rhs.terms())) {
          res.ok = false;
          res.detail = "fails for " + w.token() + " in degree " + std::to_string(d);
          return res;
        }
        ++checked;
      }
  }
  res.detail = std::to_string(checked) + " element-monomial pairs";
  return res;
}

NamedResult check_hilbert_series(int m, int p, int n) {
  NamedResult res{"S_-1(V)^mu(G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) +
                      ")) has the Hilbert series of a polynomial algebra",
                  true, ""};
  const auto ctx = CycloContext::get(m);
  const auto degrees = invariant_degrees(m, p, n);
  int top = 0;
  for (int d : degrees) top += d - 1;
  const auto elements = enumerate(mystic_group(m, p, n));
  std::vector<long> free_dims(2 * top + 1, 0);
  free_dims[0] = 1;
  for (int d : degrees)
    for (int k = d; k <= 2 * top; ++k) free_dims[k] += free_dims[k - d];
  for (int d = 0; d <= 2 * top; ++d) {
    CycloScalar total(ctx, 0L);
    for (const auto& w : elements)
      for (const auto& mono : monomials_of_degree(n, d)) {
        auto [image, s] = act_monomial(ctx, -1, w, mono);
        if (image == mono) total += s;
      }
    total = total * CycloScalar(ctx, Rational(1, static_cast<long>(elements.size())));
    if (total != CycloScalar(ctx, free_dims[d])) {
      res.ok = false;
      res.detail = "degree " + std::to_string(d) + ": " + total.str() + " invariants, expected " +
                   std::to_string(free_dims[d]);
      return res;
    }
  }
  res.detail = "degrees <= " + std::to_string(2 * top);
  return res;
}

}  // namespace twistlab

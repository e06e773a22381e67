#include "twistlab/embedding.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "twistlab/group_algebra.hpp"

namespace twistlab {

namespace {

CherednikElement word_element(const CherednikAlgebra& H, const Exps& x, const MonomialMatrix& g, const Exps& y) {
  return H.basis(NormalWord{x, g, y});
}

}  // namespace

EtaPhiEmbedding::EtaPhiEmbedding(ContextPtr ctx, int m, int p, int n, const Rational& t, const Rational& c1,
                                 std::map<int, Rational> c_zeta, int target_sign)
    : ctx_(std::move(ctx)), m_(m), p_(p), n_(n) {
  if (m % 2) throw std::invalid_argument("EtaPhiEmbedding: m must be even");
  if (n < 2) throw std::invalid_argument("EtaPhiEmbedding: n must be at least 2");
  p_target_ = (m / p) % 2 == 0 ? p : p / 2;
  auto src_spec = mystic_group(m, p, n);
  auto dst_spec = reflection_group(m, p_target_, n);
  source_ = std::make_unique<CherednikAlgebra>(ctx_, src_spec,
                                               make_params(ctx_, src_spec, CherednikFlavor::braided, t, c1, c_zeta));
  std::map<int, Rational> target_zeta;
  for (int k = p_target_; k < m; k += p_target_) target_zeta[k] = (k % p == 0 && c_zeta.count(k)) ? Rational(c_zeta[k] * target_sign) : Rational(0);
  target_ = std::make_unique<CherednikAlgebra>(
      ctx_, dst_spec, make_params(ctx_, dst_spec, CherednikFlavor::rational, t, c1 * target_sign, target_zeta));
}

CherednikElement EtaPhiEmbedding::image_x(int i) const {
  return word_element(*target_, unit_exps(i), torus_prefix(m_, n_, i), Exps{});
}

CherednikElement EtaPhiEmbedding::image_y(int i) const {
  return word_element(*target_, Exps{}, torus_prefix(m_, n_, i), unit_exps(i));
}

CherednikElement EtaPhiEmbedding::image_sigma(int i) const {
  GroupAlgebraElement a(ctx_);
  const Rational half(1, 2);
  const CycloScalar h(ctx_, half);
  a.add_term(gen_s(m_, n_, i, i + 1, 0), h);
  a.add_term(gen_s(m_, n_, i, i + 1, m_ / 2), h);
  a.add_term(gen_sigma(m_, n_, i, i + 1, 0), h);
  a.add_term(gen_sigma(m_, n_, i, i + 1, 0).inverse(), -h);
  return target_->group(a);
}

CherednikElement EtaPhiEmbedding::image_group(const MonomialMatrix& g) const {
  auto [word, rest] = sigma_decomposition(g);
  CherednikElement acc = target_->one();
  for (int i : word) acc = target_->mul(acc, image_sigma(i));
  return target_->mul(acc, target_->group(rest));
}

CherednikElement EtaPhiEmbedding::image(const NormalWord& w) const {
  CherednikElement acc = target_->one();
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < w.x[i]; ++k) acc = target_->mul(acc, image_x(i));
  acc = target_->mul(acc, image_group(w.g));
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < w.y[i]; ++k) acc = target_->mul(acc, image_y(i));
  return acc;
}

CherednikElement EtaPhiEmbedding::image(const CherednikElement& e) const {
  CherednikElement r;
  for (const auto& [w, c] : e) accumulate(r, image(w), c);
  return r;
}

std::vector<NamedResult> EtaPhiEmbedding::check_relations() const {
  std::vector<NamedResult> out;
  const auto& H = *target_;
  const auto& S = *source_;
  auto record = [&](const std::string& name, const CherednikElement& residue) {
    out.push_back({name, residue.empty(), residue.empty() ? "" : H.str(residue)});
  };
  auto one = CycloScalar(ctx_, 1L);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      record("x" + std::to_string(i + 1) + "x" + std::to_string(j + 1) + " anticommute",
             H.add(H.mul(image_x(i), image_x(j)), H.mul(image_x(j), image_x(i))));
      record("y" + std::to_string(i + 1) + "y" + std::to_string(j + 1) + " anticommute",
             H.add(H.mul(image_y(i), image_y(j)), H.mul(image_y(j), image_y(i))));
    }
  for (int k = 0; k < n_; ++k)
    for (int j = 0; j < n_; ++j) {
      auto lhs = H.mul(image_y(k), image_x(j));
      auto swapped = H.scale(CycloScalar(ctx_, static_cast<long>(S.swap_sign(k, j))), H.mul(image_x(j), image_y(k)));
      CherednikElement corr;
      for (const auto& [g, c] : S.correction(k, j).terms()) accumulate(corr, image_group(g), c);
      record("y" + std::to_string(k + 1) + "x" + std::to_string(j + 1) + " commutation",
             H.sub(H.sub(lhs, swapped), corr));
    }
  const auto elements = enumerate(S.spec());
  bool gx_ok = true, mult_ok = true;
  std::string gx_detail, mult_detail;
  for (const auto& g : elements) {
    auto ig = image_group(g);
    for (int i = 0; i < n_; ++i) {
      auto [jx, ex] = g.act_on_x(i);
      auto rx = H.sub(H.mul(ig, image_x(i)), H.scale(S.zeta_power(ex), H.mul(image_x(jx), ig)));
      auto [jy, ey] = g.act_on_y(i);
      auto ry = H.sub(H.mul(ig, image_y(i)), H.scale(S.zeta_power(ey), H.mul(image_y(jy), ig)));
      if ((!rx.empty() || !ry.empty()) && gx_ok) {
        gx_ok = false;
        gx_detail = "fails for g = " + g.token() + ", i = " + std::to_string(i + 1);
      }
    }
    for (const auto& h : elements) {
      auto r = H.sub(H.mul(ig, image_group(h)), image_group(g * h));
      if (!r.empty() && mult_ok) {
        mult_ok = false;
        mult_detail = "fails for " + g.token() + " * " + h.token();
      }
    }
  }
  out.push_back({"g x = g(x) g and g y = g(y) g for all g", gx_ok, gx_detail});
  out.push_back({"group multiplication", mult_ok, mult_detail});
  (void)one;
  return out;
}

NamedResult EtaPhiEmbedding::check_bijective(int D) const {
  NamedResult res{"bijective on degree <= " + std::to_string(D), true, ""};
  if ((m_ / p_) % 2) {
    res.ok = false;
    res.detail = "m/p is odd: the map is only an embedding";
    return res;
  }
  const auto src = enumerate(source_->spec());
  const auto dst = enumerate(target_->spec());
  std::map<MonomialMatrix, std::size_t> index;
  for (std::size_t i = 0; i < dst.size(); ++i) index[dst[i]] = i;
  if (src.size() != dst.size()) {
    res.ok = false;
    res.detail = "group orders differ";
    return res;
  }
  int blocks = 0;
  for (int dx = 0; dx <= D; ++dx)
    for (int dy = 0; dx + dy <= D; ++dy)
      for (const auto& X : monomials_of_degree(n_, dx))
        for (const auto& Y : monomials_of_degree(n_, dy)) {
          Matrix block(ctx_, dst.size(), src.size());
          for (std::size_t col = 0; col < src.size(); ++col)
            for (const auto& [w, c] : image(NormalWord{X, src[col], Y})) {
              if (w.x != X || w.y != Y) {
                res.ok = false;
                res.detail = "image leaves its (X,Y) block";
                return res;
              }
              block(index.at(w.g), col) = c;
            }
          if (rank(block) != src.size()) {
            res.ok = false;
            res.detail = "rank deficiency in a block";
            return res;
          }
          ++blocks;
        }
  res.detail = std::to_string(blocks) + " blocks of size " + std::to_string(src.size());
  return res;
}

NamedResult check_psi_twist(const CherednikAlgebra& H, const TensorElement& f_twist, const TensorElement& f_conj,
                            int D) {
  NamedResult res{"Psi_{C_F} = (F|>) Psi_C (F^-1|>)", true, ""};
  const auto alg = H.module_algebra();
  const auto ctx = H.context();
  const auto twist_inv = *f_twist.inverse();
  const auto conj_inv = *f_conj.inverse();
  const int n = H.n();
  const auto group = enumerate(H.spec());
  std::map<MonomialMatrix, std::size_t> index;
  for (std::size_t i = 0; i < group.size(); ++i) index[group[i]] = i;
  const MonomialMatrix id(H.spec().m, n);

  // m_F restricted to A (x) B is block diagonal in (X, Y); cache the inverses.
  std::map<std::pair<Exps, Exps>, Matrix> inv_cache;
  auto block_inverse = [&](const Exps& X, const Exps& Y) -> const Matrix& {
    auto key = std::make_pair(X, Y);
    if (auto it = inv_cache.find(key); it != inv_cache.end()) return it->second;
    Matrix block(ctx, group.size(), group.size());
    for (std::size_t col = 0; col < group.size(); ++col)
      for (const auto& [w, c] : twisted_mul(alg, twist_inv, NormalWord{X, id, Exps{}}, NormalWord{Exps{}, group[col], Y})) {
        if (w.x != X || w.y != Y) throw std::logic_error("twisted product leaves its block");
        block(index.at(w.g), col) = c;
      }
    auto inv = inverse(block);
    if (!inv) throw std::logic_error("twisted multiplication map is singular");
    return inv_cache.emplace(key, *inv).first->second;
  };

  std::size_t pairs = 0;
  for (int da = 0; da <= D; ++da)
    for (int db = 0; db <= D; ++db)
      for (const auto& X : monomials_of_degree(n, da))
        for (const auto& Y : monomials_of_degree(n, db))
          for (const auto& g : group) {
            const NormalWord b{Exps{}, g, Y}, a{X, id, Exps{}};
            // Left side: solve m_F(z) = m_F(b (x) a) blockwise.
            auto prod = twisted_mul(alg, twist_inv, b, a);
            std::map<std::pair<Exps, Exps>, std::vector<CycloScalar>> rhs_blocks;
            for (const auto& [w, c] : prod) {
              auto& v = rhs_blocks[{w.x, w.y}];
              if (v.empty()) v.assign(group.size(), CycloScalar(ctx, 0L));
              v[index.at(w.g)] += c;
            }
            CherednikElement lhs;
            for (const auto& [key, v] : rhs_blocks) {
              const Matrix& inv = block_inverse(key.first, key.second);
              for (std::size_t r = 0; r < group.size(); ++r) {
                CycloScalar s(ctx, 0L);
                for (std::size_t c = 0; c < group.size(); ++c)
                  if (!v[c].is_zero()) s += inv(r, c) * v[c];
                accumulate(lhs, NormalWord{key.first, group[r], key.second}, s);
              }
            }
            // Right side: (F |>) Psi_C (F^{-1} |>).
            CherednikElement mid;
            for (const auto& [k, f] : conj_inv.terms) {
              auto [b2, sb] = alg.act(k.first, b);
              auto [a2, sa] = alg.act(k.second, a);
              accumulate(mid, H.mul(b2, a2), f * sb * sa);
            }
            CherednikElement rhs;
            for (const auto& [w, c] : mid)
              for (const auto& [k, f] : f_conj.terms) {
                auto [xa, sx] = alg.act(k.first, NormalWord{w.x, id, Exps{}});
                auto [gb, sg] = alg.act(k.second, NormalWord{Exps{}, w.g, w.y});
                accumulate(rhs, NormalWord{xa.x, gb.g, gb.y}, c * f * sx * sg);
              }
            ++pairs;
            if (!sparse_equal(lhs, rhs)) {
              res.ok = false;
              res.detail = "mismatch at b = " + CherednikAlgebra::word_str(b, n) +
                           ", a = " + CherednikAlgebra::word_str(a, n);
              return res;
            }
          }
  res.detail = std::to_string(pairs) + " basis pairs";
  return res;
}

GroupRep trivial_rep(const ContextPtr& ctx, const GroupSpec& spec) {
  GroupRep rep;
  for (const auto& g : enumerate(spec)) rep.matrices.emplace(g, Matrix::identity(ctx, 1));
  return rep;
}

GroupRep det_rep(const ContextPtr& ctx, const GroupSpec& spec) {
  GroupRep rep;
  for (const auto& g : enumerate(spec)) {
    Matrix a(ctx, 1, 1);
    a(0, 0) = g.det(ctx);
    rep.matrices.emplace(g, a);
  }
  return rep;
}

bool is_representation(const GroupRep& rep) {
  for (const auto& [g, a] : rep.matrices)
    for (const auto& [h, b] : rep.matrices) {
      auto it = rep.matrices.find(g * h);
      if (it == rep.matrices.end() || it->second != a * b) return false;
    }
  return true;
}

StandardModule::StandardModule(const CherednikAlgebra& H, GroupRep tau, int D) : H_(H), tau_(std::move(tau)), cap_(D) {
  for (int d = 0; d <= D; ++d)
    for (const auto& X : monomials_of_degree(H.n(), d))
      for (int v = 0; v < tau_.dim; ++v) basis_.push_back({X, v});
}

Sparse<ModuleKey> StandardModule::act(const NormalWord& u, const ModuleKey& b) const {
  Sparse<ModuleKey> out;
  const MonomialMatrix id(H_.spec().m, H_.n());
  for (const auto& [w, c] : H_.mul(u, NormalWord{b.first, id, Exps{}})) {
    if (degree(w.y) > 0 || degree(w.x) > cap_) continue;
    const Matrix& a = tau_(w.g);
    for (int r = 0; r < tau_.dim; ++r)
      if (!a(r, b.second).is_zero()) accumulate(out, ModuleKey{w.x, r}, c * a(r, b.second));
  }
  return out;
}

Sparse<ModuleKey> StandardModule::act(const CherednikElement& u, const Sparse<ModuleKey>& v) const {
  Sparse<ModuleKey> out;
  for (const auto& [w, c] : u)
    for (const auto& [k, d] : v) accumulate(out, act(w, k), c * d);
  return out;
}

namespace {

Sparse<ModuleKey> apply_matrix(const Matrix& a, const Exps& X, int col, const CycloScalar& c) {
  Sparse<ModuleKey> out;
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (!a(r, col).is_zero()) accumulate(out, ModuleKey{X, static_cast<int>(r)}, c * a(r, col));
  return out;
}

int x_sign(Mask a, const Exps& X) {
  int s = 0;
  for (int i = 0; i < kMaxRank; ++i)
    if (a >> i & 1) s += X[i];
  return s % 2 ? -1 : 1;
}

Matrix rep_of(const GroupRep& tau, const GroupAlgebraElement& a, const ContextPtr& ctx) {
  Matrix r(ctx, tau.dim, tau.dim);
  for (const auto& [g, c] : a.terms()) {
    Matrix t = tau(g);
    for (int i = 0; i < tau.dim; ++i)
      for (int j = 0; j < tau.dim; ++j) r(i, j) += c * t(i, j);
  }
  return r;
}

}  // namespace

NamedResult check_standard_module_twist(int m, int p, int n, const Rational& c1, std::map<int, Rational> c_zeta,
                                        const std::string& rep_name, int D, int c_sign) {
  NamedResult res{"standard module twist (" + rep_name + ", D = " + std::to_string(D) + ")", true, ""};
  if (m % 2 || (m / p) % 2) throw std::invalid_argument("standard module twist needs m and m/p even");
  const auto ctx = CycloContext::get(std::lcm(m, 4));
  const auto W = reflection_group(m, p, n);
  const auto muW = mystic_group(m, p, n);
  std::map<int, Rational> signed_zeta;
  for (const auto& [k, v] : c_zeta) signed_zeta[k] = v * c_sign;
  CherednikAlgebra H(ctx, W, make_params(ctx, W, CherednikFlavor::rational, 1, c1 * c_sign, signed_zeta));
  CherednikAlgebra Hb(ctx, muW, make_params(ctx, muW, CherednikFlavor::braided, 1, c1, c_zeta));

  GroupRep tau;
  if (rep_name == "trivial")
    tau = trivial_rep(ctx, W);
  else if (rep_name == "det")
    tau = det_rep(ctx, W);
  else
    throw std::invalid_argument("unknown representation: " + rep_name);

  const auto mu_elements = enumerate(muW);
  const CycloScalar minus_i = -CycloScalar::root_of_unity(ctx, ctx->conductor() / 4);
  const CycloScalar one(ctx, 1L);
  GroupRep tau_b;
  tau_b.dim = tau.dim;
  std::map<MonomialMatrix, Matrix> tau_j1;
  for (const auto& g : mu_elements) {
    tau_b.matrices.emplace(g, rep_of(tau, j_map(minus_i, g), ctx));
    tau_j1.emplace(g, rep_of(tau, j_map(one, g), ctx));
  }
  if (!is_representation(tau_b)) {
    res.ok = false;
    res.detail = "tau o J_{-i} is not a representation";
    return res;
  }

  // Intertwiner P with P tau_b(g) = tau(J_1(g)) P.
  const int d = tau.dim;
  Matrix eqs(ctx, 0, d * d);
  for (const auto& g : mu_elements) {
    Matrix block(ctx, d * d, d * d);
    const Matrix& a = tau_b(g);
    const Matrix& b = tau_j1.at(g);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          block(i * d + j, i * d + k) += a(k, j);
          block(i * d + j, k * d + j) -= b(i, k);
        }
    eqs.append_rows(block);
  }
  Matrix P(ctx, d, d);
  for (const auto& v : nullspace(eqs))
    for (int i = 0; i < d * d; ++i) P(i / d, i % d) += v[i];
  if (!inverse(P)) {
    res.ok = false;
    res.detail = "no invertible intertwiner between tau o J_{-i} and tau o J_1";
    return res;
  }

  StandardModule Mb(Hb, tau_b, D);
  StandardModule M(H, tau, D);
  const auto F = cocycle_F(ctx, n);
  const auto Finv = *F.inverse();
  const auto alg = H.module_algebra();
  const MonomialMatrix id(m, n);

  auto rep_on = [&](Mask b, const Sparse<ModuleKey>& v, bool with_x) {
    Sparse<ModuleKey> out;
    const Matrix& tb = tau(torus_element(m, n, b));
    for (const auto& [k, c] : v)
      accumulate(out, apply_matrix(tb, k.first, k.second, with_x ? c * x_sign(b, k.first) : c), one);
    return out;
  };
  auto torus_on = [&](Mask b, const Sparse<ModuleKey>& v) { return rep_on(b, v, true); };
  auto psi = [&](const Sparse<ModuleKey>& v) {
    Sparse<ModuleKey> pv;
    for (const auto& [k, c] : v) accumulate(pv, apply_matrix(P, k.first, k.second, c), one);
    Sparse<ModuleKey> out;
    for (const auto& [ab, f] : Finv.terms) {
      Sparse<ModuleKey> w = rep_on(ab.second, pv, false);
      for (const auto& [k, c] : w) accumulate(out, k, c * f * x_sign(ab.first, k.first));
    }
    return out;
  };
  auto gz = [&](const CherednikElement& a, const Sparse<ModuleKey>& v) {
    Sparse<ModuleKey> out;
    for (const auto& [w, c] : a)
      for (const auto& [ab, f] : Finv.terms) {
        auto [w2, s] = alg.act(ab.first, w);
        accumulate(out, M.act(CherednikElement{{w2, c * s * f}}, torus_on(ab.second, v)), one);
      }
    return out;
  };

  struct Generator {
    std::string name;
    CherednikElement source, image;
    bool raises;
  };
  std::vector<Generator> gens;
  for (int i = 0; i < n; ++i) {
    gens.push_back({"x" + std::to_string(i + 1), Hb.x(i), H.x(i), true});
    gens.push_back({"y" + std::to_string(i + 1), Hb.y(i), H.y(i), false});
  }
  for (const auto& g : mu_elements) gens.push_back({g.token(), Hb.group(g), H.group(phi_generators(ctx, Finv, g)), false});

  std::size_t checked = 0;
  for (const auto& gen : gens)
    for (const auto& b : Mb.basis()) {
      if (gen.raises && degree(b.first) >= D) continue;
      Sparse<ModuleKey> v{{b, one}};
      auto lhs = psi(Mb.act(gen.source, v));
      auto rhs = gz(gen.image, psi(v));
      ++checked;
      if (!sparse_equal(lhs, rhs)) {
        res.ok = false;
        res.detail = "mismatch for " + gen.name;
        return res;
      }
    }
  res.detail = std::to_string(checked) + " generator-basis pairs";
  return res;
}

}  // namespace twistlab

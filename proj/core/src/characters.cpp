#include "twistlab/characters.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "twistlab/linalg.hpp"

namespace twistlab {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ")";
  return os.str();
}

Partition dual_partition(const Partition& p) {
  Partition d;
  if (p.parts.empty()) return d;
  for (int k = 1; k <= p.parts.front(); ++k) {
    int c = 0;
    for (int part : p.parts)
      if (part >= k) ++c;
    d.parts.push_back(c);
  }
  return d;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max) {
    if (left == 0) {
      out.push_back(Partition{cur});
      return;
    }
    for (int k = std::min(left, max); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

namespace {

// Rim hook removal on beta numbers.
Integer mn_rec(std::vector<int> beta, const std::vector<int>& rho, std::size_t pos,
               std::map<std::pair<std::vector<int>, std::size_t>, Integer>& memo) {
  if (pos == rho.size()) return 1;
  auto key = std::make_pair(beta, pos);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = rho[pos];
  const std::set<int> present(beta.begin(), beta.end());
  Integer total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    if (b - r < 0 || present.count(b - r)) continue;
    int between = 0;
    for (int c : beta)
      if (c > b - r && c < b) ++between;
    auto next = beta;
    next[i] = b - r;
    std::sort(next.rbegin(), next.rend());
    Integer v = mn_rec(next, rho, pos + 1, memo);
    total += between % 2 ? Integer(-v) : v;
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

Integer sn_character(const Partition& lambda, const std::vector<int>& cycle_type) {
  if (lambda.size() != std::accumulate(cycle_type.begin(), cycle_type.end(), 0))
    throw std::invalid_argument("sn_character: size mismatch");
  const int l = static_cast<int>(lambda.parts.size());
  std::vector<int> beta;
  for (int i = 0; i < l; ++i) beta.push_back(lambda.parts[i] + l - 1 - i);
  std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo;
  return mn_rec(beta, cycle_type, 0, memo);
}

namespace {

std::vector<int> cycle_type_on(const MonomialMatrix& g, int lo, int hi) {
  std::vector<int> out;
  std::vector<bool> seen(hi, false);
  for (int i = lo; i < hi; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = g.perm(j)) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

std::vector<int> cycle_type(const MonomialMatrix& g) { return cycle_type_on(g, 0, g.n()); }

std::string Bipartition::str() const { return "(" + first.str() + "," + second.str() + ")"; }

std::vector<Bipartition> bipartitions(int n) {
  std::vector<Bipartition> out;
  for (int a = n; a >= 0; --a)
    for (const auto& l : partitions(a))
      for (const auto& m : partitions(n - a)) out.push_back({l, m});
  return out;
}

std::shared_ptr<const ClassData> ClassData::build(const ContextPtr& ctx, const GroupSpec& spec) {
  auto d = std::make_shared<ClassData>();
  d->ctx = ctx;
  d->spec = spec;
  d->elements = enumerate(spec);
  d->classes = conjugacy_classes(spec);
  for (std::size_t c = 0; c < d->classes.size(); ++c)
    for (const auto& g : d->classes[c]) d->class_of[g] = c;
  return d;
}

ClassFunction::ClassFunction(std::shared_ptr<const ClassData> data, std::vector<CycloScalar> values)
    : data_(std::move(data)), values_(std::move(values)) {
  if (values_.size() != data_->classes.size()) throw std::invalid_argument("ClassFunction: wrong number of values");
}

ClassFunction ClassFunction::from(std::shared_ptr<const ClassData> data,
                                  const std::function<CycloScalar(const MonomialMatrix&)>& f) {
  std::vector<CycloScalar> v;
  for (const auto& cls : data->classes) v.push_back(f(cls.front()));
  return ClassFunction(std::move(data), std::move(v));
}

CycloScalar ClassFunction::operator()(const GroupAlgebraElement& a) const {
  CycloScalar s(data_->ctx, 0L);
  for (const auto& [g, c] : a.terms()) s += c * (*this)(g);
  return s;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  if (a.data_->elements != b.data_->elements) return false;
  for (const auto& g : a.data_->elements)
    if (a(g) != b(g)) return false;
  return true;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  std::vector<CycloScalar> v;
  for (std::size_t i = 0; i < a.values_.size(); ++i) v.push_back(a.values_[i] * b(a.data_->classes[i].front()));
  return ClassFunction(a.data_, std::move(v));
}

CycloScalar inner_product(const ClassFunction& a, const ClassFunction& b) {
  const auto& d = a.data();
  CycloScalar s(d.ctx, 0L);
  for (std::size_t c = 0; c < d.classes.size(); ++c)
    s += a.values()[c] * b(d.classes[c].front()).conj() * CycloScalar(d.ctx, static_cast<long>(d.classes[c].size()));
  return s * CycloScalar(d.ctx, Rational(1, static_cast<long>(d.elements.size())));
}

ClassFunction bn_character(const std::shared_ptr<const ClassData>& data, const Bipartition& bp) {
  const int a = bp.first.size(), b = bp.second.size(), n = a + b;
  if (data->spec.m != 2 || data->spec.p != 1 || data->spec.n != n)
    throw std::invalid_argument("bn_character: group must be B_n with n = |lambda| + |mu|");
  auto psi = [&](const MonomialMatrix& h) -> Integer {
    for (int i = 0; i < a; ++i)
      if (h.perm(i) >= a) return 0;
    Integer v = a ? sn_character(bp.first, cycle_type_on(h, 0, a)) : Integer(1);
    if (b) {
      int flips = 0;
      for (int i = a; i < n; ++i) flips += h.exp(i);
      v *= sn_character(bp.second, cycle_type_on(h, a, n));
      if (flips % 2) v = -v;
    }
    return v;
  };
  Integer fact_a = 1, fact_b = 1;
  for (int i = 2; i <= a; ++i) fact_a *= i;
  for (int i = 2; i <= b; ++i) fact_b *= i;
  const Integer k_order = fact_a * fact_b * (Integer(1) << n);
  return ClassFunction::from(data, [&](const MonomialMatrix& g) {
    Integer total = 0;
    for (const auto& h : data->elements) total += psi(h * g * h.inverse());
    return CycloScalar(data->ctx, Rational(total, k_order));
  });
}

std::vector<LabeledCharacter> bn_character_table(const ContextPtr& ctx, int n) {
  auto data = ClassData::build(ctx, reflection_group(2, 1, n));
  std::vector<LabeledCharacter> out;
  for (const auto& bp : bipartitions(n)) out.push_back({bp, bn_character(data, bp)});
  return out;
}

ClassFunction eps_prime(const std::shared_ptr<const ClassData>& data) {
  return ClassFunction::from(data, [&](const MonomialMatrix& g) {
    return CycloScalar(data->ctx, (g.exp_sum() * 2 / g.m()) % 2 ? -1L : 1L);
  });
}

ClassFunction eps_det(const std::shared_ptr<const ClassData>& data) {
  return ClassFunction::from(data, [&](const MonomialMatrix& g) { return g.det(data->ctx); });
}

ClassFunction restrict_character(const ClassFunction& chi, const std::shared_ptr<const ClassData>& data) {
  return ClassFunction::from(data, [&](const MonomialMatrix& g) { return chi(g); });
}

ClassFunction pullback(const ClassFunction& chi, const AlgebraMap& J, const std::shared_ptr<const ClassData>& source) {
  return ClassFunction::from(source, [&](const MonomialMatrix& g) { return chi(J(g)); });
}

AlgebraMap j_map_of(const CycloScalar& c) {
  return [c](const MonomialMatrix& g) { return j_map(c, g); };
}

namespace {

ContextPtr gaussian() { return CycloContext::get(4); }

CycloScalar minus_i() { return -CycloScalar::root_of_unity(gaussian(), 1); }

const LabeledCharacter& find_label(const std::vector<LabeledCharacter>& table, const Bipartition& bp) {
  for (const auto& lc : table)
    if (lc.label == bp) return lc;
  throw std::logic_error("missing label " + bp.str());
}

}  // namespace

NamedResult verify_b_twist(int n) {
  NamedResult res{"B_" + std::to_string(n) + ": chi_(l,m) o J_1 = chi_(l,m*)", true, ""};
  const auto table = bn_character_table(gaussian(), n);
  const auto data = table.front().chi.data_ptr();
  const auto J1 = j_map_of(CycloScalar(gaussian(), 1L));
  for (const auto& lc : table) {
    const Bipartition target{lc.label.first, dual_partition(lc.label.second)};
    if (!(pullback(lc.chi, J1, data) == find_label(table, target).chi)) {
      res.ok = false;
      res.detail = "fails for " + lc.label.str();
      return res;
    }
  }
  res.detail = std::to_string(table.size()) + " characters";
  return res;
}

NamedResult verify_j1_equals_jminusi(int n) {
  NamedResult res{"B_" + std::to_string(n) + ": chi o J_1 = chi o J_-i", true, ""};
  const auto table = bn_character_table(gaussian(), n);
  const auto data = table.front().chi.data_ptr();
  const auto J1 = j_map_of(CycloScalar(gaussian(), 1L));
  const auto Ji = j_map_of(minus_i());
  for (const auto& lc : table)
    for (const auto& g : data->elements)
      if (lc.chi(J1(g)) != lc.chi(Ji(g))) {
        res.ok = false;
        res.detail = "fails for " + lc.label.str() + " at " + g.token();
        return res;
      }
  res.detail = std::to_string(table.size()) + " characters, elementwise";
  return res;
}

NamedResult verify_d_bijection(int n) {
  NamedResult res{"D_" + std::to_string(n) + " -> mu(D_" + std::to_string(n) + "): chi_(l,m) o J_-i = chi_(l,m*)",
                  true, ""};
  const auto ctx = gaussian();
  const auto table = bn_character_table(ctx, n);
  const auto d = ClassData::build(ctx, reflection_group(2, 2, n));
  const auto md = ClassData::build(ctx, mystic_group(2, 2, n));
  const auto Ji = j_map_of(minus_i());
  const CycloScalar one(ctx, 1L), two(ctx, 2L);
  std::vector<ClassFunction> sources, targets;
  int checked = 0, split = 0;
  for (const auto& lc : table) {
    const auto chi_d = restrict_character(lc.chi, d);
    if (lc.label.first == lc.label.second) {
      ++split;
      if (inner_product(chi_d, chi_d) != two) {
        res.ok = false;
        res.detail = "split label " + lc.label.str() + " does not have norm 2 on D_n";
        return res;
      }
      continue;
    }
    const Bipartition target{lc.label.first, dual_partition(lc.label.second)};
    const auto chi_md = restrict_character(find_label(table, target).chi, md);
    const auto pulled = pullback(chi_d, Ji, md);
    if (inner_product(chi_d, chi_d) != one || inner_product(chi_md, chi_md) != one || !(pulled == chi_md)) {
      res.ok = false;
      res.detail = "fails for " + lc.label.str();
      return res;
    }
    ++checked;
    if (std::none_of(sources.begin(), sources.end(), [&](const ClassFunction& f) { return f == chi_d; })) {
      sources.push_back(chi_d);
      targets.push_back(chi_md);
    }
  }
  for (std::size_t i = 0; i < targets.size(); ++i)
    for (std::size_t j = i + 1; j < targets.size(); ++j)
      if (targets[i] == targets[j]) {
        res.ok = false;
        res.detail = "two characters of D_n map to the same character";
        return res;
      }
  for (const auto& lc : table)
    if (lc.label.first == dual_partition(lc.label.second)) {
      const auto chi_md = restrict_character(lc.chi, md);
      if (inner_product(chi_md, chi_md) != two) {
        res.ok = false;
        res.detail = "split label " + lc.label.str() + " does not have norm 2 on mu(D_n)";
        return res;
      }
    }
  res.detail = std::to_string(checked) + " labels, " + std::to_string(sources.size()) + " distinct characters, " +
               std::to_string(split) + " split labels";
  return res;
}

NamedResult verify_epsilon_labeling(int n) {
  NamedResult res{"B_" + std::to_string(n) + ": det (x) chi_(l,m) = chi_(m*,l*)", true, ""};
  const auto table = bn_character_table(gaussian(), n);
  const auto eps = eps_det(table.front().chi.data_ptr());
  for (const auto& lc : table) {
    const Bipartition target{dual_partition(lc.label.second), dual_partition(lc.label.first)};
    if (!(eps * lc.chi == find_label(table, target).chi)) {
      res.ok = false;
      res.detail = "fails for " + lc.label.str();
      return res;
    }
  }
  res.detail = std::to_string(table.size()) + " characters";
  return res;
}

NamedResult verify_eps_prime_twist(int n) {
  NamedResult res{"B_" + std::to_string(n) + ": eps' o J_1 = eps", true, ""};
  const auto data = ClassData::build(gaussian(), reflection_group(2, 1, n));
  const auto J1 = j_map_of(CycloScalar(gaussian(), 1L));
  const auto ep = eps_prime(data);
  const auto e = eps_det(data);
  for (const auto& g : data->elements)
    if (ep(J1(g)) != e(g)) {
      res.ok = false;
      res.detail = "fails at " + g.token();
      return res;
    }
  res.detail = std::to_string(data->elements.size()) + " elements";
  return res;
}

std::optional<GroupAlgebraElement> find_inner_witness(const AlgebraMap& J, const ContextPtr& ctx,
                                                      const GroupSpec& spec) {
  const auto elements = enumerate(spec);
  const std::size_t N = elements.size();
  std::map<MonomialMatrix, std::size_t> index;
  for (std::size_t i = 0; i < N; ++i) index[elements[i]] = i;
  Matrix eqs(ctx, 0, N);
  for (const auto& g : generating_set(spec)) {
    Matrix block(ctx, N, N);
    const auto jg = J(g);
    for (std::size_t h = 0; h < N; ++h) {
      for (const auto& [u, c] : jg.terms()) block(index.at(u * elements[h]), h) += c;
      block(index.at(elements[h] * g), h) -= CycloScalar(ctx, 1L);
    }
    eqs.append_rows(block);
  }
  const auto kernel = nullspace(eqs);
  if (kernel.empty()) return std::nullopt;
  auto to_element = [&](const std::vector<CycloScalar>& v) {
    GroupAlgebraElement x(ctx);
    for (std::size_t i = 0; i < N; ++i) x.add_term(elements[i], v[i]);
    return x;
  };
  auto invertible = [&](const GroupAlgebraElement& x) {
    Matrix left(ctx, N, N);
    for (std::size_t h = 0; h < N; ++h)
      for (const auto& [u, c] : x.terms()) left(index.at(u * elements[h]), h) += c;
    return rank(left) == N;
  };
  std::vector<std::vector<CycloScalar>> candidates = kernel;
  for (long k = 1; k <= 4; ++k) {
    std::vector<CycloScalar> v(N, CycloScalar(ctx, 0L));
    long w = 1;
    for (const auto& b : kernel) {
      for (std::size_t i = 0; i < N; ++i) v[i] += CycloScalar(ctx, w) * b[i];
      w *= k + 1;
    }
    candidates.push_back(v);
  }
  for (const auto& v : candidates) {
    auto x = to_element(v);
    if (invertible(x)) return x;
  }
  return std::nullopt;
}

}  // namespace twistlab

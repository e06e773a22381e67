#include "twistlab/monomial_group.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

namespace twistlab {

namespace {

int mod(long a, int m) { return static_cast<int>(((a % m) + m) % m); }

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

MonomialMatrix::MonomialMatrix(int m, int n) : m_(m), n_(n) {
  if (m < 1 || m > 255) throw std::invalid_argument("MonomialMatrix: modulus out of range");
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("MonomialMatrix: rank out of range");
  for (int i = 0; i < n; ++i) perm_[i] = i;
}

MonomialMatrix::MonomialMatrix(int m, const std::vector<int>& perm, const std::vector<int>& exps)
    : MonomialMatrix(m, static_cast<int>(perm.size())) {
  if (exps.size() != perm.size()) throw std::invalid_argument("MonomialMatrix: size mismatch");
  std::vector<bool> seen(n_, false);
  for (int i = 0; i < n_; ++i) {
    if (perm[i] < 0 || perm[i] >= n_ || seen[perm[i]])
      throw std::invalid_argument("MonomialMatrix: not a permutation");
    seen[perm[i]] = true;
    perm_[i] = perm[i];
    exps_[i] = mod(exps[i], m);
  }
}

bool MonomialMatrix::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (perm_[i] != i || exps_[i] != 0) return false;
  return true;
}

bool MonomialMatrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    if (perm_[i] != i) return false;
  return true;
}

int MonomialMatrix::exp_sum() const {
  int s = 0;
  for (int i = 0; i < n_; ++i) s += exps_[i];
  return s % m_;
}

int MonomialMatrix::perm_sign() const {
  int inversions = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (perm_[i] > perm_[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

CycloScalar MonomialMatrix::det(const ContextPtr& ctx) const {
  if (ctx->conductor() % m_) throw ContextMismatch("det: conductor not a multiple of the group modulus");
  const int scale = ctx->conductor() / m_;
  CycloScalar d = CycloScalar::root_of_unity(ctx, static_cast<long>(exp_sum()) * scale);
  return perm_sign() < 0 ? -d : d;
}

std::vector<std::vector<CycloScalar>> MonomialMatrix::to_matrix(const ContextPtr& ctx) const {
  const int scale = ctx->conductor() / m_;
  std::vector<std::vector<CycloScalar>> a(n_, std::vector<CycloScalar>(n_, CycloScalar(ctx, 0L)));
  for (int i = 0; i < n_; ++i) a[perm_[i]][i] = CycloScalar::root_of_unity(ctx, exps_[i] * scale);
  return a;
}

std::string MonomialMatrix::token() const {
  if (is_identity()) return "1";
  std::vector<int> moved;
  for (int i = 0; i < n_; ++i)
    if (perm_[i] != i) moved.push_back(i);
  if (moved.empty()) {
    int nonzero = -1, count = 0;
    for (int i = 0; i < n_; ++i)
      if (exps_[i]) nonzero = i, ++count;
    if (count == 1) return "t(" + std::to_string(nonzero + 1) + ";" + std::to_string(exps_[nonzero]) + ")";
  }
  bool others_fixed = true;
  for (int k = 0; k < n_; ++k)
    if (perm_[k] == k && exps_[k]) others_fixed = false;
  if (moved.size() == 2 && others_fixed) {
    int i = moved[0], j = moved[1];
    int e = mod(-exps_[i], m_);
    auto tail = std::to_string(i + 1) + "," + std::to_string(j + 1) + ";" + std::to_string(e) + ")";
    if (exps_[j] == e) return "s(" + tail;
    if (m_ % 2 == 0 && exps_[j] == mod(e + m_ / 2, m_)) return "sg(" + tail;
  }
  std::ostringstream os;
  os << "w(";
  for (int i = 0; i < n_; ++i) os << (i ? "," : "") << perm_[i] + 1;
  os << ";";
  for (int i = 0; i < n_; ++i) os << (i ? "," : "") << static_cast<int>(exps_[i]);
  os << ")";
  return os.str();
}

MonomialMatrix operator*(const MonomialMatrix& g, const MonomialMatrix& h) {
  if (g.n_ != h.n_ || g.m_ != h.m_) throw std::invalid_argument("MonomialMatrix: mismatched rank or modulus");
  MonomialMatrix r = g;
  for (int i = 0; i < g.n_; ++i) {
    r.perm_[i] = g.perm_[h.perm_[i]];
    r.exps_[i] = (h.exps_[i] + g.exps_[h.perm_[i]]) % g.m_;
  }
  return r;
}

MonomialMatrix compose(const MonomialMatrix& g, const MonomialMatrix& h) { return g * h; }

MonomialMatrix MonomialMatrix::inverse() const {
  MonomialMatrix r = *this;
  for (int i = 0; i < n_; ++i) {
    r.perm_[perm_[i]] = i;
    r.exps_[perm_[i]] = (m_ - exps_[i]) % m_;
  }
  return r;
}

MonomialMatrix gen_s(int m, int n, int i, int j, int e) {
  if (i == j) throw std::invalid_argument("s_ij needs i != j");
  std::vector<int> perm(n), exps(n, 0);
  std::iota(perm.begin(), perm.end(), 0);
  perm[i] = j, perm[j] = i;
  exps[i] = -e, exps[j] = e;
  return MonomialMatrix(m, perm, exps);
}

MonomialMatrix gen_t(int m, int n, int i, int e) {
  std::vector<int> perm(n), exps(n, 0);
  std::iota(perm.begin(), perm.end(), 0);
  exps[i] = e;
  return MonomialMatrix(m, perm, exps);
}

MonomialMatrix gen_sigma(int m, int n, int i, int j, int e) {
  if (i == j) throw std::invalid_argument("sigma_ij needs i != j");
  if (m % 2) throw std::invalid_argument("sigma_ij needs an even modulus");
  std::vector<int> perm(n), exps(n, 0);
  std::iota(perm.begin(), perm.end(), 0);
  perm[i] = j, perm[j] = i;
  exps[i] = -e, exps[j] = e + m / 2;
  return MonomialMatrix(m, perm, exps);
}

MonomialMatrix diagonal(int m, const std::vector<int>& exps) {
  std::vector<int> perm(exps.size());
  std::iota(perm.begin(), perm.end(), 0);
  return MonomialMatrix(m, perm, exps);
}

MonomialMatrix torus_prefix(int m, int n, int k) {
  if (m % 2) throw std::invalid_argument("torus_prefix needs an even modulus");
  std::vector<int> exps(n, 0);
  for (int j = 0; j < k; ++j) exps[j] = m / 2;
  return diagonal(m, exps);
}

MonomialMatrix parse_group_token(const std::string& text, int m, int n) {
  static const std::regex two(R"(^(s|sg)\((\d+),(\d+);(-?\d+)\)$)");
  static const std::regex one(R"(^t\((\d+);(-?\d+)\)$)");
  static const std::regex full(R"(^w\(([\d,]+);([-\d,]+)\)$)");
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  std::smatch mt;
  if (s == "1") return MonomialMatrix(m, n);
  auto check_index = [&](int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("group token index out of range: " + text);
    return i;
  };
  if (std::regex_match(s, mt, two)) {
    int i = check_index(std::stoi(mt[2]) - 1), j = check_index(std::stoi(mt[3]) - 1);
    int e = std::stoi(mt[4]);
    return mt[1] == "s" ? gen_s(m, n, i, j, e) : gen_sigma(m, n, i, j, e);
  }
  if (std::regex_match(s, mt, one)) return gen_t(m, n, check_index(std::stoi(mt[1]) - 1), std::stoi(mt[2]));
  if (std::regex_match(s, mt, full)) {
    auto perm = parse_int_list(mt[1]);
    auto exps = parse_int_list(mt[2]);
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("group token has wrong rank: " + text);
    for (auto& p : perm) p -= 1;
    return MonomialMatrix(m, perm, exps);
  }
  throw std::invalid_argument("malformed group token: " + text);
}

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::reflection: return "reflection";
    case Flavor::mystic: return "mystic";
    case Flavor::torus: return "torus";
    case Flavor::full_monomial: return "full-monomial";
    case Flavor::symmetric: return "symmetric";
  }
  return "?";
}

void GroupSpec::validate() const {
  if (m < 1 || p < 1 || m % p) throw std::invalid_argument("GroupSpec: need p | m");
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("GroupSpec: rank out of range");
  if (flavor == Flavor::mystic && m % 2) throw std::invalid_argument("GroupSpec: mu(G(m,p,n)) needs m even");
}

long GroupSpec::order() const {
  long fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  long mn = 1;
  for (int k = 0; k < n; ++k) mn *= m;
  switch (flavor) {
    case Flavor::reflection:
    case Flavor::mystic: return mn * fact / p;
    case Flavor::torus: return mn / p;
    case Flavor::full_monomial: return mn * fact;
    case Flavor::symmetric: return fact;
  }
  return 0;
}

std::string GroupSpec::name() const {
  auto base = "G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
  switch (flavor) {
    case Flavor::reflection: return base;
    case Flavor::mystic: return "mu(" + base + ")";
    case Flavor::torus: return "T(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
    case Flavor::full_monomial: return "Mon(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Flavor::symmetric: return "S(" + std::to_string(n) + ")";
  }
  return base;
}

GroupSpec reflection_group(int m, int p, int n) {
  GroupSpec s{m, p, n, Flavor::reflection};
  s.validate();
  return s;
}

GroupSpec mystic_group(int m, int p, int n) {
  GroupSpec s{m, p, n, Flavor::mystic};
  s.validate();
  return s;
}

bool is_member(const MonomialMatrix& g, const GroupSpec& spec) {
  if (g.n() != spec.n || g.m() != spec.m) return false;
  switch (spec.flavor) {
    case Flavor::reflection: return g.exp_sum() % spec.p == 0;
    case Flavor::torus: return g.is_diagonal() && g.exp_sum() % spec.p == 0;
    case Flavor::full_monomial: return true;
    case Flavor::symmetric: return g.exp_vector() == std::vector<int>(spec.n, 0);
    case Flavor::mystic: {
      // det(g)^{m/p} = 1, decided exactly in Q(zeta_{2m}) so that the sign
      // of the permutation is also a root of unity there.
      auto ctx = CycloContext::get(spec.m % 2 ? 2 * spec.m : spec.m);
      return g.det(ctx).pow(spec.m / spec.p).is_one();
    }
  }
  return false;
}

std::vector<MonomialMatrix> enumerate(const GroupSpec& spec, long cap) {
  spec.validate();
  if (spec.order() > cap)
    throw CapExceeded(spec.name() + " has order " + std::to_string(spec.order()) + ", above the cap " +
                      std::to_string(cap));
  std::vector<MonomialMatrix> out;
  std::vector<int> perm(spec.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> exps(spec.n, 0);
    while (true) {
      MonomialMatrix g(spec.m, perm, exps);
      if (is_member(g, spec)) out.push_back(g);
      int k = spec.n - 1;
      while (k >= 0 && ++exps[k] == spec.m) exps[k--] = 0;
      if (k < 0) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  auto id = std::find_if(out.begin(), out.end(), [](const MonomialMatrix& g) { return g.is_identity(); });
  std::rotate(out.begin(), id, id + 1);
  return out;
}

namespace {

std::set<MonomialMatrix> closure(const std::vector<MonomialMatrix>& gens, int m, int n) {
  std::set<MonomialMatrix> seen{MonomialMatrix(m, n)};
  std::vector<MonomialMatrix> frontier{MonomialMatrix(m, n)};
  while (!frontier.empty()) {
    std::vector<MonomialMatrix> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        auto b = g * a;
        if (seen.insert(b).second) next.push_back(b);
      }
    frontier.swap(next);
  }
  return seen;
}

}  // namespace

std::vector<MonomialMatrix> generating_set(const GroupSpec& spec) {
  std::vector<MonomialMatrix> candidates;
  const int m = spec.m, n = spec.n;
  for (int i = 0; i + 1 < n; ++i) {
    if (m % 2 == 0) candidates.push_back(gen_sigma(m, n, i, i + 1, 0));
    candidates.push_back(gen_s(m, n, i, i + 1, 0));
  }
  for (int e = 1; e < m && n >= 2; ++e) {
    candidates.push_back(gen_s(m, n, 0, 1, e));
    if (m % 2 == 0) candidates.push_back(gen_sigma(m, n, 0, 1, e));
  }
  for (int e = 1; e < m; ++e) candidates.push_back(gen_t(m, n, 0, e));
  auto all = enumerate(spec);
  candidates.insert(candidates.end(), all.begin(), all.end());
  std::vector<MonomialMatrix> gens;
  std::set<MonomialMatrix> reached{MonomialMatrix(m, n)};
  const std::size_t order = all.size();
  for (const auto& c : candidates) {
    if (reached.size() == order) break;
    if (!is_member(c, spec) || reached.count(c)) continue;
    gens.push_back(c);
    reached = closure(gens, m, n);
  }
  return gens;
}

std::vector<std::vector<MonomialMatrix>> conjugacy_classes(const GroupSpec& spec) {
  auto all = enumerate(spec);
  std::set<MonomialMatrix> assigned;
  std::vector<std::vector<MonomialMatrix>> classes;
  for (const auto& g : all) {
    if (assigned.count(g)) continue;
    std::set<MonomialMatrix> cls;
    for (const auto& h : all) cls.insert(h * g * h.inverse());
    assigned.insert(cls.begin(), cls.end());
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

}  // namespace twistlab

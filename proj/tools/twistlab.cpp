// twistlab: verification suite, character tables, coinvariants, centres and
// the twist maps from the command line.  Exit codes: 0 pass, 1 a check
// failed, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>
#include <iostream>
#include <numeric>

#include "twistlab/characters.hpp"
#include "twistlab/coinvariants.hpp"
#include "twistlab/element_syntax.hpp"
#include "twistlab/finite_algebra.hpp"
#include "twistlab/restricted.hpp"
#include "twistlab/twist.hpp"
#include "twistlab/verify.hpp"

using namespace twistlab;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  int m = 2, p = 1, n = 2;
  std::string c = "1";
  bool json_out = false;
  long cap_order = 10000;
  long cap_dim = 256;
  int cap_degree = 12;
};

void add_common(CLI::App* app, Common& o, bool group = true) {
  if (group) {
    app->add_option("--m", o.m, "modulus m")->capture_default_str();
    app->add_option("--p", o.p, "p with p | m")->capture_default_str();
    app->add_option("--n", o.n, "rank n")->capture_default_str();
  }
  app->add_option("--c", o.c, "rational parameter c")->capture_default_str();
  app->add_flag("--json", o.json_out, "print JSON");
  app->add_option("--cap-order", o.cap_order, "largest group order")->capture_default_str();
  app->add_option("--cap-dim", o.cap_dim, "largest algebra dimension")->capture_default_str();
  app->add_option("--cap-degree", o.cap_degree, "largest polynomial degree")->capture_default_str();
}

Rational parse_c(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument&) {
    throw UsageError("not a rational number: " + s);
  }
}

GroupSpec checked_spec(const Common& o, bool mystic) {
  GroupSpec spec = mystic ? mystic_group(o.m, o.p, o.n) : reflection_group(o.m, o.p, o.n);
  if (spec.order() > o.cap_order)
    throw UsageError(spec.name() + " has order " + std::to_string(spec.order()) + " > cap-order");
  return spec;
}

void emit(const Common& o, const json& j, const std::string& text) {
  if (o.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// verify

int cmd_verify(const Common& o, const std::string& selector) {
  VerifyOptions v;
  v.c = parse_c(o.c);
  v.cap_order = o.cap_order;
  v.cap_dim = o.cap_dim;
  v.cap_degree = o.cap_degree;
  v.selector = selector;
  std::vector<CheckOutcome> out;
  try {
    out = run_checks(v);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.json_out) {
    std::cout << checks_to_json(out) << "\n";
  } else {
    for (const auto& c : out) {
      const char* tag = c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "SKIP";
      std::cout << tag << "  " << c.name << "  (" << c.anchor << ")\n";
      if (c.status != CheckStatus::pass) std::cout << "      " << c.details << "\n";
    }
    std::cout << (overall(out) ? "overall: pass" : "overall: FAIL") << "\n";
  }
  return overall(out) ? 0 : 1;
}

// characters

struct Table {
  std::shared_ptr<const ClassData> data;
  std::vector<std::pair<std::string, ClassFunction>> rows;
};

Table b_table(const ContextPtr& ctx, int n) {
  Table t;
  for (auto& lc : bn_character_table(ctx, n)) {
    if (!t.data) t.data = lc.chi.data_ptr();
    t.rows.push_back({lc.label.str(), lc.chi});
  }
  return t;
}

// Restrictions of chi_(l,m) to the subgroup; labels whose restriction is
// reducible are dropped, and equal restrictions are listed once.
Table restricted_table(const ContextPtr& ctx, int n, const GroupSpec& sub) {
  Table t;
  t.data = ClassData::build(ctx, sub);
  const CycloScalar one(ctx, 1L);
  for (auto& lc : bn_character_table(ctx, n)) {
    auto chi = restrict_character(lc.chi, t.data);
    if (inner_product(chi, chi) != one) continue;
    bool seen = false;
    for (auto& [label, f] : t.rows)
      if (f == chi) {
        label += " = " + lc.label.str();
        seen = true;
      }
    if (!seen) t.rows.push_back({lc.label.str(), chi});
  }
  return t;
}

json table_json(const Table& t) {
  json j;
  j["group"] = t.data->spec.name();
  j["classes"] = json::array();
  for (const auto& cls : t.data->classes) j["classes"].push_back({{"rep", cls.front().token()}, {"size", cls.size()}});
  j["characters"] = json::array();
  for (const auto& [label, chi] : t.rows) {
    json vals = json::array();
    for (const auto& v : chi.values()) vals.push_back(v.str());
    j["characters"].push_back({{"label", label}, {"values", vals}});
  }
  return j;
}

std::string table_text(const Table& t) {
  std::string s = t.data->spec.name() + ", " + std::to_string(t.data->classes.size()) + " classes:";
  for (const auto& cls : t.data->classes) s += " " + cls.front().token() + "(" + std::to_string(cls.size()) + ")";
  s += "\n";
  for (const auto& [label, chi] : t.rows) {
    s += "  " + label + ":";
    for (const auto& v : chi.values()) s += " " + v.str();
    s += "\n";
  }
  return s;
}

int cmd_characters(const Common& o, const std::string& group, const std::string& twist) {
  const auto ctx = CycloContext::get(4);
  if (o.n < 1 || o.n > 6) throw UsageError("characters: n must be in 1..6");
  if (group != "B" && group != "D" && group != "muD") throw UsageError("unsupported group: " + group);
  if (twist != "none" && twist != "j1" && twist != "jminusi") throw UsageError("unknown twist: " + twist);
  if (group == "muD" && twist != "none") throw UsageError("characters: twists start from B_n or D_n");
  Common caps = o;
  caps.m = 2;
  caps.p = group == "B" ? 1 : 2;
  Table t;
  if (group == "B") {
    checked_spec(caps, false);
    t = b_table(ctx, o.n);
  } else {
    t = restricted_table(ctx, o.n, checked_spec(caps, group == "muD"));
  }
  json j = table_json(t);
  std::string text = table_text(t);
  if (twist != "none") {
    const auto J = j_map_of(twist == "j1" ? CycloScalar(ctx, 1L) : -CycloScalar::root_of_unity(ctx, 1));
    Table target = group == "B" ? t : restricted_table(ctx, o.n, mystic_group(2, 2, o.n));
    j["twist"] = twist;
    j["target"] = target.data->spec.name();
    j["map"] = json::array();
    text += "pullback along " + twist + " to " + target.data->spec.name() + ":\n";
    for (const auto& [label, chi] : t.rows) {
      auto pulled = pullback(chi, J, target.data);
      std::string image = "(not irreducible)";
      for (const auto& [l2, f] : target.rows)
        if (f == pulled) image = l2;
      j["map"].push_back({{"from", label}, {"to", image}});
      text += "  " + label + " -> " + image + "\n";
    }
  }
  emit(o, j, text);
  return 0;
}

// coinvariants

int cmd_coinvariants(const Common& o, bool mystic) {
  const auto spec = checked_spec(o, mystic);
  const auto ctx = CycloContext::get(spec.m);
  const auto q = coinvariant_quotient(ctx, spec);
  if (static_cast<int>(q.graded_dims().size()) - 1 > o.cap_degree) throw UsageError("top degree exceeds cap-degree");
  const auto data = ClassData::build(ctx, spec);
  const auto chi = coinvariant_character(q, data);
  json j;
  j["group"] = spec.name();
  j["graded_dims"] = q.graded_dims();
  j["total_dim"] = q.total_dim();
  j["character"] = json::array();
  std::string text = spec.name() + "\n  graded dims:";
  for (int d : q.graded_dims()) text += " " + std::to_string(d);
  text += "\n  total: " + std::to_string(q.total_dim()) + "\n  character:";
  for (const auto& cls : data->classes) {
    j["character"].push_back({{"class", cls.front().token()}, {"value", chi(cls.front()).str()}});
    text += " " + cls.front().token() + "->" + chi(cls.front()).str();
  }
  text += "\n";
  emit(o, j, text);
  return 0;
}

// center

int cmd_center(const Common& o, const std::string& algebra) {
  if (algebra != "restricted" && algebra != "braided") throw UsageError("unknown algebra: " + algebra);
  const bool braided = algebra == "braided";
  const auto spec = checked_spec(o, braided);
  const Rational c = parse_c(o.c);
  const auto ctx = CycloContext::get(spec.m);
  std::map<int, Rational> cz;
  for (int k = spec.p; k < spec.m; k += spec.p) cz[k] = 2 * c;
  const auto params =
      make_params(ctx, spec, braided ? CherednikFlavor::braided : CherednikFlavor::rational, 0, c, cz);
  // dim = |G| * (coinvariant dim)^2 = |G|^3 for these groups.
  const long expected_dim = spec.order() * spec.order() * spec.order();
  if (expected_dim > o.cap_dim)
    throw UsageError("restricted algebra of dimension " + std::to_string(expected_dim) + " exceeds cap-dim");
  RestrictedAlgebra R(ctx, spec, params);
  const auto& A = R.algebra();
  const auto Z = center(A, R.generators());
  json j;
  j["algebra"] = std::string(braided ? "braided restricted H_c(" : "restricted H_c(") + spec.name() + ")";
  j["c"] = c.get_str();
  j["dim"] = A.dim();
  j["center_dim"] = Z.size();
  j["center"] = json::array();
  std::string text = j["algebra"].get<std::string>() + ", dim " + std::to_string(A.dim()) + ", centre dim " +
                     std::to_string(Z.size()) + "\n";
  for (const auto& z : Z) {
    const auto mp = polynomial_str(minimal_polynomial(A, z));
    j["center"].push_back({{"element", R.str(z)}, {"minimal_polynomial", mp}});
    text += "  " + R.str(z) + "\n      minpoly " + mp + "\n";
  }
  const auto split = split_idempotents(A, Z);
  j["rational_idempotents"] = split.idempotents.size();
  j["idempotents_complete"] = split.complete;
  text += "  rational primitive idempotents: " + std::to_string(split.idempotents.size()) +
          (split.complete ? "" : " (incomplete)") + "\n";
  if (braided && spec == mystic_group(2, 2, 2)) {
    const Vec gamma = R.parse(gamma_fixture_text(), {{"c", CycloScalar(ctx, c)}});
    const auto mp = polynomial_str(minimal_polynomial(A, gamma));
    j["gamma"] = {{"central", A.commutes_with_basis(gamma)}, {"minimal_polynomial", mp}};
    text += "  gamma: " + std::string(A.commutes_with_basis(gamma) ? "central" : "not central") + ", minpoly " +
            mp + "\n";
  }
  emit(o, j, text);
  return 0;
}

// twist

json terms_json(const GroupAlgebraElement& a) {
  json t = json::array();
  for (const auto& [g, c] : a.terms()) t.push_back({g.token(), c.str()});
  return t;
}

CycloScalar parse_scalar(const ContextPtr& ctx, int m, int n, const std::string& text) {
  auto a = parse_group_element(ctx, m, n, text);
  for (const auto& [g, c] : a.terms())
    if (!g.is_identity()) throw UsageError("not a scalar: " + text);
  return a.coefficient(diagonal(m, std::vector<int>(n, 0)));
}

int cmd_twist(const Common& o, const std::string& map, const std::string& element, const std::string& scalar) {
  if (o.m % 2) throw UsageError("twist: m must be even");
  const int conductor = std::lcm(o.m, 4);
  const auto ctx = CycloContext::get(conductor);
  const auto Finv = *cocycle_F(ctx, o.n).inverse();
  json j;
  j["map"] = map;
  j["input"] = element;
  std::string out;
  const bool has_xy = element.find('x') != std::string::npos || element.find('y') != std::string::npos;
  if (has_xy) {
    if (map != "eta") throw UsageError("twist: only eta accepts x and y letters");
    const auto spec = checked_spec(o, false);
    const Rational c = parse_c(o.c);
    std::map<int, Rational> cz;
    for (int k = spec.p; k < spec.m; k += spec.p) cz[k] = c;
    CherednikAlgebra H(ctx, spec, make_params(ctx, spec, CherednikFlavor::rational, 1, c, cz));
    const auto alg = H.module_algebra();
    TorusEmbedding<NormalWord> u = [&](Mask a) { return H.group(torus_element(o.m, o.n, a)); };
    const auto image = eta(alg, u, Finv, parse_element(H, element));
    out = H.str(image);
    j["output"] = out;
    j["terms"] = json::parse(element_to_json(image, o.n));
  } else {
    const auto a = parse_group_element(ctx, o.m, o.n, element);
    GroupAlgebraElement image(ctx);
    if (map == "j1" || map == "jminusi" || map == "jc") {
      CycloScalar c(ctx, 1L);
      if (map == "jminusi") c = -CycloScalar::root_of_unity(ctx, conductor / 4);
      if (map == "jc") {
        if (scalar.empty()) throw UsageError("twist --map jc needs --scalar");
        c = parse_scalar(ctx, o.m, o.n, scalar);
        if (c.is_zero()) throw UsageError("J_c needs c != 0");
      }
      image = j_map(c, a);
    } else if (map == "eta") {
      image = eta(Finv, a);
    } else if (map == "etaphi") {
      for (const auto& [w, coeff] : a.terms()) image += coeff * eta(Finv, phi_generators(ctx, Finv, w));
    } else {
      throw UsageError("unknown map: " + map);
    }
    out = image.str();
    j["output"] = out;
    j["terms"] = terms_json(image);
  }
  emit(o, j, map + "(" + element + ") = " + out + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twistlab: cocycle twists of rational Cherednik algebras and complex reflection groups"};
  app.require_subcommand(1);

  Common o;
  std::string selector = "all", group = "B", twist = "none", algebra = "restricted", map = "j1", element, scalar;
  bool mystic = false;

  auto* verify = app.add_subcommand("verify", "run registered checks");
  verify->add_option("selector", selector, "\"all\" or a check name")->capture_default_str();
  add_common(verify, o, false);

  auto* characters = app.add_subcommand("characters", "character tables of B_n, D_n, mu(D_n) and their twists");
  characters->add_option("--group", group, "B, D or muD")->capture_default_str();
  characters->add_option("--twist", twist, "none, j1 or jminusi")->capture_default_str();
  add_common(characters, o);

  auto* coinv = app.add_subcommand("coinvariants", "graded coinvariant algebra and its character");
  coinv->add_flag("--mystic", mystic, "use mu(G(m,p,n)) and the skew polynomial ring");
  add_common(coinv, o);

  auto* centre = app.add_subcommand("center", "centre of a restricted Cherednik algebra");
  centre->add_option("--algebra", algebra, "restricted or braided")->capture_default_str();
  add_common(centre, o);

  auto* tw = app.add_subcommand("twist", "apply J_c, eta or eta phi to an element");
  tw->add_option("--map", map, "j1, jminusi, jc, eta or etaphi")->capture_default_str();
  tw->add_option("--element", element, "element in plain-text syntax")->required();
  tw->add_option("--scalar", scalar, "c for --map jc, e.g. 1/2*i");
  add_common(tw, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(o, selector);
    if (*characters) return cmd_characters(o, group, twist);
    if (*coinv) return cmd_coinvariants(o, mystic);
    if (*centre) return cmd_center(o, algebra);
    if (*tw) return cmd_twist(o, map, element, scalar);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

#pragma once

// Checks that tie the twist machinery to concrete group algebras, and the
// registry of named checks behind `twistlab verify`.

#include <functional>
#include <string>
#include <vector>

#include "twistlab/rational.hpp"
#include "twistlab/report.hpp"

namespace twistlab {

/// check_cocycle(F) for every rank 1..max_n, F*F = 1(x)1 and U^2 = 1.
NamedResult check_cocycle_ranks(int max_n);

/// The Kulish-Mudrov map A_F # kT -> A # kT for A = CG(m,p,n) is
/// multiplicative on all pairs of smash basis elements and bijective.
NamedResult check_smash_isomorphism(int m, int p, int n);

/// T acts on CG(m,p,n) adjointly through t -> t, and eta(a * b) = eta(a) eta(b)
/// for the twisted product on all pairs of group elements.
NamedResult check_eta_multiplicative(int m, int p, int n);

/// eta(x_k) = x_k t_{k-1}...t_1 in H_c(G(2,1,n)), eta(t) = t and
/// eta(sbar_k) = (s_k + sbar_k + sigma_k - sigma_k^{-1})/2 in CG(2,1,n).
std::vector<NamedResult> check_eta_images(int n, const Rational& c);

/// phi = eta^{-1} J_1 on mu(G(m,p,n)): phi(t) = t, phi(sigma_k) = sbar_k,
/// phi multiplicative for the twisted product, and equal to the
/// generator-wise definition.
NamedResult check_phi_consistency(int m, int p, int n);

struct VerifyOptions {
  Rational c = Rational(1);
  long cap_order = 10000;
  long cap_dim = 256;
  int cap_degree = 12;
  /// "all" or the name of one registered check.
  std::string selector = "all";
};

struct CheckEntry {
  std::string name;
  /// What the check establishes, in words.
  std::string anchor;
  /// Largest group order, algebra dimension and polynomial degree touched.
  long order = 0;
  long dim = 0;
  int degree = 0;
  std::function<std::vector<NamedResult>(const VerifyOptions&)> run;
};

enum class CheckStatus { pass, fail, skipped };

struct CheckOutcome {
  std::string name;
  std::string anchor;
  CheckStatus status = CheckStatus::fail;
  std::string details;
  std::vector<NamedResult> results;
};

const std::vector<CheckEntry>& check_registry();

/// Runs the selected checks in registration order; checks beyond a cap are
/// skipped.  Throws std::invalid_argument for an unknown selector.
std::vector<CheckOutcome> run_checks(const VerifyOptions& options);

/// Conjunction over non-skipped outcomes.
bool overall(const std::vector<CheckOutcome>& outcomes);

/// {"checks": [{name, anchor, status, details, assertions}], "overall": bool}
std::string checks_to_json(const std::vector<CheckOutcome>& outcomes, int indent = 2);

}  // namespace twistlab

#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_m), realised as Q[x]/(Phi_m).
//
// Every scalar carries a shared, immutable CycloContext.  Scalars from
// different contexts never mix: arithmetic across conductors throws
// ContextMismatch.  A default-constructed scalar is an unbound zero; it takes
// on the context of whatever it is combined with, which lets sparse maps
// accumulate with operator[] and +=.

#include <complex>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "twistlab/rational.hpp"

namespace twistlab {

class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Integer polynomial, coefficients from the constant term upwards.
using IntPolynomial = std::vector<Integer>;

/// The m-th cyclotomic polynomial, monic, by dividing x^m - 1 by Phi_d for
/// every proper divisor d of m.
IntPolynomial cyclotomic_polynomial(int m);

/// Euler's totient.
int euler_phi(int m);

class CycloContext {
 public:
  /// Shared context for conductor m >= 1.  Contexts are interned, so two
  /// calls with the same m return the same object.
  static std::shared_ptr<const CycloContext> get(int m);

  int conductor() const { return m_; }
  int degree() const { return degree_; }
  const IntPolynomial& modulus() const { return modulus_; }

  /// Reduction of x^k modulo Phi_m, for 0 <= k <= 2*degree-2.
  const std::vector<Rational>& power_residue(int k) const { return powers_[k]; }
  /// Coefficients of zeta^k for 0 <= k < m.
  const std::vector<Rational>& root_coeffs(int k) const { return roots_[k]; }

  explicit CycloContext(int m);

 private:
  int m_;
  int degree_;
  IntPolynomial modulus_;
  std::vector<std::vector<Rational>> powers_;
  std::vector<std::vector<Rational>> roots_;
};

using ContextPtr = std::shared_ptr<const CycloContext>;

class CycloScalar {
 public:
  CycloScalar() = default;
  CycloScalar(ContextPtr ctx, const Rational& value);
  CycloScalar(ContextPtr ctx, long value) : CycloScalar(std::move(ctx), Rational(value)) {}
  CycloScalar(ContextPtr ctx, std::vector<Rational> coeffs);

  /// zeta_m^k in the given context (k taken modulo m).
  static CycloScalar root_of_unity(const ContextPtr& ctx, long k);

  const ContextPtr& context() const { return ctx_; }
  bool bound() const { return static_cast<bool>(ctx_); }
  /// Coefficients in the power basis 1, x, ..., x^(phi(m)-1); empty when
  /// the scalar is an unbound zero.
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in Q; then rational_value() is meaningful.
  bool is_rational() const;
  Rational rational_value() const;

  CycloScalar& operator+=(const CycloScalar& o);
  CycloScalar& operator-=(const CycloScalar& o);
  CycloScalar& operator*=(const CycloScalar& o);
  CycloScalar& operator/=(const CycloScalar& o);
  CycloScalar& operator*=(const Rational& q);

  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator/(CycloScalar a, const CycloScalar& b) { return a /= b; }
  friend CycloScalar operator*(CycloScalar a, const Rational& q) { return a *= q; }
  friend CycloScalar operator*(const Rational& q, CycloScalar a) { return a *= q; }
  CycloScalar operator-() const;

  CycloScalar inverse() const;
  CycloScalar pow(long e) const;
  /// Complex conjugation, the field automorphism zeta -> zeta^-1.
  CycloScalar conj() const;

  friend bool operator==(const CycloScalar& a, const CycloScalar& b);
  friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

  /// Human-readable form such as "1/2 - 1/2*z"; "z" denotes zeta_m ("i" when m = 4).
  std::string str() const;
  /// Approximate complex value under zeta_m -> exp(2 pi i / m).  For display only.
  std::complex<double> approx() const;

 private:
  void adopt(const CycloScalar& o);
  ContextPtr ctx_;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const CycloScalar& s);

}  // namespace twistlab

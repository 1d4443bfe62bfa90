#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zetaforge/error.hpp"

namespace zetaforge {

using Rat = mpq_class;

// Exact rational a/b in canonical form.
Rat make_rat(long num, long den = 1);

// Variable universe. The order of the Family enumerators fixes the global
// variable order used by the canonical term order and by rendering:
// p < u < X,X1,.. < x1,.. < m1,.. < t1,.. < s1,..
struct VarId {
  enum class Family : std::uint8_t {
    P = 0,     // p = q_E^{-1/2}; reserved
    U = 1,     // u = q_E^{-s}; reserved
    Aux = 2,   // X (index 0), X1, X2, ...
    Chi = 3,   // x1, x2, ... character variables
    Mu = 4,    // m1, m2, ...
    Theta = 5, // t1, t2, ...
    Xi = 6,    // s1, s2, ...
  };

  Family family;
  int index;  // P/U use 0; Aux allows 0 (bare "X"); others start at 1

  static VarId p() { return {Family::P, 0}; }
  static VarId u() { return {Family::U, 0}; }
  static VarId aux(int k) { return {Family::Aux, k}; }
  static VarId chi(int i) { return {Family::Chi, i}; }
  static VarId mu(int i) { return {Family::Mu, i}; }
  static VarId theta(int i) { return {Family::Theta, i}; }
  static VarId xi(int i) { return {Family::Xi, i}; }

  std::string name() const;

  friend bool operator==(const VarId& a, const VarId& b) {
    return a.family == b.family && a.index == b.index;
  }
  friend bool operator<(const VarId& a, const VarId& b) {
    if (a.family != b.family) return a.family < b.family;
    return a.index < b.index;
  }
};

// Exponent vector over the half-integer lattice (1/2)Z. All exponents are
// stored doubled, so every stored value is an exact integer; a variable with
// doubled exponent 0 is never stored.
class ExponentVector {
 public:
  ExponentVector() = default;

  static ExponentVector single(VarId v, std::int64_t doubled);

  std::int64_t doubled(VarId v) const;
  void set_doubled(VarId v, std::int64_t e);
  bool empty() const { return entries_.empty(); }
  std::int64_t total_doubled_degree() const;

  // Exponent-wise sum (monomial product).
  ExponentVector plus(const ExponentVector& o) const;
  // Scale all exponents by an integer (monomial power).
  ExponentVector scaled(std::int64_t k) const;

  const std::vector<std::pair<VarId, std::int64_t>>& entries() const {
    return entries_;
  }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.entries_ == b.entries_;
  }

  // <0, 0, >0 as a comes before, ties, or comes after b in the canonical
  // order: higher total degree first, then lexicographic on the fixed
  // variable order with the larger exponent first.
  static int canonical_compare(const ExponentVector& a,
                               const ExponentVector& b);

 private:
  // Sorted ascending by VarId; no zero exponents.
  std::vector<std::pair<VarId, std::int64_t>> entries_;
};

struct CanonicalTermOrder {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return ExponentVector::canonical_compare(a, b) < 0;
  }
};

// A single-monomial substitution image: coeff * product(var^exp).
struct Monomial {
  Rat coeff;
  ExponentVector exps;
};

// Sparse multivariate Laurent polynomial with exact rational coefficients.
// Terms are held in the canonical order; no zero coefficients are stored, so
// structural equality is semantic equality.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  static LaurentPolynomial zero() { return {}; }
  static LaurentPolynomial constant(const Rat& c);
  static LaurentPolynomial one() { return constant(1); }
  static LaurentPolynomial variable(VarId v, std::int64_t doubled_exp = 2);
  static LaurentPolynomial monomial(const Rat& c, const ExponentVector& e);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }

  // Leading = first in canonical order.
  const Rat& leading_coeff() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    a += b;
    return a;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    a -= b;
    return a;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) {
    *this = *this * o;
    return *this;
  }
  LaurentPolynomial scaled(const Rat& c) const;
  LaurentPolynomial pow(unsigned k) const;

  friend bool operator==(const LaurentPolynomial& a,
                         const LaurentPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  // Monomial substitution; a ring homomorphism. Variables absent from the
  // map are unchanged. Rejects zero images; throws NonIntegralPower when an
  // image would leave the half-integer lattice or require an inexact root
  // of a coefficient.
  LaurentPolynomial substitute(const std::map<VarId, Monomial>& images) const;

  // Exact evaluation. Throws MissingAssignment / DivisionByZero /
  // NonIntegralPower (half-integer exponent at a non-square value).
  Rat evaluate(const std::map<VarId, Rat>& point) const;

  // Canonical rendering: terms in canonical order joined by " + "/" - ",
  // coefficients as a/b, integer exponents as ^e, half-integers as ^{e/2}.
  std::string to_string() const;

  const std::map<ExponentVector, Rat, CanonicalTermOrder>& terms() const {
    return terms_;
  }

 private:
  void add_term(const ExponentVector& e, const Rat& c);

  std::map<ExponentVector, Rat, CanonicalTermOrder> terms_;
};

// 1 - mono, the building block of every L-factor denominator.
LaurentPolynomial one_minus(const Monomial& mono);

}  // namespace zetaforge

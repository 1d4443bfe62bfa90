#pragma once

#include "zetaforge/laurent.hpp"

namespace zetaforge {

// num/den pair of Laurent polynomials. Lazily reduced: gcd cancellation is
// never performed; equality is by cross-multiplication. The denominator's
// leading coefficient is normalized to 1.
class RationalFunction {
 public:
  RationalFunction() : num_(LaurentPolynomial::zero()), den_(LaurentPolynomial::one()) {}
  RationalFunction(LaurentPolynomial num, LaurentPolynomial den);
  explicit RationalFunction(const LaurentPolynomial& num)
      : RationalFunction(num, LaurentPolynomial::one()) {}

  static RationalFunction one() {
    return RationalFunction(LaurentPolynomial::one());
  }

  const LaurentPolynomial& num() const { return num_; }
  const LaurentPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction inverse() const;
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b) {
    return a * b.inverse();
  }
  friend RationalFunction operator*(const RationalFunction& a,
                                    const LaurentPolynomial& p) {
    return RationalFunction(a.num_ * p, a.den_);
  }

  RationalFunction substitute(const std::map<VarId, Monomial>& images) const {
    return RationalFunction(num_.substitute(images), den_.substitute(images));
  }

  Rat evaluate(const std::map<VarId, Rat>& point) const;

  // "(num)/(den)"; plain num rendering when den == 1.
  std::string to_string() const;

 private:
  LaurentPolynomial num_;
  LaurentPolynomial den_;
};

// a.num*b.den == b.num*a.den, exact.
bool rf_equals(const RationalFunction& a, const RationalFunction& b);

}  // namespace zetaforge

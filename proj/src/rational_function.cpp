#include "zetaforge/rational_function.hpp"

namespace zetaforge {

RationalFunction::RationalFunction(LaurentPolynomial num,
                                   LaurentPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw ZfError(ErrorCode::DivisionByZero, "zero denominator");
  Rat lead = den_.leading_coeff();
  if (lead != 1) {
    Rat inv = 1 / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero())
    throw ZfError(ErrorCode::DivisionByZero, "inverse of zero");
  return RationalFunction(den_, num_);
}

Rat RationalFunction::evaluate(const std::map<VarId, Rat>& point) const {
  Rat d = den_.evaluate(point);
  if (d == 0)
    throw ZfError(ErrorCode::DivisionByZero, "denominator vanishes at point");
  return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool rf_equals(const RationalFunction& a, const RationalFunction& b) {
  return a.num() * b.den() == b.num() * a.den();
}

}  // namespace zetaforge

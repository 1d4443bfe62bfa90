#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "zetaforge/laurent.hpp"
#include "zetaforge/rational_function.hpp"

using namespace zetaforge;

namespace {

LaurentPolynomial var(VarId v, std::int64_t doubled = 2) {
  return LaurentPolynomial::variable(v, doubled);
}

Monomial mono(const Rat& c, std::initializer_list<std::pair<VarId, std::int64_t>> es) {
  ExponentVector e;
  for (const auto& [v, d] : es) e.set_doubled(v, d);
  return Monomial{c, e};
}

}  // namespace

TEST_CASE("rational constructor reduces to lowest terms") {
  CHECK(make_rat(2, 4) == make_rat(1, 2));
  CHECK(make_rat(-6, -9) == make_rat(2, 3));
  CHECK(make_rat(0, 7) == 0);
}

TEST_CASE("variable names follow the fixed alphabet") {
  CHECK(VarId::p().name() == "p");
  CHECK(VarId::u().name() == "u");
  CHECK(VarId::aux(0).name() == "X");
  CHECK(VarId::aux(2).name() == "X2");
  CHECK(VarId::chi(1).name() == "x1");
  CHECK(VarId::mu(3).name() == "m3");
  CHECK(VarId::theta(1).name() == "t1");
  CHECK(VarId::xi(2).name() == "s2");
}

TEST_CASE("variable order is family-major") {
  CHECK(VarId::p() < VarId::u());
  CHECK(VarId::u() < VarId::aux(0));
  CHECK(VarId::aux(5) < VarId::chi(1));
  CHECK(VarId::chi(9) < VarId::mu(1));
  CHECK(VarId::mu(9) < VarId::theta(1));
  CHECK(VarId::theta(9) < VarId::xi(1));
}

TEST_CASE("exponent vectors drop zeros and stay sorted") {
  ExponentVector e;
  e.set_doubled(VarId::chi(2), 4);
  e.set_doubled(VarId::p(), 1);
  e.set_doubled(VarId::chi(2), 0);
  CHECK(e.doubled(VarId::chi(2)) == 0);
  CHECK(e.doubled(VarId::p()) == 1);
  CHECK(e.entries().size() == 1);
  CHECK(e.total_doubled_degree() == 1);
}

TEST_CASE("monomial product and power act on exponents") {
  const auto a = ExponentVector::single(VarId::chi(1), 2);
  const auto b = ExponentVector::single(VarId::chi(1), -2)
                     .plus(ExponentVector::single(VarId::u(), 3));
  const auto ab = a.plus(b);
  CHECK(ab.doubled(VarId::chi(1)) == 0);
  CHECK(ab.doubled(VarId::u()) == 3);
  CHECK(b.scaled(2).doubled(VarId::u()) == 6);
}

TEST_CASE("canonical order: total degree first, then variable-major") {
  const auto x1sq = ExponentVector::single(VarId::chi(1), 4);
  const auto x1 = ExponentVector::single(VarId::chi(1), 2);
  const auto x2 = ExponentVector::single(VarId::chi(2), 2);
  CHECK(ExponentVector::canonical_compare(x1sq, x1) < 0);
  CHECK(ExponentVector::canonical_compare(x1, x2) < 0);   // same degree
  CHECK(ExponentVector::canonical_compare(x1, x1) == 0);
}

TEST_CASE("like terms merge and cancel") {
  const auto x = var(VarId::chi(1));
  CHECK((x + x).term_count() == 1);
  CHECK((x + x).leading_coeff() == 2);
  CHECK((x - x).is_zero());
  CHECK((x * LaurentPolynomial::zero()).is_zero());
}

TEST_CASE("rendering is canonical") {
  CHECK(LaurentPolynomial::zero().to_string() == "0");
  CHECK(LaurentPolynomial::one().to_string() == "1");
  const auto x = var(VarId::chi(1));
  const auto omx = LaurentPolynomial::one() - x;
  CHECK(omx.to_string() == "-x1 + 1");
  CHECK((omx * omx).to_string() == "x1^2 - 2*x1 + 1");
  const auto half = LaurentPolynomial::monomial(
      make_rat(5, 3), ExponentVector::single(VarId::p(), 1)
                          .plus(ExponentVector::single(VarId::u(), 2)));
  CHECK(half.to_string() == "5/3*p^{1/2}*u");
  const auto inv = LaurentPolynomial::monomial(
      1, ExponentVector::single(VarId::chi(2), -2));
  CHECK(inv.to_string() == "x2^-1");
}

TEST_CASE("substitution is a ring homomorphism") {
  const auto x = var(VarId::chi(1));
  const auto y = var(VarId::chi(2));
  const auto f = x * x + y.scaled(make_rat(3)) - LaurentPolynomial::one();
  std::map<VarId, Monomial> images;
  images[VarId::chi(1)] = mono(make_rat(2), {{VarId::u(), 2}});
  images[VarId::chi(2)] = mono(make_rat(1, 3), {{VarId::u(), -2}});
  const auto g = f.substitute(images);
  // 4u^2 + u^-1 - 1
  std::map<VarId, Rat> point{{VarId::u(), make_rat(2)}};
  CHECK(g.evaluate(point) == make_rat(4) * 4 + make_rat(1, 2) - 1);
}

TEST_CASE("substitution tracks half-integer exponents exactly") {
  // p^{1/2} with p |-> (4/9) u^2 gives (2/3) u.
  const auto phalf =
      LaurentPolynomial::monomial(1, ExponentVector::single(VarId::p(), 1));
  std::map<VarId, Monomial> images;
  images[VarId::p()] = mono(make_rat(4, 9), {{VarId::u(), 4}});
  const auto out = phalf.substitute(images);
  CHECK(out.to_string() == "2/3*u");

  // A non-square coefficient cannot support a half power.
  images[VarId::p()] = mono(make_rat(2), {{VarId::u(), 4}});
  CHECK_THROWS_AS(phalf.substitute(images), ZfError);

  // Zero images are rejected outright.
  images[VarId::p()] = mono(0, {});
  CHECK_THROWS_AS(phalf.substitute(images), ZfError);
}

TEST_CASE("evaluation error paths") {
  const auto x = var(VarId::chi(1));
  CHECK_THROWS_AS(x.evaluate({}), ZfError);  // missing assignment
  const auto xinv = LaurentPolynomial::monomial(
      1, ExponentVector::single(VarId::chi(1), -2));
  CHECK_THROWS_AS(xinv.evaluate({{VarId::chi(1), Rat(0)}}), ZfError);
  const auto phalf =
      LaurentPolynomial::monomial(1, ExponentVector::single(VarId::p(), 1));
  CHECK_THROWS_AS(phalf.evaluate({{VarId::p(), Rat(2)}}), ZfError);
  CHECK(phalf.evaluate({{VarId::p(), make_rat(9, 4)}}) == make_rat(3, 2));
}

TEST_CASE("power expands exactly") {
  const auto x = var(VarId::chi(1));
  const auto f = LaurentPolynomial::one() + x;
  const auto f4 = f.pow(4);
  CHECK(f4.term_count() == 5);
  CHECK(f4.to_string() == "x1^4 + 4*x1^3 + 6*x1^2 + 4*x1 + 1");
  CHECK(f.pow(0).is_one());
}

TEST_CASE("one_minus builds the standard linear factor") {
  const auto f = one_minus(mono(make_rat(1), {{VarId::p(), 2}, {VarId::chi(1), 2}}));
  CHECK(f.to_string() == "-p*x1 + 1");
}

TEST_CASE("rational functions normalize and compare by cross-multiplication") {
  const auto x = var(VarId::chi(1));
  const auto y = var(VarId::chi(2));
  const auto one = LaurentPolynomial::one();

  CHECK_THROWS_AS(RationalFunction(one, LaurentPolynomial::zero()), ZfError);

  const RationalFunction r(one - x * y, (one - x).scaled(make_rat(-3)));
  CHECK(r.den().leading_coeff() == 1);

  const RationalFunction a(one - x, one - y);
  const RationalFunction b((one - x) * (one + x), (one - y) * (one + x));
  CHECK(rf_equals(a, b));
  CHECK_FALSE(rf_equals(a, b * RationalFunction(one + x)));

  CHECK_THROWS_AS(RationalFunction(LaurentPolynomial::zero(), one).inverse(),
                  ZfError);

  // Division and multiplication agree with evaluation.
  const auto q = a / b;
  std::map<VarId, Rat> point{{VarId::chi(1), make_rat(2)},
                             {VarId::chi(2), make_rat(5)}};
  CHECK(q.evaluate(point) == 1);
}

TEST_CASE("rational function rendering") {
  const auto x = var(VarId::chi(1));
  const auto one = LaurentPolynomial::one();
  CHECK(RationalFunction(one - x).to_string() == "-x1 + 1");
  const RationalFunction r(one, one - x);
  // Normalization scales the denominator to leading coefficient one.
  CHECK(r.to_string() == "(-1)/(x1 - 1)");
}

TEST_CASE("structural equality is semantic equality") {
  const auto x = var(VarId::chi(1));
  const auto y = var(VarId::chi(2));
  const auto lhs = (x + y) * (x - y);
  const auto rhs = x * x - y * y;
  CHECK(lhs == rhs);
  CHECK(lhs.to_string() == rhs.to_string());
}

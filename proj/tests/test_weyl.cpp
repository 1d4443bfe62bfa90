#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zetaforge/weyl.hpp"

using namespace zetaforge;

namespace {

ExponentVector chi_mono(std::initializer_list<std::int64_t> doubled) {
  ExponentVector e;
  int i = 1;
  for (const auto d : doubled) {
    if (d != 0) e.set_doubled(VarId::chi(i), d);
    ++i;
  }
  return e;
}

LaurentPolynomial lp(const ExponentVector& e) {
  return LaurentPolynomial::monomial(1, e);
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(enumerate_group(WeylType::A, 3).size() == 6);
  CHECK(enumerate_group(WeylType::B, 2).size() == 8);
  CHECK(enumerate_group(WeylType::B, 3).size() == 48);
  CHECK(enumerate_group(WeylType::D, 3).size() == 24);
  CHECK_THROWS_AS(enumerate_group(WeylType::B, 9), ZfError);
}

TEST_CASE("flip parity by type") {
  for (const auto& w : enumerate_group(WeylType::A, 3))
    for (int f : w.flips) CHECK(f == 1);
  for (const auto& w : enumerate_group(WeylType::D, 3)) {
    int minus = 0;
    for (int f : w.flips)
      if (f == -1) ++minus;
    CHECK(minus % 2 == 0);
  }
}

TEST_CASE("composition matches action composition") {
  const auto group = enumerate_group(WeylType::B, 2);
  const auto probe = chi_mono({2, -4});
  for (const auto& a : group)
    for (const auto& b : group) {
      CHECK(act(compose(a, b), probe) == act(a, act(b, probe)));
    }
}

TEST_CASE("sign is a homomorphism") {
  const auto group = enumerate_group(WeylType::B, 2);
  for (const auto& a : group)
    for (const auto& b : group) {
      CHECK(weyl_sign(compose(a, b), WeylType::B) ==
            weyl_sign(a, WeylType::B) * weyl_sign(b, WeylType::B));
    }
}

TEST_CASE("permutation sign counts inversions") {
  CHECK(perm_sign({0, 1, 2}) == 1);
  CHECK(perm_sign({1, 0, 2}) == -1);
  CHECK(perm_sign({2, 0, 1}) == 1);
}

TEST_CASE("action permutes and inverts character variables") {
  WeylElement w;
  w.perm = {1, 0};
  w.flips = {1, -1};
  // x1 -> x2, x2 -> x1^{-1}.
  CHECK(act(w, chi_mono({2, 0})) == chi_mono({0, 2}));
  CHECK(act(w, chi_mono({0, 2})) == chi_mono({-2, 0}));
  CHECK_THROWS_AS(act(w, ExponentVector::single(VarId::chi(3), 2)), ZfError);
  // Non-character variables ride along unchanged.
  const auto mixed = ExponentVector::single(VarId::p(), 1)
                         .plus(ExponentVector::single(VarId::chi(1), 2));
  const auto out = act(w, mixed);
  CHECK(out.doubled(VarId::p()) == 1);
  CHECK(out.doubled(VarId::chi(2)) == 2);
}

TEST_CASE("rho carries the staircase exponents") {
  const auto inert5 =
      rho_monomial(GroupContext::make(GroupKind::UnitaryInert, 5, 0, 1));
  CHECK(inert5.to_string() == "x1^-2*x2^-1");
  const auto inert6 =
      rho_monomial(GroupContext::make(GroupKind::UnitaryInert, 6, 0, 1));
  CHECK(inert6.to_string() == "x1^{-5/2}*x2^{-3/2}*x3^{-1/2}");
  const auto split2 =
      rho_monomial(GroupContext::make(GroupKind::UnitarySplit, 2, 0, 1));
  CHECK(split2.to_string() == "x1^{-1/2}*x2^{1/2}");
}

// Independent oracle: the signed-permutation alternating sum of the
// staircase monomial equals the literal product expansion. Both sides are
// assembled by hand here, away from the library's zeta builder.
TEST_CASE("rank-two signed denominator identity") {
  const auto ctx = GroupContext::make(GroupKind::UnitaryInert, 5, 0, 1);
  const auto lhs = alternating_sum(
      ctx, [](const WeylElement&) { return LaurentPolynomial::one(); });

  auto prod = lp(chi_mono({-4, -2}));
  const auto one = LaurentPolynomial::one();
  prod *= one - lp(chi_mono({2, -2}));
  prod *= one - lp(chi_mono({2, 2}));
  prod *= (one + lp(chi_mono({2, 0}))) * (one - lp(chi_mono({2, 0})));
  prod *= (one + lp(chi_mono({0, 2}))) * (one - lp(chi_mono({0, 2})));
  CHECK(lhs == prod);
}

TEST_CASE("rank-three permutation denominator identity") {
  const auto ctx = GroupContext::make(GroupKind::UnitarySplit, 3, 0, 1);
  const auto lhs = alternating_sum(
      ctx, [](const WeylElement&) { return LaurentPolynomial::one(); });

  auto prod = lp(chi_mono({-2, 0, 2}));
  const auto one = LaurentPolynomial::one();
  prod *= one - lp(chi_mono({2, -2, 0}));
  prod *= one - lp(chi_mono({2, 0, -2}));
  prod *= one - lp(chi_mono({0, 2, -2}));
  CHECK(lhs == prod);
}

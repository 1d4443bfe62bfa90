#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zetaforge/lfactors.hpp"
#include "zetaforge/satake.hpp"

using namespace zetaforge;

namespace {

LaurentPolynomial lp1m(std::initializer_list<std::pair<VarId, std::int64_t>> es) {
  ExponentVector e;
  for (const auto& [v, d] : es) e.set_doubled(v, d);
  return one_minus(Monomial{Rat(1), e});
}

const VarId P = VarId::p();
const VarId U = VarId::u();

}  // namespace

TEST_CASE("s-shifts act on u as monomial substitutions") {
  const auto up = LaurentPolynomial::variable(U);
  CHECK(up.substitute(shift_s_plus_half()).to_string() == "p*u");
  CHECK(up.substitute(shift_s_plus_one()).to_string() == "p^2*u");
  CHECK(up.substitute(shift_two_s_plus_one()).to_string() == "p^2*u^2");
  // Composition: (s+1/2) then (s+1/2) equals (s+1).
  CHECK(up.substitute(shift_s_plus_half()).substitute(shift_s_plus_half()) ==
        up.substitute(shift_s_plus_one()));
}

TEST_CASE("satake data carry the advertised variable lists") {
  const auto inert = GroupContext::make(GroupKind::UnitaryInert, 7, 1, 2);
  const auto tau = SatakeDatum::tau_of(inert);
  CHECK(tau.vars == std::vector<VarId>{VarId::chi(1), VarId::chi(2)});
  const auto sigma = SatakeDatum::sigma_of(inert);
  CHECK(sigma.vars == std::vector<VarId>{VarId::chi(3)});
  CHECK(sigma.one_slots == 1);  // dimV0
  const auto pi = SatakeDatum::pi_of(inert);
  CHECK(pi.vars == std::vector<VarId>{VarId::mu(1), VarId::mu(2)});
  CHECK(pi.one_slots == 0);  // odd m

  const auto even = GroupContext::make(GroupKind::UnitaryInert, 6, 1, 2);
  CHECK(SatakeDatum::pi_of(even).one_slots == 1);
  CHECK(SatakeDatum::sigma_of(even).one_slots == 0);

  const auto split = GroupContext::make(GroupKind::UnitarySplit, 7, 1, 2);
  const auto stau = SatakeDatum::tau_of(split);
  CHECK(stau.vars == std::vector<VarId>{VarId::theta(1), VarId::theta(2)});
  CHECK(stau.vars2 == std::vector<VarId>{VarId::xi(1), VarId::xi(2)});
  const auto ssigma = SatakeDatum::sigma_of(split);
  CHECK(ssigma.vars.size() == 3);  // x3..x5
  const auto spi = SatakeDatum::pi_of(split);
  CHECK(spi.vars.size() == 4);  // m - 2*ell - 1

  const auto orth = GroupContext::make(GroupKind::SoOdd, 7, 1, 2);
  CHECK(SatakeDatum::sigma_of(orth).one_slots == 0);
  CHECK(SatakeDatum::pi_of(orth).one_slots == 0);
}

TEST_CASE("zeta polynomial closed forms") {
  const auto inert5 = GroupContext::make(GroupKind::UnitaryInert, 5, 0, 1);
  const auto z = zeta_poly(full_slice(inert5), 0, inert5);
  auto want = lp1m({{VarId::chi(1), 2}, {VarId::chi(2), -2}});
  want *= lp1m({{VarId::chi(1), 2}, {VarId::chi(2), 2}});
  for (int i = 1; i <= 2; ++i) {
    want *= LaurentPolynomial::one() +
            LaurentPolynomial::variable(VarId::chi(i));
    want *= lp1m({{VarId::chi(i), 2}});
  }
  CHECK(z == want);

  const auto split2 = GroupContext::make(GroupKind::UnitarySplit, 2, 0, 1);
  const auto zs = zeta_poly(full_slice(split2), 1, split2);
  CHECK(zs == lp1m({{P, 4}, {VarId::chi(1), 2}, {VarId::chi(2), -2}}));

  const auto even = GroupContext::make(GroupKind::UnitaryInert, 6, 0, 1);
  const auto ze = zeta_poly(full_slice(even), 1, even);
  auto we = LaurentPolynomial::one();
  for (int i = 1; i <= 3; ++i)
    for (int r = i + 1; r <= 3; ++r) {
      we *= lp1m({{P, 4}, {VarId::chi(i), 2}, {VarId::chi(r), -2}});
      we *= lp1m({{P, 4}, {VarId::chi(i), 2}, {VarId::chi(r), 2}});
    }
  for (int i = 1; i <= 3; ++i) we *= lp1m({{P, 2}, {VarId::chi(i), 2}});
  CHECK(ze == we);
}

TEST_CASE("length-one slices degenerate to one") {
  for (GroupKind kind :
       {GroupKind::UnitaryInert, GroupKind::UnitarySplit, GroupKind::SoOdd,
        GroupKind::SoEvenSplit, GroupKind::SoEvenQuasisplit}) {
    const auto ctx = GroupContext::make_from_mtilde(kind, 1, 0, 1);
    for (int t : {0, 1, 2})
      CHECK(zeta_poly({VarId::chi(1)}, t, ctx).is_one());
  }
}

TEST_CASE("odd orthogonal zeta matches the odd inert shape") {
  const auto so = GroupContext::make(GroupKind::SoOdd, 7, 1, 1);
  const auto un = GroupContext::make(GroupKind::UnitaryInert, 7, 1, 1);
  CHECK(zeta_poly(full_slice(so), 1, so) == zeta_poly(full_slice(un), 1, un));
}

TEST_CASE("boundary factor exists only on the even inert kind") {
  const auto even = GroupContext::make(GroupKind::UnitaryInert, 6, 0, 2);
  const auto tau = SatakeDatum::tau_of(even);
  const auto present = d_factor(tau, even, SVar::Present);
  REQUIRE(present.factors.size() == 2);
  CHECK(present.to_string() ==
        "(-p*u*x1 + 1)^-1*(-p*u*x2 + 1)^-1");
  const auto absent = d_factor(tau, even, SVar::Absent);
  CHECK(absent.to_string() == "(-p*x1 + 1)^-1*(-p*x2 + 1)^-1");

  // Off the even inert kind the factor is the empty product.
  const auto odd = GroupContext::make(GroupKind::UnitaryInert, 5, 0, 1);
  CHECK(d_factor(SatakeDatum::tau_of(odd), odd, SVar::Present).factors.empty());
  const auto split = GroupContext::make(GroupKind::UnitarySplit, 6, 0, 1);
  CHECK(d_factor(SatakeDatum::tau_of(split), split, SVar::Present)
            .to_string() == "1");
}

TEST_CASE("pairing polynomial expands the four linear factors") {
  const auto ctx = GroupContext::make(GroupKind::UnitaryInert, 6, 0, 1);
  const auto q =
      Q_poly(SatakeDatum::tau_of(ctx), SatakeDatum::pi_of(ctx), ctx);
  auto want = LaurentPolynomial::one();
  for (int i2 : {1, 2})
    for (std::int64_t sgn : {2, -2})
      want *= lp1m({{P, 2}, {U, 2}, {VarId::chi(1), 2},
                    {VarId::mu(i2), sgn}});
  CHECK(q == want);
  CHECK(q.term_count() == 15);
}

TEST_CASE("support generator uses the auxiliary alphabet") {
  const auto ctx = GroupContext::make(GroupKind::UnitaryInert, 6, 0, 1);
  const auto q =
      Q_poly(SatakeDatum::tau_of(ctx), SatakeDatum::pi_of(ctx), ctx);
  const auto phi = phi0_element(SatakeDatum::tau_of(ctx), ctx);
  // Specializing X to u and X_{i'} to mu_{i'} recovers the pairing
  // polynomial.
  std::map<VarId, Monomial> images;
  images[VarId::aux(0)] = Monomial{Rat(1), ExponentVector::single(U, 2)};
  images[VarId::aux(1)] =
      Monomial{Rat(1), ExponentVector::single(VarId::mu(1), 2)};
  images[VarId::aux(2)] =
      Monomial{Rat(1), ExponentVector::single(VarId::mu(2), 2)};
  CHECK(phi.substitute(images) == q);
}

TEST_CASE("pairing identity holds in the block range") {
  for (auto [kind, m, j] : std::vector<std::tuple<GroupKind, int, int>>{
           {GroupKind::UnitaryInert, 5, 1},
           {GroupKind::UnitaryInert, 6, 2},
           {GroupKind::UnitaryInert, 7, 3},
           {GroupKind::UnitarySplit, 6, 1},
           {GroupKind::SoOdd, 7, 2}}) {
    const auto ctx = GroupContext::make(kind, m, j - 1, j);
    CHECK(verify_Q_identity(ctx, RangeMode::TauBlock));
  }
}

TEST_CASE("literal full range passes only when the block fills it") {
  const auto narrow = GroupContext::make(GroupKind::UnitaryInert, 6, 0, 1);
  CHECK_FALSE(verify_Q_identity(narrow, RangeMode::FullN));
  const auto full = GroupContext::make(GroupKind::UnitaryInert, 6, 2, 3);
  CHECK(verify_Q_identity(full, RangeMode::FullN));
}

TEST_CASE("tensor factor counts") {
  const auto ctx = GroupContext::make(GroupKind::UnitaryInert, 7, 1, 2);
  const auto tau = SatakeDatum::tau_of(ctx);
  CHECK(tensor_L(tau, SatakeDatum::pi_of(ctx), ctx).factors.size() == 8);
  CHECK(tensor_L(tau, SatakeDatum::sigma_of(ctx), ctx).factors.size() == 6);

  const auto split = GroupContext::make(GroupKind::UnitarySplit, 7, 1, 2);
  const auto stau = SatakeDatum::tau_of(split);
  // Both split components pair against the full four-element list.
  CHECK(tensor_L(stau, SatakeDatum::pi_of(split), split).factors.size() == 16);
}

TEST_CASE("twisted self-pairing shapes") {
  const auto even = GroupContext::make(GroupKind::UnitaryInert, 6, 1, 2);
  const auto fe = asai_L(SatakeDatum::tau_of(even), even, AsaiTwist::XiPowM);
  CHECK(fe.to_string() ==
        "(-u*x1*x2 + 1)^-1*(-u^{1/2}*x1 + 1)^-1*(-u^{1/2}*x2 + 1)^-1");

  // The odd-m twist flips the sign of every degree-one factor.
  const auto odd = GroupContext::make(GroupKind::UnitaryInert, 5, 1, 2);
  const auto fo = asai_L(SatakeDatum::tau_of(odd), odd, AsaiTwist::XiPowM);
  CHECK(fo.to_string() ==
        "(-u*x1*x2 + 1)^-1*(u^{1/2}*x1 + 1)^-1*(u^{1/2}*x2 + 1)^-1");
  // Untwisted, the shapes agree across parities.
  const auto fo0 = asai_L(SatakeDatum::tau_of(odd), odd, AsaiTwist::None);
  CHECK(fo0.to_string() ==
        asai_L(SatakeDatum::tau_of(even), even, AsaiTwist::None).to_string());
}

TEST_CASE("split self-pairing is the component pairing") {
  const auto split = GroupContext::make(GroupKind::UnitarySplit, 5, 0, 1);
  const auto f = asai_L(SatakeDatum::tau_of(split), split, AsaiTwist::XiPowM);
  CHECK(f.to_string() == "(-u*t1*s1 + 1)^-1");
}

TEST_CASE("square factors") {
  const auto ctx = GroupContext::make(GroupKind::SoOdd, 7, 1, 2);
  const auto tau = SatakeDatum::tau_of(ctx);
  CHECK(so_square_L(tau, SquareKind::Exterior).to_string() ==
        "(-u*x1*x2 + 1)^-1");
  CHECK(so_square_L(tau, SquareKind::Symmetric).to_string() ==
        "(-u*x1*x2 + 1)^-1*(-u*x1^2 + 1)^-1*(-u*x2^2 + 1)^-1");
}

TEST_CASE("normalized numerator against its building blocks") {
  const auto even = GroupContext::make(GroupKind::UnitaryInert, 6, 1, 2);
  const auto ps = P_star(even);
  auto want = zeta_poly(sigma_slice(even), 1, even);
  for (int i = 1; i <= 2; ++i) want *= lp1m({{P, 2}, {VarId::chi(i), 2}});
  CHECK(rf_equals(ps, RationalFunction(want)));

  // Odd m has no boundary factor: the slice polynomial itself.
  const auto odd = GroupContext::make(GroupKind::UnitaryInert, 7, 1, 2);
  CHECK(rf_equals(P_star(odd),
                  RationalFunction(zeta_poly(sigma_slice(odd), 1, odd))));
}

TEST_CASE("gl reflection ratio and its range") {
  const auto ctx = GroupContext::make(GroupKind::UnitaryInert, 7, 1, 2);
  const auto g = gamma_gl(ctx, 1);
  const auto num = lp1m({{P, 4}, {VarId::chi(1), -2}, {VarId::chi(2), 2}});
  const auto den = lp1m({{VarId::chi(1), 2}, {VarId::chi(2), -2}});
  CHECK(rf_equals(g, RationalFunction(num, den)));
  CHECK_THROWS_AS(gamma_gl(ctx, 2), ZfError);  // analytic middle range

  const auto split = GroupContext::make(GroupKind::UnitarySplit, 7, 1, 2);
  CHECK_NOTHROW(gamma_gl(split, 1));
  CHECK_NOTHROW(gamma_gl(split, 6));  // mirrored GL range
  CHECK_THROWS_AS(gamma_gl(split, 3), ZfError);
}

TEST_CASE("spherical ratio at rank two") {
  const auto split2 = GroupContext::make(GroupKind::UnitarySplit, 2, 0, 1);
  const auto c = c_function(split2);
  const auto num = lp1m({{P, 4}, {VarId::chi(1), 2}, {VarId::chi(2), -2}});
  const auto den = lp1m({{VarId::chi(1), 2}, {VarId::chi(2), -2}});
  CHECK(rf_equals(c, RationalFunction(num, den)));
}

TEST_CASE("main closed form composes the three factor families") {
  const auto ctx = GroupContext::make(GroupKind::UnitaryInert, 7, 1, 2);
  const auto f = unramified_rhs(SatakeDatum::tau_of(ctx),
                                SatakeDatum::sigma_of(ctx),
                                SatakeDatum::pi_of(ctx), ctx);
  // 8 pairing factors below, 6 + 3 above.
  CHECK(f.factors.size() == 17);
  int below = 0, above = 0;
  for (const auto& [poly, exp] : f.factors) {
    (void)poly;
    if (exp < 0)
      ++below;
    else
      ++above;
  }
  CHECK(below == 8);
  CHECK(above == 9);

  // sigma must be nonempty.
  const auto empty = GroupContext::make(GroupKind::UnitaryInert, 6, 2, 3);
  CHECK_THROWS_AS(unramified_rhs(SatakeDatum::tau_of(empty),
                                 SatakeDatum::sigma_of(empty),
                                 SatakeDatum::pi_of(empty), empty),
                  ZfError);
}

TEST_CASE("blockwise value with three blocks") {
  const auto ctx = GroupContext::make(GroupKind::UnitaryInert, 9, 2, 3);
  std::vector<SatakeDatum> blocks;
  for (int k = 0; k < 3; ++k)
    blocks.push_back(SatakeDatum::tau_block(ctx, k, 1));
  const auto sigma = SatakeDatum::sigma_of(ctx);
  const auto pi = SatakeDatum::pi_of(ctx);
  const auto whole = eulerian_rhs(blocks, sigma, pi, ctx);

  const auto single =
      unramified_rhs(blocks[0], sigma, pi, ctx).factors.size();
  // Three per-block copies plus one cross factor per unordered pair.
  CHECK(whole.factors.size() == 3 * single + 3);

  RationalFunction expected = RationalFunction::one();
  for (const auto& b : blocks)
    expected = expected * unramified_rhs(b, sigma, pi, ctx).value();
  for (std::size_t a = 0; a < blocks.size(); ++a)
    for (std::size_t b = a + 1; b < blocks.size(); ++b)
      expected = expected * gl_rankin_L(blocks[a], blocks[b],
                                        GlShift::TwoSPlusOne)
                                .value()
                                .inverse();
  CHECK(rf_equals(whole.value(), expected));
}

TEST_CASE("contragredient relabeling fixes the pairing factor") {
  // Inverting the mu-list while swapping the tau components leaves the
  // split tensor factor unchanged.
  const auto split = GroupContext::make(GroupKind::UnitarySplit, 5, 0, 1);
  const auto tau = SatakeDatum::tau_of(split);
  const auto pi = SatakeDatum::pi_of(split);
  const auto f = tensor_L(tau, pi, split);

  SatakeDatum tau_swapped = tau;
  std::swap(tau_swapped.vars, tau_swapped.vars2);
  const auto g = tensor_L(tau_swapped, pi, split);

  std::map<VarId, Monomial> invert;
  for (const auto v : pi.vars)
    invert[v] = Monomial{Rat(1), ExponentVector::single(v, -2)};
  CHECK(f.value().den() == g.value().den().substitute(invert));
}

TEST_CASE("factored rendering keeps exponents") {
  LFactorExpr e;
  e.push(lp1m({{U, 2}, {VarId::chi(1), 2}}), -2);
  e.push(lp1m({{P, 2}}), 1);
  CHECK(e.to_string() == "(-u*x1 + 1)^-2*(-p + 1)");
  CHECK(LFactorExpr{}.to_string() == "1");
  const auto v = e.value();
  CHECK(v.den().term_count() > 1);
}

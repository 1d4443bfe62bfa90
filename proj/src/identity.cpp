#include "zetaforge/identity.hpp"

#include <sstream>

#include "zetaforge/error.hpp"
#include "zetaforge/satake.hpp"
#include "zetaforge/weyl.hpp"

namespace zetaforge {

const char* identity_status_name(IdentityStatus s) {
  switch (s) {
    case IdentityStatus::Verified:
      return "verified";
    case IdentityStatus::Failed:
      return "failed";
    case IdentityStatus::ConjecturalVerified:
      return "conjectural-verified";
    case IdentityStatus::ConjecturalFailed:
      return "conjectural-failed";
  }
  return "unknown";
}

namespace {

IdentityStatus tag(const GroupContext& ctx, bool ok) {
  if (ctx.split_type())
    return ok ? IdentityStatus::ConjecturalVerified
              : IdentityStatus::ConjecturalFailed;
  return ok ? IdentityStatus::Verified : IdentityStatus::Failed;
}

void reject_even_orthogonal(const GroupContext& ctx, const char* what) {
  if (ctx.even_orthogonal())
    throw ZfError(ErrorCode::InvalidContext,
                  std::string(what) +
                      " is not defined on even-orthogonal contexts");
}

Monomial var_image(VarId v, std::int64_t doubled) {
  return Monomial{Rat(1), ExponentVector::single(v, doubled)};
}

// Simple reflection of the character variables: the transposition
// x_i <-> x_{i+1}, or the sign flip of x_k at i == k for signed types.
std::map<VarId, Monomial> reflection_images(const GroupContext& ctx, int i) {
  std::map<VarId, Monomial> images;
  const int count = ctx.char_count();
  if (!ctx.split_type() && i == count) {
    images[VarId::chi(count)] = var_image(VarId::chi(count), -2);
  } else {
    images[VarId::chi(i)] = var_image(VarId::chi(i + 1), 2);
    images[VarId::chi(i + 1)] = var_image(VarId::chi(i), 2);
  }
  return images;
}

}  // namespace

LaurentPolynomial delta_polynomial(const GroupContext& ctx) {
  return rho_monomial(ctx) * zeta_poly(full_slice(ctx), 0, ctx);
}

IdentityReport check_delta_antisymmetry(const GroupContext& ctx) {
  reject_even_orthogonal(ctx, "the antisymmetry check");
  IdentityReport report;
  report.name = "delta-antisymmetry";
  report.ctx = ctx;

  const LaurentPolynomial delta = delta_polynomial(ctx);
  const LaurentPolynomial neg = -delta;
  const WeylType type = weyl_type_of(ctx);
  const auto group = enumerate_group(type, ctx.char_count());
  bool ok = true;
  for (const auto& w : group) {
    const LaurentPolynomial lhs = act(w, delta);
    const LaurentPolynomial& rhs = weyl_sign(w, type) < 0 ? neg : delta;
    LaurentPolynomial diff = lhs - rhs;
    if (!diff.is_zero()) {
      ok = false;
      report.witness = std::move(diff);
      break;
    }
  }
  std::ostringstream os;
  os << group.size() << " elements checked";
  report.detail = os.str();
  report.status = tag(ctx, ok);
  return report;
}

std::vector<std::int64_t> shifted_exponents(const GroupContext& ctx,
                                            const std::vector<int>& nvec) {
  if (static_cast<int>(nvec.size()) != ctx.ell)
    throw ZfError(ErrorCode::InvalidContext,
                  "exponent vector length must equal ell");
  std::vector<std::int64_t> out;
  const int count = ctx.char_count();
  for (int i = 1; i <= count; ++i) {
    const int n_i = i <= ctx.ell ? nvec[i - 1] : 0;
    out.push_back(ctx.m + 1 - 2 * i - 2 * static_cast<std::int64_t>(n_i));
  }
  return out;
}

bool has_exponent_collision(const GroupContext& ctx,
                            const std::vector<int>& nvec) {
  reject_even_orthogonal(ctx, "the collision predicate");
  const auto e = shifted_exponents(ctx, nvec);
  const bool signed_type = !ctx.split_type();
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::int64_t ei = e[i];
    if (signed_type) {
      if (ei == 0) return true;
      ei = ei < 0 ? -ei : ei;
    }
    for (std::size_t k = i + 1; k < e.size(); ++k) {
      std::int64_t ek = e[k];
      if (signed_type && ek < 0) ek = -ek;
      if (ei == ek) return true;
    }
  }
  return false;
}

LaurentPolynomial vanishing_sum(const GroupContext& ctx,
                                const std::vector<int>& nvec) {
  reject_even_orthogonal(ctx, "the alternating character sum");
  if (static_cast<int>(nvec.size()) != ctx.ell)
    throw ZfError(ErrorCode::InvalidContext,
                  "exponent vector length must equal ell");
  for (int v : nvec)
    if (v < 0)
      throw ZfError(ErrorCode::InvalidContext,
                    "character exponents must be nonnegative");
  ExponentVector mono;
  for (int i = 1; i <= ctx.ell; ++i)
    mono.set_doubled(VarId::chi(i), 2 * static_cast<std::int64_t>(nvec[i - 1]));
  return alternating_sum(ctx, [&](const WeylElement& w) {
    return LaurentPolynomial::monomial(1, act(w, mono));
  });
}

IdentityReport check_vanishing(const GroupContext& ctx,
                               const std::vector<int>& nvec) {
  IdentityReport report;
  report.name = "vanishing";
  report.ctx = ctx;
  const bool predicted = has_exponent_collision(ctx, nvec);
  const LaurentPolynomial sum = vanishing_sum(ctx, nvec);
  const bool ok = sum.is_zero() == predicted;
  if (!ok) report.witness = sum;
  std::ostringstream os;
  os << (predicted ? "collision predicts zero" : "no collision predicted")
     << "; sum is " << (sum.is_zero() ? "zero" : "nonzero");
  report.detail = os.str();
  report.status = tag(ctx, ok);
  return report;
}

IdentityReport check_main_delta_identity(const GroupContext& ctx) {
  reject_even_orthogonal(ctx, "the collapsed-product identity");
  IdentityReport report;
  report.name = "main-delta";
  report.ctx = ctx;

  const Monomial p1 = var_image(VarId::p(), 2);
  const LaurentPolynomial lhs =
      alternating_sum(ctx, [&](const WeylElement& w) {
        LaurentPolynomial f = LaurentPolynomial::one();
        for (int i = 1; i <= ctx.ell; ++i) {
          const ExponentVector yi =
              act(w, ExponentVector::single(VarId::chi(i), 2));
          for (int i2 = 1; i2 <= ctx.mtildeH; ++i2) {
            for (std::int64_t sgn : {std::int64_t{2}, std::int64_t{-2}}) {
              ExponentVector e = yi.plus(p1.exps);
              e = e.plus(ExponentVector::single(VarId::mu(i2), sgn));
              f *= one_minus(Monomial{Rat(1), e});
            }
          }
        }
        return f;
      });
  LaurentPolynomial diff = lhs - delta_polynomial(ctx);
  const bool ok = diff.is_zero();
  if (!ok) report.witness = std::move(diff);
  report.status = tag(ctx, ok);
  return report;
}

IdentityReport check_cstar_ratio(const GroupContext& ctx, int i) {
  reject_even_orthogonal(ctx, "the reflection-ratio check");
  if (ctx.j != ctx.ell + 1)
    throw ZfError(ErrorCode::InvalidContext,
                  "reflection ratios assume j == ell + 1");
  const bool split = ctx.split_type();
  const bool sigma_nonempty =
      split ? (ctx.m - 2 * ctx.j >= 1) : (ctx.j <= ctx.mtilde - 1);
  if (!sigma_nonempty)
    throw ZfError(ErrorCode::InvalidContext,
                  "reflection ratios need a nonempty middle slice");
  const int imax = split ? ctx.m - 1 : ctx.mtilde;
  if (i < 1 || i > imax)
    throw ZfError(ErrorCode::IndexOutOfRange,
                  "reflection index outside the simple range");

  IdentityReport report;
  report.name = "cstar-ratio";
  report.ctx = ctx;

  const auto images = reflection_images(ctx, i);
  const RationalFunction P = P_star(ctx);
  const RationalFunction lhs = P / P.substitute(images);

  RationalFunction rhs = RationalFunction::one();
  const bool clause1 = i <= ctx.ell || (split && i >= ctx.m - ctx.ell);
  if (clause1) {
    report.detail = "invariance clause";
  } else {
    const LaurentPolynomial zs = zeta_poly(sigma_slice(ctx), 1, ctx);
    const LaurentPolynomial zsw = zs.substitute(images);
    LaurentPolynomial num = zs;
    LaurentPolynomial den = zsw;
    const bool clause2 = i == ctx.ell + 1 || (split && i == ctx.m - ctx.ell - 1);
    if (clause2 && ctx.kind == GroupKind::UnitaryInert && ctx.m % 2 == 0) {
      num *= one_minus(Monomial{
          Rat(1), ExponentVector::single(VarId::p(), 2)
                      .plus(ExponentVector::single(VarId::chi(i), 2))});
      den *= one_minus(Monomial{
          Rat(1), ExponentVector::single(VarId::p(), 2)
                      .plus(ExponentVector::single(VarId::chi(i + 1), 2))});
    }
    report.detail = clause2 ? "adjacent-factor clause" : "slice-ratio clause";
    rhs = RationalFunction(num, den);
  }

  const bool ok = rf_equals(lhs, rhs);
  if (!ok) report.witness = lhs.num() * rhs.den() - rhs.num() * lhs.den();
  report.status = ok ? IdentityStatus::Verified : IdentityStatus::Failed;
  return report;
}

IdentityReport check_eulerian_factorization(const GroupContext& ctx, int r) {
  if (r < 1 || ctx.j != r)
    throw ZfError(ErrorCode::InvalidContext,
                  "blockwise check uses r blocks of size one, so j must "
                  "equal r");
  IdentityReport report;
  report.name = "eulerian-factorization";
  report.ctx = ctx;

  std::vector<SatakeDatum> blocks;
  for (int k = 0; k < r; ++k)
    blocks.push_back(SatakeDatum::tau_block(ctx, k, 1));
  const SatakeDatum sigma = SatakeDatum::sigma_of(ctx);
  const SatakeDatum pi = SatakeDatum::pi_of(ctx);

  const RationalFunction whole =
      eulerian_rhs(blocks, sigma, pi, ctx).value();
  RationalFunction expected = RationalFunction::one();
  for (const auto& b : blocks)
    expected = expected * unramified_rhs(b, sigma, pi, ctx).value();
  for (std::size_t a = 0; a < blocks.size(); ++a)
    for (std::size_t b = a + 1; b < blocks.size(); ++b)
      expected = expected *
                 gl_rankin_L(blocks[a], blocks[b], GlShift::TwoSPlusOne)
                     .value()
                     .inverse();

  const bool ok = rf_equals(whole, expected);
  if (!ok)
    report.witness =
        whole.num() * expected.den() - expected.num() * whole.den();
  report.status = ok ? IdentityStatus::Verified : IdentityStatus::Failed;
  return report;
}

}  // namespace zetaforge

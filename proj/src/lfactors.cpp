#include "zetaforge/lfactors.hpp"

#include <algorithm>

namespace zetaforge {

namespace {

using VE = ExponentVector;

Monomial mono(Rat coeff,
              std::initializer_list<std::pair<VarId, std::int64_t>> exps) {
  Monomial m;
  m.coeff = std::move(coeff);
  for (const auto& [v, e] : exps) m.exps.set_doubled(v, e);
  return m;
}

const VarId kP = VarId::p();
const VarId kU = VarId::u();

void check_place(const SatakeDatum& d, const GroupContext& ctx,
                 const char* what) {
  if (d.split != ctx.split_type())
    throw ZfError(ErrorCode::PlaceMismatch,
                  std::string(what) + " place disagrees with context");
}

}  // namespace

RationalFunction LFactorExpr::value() const {
  LaurentPolynomial num = LaurentPolynomial::one();
  LaurentPolynomial den = LaurentPolynomial::one();
  for (const auto& [f, e] : factors) {
    if (e >= 0) {
      num *= f.pow(static_cast<unsigned>(e));
    } else {
      den *= f.pow(static_cast<unsigned>(-e));
    }
  }
  return RationalFunction(num, den);
}

std::string LFactorExpr::to_string() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& [f, e] : factors) {
    if (!out.empty()) out += "*";
    out += "(" + f.to_string() + ")";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

void LFactorExpr::push(const LaurentPolynomial& f, int exp) {
  factors.emplace_back(f, exp);
}

void LFactorExpr::append(const LFactorExpr& other, int exp_scale) {
  for (const auto& [f, e] : other.factors) factors.emplace_back(f, e * exp_scale);
}

std::map<VarId, Monomial> s_shift_map(int a, int b_doubled) {
  std::map<VarId, Monomial> m;
  m[kU] = mono(Rat(1), {{kU, 2 * a}, {kP, 2 * b_doubled}});
  return m;
}

std::map<VarId, Monomial> twist_by_s(const SatakeDatum& tau) {
  if (tau.role != SatakeDatum::Role::Tau)
    throw ZfError(ErrorCode::InvalidContext, "twist_by_s needs a tau datum");
  std::map<VarId, Monomial> m;
  for (const VarId& v : tau.vars) m[v] = mono(Rat(1), {{kU, 2}, {v, 2}});
  for (const VarId& v : tau.vars2) m[v] = mono(Rat(1), {{kU, 2}, {v, 2}});
  return m;
}

LFactorExpr tensor_L(const SatakeDatum& tau, const SatakeDatum& other,
                     const GroupContext& ctx, RangeMode range) {
  if (tau.role != SatakeDatum::Role::Tau)
    throw ZfError(ErrorCode::InvalidContext, "tensor_L needs a tau datum");
  if (tau.split != other.split)
    throw ZfError(ErrorCode::PlaceMismatch,
                  "tensor_L data live at different places");
  check_place(tau, ctx, "tau");
  LFactorExpr L;
  L.label = "tensor";
  if (tau.split) {
    for (const VarId& t : tau.vars)
      for (const VarId& lam : other.vars)
        L.push(one_minus(mono(Rat(1), {{t, 2}, {lam, 2}, {kU, 2}})), -1);
    for (const VarId& s : tau.vars2)
      for (const VarId& lam : other.vars)
        L.push(one_minus(mono(Rat(1), {{s, 2}, {lam, -2}, {kU, 2}})), -1);
    return L;
  }
  for (const VarId& x : tau.vars) {
    for (const VarId& lam : other.vars) {
      L.push(one_minus(mono(Rat(1), {{x, 2}, {lam, 2}, {kU, 2}})), -1);
      L.push(one_minus(mono(Rat(1), {{x, 2}, {lam, -2}, {kU, 2}})), -1);
    }
  }
  if (other.one_slots > 0) {
    std::vector<VarId> extra = tau.vars;
    if (range == RangeMode::FullN) {
      extra.clear();
      for (int k = 1; k <= ctx.n; ++k) extra.push_back(VarId::chi(k));
    }
    for (const VarId& x : extra)
      L.push(one_minus(mono(Rat(1), {{x, 2}, {kU, 2}})), -other.one_slots);
  }
  return L;
}

LFactorExpr gl_rankin_L(const SatakeDatum& a, const SatakeDatum& b,
                        GlShift shift) {
  if (a.split != b.split)
    throw ZfError(ErrorCode::PlaceMismatch,
                  "gl_rankin_L data live at different places");
  ExponentVector upow;
  upow.set_doubled(kU, shift == GlShift::S ? 2 : 4);
  if (shift == GlShift::TwoSPlusOne) upow.set_doubled(kP, 4);
  LFactorExpr L;
  L.label = "gl-rankin";
  auto cross = [&](const std::vector<VarId>& xs, const std::vector<VarId>& ys) {
    for (const VarId& x : xs)
      for (const VarId& y : ys) {
        ExponentVector e = upow;
        e.set_doubled(x, 2);
        e.set_doubled(y, 2);
        L.push(one_minus({Rat(1), e}), -1);
      }
  };
  cross(a.vars, b.vars);
  if (a.split) cross(a.vars2, b.vars2);
  return L;
}

LFactorExpr asai_L(const SatakeDatum& tau, const GroupContext& ctx,
                   AsaiTwist twist) {
  if (tau.role != SatakeDatum::Role::Tau)
    throw ZfError(ErrorCode::InvalidContext, "asai_L needs a tau datum");
  if (tau.split) {
    SatakeDatum left = tau, right = tau;
    left.split = right.split = false;
    left.vars = tau.vars;
    left.vars2.clear();
    right.vars = tau.vars2;
    right.vars2.clear();
    return gl_rankin_L(left, right, GlShift::S);
  }
  LFactorExpr L;
  L.label = "asai";
  const auto& xs = tau.vars;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t k = i + 1; k < xs.size(); ++k)
      L.push(one_minus(mono(Rat(1), {{xs[i], 2}, {xs[k], 2}, {kU, 2}})), -1);
  Rat eps(1);
  if (twist == AsaiTwist::XiPowM && ctx.m % 2 != 0) eps = -1;
  for (const VarId& x : xs)
    L.push(one_minus(mono(eps, {{x, 2}, {kU, 1}})), -1);
  return L;
}

LFactorExpr so_square_L(const SatakeDatum& tau, SquareKind which) {
  if (tau.role != SatakeDatum::Role::Tau)
    throw ZfError(ErrorCode::InvalidContext, "so_square_L needs a tau datum");
  if (tau.split)
    throw ZfError(ErrorCode::PlaceMismatch,
                  "so_square_L takes a single parameter list");
  LFactorExpr L;
  L.label = which == SquareKind::Exterior ? "exterior-square" : "symmetric-square";
  const auto& xs = tau.vars;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t k = i + 1; k < xs.size(); ++k)
      L.push(one_minus(mono(Rat(1), {{xs[i], 2}, {xs[k], 2}, {kU, 2}})), -1);
  if (which == SquareKind::Symmetric)
    for (const VarId& x : xs)
      L.push(one_minus(mono(Rat(1), {{x, 4}, {kU, 2}})), -1);
  return L;
}

LaurentPolynomial zeta_poly(const std::vector<VarId>& slice, int t,
                            const GroupContext& ctx) {
  if (t < 0) throw ZfError(ErrorCode::InvalidContext, "t must be >= 0");
  LaurentPolynomial z = LaurentPolynomial::one();
  const std::int64_t k = static_cast<std::int64_t>(slice.size());
  if (k <= 1) return z;
  const std::int64_t pt = 2 * t;    // doubled exponent of p^t
  const std::int64_t p2t = 4 * t;   // doubled exponent of p^{2t}
  if (ctx.split_type()) {
    for (std::size_t i = 0; i < slice.size(); ++i)
      for (std::size_t r = i + 1; r < slice.size(); ++r)
        z *= one_minus(mono(Rat(1), {{slice[i], 2}, {slice[r], -2}, {kP, p2t}}));
    return z;
  }
  for (std::size_t i = 0; i < slice.size(); ++i) {
    for (std::size_t r = i + 1; r < slice.size(); ++r) {
      z *= one_minus(mono(Rat(1), {{slice[i], 2}, {slice[r], -2}, {kP, p2t}}));
      z *= one_minus(mono(Rat(1), {{slice[i], 2}, {slice[r], 2}, {kP, p2t}}));
    }
  }
  if (ctx.m % 2 == 0) {
    for (const VarId& x : slice)
      z *= one_minus(mono(Rat(1), {{x, 2}, {kP, pt}}));
  } else {
    for (const VarId& x : slice) {
      z *= one_minus(mono(Rat(-1), {{x, 2}, {kP, pt}}));
      z *= one_minus(mono(Rat(1), {{x, 2}, {kP, p2t}}));
    }
  }
  return z;
}

LFactorExpr d_factor(const SatakeDatum& tau, const GroupContext& ctx,
                     SVar svar) {
  if (tau.role != SatakeDatum::Role::Tau)
    throw ZfError(ErrorCode::InvalidContext, "d_factor needs a tau datum");
  LFactorExpr d;
  d.label = "d";
  if (ctx.kind != GroupKind::UnitaryInert || ctx.m % 2 != 0) return d;
  for (const VarId& x : tau.vars) {
    Monomial f = mono(Rat(1), {{kP, 2}, {x, 2}});
    if (svar == SVar::Present) f.exps.set_doubled(kU, 2);
    d.push(one_minus(f), -1);
  }
  return d;
}

LaurentPolynomial Q_poly(const SatakeDatum& tau, const SatakeDatum& pi,
                         const GroupContext& ctx) {
  if (tau.split != pi.split || tau.split != ctx.split_type())
    throw ZfError(ErrorCode::PlaceMismatch, "Q_poly data disagree on place");
  LaurentPolynomial q = LaurentPolynomial::one();
  if (ctx.split_type()) {
    for (const VarId& t : tau.vars)
      for (const VarId& m : pi.vars)
        q *= one_minus(mono(Rat(1), {{kP, 2}, {kU, 2}, {t, 2}, {m, 2}}));
    for (const VarId& s : tau.vars2)
      for (const VarId& m : pi.vars)
        q *= one_minus(mono(Rat(1), {{kP, 2}, {kU, 2}, {s, 2}, {m, -2}}));
    return q;
  }
  for (const VarId& x : tau.vars) {
    for (const VarId& m : pi.vars) {
      q *= one_minus(mono(Rat(1), {{kP, 2}, {kU, 2}, {x, 2}, {m, 2}}));
      q *= one_minus(mono(Rat(1), {{kP, 2}, {kU, 2}, {x, 2}, {m, -2}}));
    }
  }
  return q;
}

bool verify_Q_identity(const GroupContext& ctx, RangeMode range) {
  SatakeDatum tau = SatakeDatum::tau_of(ctx);
  SatakeDatum pi = SatakeDatum::pi_of(ctx);
  LaurentPolynomial q = Q_poly(tau, pi, ctx);
  RationalFunction L =
      tensor_L(tau, pi, ctx, range).value().substitute(shift_s_plus_half());
  RationalFunction d = d_factor(tau, ctx, SVar::Present).value();
  return rf_equals(RationalFunction(q), L.inverse() * d);
}

LaurentPolynomial phi0_element(const SatakeDatum& tau,
                               const GroupContext& ctx) {
  if (tau.split != ctx.split_type())
    throw ZfError(ErrorCode::PlaceMismatch, "phi0 tau disagrees on place");
  const VarId X = VarId::aux(0);
  int count = ctx.split_type() ? ctx.m - 2 * ctx.ell - 1 : ctx.mtildeH;
  LaurentPolynomial out = LaurentPolynomial::one();
  for (int ip = 1; ip <= count; ++ip) {
    VarId Xi = VarId::aux(ip);
    if (ctx.split_type()) {
      for (const VarId& t : tau.vars)
        out *= one_minus(mono(Rat(1), {{kP, 2}, {t, 2}, {X, 2}, {Xi, 2}}));
      for (const VarId& s : tau.vars2)
        out *= one_minus(mono(Rat(1), {{kP, 2}, {s, 2}, {X, 2}, {Xi, -2}}));
    } else {
      for (const VarId& x : tau.vars) {
        out *= one_minus(mono(Rat(1), {{kP, 2}, {x, 2}, {X, 2}, {Xi, 2}}));
        out *= one_minus(mono(Rat(1), {{kP, 2}, {x, 2}, {X, 2}, {Xi, -2}}));
      }
    }
  }
  return out;
}

std::vector<VarId> sigma_slice(const GroupContext& ctx) {
  std::vector<VarId> out;
  int last = ctx.split_type() ? ctx.m - ctx.j : ctx.mtilde;
  for (int i = ctx.j + 1; i <= last; ++i) out.push_back(VarId::chi(i));
  return out;
}

std::vector<VarId> full_slice(const GroupContext& ctx) {
  std::vector<VarId> out;
  for (int i = 1; i <= ctx.char_count(); ++i) out.push_back(VarId::chi(i));
  return out;
}

RationalFunction P_star(const GroupContext& ctx) {
  LaurentPolynomial zs = zeta_poly(sigma_slice(ctx), 1, ctx);
  RationalFunction d =
      d_factor(SatakeDatum::tau_of(ctx), ctx, SVar::Absent).value();
  return RationalFunction(zs) / d;
}

RationalFunction gamma_gl(const GroupContext& ctx, int i) {
  const int count = ctx.char_count();
  bool gl_range;
  if (ctx.split_type()) {
    if (i < 1 || i > ctx.m - 1)
      throw ZfError(ErrorCode::IndexOutOfRange,
                    "i=" + std::to_string(i) + " outside 1.." +
                        std::to_string(ctx.m - 1));
    gl_range = (i <= ctx.ell) || (i >= ctx.m - ctx.ell);
  } else {
    if (i < 1 || i > ctx.mtilde)
      throw ZfError(ErrorCode::IndexOutOfRange,
                    "i=" + std::to_string(i) + " outside 1.." +
                        std::to_string(ctx.mtilde));
    gl_range = i <= ctx.ell;
  }
  if (!gl_range)
    throw ZfError(ErrorCode::OutOfRecursionRange,
                  "i=" + std::to_string(i) +
                      " needs the analytic pairing, not the GL recursion");
  (void)count;
  VarId xi = VarId::chi(i), xn = VarId::chi(i + 1);
  LaurentPolynomial num = one_minus(mono(Rat(1), {{xn, 2}, {xi, -2}, {kP, 4}}));
  LaurentPolynomial den = one_minus(mono(Rat(1), {{xi, 2}, {xn, -2}}));
  return RationalFunction(num, den);
}

RationalFunction c_function(const GroupContext& ctx) {
  std::vector<VarId> chi = full_slice(ctx);
  return RationalFunction(zeta_poly(chi, 1, ctx)) /
         RationalFunction(zeta_poly(chi, 0, ctx));
}

LFactorExpr unramified_rhs(const SatakeDatum& tau, const SatakeDatum& sigma,
                           const SatakeDatum& pi, const GroupContext& ctx,
                           RangeMode range) {
  if (sigma.vars.empty())
    throw ZfError(ErrorCode::InvalidContext,
                  "empty sigma slice (j at the Witt-index boundary)");
  check_place(tau, ctx, "tau");
  check_place(sigma, ctx, "sigma");
  check_place(pi, ctx, "pi");
  auto shifted = [](const LFactorExpr& L,
                    const std::map<VarId, Monomial>& sub) {
    LFactorExpr out;
    out.label = L.label;
    for (const auto& [f, e] : L.factors)
      out.push(f.substitute(sub), e);
    return out;
  };
  LFactorExpr rhs;
  rhs.label = "unramified-rhs";
  rhs.append(shifted(tensor_L(tau, pi, ctx, range), shift_s_plus_half()), 1);
  rhs.append(shifted(tensor_L(tau, sigma, ctx, range), shift_s_plus_one()), -1);
  LFactorExpr square;
  if (ctx.orthogonal()) {
    square = so_square_L(
        tau, ctx.m % 2 == 0 ? SquareKind::Exterior : SquareKind::Symmetric);
  } else {
    square = asai_L(tau, ctx, AsaiTwist::XiPowM);
  }
  rhs.append(shifted(square, shift_two_s_plus_one()), -1);
  return rhs;
}

LFactorExpr eulerian_rhs(const std::vector<SatakeDatum>& taus,
                         const SatakeDatum& sigma, const SatakeDatum& pi,
                         const GroupContext& ctx, RangeMode range) {
  if (taus.empty())
    throw ZfError(ErrorCode::InvalidContext, "need at least one tau block");
  LFactorExpr rhs;
  rhs.label = "eulerian-rhs";
  for (const SatakeDatum& t : taus)
    rhs.append(unramified_rhs(t, sigma, pi, ctx, range), 1);
  for (std::size_t i = 0; i < taus.size(); ++i)
    for (std::size_t k = i + 1; k < taus.size(); ++k)
      rhs.append(gl_rankin_L(taus[i], taus[k], GlShift::TwoSPlusOne), -1);
  return rhs;
}

}  // namespace zetaforge

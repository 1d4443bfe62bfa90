#pragma once

#include <string>
#include <vector>

#include "zetaforge/rational_function.hpp"
#include "zetaforge/satake.hpp"

namespace zetaforge {

// A product of integer powers of (1 - monomial)-type polynomials, kept in
// factored form for rendering, together with the multiplied-out value.
struct LFactorExpr {
  std::string label;
  std::vector<std::pair<LaurentPolynomial, int>> factors;

  RationalFunction value() const;
  // "(1 - ...)^-1*(1 - ...)"; "1" for the empty product.
  std::string to_string() const;

  void push(const LaurentPolynomial& f, int exp);
  void append(const LFactorExpr& other, int exp_scale = 1);
};

enum class RangeMode { TauBlock, FullN };
enum class SVar { Present, Absent };
enum class AsaiTwist { None, XiPowM };
enum class SquareKind { Exterior, Symmetric };
enum class GlShift { S, TwoSPlusOne };

// u |-> u^a * p^(2b) with b given doubled; realizes s |-> a*s + b on
// u = q_E^{-s}.
std::map<VarId, Monomial> s_shift_map(int a, int b_doubled);
inline std::map<VarId, Monomial> shift_s_plus_half() { return s_shift_map(1, 1); }
inline std::map<VarId, Monomial> shift_s_plus_one() { return s_shift_map(1, 2); }
inline std::map<VarId, Monomial> shift_two_s_plus_one() { return s_shift_map(2, 2); }

// tau-variable twist x_i |-> u*x_i (both split lists included).
std::map<VarId, Monomial> twist_by_s(const SatakeDatum& tau);

// Tensor-product L-factor of tau against sigma or pi (at the unshifted
// point: u carries q_E^{-s}). The extra degree-one product contributed by a
// trivial dual eigenvalue ranges over the tau block by default; FullN uses
// the literal x_1..x_n.
LFactorExpr tensor_L(const SatakeDatum& tau, const SatakeDatum& other,
                     const GroupContext& ctx,
                     RangeMode range = RangeMode::TauBlock);

// GL Rankin-Selberg pairing; split-style data pair component-wise
// (vars x vars and vars2 x vars2).
LFactorExpr gl_rankin_L(const SatakeDatum& a, const SatakeDatum& b,
                        GlShift shift);

// Inert: pair product and degree-one u^{1/2}-factors, sign-flipped by the
// quadratic twist when m is odd; split: gl_rankin_L of the two tau
// components.
LFactorExpr asai_L(const SatakeDatum& tau, const GroupContext& ctx,
                   AsaiTwist twist);

LFactorExpr so_square_L(const SatakeDatum& tau, SquareKind which);

// zeta(chi, t) on a character-variable slice; 1 whenever the slice has
// length <= 1. q_E^{-t} = p^{2t}, q_F^{-t} = p^t.
LaurentPolynomial zeta_poly(const std::vector<VarId>& slice, int t,
                            const GroupContext& ctx);

LFactorExpr d_factor(const SatakeDatum& tau, const GroupContext& ctx,
                     SVar svar);

// prod_{i<=j} prod_{i'} (1 - p u x_i m_{i'})(1 - p u x_i m_{i'}^{-1}),
// with the split variant pairing Theta/Xi against the full mu list.
LaurentPolynomial Q_poly(const SatakeDatum& tau, const SatakeDatum& pi,
                         const GroupContext& ctx);

// Q == tensor_L(s+1/2)^{-1} * d, exactly.
bool verify_Q_identity(const GroupContext& ctx,
                       RangeMode range = RangeMode::TauBlock);

// Support-ideal generator in the auxiliary X-variables.
LaurentPolynomial phi0_element(const SatakeDatum& tau,
                               const GroupContext& ctx);

std::vector<VarId> sigma_slice(const GroupContext& ctx);
std::vector<VarId> full_slice(const GroupContext& ctx);

// zeta(chi_sigma, 1) / d(chi_tau) with the s-variable absent.
RationalFunction P_star(const GroupContext& ctx);

// GL-range gamma ratio (1 - x_{i+1} x_i^{-1} p^2)/(1 - x_i x_{i+1}^{-1});
// OutOfRecursionRange in the analytic middle range.
RationalFunction gamma_gl(const GroupContext& ctx, int i);

// zeta(chi,1)/zeta(chi,0) on the full character.
RationalFunction c_function(const GroupContext& ctx);

// L(s+1/2, tau x pi) / (L(s+1, tau x sigma) * L(2s+1, tau, Asai-or-square)).
// Orthogonal kinds substitute the exterior square (even m) or symmetric
// square (odd m) for the twisted Asai factor.
LFactorExpr unramified_rhs(const SatakeDatum& tau, const SatakeDatum& sigma,
                           const SatakeDatum& pi, const GroupContext& ctx,
                           RangeMode range = RangeMode::TauBlock);

// prod_i unramified_rhs(tau_i) / prod_{i<k} L(2s+1, tau_i x tau_k).
LFactorExpr eulerian_rhs(const std::vector<SatakeDatum>& taus,
                         const SatakeDatum& sigma, const SatakeDatum& pi,
                         const GroupContext& ctx,
                         RangeMode range = RangeMode::TauBlock);

}  // namespace zetaforge

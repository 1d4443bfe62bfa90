#pragma once

#include <string>
#include <vector>

#include "zetaforge/context.hpp"
#include "zetaforge/laurent.hpp"
#include "zetaforge/lfactors.hpp"

namespace zetaforge {

enum class IdentityStatus {
  Verified,
  Failed,
  ConjecturalVerified,
  ConjecturalFailed,
};

const char* identity_status_name(IdentityStatus s);

struct IdentityReport {
  std::string name;
  GroupContext ctx;
  IdentityStatus status = IdentityStatus::Verified;
  LaurentPolynomial witness;  // zero unless the check failed
  std::string detail;

  bool passed() const {
    return status == IdentityStatus::Verified ||
           status == IdentityStatus::ConjecturalVerified;
  }
  bool hard_failure() const { return status == IdentityStatus::Failed; }
};

// rho-monomial times the t=0 zeta polynomial of the full slice.
LaurentPolynomial delta_polynomial(const GroupContext& ctx);

// act(w, delta) == sign(w) * delta for every Weyl element. Split contexts
// report conjectural status; even-orthogonal contexts are rejected.
IdentityReport check_delta_antisymmetry(const GroupContext& ctx);

// Shifted character exponents (doubled): m+1-2i-2n_i, with n_i = 0 past ell.
std::vector<std::int64_t> shifted_exponents(const GroupContext& ctx,
                                            const std::vector<int>& nvec);

// Collision predicate deciding vanishing of the alternating character sum:
// inert / odd-orthogonal contexts vanish iff some |e_i| repeats or is zero,
// split contexts iff some e_i repeats.
bool has_exponent_collision(const GroupContext& ctx,
                            const std::vector<int>& nvec);

// Alternating sum of act(w, prod_i x_i^{n_i}) weighted by the rho-monomial.
LaurentPolynomial vanishing_sum(const GroupContext& ctx,
                                const std::vector<int>& nvec);

IdentityReport check_vanishing(const GroupContext& ctx,
                               const std::vector<int>& nvec);

// Alternating sum of the collapsed pair product against delta_polynomial.
IdentityReport check_main_delta_identity(const GroupContext& ctx);

// Simple-reflection ratio of the normalized numerator polynomial: clause 1
// leaves it invariant, clause 2 trades adjacent linear factors, clause 3 is
// the zeta-slice ratio.
IdentityReport check_cstar_ratio(const GroupContext& ctx, int i);

// Blockwise product formula: the r-block value equals the product of the
// single-block values divided by the pairwise Rankin factors at 2s+1.
IdentityReport check_eulerian_factorization(const GroupContext& ctx, int r);

}  // namespace zetaforge

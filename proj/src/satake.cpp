#include "zetaforge/satake.hpp"

namespace zetaforge {

SatakeDatum SatakeDatum::tau_of(const GroupContext& ctx) {
  return tau_block(ctx, 0, ctx.j);
}

SatakeDatum SatakeDatum::tau_block(const GroupContext& ctx, int offset,
                                   int size) {
  SatakeDatum d;
  d.role = Role::Tau;
  d.split = ctx.split_type();
  for (int i = 1; i <= size; ++i) {
    if (d.split) {
      d.vars.push_back(VarId::theta(offset + i));
      d.vars2.push_back(VarId::xi(offset + i));
    } else {
      d.vars.push_back(VarId::chi(offset + i));
    }
  }
  return d;
}

SatakeDatum SatakeDatum::sigma_of(const GroupContext& ctx) {
  SatakeDatum d;
  d.role = Role::Sigma;
  d.split = ctx.split_type();
  if (d.split) {
    for (int i = ctx.j + 1; i <= ctx.m - ctx.j; ++i)
      d.vars.push_back(VarId::chi(i));
  } else {
    for (int i = ctx.j + 1; i <= ctx.mtilde; ++i)
      d.vars.push_back(VarId::chi(i));
    // Orthogonal dual groups carry paired eigenvalues only.
    d.one_slots = ctx.orthogonal() ? 0 : ctx.dimV0;
  }
  return d;
}

SatakeDatum SatakeDatum::pi_of(const GroupContext& ctx) {
  SatakeDatum d;
  d.role = Role::Pi;
  d.split = ctx.split_type();
  if (d.split) {
    for (int i = 1; i <= ctx.m - 2 * ctx.ell - 1; ++i)
      d.vars.push_back(VarId::mu(i));
  } else {
    for (int i = 1; i <= ctx.mtildeH; ++i) d.vars.push_back(VarId::mu(i));
    d.one_slots = (!ctx.orthogonal() && ctx.m % 2 == 0) ? 1 : 0;
  }
  return d;
}

}  // namespace zetaforge

#pragma once

#include <vector>

#include "zetaforge/context.hpp"
#include "zetaforge/laurent.hpp"

namespace zetaforge {

// Unramified parameter lists. Inert-style data carry one list of variables
// (plus a count of trivial dual eigenvalues in one_slots); split tau carries
// the paired Theta/Xi lists (vars/vars2); split sigma and pi carry the full
// free list in vars.
struct SatakeDatum {
  enum class Role { Tau, Sigma, Pi };

  Role role;
  bool split = false;
  std::vector<VarId> vars;
  std::vector<VarId> vars2;
  int one_slots = 0;

  // tau on GL_j: inert x1..xj; split Theta t1..tj with Xi s1..sj.
  static SatakeDatum tau_of(const GroupContext& ctx);
  // A tau block of the given size with variable indices starting at
  // offset+1; used for isobaric-sum assemblies.
  static SatakeDatum tau_block(const GroupContext& ctx, int offset, int size);
  // sigma on the middle group: inert x_{j+1}..x_{mtilde} with dimV0 trivial
  // slots; split x_{j+1}..x_{m-j}.
  static SatakeDatum sigma_of(const GroupContext& ctx);
  // pi on the ell-reduced side: inert m1..m_{mtildeH} with a trivial slot
  // exactly when m is even; split the full list m1..m_{m-2*ell-1}.
  static SatakeDatum pi_of(const GroupContext& ctx);
};

}  // namespace zetaforge

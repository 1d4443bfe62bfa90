#pragma once

#include <string>

#include "zetaforge/error.hpp"

namespace zetaforge {

enum class GroupKind {
  UnitaryInert,
  UnitarySplit,
  SoOdd,
  SoEvenSplit,
  SoEvenQuasisplit,
};

std::string kind_name(GroupKind k);
GroupKind parse_kind(const std::string& s);

// The numerology shared by every formula: dimensions, Witt indices, and the
// two induction indices. Invariants: 0 <= ell < mtilde <= n, 0 <= j <= mtilde,
// dimV0 = m - 2*mtilde in {0,1,2}, mtildeH = floor((m-2*ell-1)/2).
struct GroupContext {
  GroupKind kind;
  int m = 0;
  int n = 0;
  int mtilde = 0;
  int ell = 0;
  int j = 0;
  int dimV0 = 0;
  int mtildeH = 0;

  static GroupContext make(GroupKind kind, int m, int ell, int j);
  // Derives m from mtilde (odd for unitary/so-odd, 2*mtilde for so-even-split,
  // 2*mtilde+2 for so-even-quasisplit); used by coset enumeration, where only
  // (mtilde, n, ell, j) matter.
  static GroupContext make_from_mtilde(GroupKind kind, int mtilde, int ell,
                                       int j);

  // Split-type kinds carry m character variables permuted by S_m; the others
  // carry mtilde variables with a signed-permutation action.
  bool split_type() const { return kind == GroupKind::UnitarySplit; }
  bool orthogonal() const {
    return kind == GroupKind::SoOdd || kind == GroupKind::SoEvenSplit ||
           kind == GroupKind::SoEvenQuasisplit;
  }
  // Even orthogonal kinds have the index-two (type D) Weyl group; the
  // identity suite does not run on them.
  bool even_orthogonal() const {
    return kind == GroupKind::SoEvenSplit ||
           kind == GroupKind::SoEvenQuasisplit;
  }

  int char_count() const { return split_type() ? m : mtilde; }
};

}  // namespace zetaforge

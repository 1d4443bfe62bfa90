#include "zetaforge/context.hpp"

namespace zetaforge {

std::string kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::UnitaryInert: return "unitary-inert";
    case GroupKind::UnitarySplit: return "unitary-split";
    case GroupKind::SoOdd: return "so-odd";
    case GroupKind::SoEvenSplit: return "so-even-split";
    case GroupKind::SoEvenQuasisplit: return "so-even-quasisplit";
  }
  return "?";
}

GroupKind parse_kind(const std::string& s) {
  if (s == "unitary-inert") return GroupKind::UnitaryInert;
  if (s == "unitary-split") return GroupKind::UnitarySplit;
  if (s == "so-odd") return GroupKind::SoOdd;
  if (s == "so-even-split") return GroupKind::SoEvenSplit;
  if (s == "so-even-quasisplit") return GroupKind::SoEvenQuasisplit;
  throw ZfError(ErrorCode::ParseError, "unknown kind '" + s + "'");
}

GroupContext GroupContext::make(GroupKind kind, int m, int ell, int j) {
  if (m < 2) throw ZfError(ErrorCode::InvalidContext, "m must be >= 2");
  GroupContext ctx;
  ctx.kind = kind;
  ctx.m = m;
  ctx.n = m / 2;
  switch (kind) {
    case GroupKind::UnitaryInert:
    case GroupKind::UnitarySplit:
      ctx.mtilde = m / 2;
      break;
    case GroupKind::SoOdd:
      if (m % 2 == 0)
        throw ZfError(ErrorCode::InvalidContext, "so-odd needs odd m");
      ctx.mtilde = (m - 1) / 2;
      break;
    case GroupKind::SoEvenSplit:
      if (m % 2 != 0)
        throw ZfError(ErrorCode::InvalidContext, "so-even-split needs even m");
      ctx.mtilde = m / 2;
      break;
    case GroupKind::SoEvenQuasisplit:
      if (m % 2 != 0)
        throw ZfError(ErrorCode::InvalidContext,
                      "so-even-quasisplit needs even m");
      ctx.mtilde = m / 2 - 1;
      break;
  }
  ctx.dimV0 = m - 2 * ctx.mtilde;
  if (ell < 0) throw ZfError(ErrorCode::InvalidContext, "ell must be >= 0");
  if (ell >= ctx.mtilde)
    throw ZfError(ErrorCode::InvalidContext,
                  "ell=" + std::to_string(ell) +
                      " must be < mtilde=" + std::to_string(ctx.mtilde));
  if (j < 0 || j > ctx.mtilde)
    throw ZfError(ErrorCode::InvalidContext,
                  "j=" + std::to_string(j) + " must lie in 0.." +
                      std::to_string(ctx.mtilde));
  ctx.ell = ell;
  ctx.j = j;
  ctx.mtildeH = (m - 2 * ell - 1) / 2;
  return ctx;
}

GroupContext GroupContext::make_from_mtilde(GroupKind kind, int mtilde,
                                            int ell, int j) {
  int m = 0;
  switch (kind) {
    case GroupKind::UnitaryInert:
    case GroupKind::UnitarySplit:
    case GroupKind::SoOdd:
      m = 2 * mtilde + 1;
      break;
    case GroupKind::SoEvenSplit:
      m = 2 * mtilde;
      break;
    case GroupKind::SoEvenQuasisplit:
      m = 2 * mtilde + 2;
      break;
  }
  return make(kind, m, ell, j);
}

}  // namespace zetaforge

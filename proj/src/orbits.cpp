#include "zetaforge/orbits.hpp"

#include <sstream>

#include "zetaforge/error.hpp"

namespace zetaforge {

std::vector<CosetDatum> enumerate_eps(const GroupContext& ctx) {
  std::vector<CosetDatum> out;
  const bool doubled_boundary = ctx.kind == GroupKind::SoEvenSplit;
  for (int alpha = 0; alpha <= ctx.j; ++alpha) {
    for (int beta = alpha; beta <= ctx.j; ++beta) {
      const int v = ctx.ell + beta - alpha;
      if (v < ctx.j || v > ctx.mtilde) continue;
      if (doubled_boundary && v == ctx.n) {
        out.push_back({alpha, beta, false});
        out.push_back({alpha, beta, true});
      } else {
        out.push_back({alpha, beta, false});
      }
    }
  }
  return out;
}

SurvivorDescriptor surviving_summand(const GroupContext& ctx) {
  SurvivorDescriptor d;
  d.coset.alpha = 0;
  d.coset.beta = std::max(0, ctx.j - ctx.ell);
  d.coset.twisted = false;
  const int v = ctx.ell + d.coset.beta;
  if (v < ctx.j || v > ctx.mtilde)
    throw ZfError(ErrorCode::InvalidContext,
                  "no open summand survives for this (j, ell, mtilde)");
  if (ctx.j <= ctx.ell) {
    d.eps_shape = "block-antidiagonal";
    d.gamma_shape = "trivial";
  } else {
    d.eps_shape = "identity";
    d.gamma_shape = "shear";
  }
  return d;
}

int bessel_orbit_count(const OrbitCountQuery& q) {
  if (q.dimX <= 0 || q.wittW < 0 || q.dimW < 2 * q.wittW || q.dimX > q.wittW)
    throw ZfError(ErrorCode::InvalidContext,
                  "orbit-count query violates 0 < dimX <= wittW <= dimW/2");
  if (q.dimW == 2 * q.dimX) return 1;
  if (q.dimX < q.wittW) return 2;
  // From here dimX == wittW and dimW > 2 dimX.
  if (q.wittW0perp == q.dimX - 1) return 1;
  if (q.wittW0perp == q.dimX) {
    if (q.space == OrbitCountQuery::Space::Unitary) return 2;
    if (q.dimW >= 2 * q.dimX + 2) return 2;
    if (q.dimW == 2 * q.dimX + 1) return 3;
  }
  throw ZfError(ErrorCode::UnclassifiedCase,
                "orbit-count query matches no clause");
}

std::vector<BoundarySummand> beta_boundary_cases(const GroupContext& ctx) {
  std::vector<BoundarySummand> out;
  switch (ctx.kind) {
    case GroupKind::UnitaryInert:
    case GroupKind::UnitarySplit:
      if (ctx.m % 2 == 0) {
        out.push_back({"boundary", 1, {"cuspidality"}});
      } else {
        out.push_back(
            {"boundary", 2, {"cuspidality", "character-nonvanishing"}});
      }
      break;
    case GroupKind::SoOdd:
      out.push_back({"boundary", 3,
                     {"cuspidality", "cuspidality", "character-nonvanishing"}});
      break;
    case GroupKind::SoEvenSplit:
      out.push_back({"representative", 1, {"cuspidality"}});
      out.push_back({"twisted-representative", 1, {"cuspidality"}});
      break;
    case GroupKind::SoEvenQuasisplit:
      out.push_back(
          {"boundary", 2, {"cuspidality", "character-nonvanishing"}});
      break;
  }
  return out;
}

std::string render_half(std::int64_t doubled) {
  std::ostringstream os;
  if (doubled % 2 == 0) {
    os << doubled / 2;
  } else {
    os << doubled << "/2";
  }
  return os.str();
}

namespace {

std::string det_power(std::int64_t doubled) {
  return "|det|^{" + render_half(doubled) + "}";
}

}  // namespace

std::vector<JacquetConstituent> jacquet_constituents_inert(
    const GroupContext& ctx) {
  if (ctx.j < 1 || ctx.j >= ctx.m)
    throw ZfError(ErrorCode::InvalidContext,
                  "inert constituent table needs 1 <= j < m");
  std::vector<JacquetConstituent> out;
  const int lo = std::max(0, ctx.j - ctx.ell);
  const int hi = std::min(ctx.j, ctx.mtilde - ctx.ell - 1);
  for (int beta = lo; beta <= hi; ++beta) {
    const int t = ctx.j - beta;
    JacquetConstituent c;
    c.family = "derivative-tower";
    c.index = beta;
    c.t = t;
    c.exp_shift_doubled = 1 - t;
    std::ostringstream os;
    os << det_power(c.exp_shift_doubled) << " tau^(" << t
       << ") (x) coinvariants(sigma; depth " << (ctx.ell - t) << ")";
    c.description = os.str();
    out.push_back(std::move(c));
  }
  if (ctx.ell < ctx.j) {
    JacquetConstituent c;
    c.family = "full-depth";
    c.t = ctx.ell;
    c.exp_shift_doubled = -ctx.ell;
    std::ostringstream os;
    os << det_power(c.exp_shift_doubled) << " tau_(" << ctx.ell
       << ") (x) sigma";
    c.description = os.str();
    out.push_back(std::move(c));
  }
  JacquetConstituent rest;
  rest.family = "remainder";
  rest.description = "supported on the non-open double cosets";
  out.push_back(std::move(rest));
  return out;
}

std::vector<JacquetConstituent> jacquet_constituents_split(int l1, int l2,
                                                           int l3, int j) {
  if (l1 < 0 || l2 < 0 || l3 < 0 || j < 0 || j > l1 + l2 + l3)
    throw ZfError(ErrorCode::InvalidContext,
                  "split constituent table needs 0 <= j <= l1+l2+l3");
  std::vector<JacquetConstituent> out;
  for (int beta = std::max(j - l3 + 1, 0); beta <= std::min(l2 - 1, j);
       ++beta) {
    const int t = j - beta;
    JacquetConstituent c;
    c.family = "derivative-tower";
    c.index = beta;
    c.t = t;
    c.exp_shift_doubled = 1 - t + l3 - l1;
    std::ostringstream os;
    os << det_power(c.exp_shift_doubled) << " tau1^(" << t << ") (x) "
       << det_power(t) << " coinvariants(tau2; blocks " << l1 << ","
       << (l2 - beta) << "," << (l3 - t) << ")";
    c.description = os.str();
    out.push_back(std::move(c));
  }
  for (int r = std::max(1, j - l2 - l3); r <= std::min(l1, j - l3 - 1); ++r) {
    JacquetConstituent c;
    c.family = "jacquet-tower";
    c.index = r;
    c.exp_shift_doubled = -(l1 - r);
    std::ostringstream os;
    os << det_power(c.exp_shift_doubled) << " coinvariants(tau1; blocks " << r
       << "," << (j - l3 - r) << "," << l3 << ") (x) "
       << det_power(l3 - r - 1) << " tau2^[" << (l1 - r) << "]";
    c.description = os.str();
    out.push_back(std::move(c));
  }
  if (0 < j - l3 && j - l3 <= l2) {
    JacquetConstituent c;
    c.family = "boundary-lower";
    c.t = l3;
    c.exp_shift_doubled = -l1;
    std::ostringstream os;
    os << det_power(-l1) << " tau1_(" << l3 << ") (x) "
       << det_power(l3 - 1) << " tau2^[" << l1 << "]";
    c.description = os.str();
    out.push_back(std::move(c));
  } else if (l3 == j) {
    JacquetConstituent c;
    c.family = "boundary-lower";
    c.t = j;
    c.exp_shift_doubled = 0;
    std::ostringstream os;
    os << "tau1^(" << j << ") (x) " << det_power(-l3) << " tau2_[" << l1
       << "]";
    c.description = os.str();
    out.push_back(std::move(c));
  }
  if (0 < j - l3 && j - l3 < l2) {
    {
      JacquetConstituent c;
      c.family = "boundary-upper";
      c.t = l3;
      c.exp_shift_doubled = 1 - l1;
      std::ostringstream os;
      os << det_power(1 - l1) << " tau1^(" << l3 << ") (x) " << det_power(l3)
         << " tau2[" << l1 << "]";
      c.description = os.str();
      out.push_back(std::move(c));
    }
    {
      JacquetConstituent c;
      c.family = "boundary-induced";
      c.t = l3;
      c.exp_shift_doubled = -l1;
      std::ostringstream os;
      os << "ind(" << det_power(-l1) << " tau1_(" << l3 << ")) (x) "
         << det_power(l3) << " tau2[" << l1 << "]";
      c.description = os.str();
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace zetaforge

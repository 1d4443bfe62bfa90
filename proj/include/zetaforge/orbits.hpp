#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetaforge/context.hpp"

namespace zetaforge {

// Double-coset index datum. The twisted flag marks the second representative
// that appears only for so-even-split contexts on the boundary stratum
// ell + beta - alpha == n.
struct CosetDatum {
  int alpha = 0;
  int beta = 0;
  bool twisted = false;

  friend bool operator==(const CosetDatum& a, const CosetDatum& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.twisted == b.twisted;
  }
};

// All (alpha, beta) with 0 <= alpha <= beta <= j and j <= ell+beta-alpha <=
// mtilde; so-even-split contexts emit the boundary pairs twice
// (twisted false/true).
std::vector<CosetDatum> enumerate_eps(const GroupContext& ctx);

struct SurvivorDescriptor {
  CosetDatum coset;
  std::string eps_shape;
  std::string gamma_shape;
};

// The unique summand surviving cuspidality and openness filtering:
// alpha = 0, beta = max(0, j-ell).
SurvivorDescriptor surviving_summand(const GroupContext& ctx);

struct OrbitCountQuery {
  enum class Space { Unitary, Orthogonal };
  int dimX = 0;
  int wittW = 0;
  int wittW0perp = 0;
  int dimW = 0;
  Space space = Space::Unitary;
};

// Number of stabilizer orbits on the isotropic-subspace stratum, in {1,2,3}.
int bessel_orbit_count(const OrbitCountQuery& q);

struct BoundarySummand {
  std::string label;
  int orbit_count = 0;
  // One entry per orbit: "cuspidality" or "character-nonvanishing".
  std::vector<std::string> killed_by;
};

// Classification of the boundary stratum beta = mtilde - ell: which summands
// appear and which argument kills each orbit.
std::vector<BoundarySummand> beta_boundary_cases(const GroupContext& ctx);

struct JacquetConstituent {
  std::string family;
  int index = -1;  // beta (derivative towers) or r; -1 when not applicable
  int t = -1;      // derivative order / coinvariant depth; -1 when n/a
  std::int64_t exp_shift_doubled = 0;  // the |det|-exponent, doubled
  std::string description;
};

std::string render_half(std::int64_t doubled);

std::vector<JacquetConstituent> jacquet_constituents_inert(
    const GroupContext& ctx);

std::vector<JacquetConstituent> jacquet_constituents_split(int l1, int l2,
                                                           int l3, int j);

}  // namespace zetaforge

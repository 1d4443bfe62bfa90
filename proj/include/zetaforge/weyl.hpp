#pragma once

#include <functional>
#include <vector>

#include "zetaforge/context.hpp"
#include "zetaforge/laurent.hpp"

namespace zetaforge {

enum class WeylType { A, B, D };

// Signed permutation on k letters: acting on character variables,
// x_i |-> x_{perm[i]}^{flips[i]} (indices 0-based internally; variables are
// x1..xk). Type A elements carry all-+1 flips; type D an even number of -1.
struct WeylElement {
  std::vector<int> perm;
  std::vector<int> flips;

  static WeylElement identity(int k);
  int rank() const { return static_cast<int>(perm.size()); }

  // (a*b) acts as: act(a*b, v) == act(a, act(b, v)).
  friend WeylElement compose(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.perm == b.perm && a.flips == b.flips;
  }
};

int perm_sign(const std::vector<int>& perm);
int weyl_sign(const WeylElement& w, WeylType type);

inline constexpr int kDefaultWeylRankBound = 8;

// All k! / 2^k k! / 2^{k-1} k! elements. Throws RankTooLarge past the bound.
std::vector<WeylElement> enumerate_group(WeylType type, int k,
                                         int rank_bound = kDefaultWeylRankBound);

ExponentVector act(const WeylElement& w, const ExponentVector& mono);
LaurentPolynomial act(const WeylElement& w, const LaurentPolynomial& poly);

WeylType weyl_type_of(const GroupContext& ctx);

// prod_i x_i^{-((m+1)/2 - i)}; i runs to mtilde (inert-style kinds) or m
// (split). Doubled exponent -(m+1-2i) keeps even m on the lattice.
LaurentPolynomial rho_monomial(const GroupContext& ctx);

// Sum over the ctx's Weyl group of sign(w) * act(w, rho) * f(w).
LaurentPolynomial alternating_sum(
    const GroupContext& ctx,
    const std::function<LaurentPolynomial(const WeylElement&)>& f,
    int rank_bound = kDefaultWeylRankBound);

}  // namespace zetaforge

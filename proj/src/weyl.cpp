#include "zetaforge/weyl.hpp"

#include <algorithm>
#include <numeric>

namespace zetaforge {

WeylElement WeylElement::identity(int k) {
  WeylElement w;
  w.perm.resize(k);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.flips.assign(k, 1);
  return w;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  int k = a.rank();
  WeylElement out;
  out.perm.resize(k);
  out.flips.resize(k);
  for (int i = 0; i < k; ++i) {
    out.perm[i] = a.perm[b.perm[i]];
    out.flips[i] = b.flips[i] * a.flips[b.perm[i]];
  }
  return out;
}

int perm_sign(const std::vector<int>& perm) {
  int sign = 1;
  int k = static_cast<int>(perm.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

int weyl_sign(const WeylElement& w, WeylType type) {
  int sign = perm_sign(w.perm);
  if (type != WeylType::A)
    for (int f : w.flips) sign *= f;
  return sign;
}

std::vector<WeylElement> enumerate_group(WeylType type, int k,
                                         int rank_bound) {
  if (k < 0) throw ZfError(ErrorCode::InvalidContext, "negative rank");
  if (k > rank_bound)
    throw ZfError(ErrorCode::RankTooLarge,
                  "rank " + std::to_string(k) + " exceeds bound " +
                      std::to_string(rank_bound));
  std::vector<int> base(k);
  std::iota(base.begin(), base.end(), 0);
  std::vector<WeylElement> out;
  do {
    if (type == WeylType::A) {
      WeylElement w;
      w.perm = base;
      w.flips.assign(k, 1);
      out.push_back(std::move(w));
      continue;
    }
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      if (type == WeylType::D &&
          (static_cast<unsigned>(__builtin_popcount(mask)) % 2u) != 0u)
        continue;
      WeylElement w;
      w.perm = base;
      w.flips.resize(k);
      for (int i = 0; i < k; ++i) w.flips[i] = (mask >> i) & 1u ? -1 : 1;
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

ExponentVector act(const WeylElement& w, const ExponentVector& mono) {
  ExponentVector out;
  for (const auto& [v, e] : mono.entries()) {
    if (v.family != VarId::Family::Chi) {
      out = out.plus(ExponentVector::single(v, e));
      continue;
    }
    int i = v.index - 1;
    if (i < 0 || i >= w.rank())
      throw ZfError(ErrorCode::IndexOutOfRange,
                    v.name() + " outside the acting rank");
    out = out.plus(ExponentVector::single(VarId::chi(w.perm[i] + 1),
                                          w.flips[i] * e));
  }
  return out;
}

LaurentPolynomial act(const WeylElement& w, const LaurentPolynomial& poly) {
  LaurentPolynomial out;
  for (const auto& [e, c] : poly.terms())
    out += LaurentPolynomial::monomial(c, act(w, e));
  return out;
}

WeylType weyl_type_of(const GroupContext& ctx) {
  if (ctx.split_type()) return WeylType::A;
  if (ctx.even_orthogonal()) return WeylType::D;
  return WeylType::B;
}

LaurentPolynomial rho_monomial(const GroupContext& ctx) {
  ExponentVector e;
  int count = ctx.char_count();
  for (int i = 1; i <= count; ++i)
    e.set_doubled(VarId::chi(i), -(ctx.m + 1 - 2 * i));
  return LaurentPolynomial::monomial(Rat(1), e);
}

LaurentPolynomial alternating_sum(
    const GroupContext& ctx,
    const std::function<LaurentPolynomial(const WeylElement&)>& f,
    int rank_bound) {
  WeylType type = weyl_type_of(ctx);
  LaurentPolynomial rho = rho_monomial(ctx);
  LaurentPolynomial sum;
  for (const WeylElement& w :
       enumerate_group(type, ctx.char_count(), rank_bound)) {
    LaurentPolynomial term = act(w, rho) * f(w);
    if (weyl_sign(w, type) < 0) term = -term;
    sum += term;
  }
  return sum;
}

}  // namespace zetaforge

#include "zetaforge/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace zetaforge {

Rat make_rat(long num, long den) {
  if (den == 0) throw ZfError(ErrorCode::DivisionByZero, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string VarId::name() const {
  switch (family) {
    case Family::P: return "p";
    case Family::U: return "u";
    case Family::Aux: return index == 0 ? "X" : "X" + std::to_string(index);
    case Family::Chi: return "x" + std::to_string(index);
    case Family::Mu: return "m" + std::to_string(index);
    case Family::Theta: return "t" + std::to_string(index);
    case Family::Xi: return "s" + std::to_string(index);
  }
  return "?";
}

ExponentVector ExponentVector::single(VarId v, std::int64_t doubled) {
  ExponentVector e;
  if (doubled != 0) e.entries_.emplace_back(v, doubled);
  return e;
}

std::int64_t ExponentVector::doubled(VarId v) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), v,
      [](const auto& entry, const VarId& key) { return entry.first < key; });
  if (it != entries_.end() && it->first == v) return it->second;
  return 0;
}

void ExponentVector::set_doubled(VarId v, std::int64_t e) {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), v,
      [](const auto& entry, const VarId& key) { return entry.first < key; });
  if (it != entries_.end() && it->first == v) {
    if (e == 0) {
      entries_.erase(it);
    } else {
      it->second = e;
    }
  } else if (e != 0) {
    entries_.insert(it, {v, e});
  }
}

std::int64_t ExponentVector::total_doubled_degree() const {
  std::int64_t d = 0;
  for (const auto& [v, e] : entries_) d += e;
  return d;
}

ExponentVector ExponentVector::plus(const ExponentVector& o) const {
  ExponentVector out;
  out.entries_.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  while (a != entries_.end() || b != o.entries_.end()) {
    if (b == o.entries_.end() ||
        (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      std::int64_t e = a->second + b->second;
      if (e != 0) out.entries_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  return out;
}

ExponentVector ExponentVector::scaled(std::int64_t k) const {
  ExponentVector out;
  if (k == 0) return out;
  out.entries_ = entries_;
  for (auto& [v, e] : out.entries_) e *= k;
  return out;
}

int ExponentVector::canonical_compare(const ExponentVector& a,
                                      const ExponentVector& b) {
  std::int64_t da = a.total_doubled_degree();
  std::int64_t db = b.total_doubled_degree();
  if (da != db) return da > db ? -1 : 1;
  auto ia = a.entries_.begin();
  auto ib = b.entries_.begin();
  while (ia != a.entries_.end() || ib != b.entries_.end()) {
    // Exponent of the earliest variable present in either vector.
    VarId v = (ib == b.entries_.end())                                 ? ia->first
              : (ia == a.entries_.end())                               ? ib->first
              : (ia->first < ib->first || ia->first == ib->first)      ? ia->first
                                                                       : ib->first;
    std::int64_t ea = (ia != a.entries_.end() && ia->first == v) ? ia->second : 0;
    std::int64_t eb = (ib != b.entries_.end() && ib->first == v) ? ib->second : 0;
    if (ea != eb) return ea > eb ? -1 : 1;
    if (ia != a.entries_.end() && ia->first == v) ++ia;
    if (ib != b.entries_.end() && ib->first == v) ++ib;
  }
  return 0;
}

LaurentPolynomial LaurentPolynomial::constant(const Rat& c) {
  LaurentPolynomial p;
  p.add_term(ExponentVector{}, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(VarId v,
                                              std::int64_t doubled_exp) {
  LaurentPolynomial p;
  p.add_term(ExponentVector::single(v, doubled_exp), Rat(1));
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const Rat& c,
                                              const ExponentVector& e) {
  LaurentPolynomial p;
  p.add_term(e, c);
  return p;
}

bool LaurentPolynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() &&
         terms_.begin()->second == 1;
}

const Rat& LaurentPolynomial::leading_coeff() const {
  if (terms_.empty())
    throw ZfError(ErrorCode::DivisionByZero, "leading coefficient of 0");
  return terms_.begin()->second;
}

void LaurentPolynomial::add_term(const ExponentVector& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ea.plus(eb), ca * cb);
    }
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::scaled(const Rat& c) const {
  LaurentPolynomial out;
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial out = one();
  LaurentPolynomial base = *this;
  while (k) {
    if (k & 1u) out = out * base;
    base = base * base;
    k >>= 1u;
  }
  return out;
}

namespace {

// c^(doubled/2), exact. Doubled-odd powers need an exact rational square
// root of c.
Rat rat_pow_half(const Rat& c, std::int64_t doubled) {
  if (doubled == 0) return Rat(1);
  Rat base = c;
  if (doubled % 2 != 0) {
    if (sgn(c) < 0)
      throw ZfError(ErrorCode::NonIntegralPower,
                    "half power of a negative coefficient");
    mpz_class num = c.get_num(), den = c.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
      throw ZfError(ErrorCode::NonIntegralPower,
                    "half power of a non-square coefficient");
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    base = Rat(rn, rd);
    base.canonicalize();
  } else {
    doubled /= 2;
  }
  std::int64_t k = doubled;
  bool invert = k < 0;
  if (invert) {
    if (base == 0) throw ZfError(ErrorCode::DivisionByZero, "0^negative");
    k = -k;
  }
  Rat out(1), b = base;
  while (k) {
    if (k & 1) out *= b;
    b *= b;
    k >>= 1;
  }
  if (invert) out = 1 / out;
  return out;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::substitute(
    const std::map<VarId, Monomial>& images) const {
  for (const auto& [v, img] : images) {
    if (img.coeff == 0)
      throw ZfError(ErrorCode::InvalidContext,
                    "zero monomial image for " + v.name());
  }
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) {
    Rat coeff = c;
    ExponentVector target;
    for (const auto& [v, ed] : e.entries()) {
      auto it = images.find(v);
      if (it == images.end()) {
        target = target.plus(ExponentVector::single(v, ed));
        continue;
      }
      coeff *= rat_pow_half(it->second.coeff, ed);
      // Image exponents are doubled; (true e)*(true f) doubles to ed*fd/2.
      for (const auto& [w, fd] : it->second.exps.entries()) {
        std::int64_t prod = ed * fd;
        if (prod % 2 != 0)
          throw ZfError(ErrorCode::NonIntegralPower,
                        "substitution leaves the half-integer lattice at " +
                            v.name() + " -> " + w.name());
        target = target.plus(ExponentVector::single(w, prod / 2));
      }
    }
    out.add_term(target, coeff);
  }
  return out;
}

Rat LaurentPolynomial::evaluate(const std::map<VarId, Rat>& point) const {
  Rat total(0);
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (const auto& [v, ed] : e.entries()) {
      auto it = point.find(v);
      if (it == point.end())
        throw ZfError(ErrorCode::MissingAssignment, "no value for " + v.name());
      if (it->second == 0) {
        if (ed < 0)
          throw ZfError(ErrorCode::DivisionByZero,
                        v.name() + "^negative at 0");
        term = 0;
        break;
      }
      term *= rat_pow_half(it->second, ed);
    }
    total += term;
  }
  return total;
}

namespace {

std::string render_exponent(std::int64_t doubled) {
  if (doubled % 2 == 0) return "^" + std::to_string(doubled / 2);
  return "^{" + std::to_string(doubled) + "/2}";
}

std::string render_monomial(const ExponentVector& e) {
  std::string out;
  for (const auto& [v, ed] : e.entries()) {
    if (!out.empty()) out += "*";
    out += v.name();
    if (ed != 2) out += render_exponent(ed);
  }
  return out;
}

}  // namespace

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
      first = false;
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    std::string mono = render_monomial(e);
    if (mono.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

LaurentPolynomial one_minus(const Monomial& mono) {
  LaurentPolynomial out = LaurentPolynomial::one();
  out -= LaurentPolynomial::monomial(mono.coeff, mono.exps);
  return out;
}

}  // namespace zetaforge

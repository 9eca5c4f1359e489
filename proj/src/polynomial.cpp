#include "tamekit/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tamekit/errors.hpp"

namespace tamekit {

namespace {

void require_same_arity(const Polynomial& a, const Polynomial& b, const char* op) {
  if (a.arity() != b.arity()) {
    throw ArityError(std::string(op) + ": arity mismatch (" + std::to_string(a.arity()) +
                     " vs " + std::to_string(b.arity()) + ")");
  }
}

// Merges two canonical term lists as a + sign * b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    int c = grevlex_compare(a[i].exponents, b[j].exponents);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (sgn(s) != 0) out.push_back(Term{a[i].exponents, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coeff = -out.back().coeff;
  }
  return out;
}

}  // namespace

std::uint64_t Exponents::total() const noexcept {
  std::uint64_t s = 0;
  for (auto v : e_) s += v;
  return s;
}

bool Exponents::is_zero() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](value_type v) { return v == 0; });
}

bool Exponents::divides(const Exponents& other) const {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

Exponents operator+(const Exponents& a, const Exponents& b) {
  Exponents r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r.e_[i] += b.e_[i];
  return r;
}

Exponents operator-(const Exponents& a, const Exponents& b) {
  Exponents r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r.e_[i] -= b.e_[i];
  return r;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.e_[i] != 0 && b.e_[i] != 0) return false;
  }
  return true;
}

int grevlex_compare(const Exponents& a, const Exponents& b) {
  auto da = a.total();
  auto db = b.total();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
    return grevlex_compare(x.exponents, y.exponents) > 0;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = terms[i].coeff;
    sum.canonicalize();
    while (j < terms.size() && terms[j].exponents == terms[i].exponents) {
      Rational next = terms[j].coeff;
      next.canonicalize();
      sum += next;
      ++j;
    }
    if (sgn(sum) != 0) {
      if (out != i) terms[out].exponents = std::move(terms[i].exponents);
      terms[out].coeff = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

Polynomial Polynomial::constant(std::size_t arity, const Rational& c) {
  Polynomial p(arity);
  if (sgn(c) != 0) p.terms_.push_back(Term{Exponents(arity), c});
  if (!p.terms_.empty()) p.terms_[0].coeff.canonicalize();
  return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw ArityError("variable index " + std::to_string(index) + " out of range");
  Exponents e(arity);
  e[index] = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
  Polynomial p(e.size());
  if (sgn(c) != 0) p.terms_.push_back(Term{e, c});
  if (!p.terms_.empty()) p.terms_[0].coeff.canonicalize();
  return p;
}

Polynomial Polynomial::from_terms(std::size_t arity, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.exponents.size() != arity) throw ArityError("from_terms: exponent vector of wrong length");
  }
  canonicalize(terms);
  Polynomial p(arity);
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponents.is_zero());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

Rational Polynomial::coefficient(const Exponents& e) const {
  for (const auto& t : terms_) {
    if (t.exponents == e) return t.coeff;
  }
  return 0;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().exponents.is_zero()) return terms_.back().coeff;
  return 0;
}

Degree Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return static_cast<long>(terms_.front().exponents.total());
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.exponents[var]);
  return d;
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [var](const Term& t) { return t.exponents[var] != 0; });
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(arity_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= arity_) throw ArityError("derivative: variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    auto k = t.exponents[var];
    if (k == 0) continue;
    Term d{t.exponents, t.coeff * k};
    d.exponents[var] = k - 1;
    out.push_back(std::move(d));
  }
  return from_terms(arity_, std::move(out));
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  Integer den = 1;
  for (const auto& t : terms_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Integer g = 0;
  for (const auto& t : terms_) {
    Integer num = t.coeff.get_num() * (den / t.coeff.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  Rational scale(den, g);
  scale.canonicalize();
  if (sgn(terms_.front().coeff) < 0) scale = -scale;
  Polynomial r = *this;
  r *= scale;
  return r;
}

Polynomial Polynomial::monic() const {
  const Rational lc = leading_term().coeff;
  Polynomial r = *this;
  r *= Rational(1 / lc);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_arity(*this, other, "add");
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_arity(*this, other, "subtract");
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  Rational factor = c;
  factor.canonicalize();
  for (auto& t : terms_) t.coeff *= factor;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_arity(a, b, "mul");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.arity());
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      out.push_back(Term{s.exponents + t.exponents, s.coeff * t.coeff});
    }
  }
  return Polynomial::from_terms(a.arity(), std::move(out));
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

std::optional<Polynomial> exact_div(const Polynomial& p, const Polynomial& d) {
  require_same_arity(p, d, "exact_div");
  if (d.is_zero()) throw std::domain_error("exact_div: division by the zero polynomial");
  const Term& lead = d.leading_term();
  std::vector<Term> quotient;
  Polynomial rest = p;
  // If d | p then every intermediate remainder is a multiple of d, so its
  // leading monomial must be divisible by lm(d).
  while (!rest.is_zero()) {
    const Term& top = rest.leading_term();
    if (!lead.exponents.divides(top.exponents)) return std::nullopt;
    Term q{top.exponents - lead.exponents, top.coeff / lead.coeff};
    rest -= Polynomial::monomial(q.exponents, q.coeff) * d;
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_terms(p.arity(), std::move(quotient));
}

Degree total_degree(const Polynomial& p) { return p.total_degree(); }

std::vector<Polynomial> gradient(const Polynomial& p) {
  std::vector<Polynomial> g;
  g.reserve(p.arity());
  for (std::size_t i = 0; i < p.arity(); ++i) g.push_back(p.derivative(i));
  return g;
}

Polynomial rename_extend(const Polynomial& p, std::size_t target_arity,
                         std::span<const std::size_t> slots) {
  if (slots.size() != p.arity()) throw ArityError("rename_extend: need one slot per variable");
  if (target_arity < p.arity()) throw ArityError("rename_extend: target arity too small");
  std::vector<bool> used(target_arity, false);
  for (auto s : slots) {
    if (s >= target_arity) throw ArityError("rename_extend: slot out of range");
    if (used[s]) throw ArityError("rename_extend: slot assignment is not injective");
    used[s] = true;
  }
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Exponents e(target_arity);
    for (std::size_t i = 0; i < slots.size(); ++i) e[slots[i]] = t.exponents[i];
    out.push_back(Term{std::move(e), t.coeff});
  }
  return Polynomial::from_terms(target_arity, std::move(out));
}

}  // namespace tamekit

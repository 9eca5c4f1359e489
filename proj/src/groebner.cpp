#include "tamekit/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "tamekit/errors.hpp"

namespace tamekit {

namespace {

OrderedTerms to_ordered(const Polynomial& p, const MonomialOrder& order) {
  OrderedTerms t = p.terms();
  if (order.kind() != MonomialOrder::Kind::grevlex) {
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) {
      return order.greater(a.exponents, b.exponents);
    });
  }
  return t;
}

Polynomial from_ordered(std::size_t arity, OrderedTerms t) {
  return Polynomial::from_terms(arity, std::move(t));
}

// ca * x^sa * a[a0..] + cb * x^sb * b[b0..], both inputs sorted descending.
// Multiplying by a monomial keeps a term list sorted under any term order.
OrderedTerms combine(const Rational& ca, const Exponents* sa, const OrderedTerms& a, std::size_t a0,
                     const Rational& cb, const Exponents* sb, const OrderedTerms& b, std::size_t b0,
                     const MonomialOrder& order) {
  OrderedTerms out;
  out.reserve(a.size() - a0 + b.size() - b0);
  auto shifted = [](const Term& t, const Exponents* s, const Rational& c) {
    return Term{s ? t.exponents + *s : t.exponents, t.coeff * c};
  };
  std::size_t i = a0;
  std::size_t j = b0;
  while (i < a.size() && j < b.size()) {
    Term ta = shifted(a[i], sa, ca);
    Term tb = shifted(b[j], sb, cb);
    int c = order.compare(ta.exponents, tb.exponents);
    if (c > 0) {
      out.push_back(std::move(ta));
      ++i;
    } else if (c < 0) {
      out.push_back(std::move(tb));
      ++j;
    } else {
      ta.coeff += tb.coeff;
      if (sgn(ta.coeff) != 0) out.push_back(std::move(ta));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(shifted(a[i], sa, ca));
  for (; j < b.size(); ++j) out.push_back(shifted(b[j], sb, cb));
  return out;
}

void make_primitive(OrderedTerms& t) {
  if (t.empty()) return;
  Integer den = 1;
  for (const auto& term : t) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), term.coeff.get_den_mpz_t());
  Integer g = 0;
  for (const auto& term : t) {
    Integer num = term.coeff.get_num() * (den / term.coeff.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  Rational scale(den, g);
  scale.canonicalize();
  if (sgn(t.front().coeff) < 0) scale = -scale;
  for (auto& term : t) term.coeff *= scale;
}

void make_monic(OrderedTerms& t) {
  if (t.empty()) return;
  Rational inv = 1 / t.front().coeff;
  for (auto& term : t) term.coeff *= inv;
}

struct CofactorTerm {
  std::size_t index;
  Exponents shift;
  Rational coeff;
};

// Complete reduction of f by the list g (skipping index `skip`).
OrderedTerms reduce(OrderedTerms f, const std::vector<OrderedTerms>& g, const MonomialOrder& order,
                    std::size_t skip = static_cast<std::size_t>(-1),
                    std::vector<CofactorTerm>* cofactors = nullptr) {
  OrderedTerms rem;
  const Rational one = 1;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const Term& lt = f[pos];
    std::size_t k = 0;
    for (; k < g.size(); ++k) {
      if (k != skip && !g[k].empty() && g[k].front().exponents.divides(lt.exponents)) break;
    }
    if (k == g.size()) {
      rem.push_back(std::move(f[pos]));
      ++pos;
      continue;
    }
    Rational c = lt.coeff / g[k].front().coeff;
    Exponents shift = lt.exponents - g[k].front().exponents;
    if (cofactors) cofactors->push_back(CofactorTerm{k, shift, c});
    Rational neg = -c;
    f = combine(one, nullptr, f, pos + 1, neg, &shift, g[k], 1, order);
    pos = 0;
  }
  return rem;
}

}  // namespace

bool GroebnerBasis::is_unit() const {
  return basis_.size() == 1 && basis_.front().is_constant() && !basis_.front().is_zero();
}

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  if (p.arity() != arity_) {
    throw ArityError("normal_form: polynomial arity " + std::to_string(p.arity()) +
                     " differs from basis arity " + std::to_string(arity_));
  }
  return from_ordered(arity_, reduce(to_ordered(p, order_), ordered_, order_));
}

GroebnerBasis::Division GroebnerBasis::divide(const Polynomial& p) const {
  if (p.arity() != arity_) throw ArityError("divide: arity mismatch");
  std::vector<CofactorTerm> record;
  OrderedTerms rem = reduce(to_ordered(p, order_), ordered_, order_, static_cast<std::size_t>(-1), &record);
  std::vector<std::vector<Term>> parts(ordered_.size());
  for (auto& r : record) parts[r.index].push_back(Term{std::move(r.shift), std::move(r.coeff)});
  Division d{from_ordered(arity_, std::move(rem)), {}};
  for (auto& part : parts) d.cofactors.push_back(Polynomial::from_terms(arity_, std::move(part)));
  return d;
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         const GroebnerOptions& options) {
  if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
  const std::size_t arity = gens.front().arity();
  for (const auto& g : gens) {
    if (g.arity() != arity) throw ArityError("buchberger: generators of different arity");
  }

  GroebnerBasis result;
  result.arity_ = arity;
  result.order_ = order;
  result.generators_.assign(gens.begin(), gens.end());

  std::vector<OrderedTerms> g;
  struct Pair {
    std::size_t i;
    std::size_t j;
    Exponents lcm;
  };
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;
  bool unit = false;

  auto insert = [&](OrderedTerms h) {
    make_primitive(h);
    if (h.front().exponents.is_zero()) unit = true;
    const std::size_t idx = g.size();
    for (std::size_t k = 0; k < idx; ++k) {
      pending.push_back(Pair{k, idx, lcm(g[k].front().exponents, h.front().exponents)});
      pending_keys.emplace(k, idx);
    }
    g.push_back(std::move(h));
  };

  for (const auto& gen : gens) {
    if (!gen.is_zero() && !unit) insert(to_ordered(gen, order));
  }
  if (g.empty()) throw std::invalid_argument("buchberger: all generators are zero");

  std::size_t steps = 0;
  const Rational one = 1;
  while (!pending.empty() && !unit) {
    // Normal strategy: smallest lcm first, ties broken by index.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pending.size(); ++k) {
      int c = order.compare(pending[k].lcm, pending[best].lcm);
      if (c < 0 || (c == 0 && std::tie(pending[k].j, pending[k].i) <
                                  std::tie(pending[best].j, pending[best].i))) {
        best = k;
      }
    }
    Pair pr = std::move(pending[best]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    pending_keys.erase({pr.i, pr.j});

    const Exponents& lmi = g[pr.i].front().exponents;
    const Exponents& lmj = g[pr.j].front().exponents;
    if (coprime(lmi, lmj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!g[k].front().exponents.divides(pr.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = !pending_keys.count(key(pr.i, k)) && !pending_keys.count(key(pr.j, k));
    }
    if (chain) continue;

    if (++steps > options.step_budget) {
      throw BudgetExceeded("buchberger: step budget of " + std::to_string(options.step_budget) +
                           " S-polynomial reductions exceeded");
    }
    Exponents si = pr.lcm - lmi;
    Exponents sj = pr.lcm - lmj;
    Rational ci = one / g[pr.i].front().coeff;
    Rational cj = -one / g[pr.j].front().coeff;
    OrderedTerms s = combine(ci, &si, g[pr.i], 1, cj, &sj, g[pr.j], 1, order);
    OrderedTerms h = reduce(std::move(s), g, order);
    if (!h.empty()) insert(std::move(h));
  }
  result.steps_ = steps;

  std::vector<OrderedTerms> reduced;
  if (unit) {
    reduced.push_back(OrderedTerms{Term{Exponents(arity), 1}});
  } else {
    // Minimal basis: drop elements whose leading monomial is divisible by another's.
    std::vector<std::size_t> idx(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) idx[k] = k;
    std::vector<OrderedTerms> minimal;
    for (std::size_t a : idx) {
      bool redundant = false;
      for (std::size_t b : idx) {
        if (a == b) continue;
        const auto& la = g[a].front().exponents;
        const auto& lb = g[b].front().exponents;
        if (lb.divides(la) && (!(la == lb) || b < a)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(g[a]);
    }
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      OrderedTerms r = reduce(minimal[k], minimal, order, k);
      make_monic(r);
      reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const OrderedTerms& a, const OrderedTerms& b) {
      return order.compare(a.front().exponents, b.front().exponents) < 0;
    });
  }
  for (const auto& r : reduced) result.basis_.push_back(from_ordered(arity, r));
  result.ordered_ = std::move(reduced);
  return result;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) { return gb.normal_form(p); }

Ideal::Ideal(std::size_t arity, std::span<const Polynomial> gens, const MonomialOrder& order,
             const GroebnerOptions& options)
    : arity_(arity) {
  for (const auto& g : gens) {
    if (g.arity() != arity) throw ArityError("Ideal: generator arity mismatch");
  }
  bool any = std::any_of(gens.begin(), gens.end(), [](const Polynomial& p) { return !p.is_zero(); });
  if (any) gb_ = buchberger(gens, order, options);
}

Polynomial Ideal::normal_form(const Polynomial& p) const {
  if (p.arity() != arity_) throw ArityError("Ideal::normal_form: arity mismatch");
  return gb_ ? gb_->normal_form(p) : p;
}

bool ideal_member(const Polynomial& p, std::span<const Polynomial> gens, const GroebnerOptions& options) {
  return Ideal(p.arity(), gens, MonomialOrder::grevlex(), options).contains(p);
}

bool ideal_equal(std::span<const Polynomial> gens1, std::span<const Polynomial> gens2,
                 const GroebnerOptions& options) {
  std::size_t arity = !gens1.empty() ? gens1.front().arity() : (!gens2.empty() ? gens2.front().arity() : 0);
  Ideal a(arity, gens1, MonomialOrder::grevlex(), options);
  Ideal b(arity, gens2, MonomialOrder::grevlex(), options);
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.basis()->basis() == b.basis()->basis();
}

}  // namespace tamekit

#include "tamekit/reduce2.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "tamekit/errors.hpp"

namespace tamekit {

namespace {

using XYMonomial = std::pair<unsigned, unsigned>;

long degree_of(const Polynomial& p) { return p.total_degree().value_or(-1); }

void require_two_vars(const Polynomial& p, const char* who) {
  if (p.arity() != 2) throw ArityError(std::string(who) + ": expected a polynomial in two variables");
}

// Splits P in K[x, y, u_1..u_k] into its coefficients in K[u_1..u_k], keyed by
// the (x, y) monomial.
std::map<XYMonomial, Polynomial> coefficients_in_xy(const Polynomial& big) {
  const std::size_t k = big.arity() - 2;
  std::map<XYMonomial, std::vector<Term>> parts;
  for (const auto& t : big.terms()) {
    Exponents rest(k);
    for (std::size_t i = 0; i < k; ++i) rest[i] = t.exponents[2 + i];
    parts[{t.exponents[0], t.exponents[1]}].push_back(Term{std::move(rest), t.coeff});
  }
  std::map<XYMonomial, Polynomial> out;
  for (auto& [mono, terms] : parts) {
    Polynomial c = Polynomial::from_terms(k, std::move(terms));
    if (!c.is_zero()) out.emplace(mono, std::move(c));
  }
  return out;
}

Polynomial unknown(std::size_t arity, std::size_t index) { return Polynomial::variable(arity, index); }

// Polynomial in x, y (arity 2) from coefficients on powers of one variable.
Polynomial power_series(std::size_t var, const std::vector<Rational>& coeffs, std::size_t first_power) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Exponents e(2);
    e[var] = static_cast<std::uint32_t>(first_power + k);
    terms.push_back(Term{std::move(e), coeffs[k]});
  }
  return Polynomial::from_terms(2, std::move(terms));
}

// Image of p under target -> target + sum_k u_{offset+k} * other^(first+k),
// in the ring K[x, y, unknowns...] of the given arity.
Polynomial symbolic_shear(const Polynomial& p, std::size_t target, std::size_t arity, std::size_t offset,
                          std::size_t count, std::size_t first_power) {
  const std::size_t other = 1 - target;
  Polynomial addend(arity);
  for (std::size_t k = 0; k < count; ++k) {
    addend += unknown(arity, offset + k) * Polynomial::variable(arity, other).pow(static_cast<unsigned>(first_power + k));
  }
  std::vector<Polynomial> images{Polynomial::variable(arity, 0), Polynomial::variable(arity, 1)};
  images[target] += addend;
  return substitute(p, PolyMap(arity, std::move(images)));
}

}  // namespace

std::optional<ReductionStep> try_reduce_degree(const Polynomial& p, const Reduce2Options& options) {
  require_two_vars(p, "try_reduce_degree");
  if (p.is_constant() || p.is_zero()) throw std::invalid_argument("try_reduce_degree: constant polynomial");
  const long d = degree_of(p);
  const unsigned bound = options.search_bound ? options.search_bound : static_cast<unsigned>(d);
  for (std::size_t target : {0u, 1u}) {
    for (unsigned e = 1; e <= bound; ++e) {
      // A constant term in the addend is a translation composed on the right;
      // translations keep the degree, so it is left out.
      const Polynomial big = symbolic_shear(p, target, 2 + e, 2, e, 1);
      std::vector<Polynomial> eqs;
      for (auto& [mono, coeff] : coefficients_in_xy(big)) {
        if (static_cast<long>(mono.first + mono.second) >= d) eqs.push_back(std::move(coeff));
      }
      if (eqs.empty()) continue;
      auto point = rational_point(eqs, options.solve);
      if (!point) continue;
      Elementary gen{target, power_series(1 - target, *point, 1)};
      const Polynomial image = substitute(p, generator_map(gen, 2));
      const long after = degree_of(image);
      if (after >= d) throw std::logic_error("try_reduce_degree: solution does not lower the degree");
      return ReductionStep{std::move(gen), d, after};
    }
  }
  return std::nullopt;
}

Reduction reduce_fully(const Polynomial& p, const Reduce2Options& options) {
  require_two_vars(p, "reduce_fully");
  Reduction r{TameWord(2), p, {}};
  while (!r.result.is_zero() && !r.result.is_constant()) {
    auto step = try_reduce_degree(r.result, options);
    if (!step) break;
    r.result = substitute(r.result, generator_map(step->gen, 2));
    r.word.push_back(step->gen);
    r.steps.push_back(std::move(*step));
  }
  return r;
}

namespace {

struct Family {
  // Unknown ring layout: index 0 is the Rabinowitsch variable for the
  // coefficient of the dominating monomial, then family-specific unknowns.
  std::size_t unknowns;
  std::function<Polynomial(const Polynomial&)> image;       // in K[x, y, unknowns]
  std::vector<Polynomial> extra;                            // in K[unknowns]
  std::function<TameGen(const std::vector<Rational>&)> gen;
};

std::optional<std::pair<TameGen, Exponents>> search_family(const Polynomial& r, long d, const Family& fam,
                                                           const SolveOptions& solve) {
  const Polynomial big = fam.image(r);
  const auto coeffs = coefficients_in_xy(big);
  for (long i = 1; i < d; ++i) {
    const XYMonomial m{static_cast<unsigned>(i), static_cast<unsigned>(d - i)};
    auto lead = coeffs.find(m);
    if (lead == coeffs.end()) continue;
    std::vector<Polynomial> eqs = fam.extra;
    for (const auto& [mono, c] : coeffs) {
      if (mono.first > m.first || mono.second > m.second) eqs.push_back(c);
    }
    eqs.push_back(unknown(fam.unknowns, 0) * lead->second - Polynomial::constant(fam.unknowns, 1));
    auto point = rational_point(eqs, solve);
    if (!point) continue;
    Exponents e(2);
    e[0] = m.first;
    e[1] = m.second;
    return std::make_pair(fam.gen(*point), e);
  }
  return std::nullopt;
}

}  // namespace

std::optional<DominatingForm> to_dominating_form(const Polynomial& p, const Reduce2Options& options) {
  require_two_vars(p, "to_dominating_form");
  if (p.is_zero()) throw std::invalid_argument("to_dominating_form: zero polynomial");
  Reduction red = reduce_fully(p, options);
  const Polynomial& r = red.result;
  const long d = degree_of(r);

  auto finish = [&](TameWord word, Polynomial q) {
    auto dom = dominating_check(q);
    if (!dom) throw std::logic_error("to_dominating_form: result has no dominating monomial");
    DominatingForm f{std::move(word), std::move(q), *dom, hadas_check(p), PassesNecessary{}};
    f.output_hadas = hadas_check(f.result);
    if (!std::holds_alternative<NotCoordinate>(f.output_hadas)) {
      throw std::logic_error("to_dominating_form: dominating form passes the Hadas test");
    }
    return f;
  };

  if (dominating_check(r)) return finish(red.word, r);
  if (d < 2) return std::nullopt;

  std::vector<Family> families;
  // x -> x + b*y, y -> c*x + y with t*(1 - b*c) = 1; unknowns (s, t, b, c).
  families.push_back(Family{
      4,
      [](const Polynomial& q) {
        const std::size_t a = 6;
        std::vector<Polynomial> images{
            Polynomial::variable(a, 0) + unknown(a, 4) * Polynomial::variable(a, 1),
            unknown(a, 5) * Polynomial::variable(a, 0) + Polynomial::variable(a, 1)};
        return substitute(q, PolyMap(a, std::move(images)));
      },
      {unknown(4, 1) * (Polynomial::constant(4, 1) - unknown(4, 2) * unknown(4, 3)) - Polynomial::constant(4, 1)},
      [](const std::vector<Rational>& v) -> TameGen {
        return Linear{RationalMatrix{{1, v[2]}, {v[3], 1}}};
      }});
  const unsigned bound = options.search_bound ? options.search_bound : static_cast<unsigned>(d);
  for (std::size_t target : {0u, 1u}) {
    for (unsigned e = 1; e <= bound; ++e) {
      // target -> target + a_0 + a_1*other + ... + a_e*other^e; unknowns (s, a_0..a_e).
      families.push_back(Family{
          e + 2,
          [target, e](const Polynomial& q) { return symbolic_shear(q, target, 2 + e + 2, 3, e + 1, 0); },
          {},
          [target](const std::vector<Rational>& v) -> TameGen {
            return Elementary{target, power_series(1 - target, std::vector<Rational>(v.begin() + 1, v.end()), 0)};
          }});
    }
  }

  for (const auto& fam : families) {
    auto hit = search_family(r, d, fam, options.solve);
    if (!hit) continue;
    TameWord word = red.word;
    word.push_back(hit->first);
    Polynomial q = substitute(r, generator_map(hit->first, 2));
    return finish(std::move(word), std::move(q));
  }
  return std::nullopt;
}

}  // namespace tamekit

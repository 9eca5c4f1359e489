#include "tamekit/solve.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tamekit/errors.hpp"

namespace tamekit {

namespace {

// Positive divisors by trial division; a cofactor left after the trial bound
// is treated as prime, which can only lose candidates, never add wrong ones.
std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<std::pair<Integer, unsigned>> factors;
  for (Integer d = 2; d * d <= n && d < 1000000; ++d) {
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    if (k) factors.emplace_back(d, k);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Integer> out{1};
  for (const auto& [prime, mult] : factors) {
    const std::size_t base = out.size();
    Integer pw = 1;
    for (unsigned k = 1; k <= mult; ++k) {
      pw *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
    }
  }
  return out;
}

Rational evaluate(const std::vector<Integer>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

Polynomial plug_value(const Polynomial& p, std::size_t var, const Rational& value) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Term u = t;
    if (u.exponents[var]) {
      Rational r = 1;
      for (unsigned k = 0; k < u.exponents[var]; ++k) r *= value;
      u.coeff *= r;
      u.exponents[var] = 0;
    }
    terms.push_back(std::move(u));
  }
  return Polynomial::from_terms(p.arity(), std::move(terms));
}

class PointSearch {
 public:
  PointSearch(std::size_t arity, const SolveOptions& options) : arity_(arity), options_(options) {}

  bool solve(std::vector<Polynomial> eqs, std::vector<std::optional<Rational>>& assign) {
    if (++nodes_ > kNodeBudget) throw BudgetExceeded("rational_point: search node budget exhausted");
    std::erase_if(eqs, [](const Polynomial& p) { return p.is_zero(); });
    for (const auto& e : eqs) {
      if (e.is_constant()) return false;
    }
    std::optional<std::size_t> var;
    for (std::size_t i = arity_; i-- > 0;) {
      if (!assign[i]) {
        var = i;
        break;
      }
    }
    if (!var) return eqs.empty();
    if (eqs.empty()) {
      for (auto& a : assign) {
        if (!a) a = options_.free_values.empty() ? Rational(0) : options_.free_values.front();
      }
      return true;
    }
    const GroebnerBasis gb = buchberger(eqs, MonomialOrder::lex(), options_.groebner);
    if (gb.is_unit()) return false;

    std::vector<Rational> candidates = options_.free_values;
    for (const auto& g : gb.basis()) {
      bool univariate = true;
      for (std::size_t i = 0; i < arity_ && univariate; ++i) univariate = i == *var || !g.involves(i);
      if (univariate) {
        candidates = rational_roots(g, *var);
        break;
      }
    }
    for (const auto& c : candidates) {
      std::vector<Polynomial> next;
      next.reserve(gb.basis().size());
      for (const auto& g : gb.basis()) next.push_back(plug_value(g, *var, c));
      assign[*var] = c;
      if (solve(std::move(next), assign)) return true;
      for (std::size_t i = 0; i <= *var; ++i) assign[i].reset();
    }
    assign[*var].reset();
    return false;
  }

 private:
  static constexpr std::size_t kNodeBudget = 5000;
  std::size_t arity_;
  const SolveOptions& options_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  for (std::size_t i = 0; i < p.arity(); ++i) {
    if (i != var && p.involves(i)) throw std::invalid_argument("rational_roots: polynomial is not univariate");
  }
  const Polynomial prim = p.primitive();
  std::vector<Integer> coeffs(prim.degree_in(var) + 1, 0);
  for (const auto& t : prim.terms()) coeffs[t.exponents[var]] = t.coeff.get_num();
  std::set<Rational> roots;
  std::size_t low = 0;
  while (coeffs[low] == 0) ++low;
  if (low > 0) roots.insert(0);
  std::vector<Integer> reduced(coeffs.begin() + static_cast<std::ptrdiff_t>(low), coeffs.end());
  if (reduced.size() > 1) {
    const auto nums = divisors(reduced.front());
    const auto dens = divisors(reduced.back());
    for (const auto& a : nums) {
      for (const auto& b : dens) {
        for (int sign : {1, -1}) {
          Rational cand(a * sign, b);
          cand.canonicalize();
          if (!roots.count(cand) && sgn(evaluate(reduced, cand)) == 0) roots.insert(cand);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

std::optional<std::vector<Rational>> rational_point(std::span<const Polynomial> equations,
                                                    const SolveOptions& options) {
  if (equations.empty()) throw std::invalid_argument("rational_point: no equations");
  const std::size_t arity = equations.front().arity();
  for (const auto& e : equations) {
    if (e.arity() != arity) throw ArityError("rational_point: equations of different arity");
  }
  std::vector<std::optional<Rational>> assign(arity);
  PointSearch search(arity, options);
  if (!search.solve({equations.begin(), equations.end()}, assign)) return std::nullopt;
  std::vector<Rational> point;
  for (auto& a : assign) point.push_back(*a);
  for (const auto& e : equations) {
    Polynomial v = e;
    for (std::size_t i = 0; i < arity; ++i) v = plug_value(v, i, point[i]);
    if (!v.is_zero()) throw std::logic_error("rational_point: candidate point fails an equation");
  }
  return point;
}

}  // namespace tamekit

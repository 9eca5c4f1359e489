#include <doctest.h>

#include <functional>

#include "support.hpp"
#include "tamekit/errors.hpp"
#include "tamekit/groebner.hpp"

using namespace tamekit;
using tamekit::testing::poly;

namespace {

const VarNames xyz{"x", "y", "z"};
const VarNames xy{"x", "y"};

using Cmp = std::function<int(const Exponents&, const Exponents&)>;

int lex_cmp(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

const Term& lead(const Polynomial& p, const Cmp& cmp) {
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms()) {
    if (cmp(t.exponents, best->exponents) > 0) best = &t;
  }
  return *best;
}

// Textbook multivariate division; remainder only.
Polynomial naive_remainder(Polynomial p, const std::vector<Polynomial>& divisors, const Cmp& cmp) {
  Polynomial rem(p.arity());
  while (!p.is_zero()) {
    const Term lt = lead(p, cmp);
    bool divided = false;
    for (const auto& g : divisors) {
      const Term& lg = lead(g, cmp);
      if (lg.exponents.divides(lt.exponents)) {
        p -= Polynomial::monomial(lt.exponents - lg.exponents, lt.coeff / lg.coeff) * g;
        divided = true;
        break;
      }
    }
    if (!divided) {
      const Polynomial m = Polynomial::monomial(lt.exponents, lt.coeff);
      rem += m;
      p -= m;
    }
  }
  return rem;
}

// Buchberger's criterion checked with the textbook division above.
bool is_groebner(const std::vector<Polynomial>& basis, const Cmp& cmp) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Term& a = lead(basis[i], cmp);
      const Term& b = lead(basis[j], cmp);
      const Exponents l = lcm(a.exponents, b.exponents);
      const Polynomial s = Polynomial::monomial(l - a.exponents, 1 / a.coeff) * basis[i] -
                           Polynomial::monomial(l - b.exponents, 1 / b.coeff) * basis[j];
      if (!naive_remainder(s, basis, cmp).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Polynomial> polys(std::initializer_list<const char*> texts, const VarNames& vars) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(poly(t, vars));
  return out;
}

}  // namespace

TEST_CASE("reduced basis examples") {
  CHECK(buchberger(polys({"x*y - 1"}, xy)).basis() == polys({"x*y - 1"}, xy));
  CHECK(buchberger(polys({"x^2", "x*y"}, xy)).basis() == polys({"x*y", "x^2"}, xy));
  const auto one = buchberger(polys({"x*(1 + x*y + z^2) - 1", "x*y*(1 + x*y + z^2) - y"}, xyz));
  const auto two = buchberger(polys({"x*(1 + x*y + z^2) - 1"}, xyz));
  CHECK(one.basis() == two.basis());
  CHECK(buchberger(polys({"2*x - 4"}, xy)).basis() == polys({"x - 2"}, xy));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(buchberger(std::vector<Polynomial>{}), std::invalid_argument);
  CHECK_THROWS_AS(buchberger(std::vector<Polynomial>{Polynomial(2)}), std::invalid_argument);
  const std::vector<Polynomial> mixed{poly("x", xy), poly("x", xyz)};
  CHECK_THROWS_AS(buchberger(mixed), ArityError);
}

TEST_CASE("step budget") {
  const auto gens = polys({"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"}, xy);
  CHECK_THROWS_AS(buchberger(gens, MonomialOrder::grevlex(), GroebnerOptions{1}), BudgetExceeded);
  CHECK_NOTHROW(buchberger(gens));
}

TEST_CASE("normal forms") {
  const VarNames v{"x2", "y2", "z2", "v"};
  const Polynomial q = poly("x2^2*y2 - z2^2 + 1", v);
  const auto gb = buchberger(std::vector<Polynomial>{q});
  CHECK(normal_form(q, gb).is_zero());
  const Polynomial py = poly("x2*v^2 + 2*z2*v + x2*y2", v);
  const Polynomial pz = poly("x2*v + z2", v);
  const Polynomial pu = poly("x2*v^3 + 3*z2*v^2 + 3*x2*y2*v + y2*z2", v);
  CHECK(normal_form(py * pz - poly("x2", v) * pu - poly("2*v", v), gb).is_zero());
  CHECK(normal_form(poly("y2*z2^2 - x2^2*y2^2 - y2", v), gb).is_zero());
}

TEST_CASE("membership and equality examples") {
  const Polynomial p = poly("x^2 - y*z + 3", xyz);
  const Polynomial h = poly("x*z - 2", xyz);
  CHECK(ideal_member(p * h, std::vector<Polynomial>{p}));
  CHECK_FALSE(ideal_member(Polynomial::constant(2, 1), polys({"x", "y"}, xy)));
  CHECK(ideal_member(Polynomial(2), std::vector<Polynomial>{}));
  CHECK_FALSE(ideal_member(poly("x", xy), std::vector<Polynomial>{}));

  const std::vector<Polynomial> single{p};
  const std::vector<Polynomial> doubled{p * Rational(2)};
  CHECK(ideal_equal(single, doubled));
  CHECK_FALSE(ideal_equal(polys({"x"}, xy), polys({"x^2"}, xy)));
  const VarNames yx{"y", "x1"};
  CHECK(ideal_equal(polys({"y*(x1^2 + 1) - 1"}, yx), polys({"y*(x1^2 + 1) - 1", "y^2*(x1^2 + 1) - y"}, yx)));
}

TEST_CASE("division identity") {
  testing::Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial> gens{testing::random_poly(rng, 3, 2, 3), testing::random_poly(rng, 3, 2, 3)};
    if (gens[0].is_constant() || gens[1].is_constant()) continue;
    const auto gb = buchberger(gens);
    const Polynomial p = testing::random_poly(rng, 3, 4, 6);
    const auto div = gb.divide(p);
    Polynomial recombined = div.remainder;
    for (std::size_t i = 0; i < div.cofactors.size(); ++i) recombined += div.cofactors[i] * gb.basis()[i];
    CHECK(recombined == p);
    CHECK(div.remainder == gb.normal_form(p));
  }
}

TEST_CASE("bases satisfy the S-pair criterion under textbook division") {
  testing::Rng rng(22);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t arity = static_cast<std::size_t>(rng.range(2, 3));
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(testing::random_poly(rng, arity, 2, 3));
    const auto grevlex = buchberger(gens);
    CHECK(is_groebner(grevlex.basis(), grevlex_compare));
    const auto lex = buchberger(gens, MonomialOrder::lex());
    CHECK(is_groebner(lex.basis(), lex_cmp));
    // Same ideal, whatever the order.
    CHECK(ideal_equal(grevlex.basis(), lex.basis()));
    for (const auto& g : gens) {
      CHECK(grevlex.contains(g));
      CHECK(lex.contains(g));
      CHECK(naive_remainder(g, grevlex.basis(), grevlex_compare).is_zero());
    }
    ++checked;
  }
  CHECK(checked == 40);
}

TEST_CASE("reduced basis invariants") {
  testing::Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(testing::random_poly(rng, 3, 3, 3));
    const auto gb = buchberger(gens);
    for (std::size_t i = 0; i < gb.basis().size(); ++i) {
      const auto& g = gb.basis()[i];
      CHECK(g.leading_term().coeff == 1);
      for (std::size_t j = 0; j < gb.basis().size(); ++j) {
        if (i == j) continue;
        for (const auto& t : gb.basis()[j].terms()) CHECK_FALSE(g.leading_term().exponents.divides(t.exponents));
      }
      if (i > 0) CHECK(grevlex_compare(gb.basis()[i - 1].leading_term().exponents, g.leading_term().exponents) < 0);
    }
  }
}

TEST_CASE("weighted and elimination orders") {
  const auto w = MonomialOrder::weighted({3, 1});
  CHECK(w.greater(Exponents{1, 0}, Exponents{0, 2}));
  CHECK_FALSE(w.greater(Exponents{1, 0}, Exponents{0, 3}));
  const auto e = MonomialOrder::elimination(1);
  CHECK(e.greater(Exponents{1, 0, 0}, Exponents{0, 5, 5}));
  // Eliminating t from <x - t^2, y - t^3> leaves the cusp.
  const VarNames txy{"t", "x", "y"};
  const auto gb = buchberger(polys({"x - t^2", "y - t^3"}, txy), e);
  std::vector<Polynomial> free;
  for (const auto& g : gb.basis()) {
    if (!g.involves(0)) free.push_back(g);
  }
  CHECK(free == polys({"x^3 - y^2"}, txy));
}

TEST_CASE("Ideal wrapper handles the zero ideal") {
  const Ideal zero(2, std::vector<Polynomial>{});
  CHECK(zero.is_zero());
  CHECK(zero.basis() == nullptr);
  CHECK(zero.normal_form(poly("x + 1", xy)) == poly("x + 1", xy));
  const Ideal unit(2, polys({"x", "x + 1"}, xy));
  REQUIRE(unit.basis() != nullptr);
  CHECK(unit.basis()->is_unit());
  CHECK(unit.contains(poly("x*y + 7", xy)));
}

TEST_CASE("principal membership agrees with exact division") {
  testing::Rng rng(24);
  for (int trial = 0; trial < 60; ++trial) {
    const Polynomial g = testing::random_poly(rng, 3, 3, 3);
    if (g.is_zero()) continue;
    const Polynomial p = rng.range(0, 1) ? g * testing::random_poly(rng, 3, 2, 3) : testing::random_poly(rng, 3, 4, 4);
    CHECK(ideal_member(p, std::vector<Polynomial>{g}) == exact_div(p, g).has_value());
  }
}

#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "tamekit/errors.hpp"
#include "tamekit/polymap.hpp"

using namespace tamekit;
using tamekit::testing::poly;

namespace {

const VarNames xyz{"x", "y", "z"};
const VarNames xy{"x", "y"};

bool sorted_descending(const Polynomial& p) {
  return std::is_sorted(p.terms().begin(), p.terms().end(), [](const Term& a, const Term& b) {
    return grevlex_compare(a.exponents, b.exponents) > 0;
  });
}

PolyMap russell_map() {
  const VarNames target{"x2", "y2", "z2", "v"};
  return PolyMap(4, {poly("x2", target), poly("x2*v^2 + 2*z2*v + x2*y2", target), poly("x2*v + z2", target),
                     poly("x2*v^3 + 3*z2*v^2 + 3*x2*y2*v + y2*z2", target)});
}

}  // namespace

TEST_CASE("addition cancels and keeps identities") {
  CHECK(poly("x+y", xy) + poly("x-y", xy) == poly("2*x", xy));
  const Polynomial p = poly("x*y - z^2 + 1", xyz);
  CHECK(p + Polynomial(3) == p);
  CHECK(add(p, poly("z^2 - 1", xyz)) == poly("x*y", xyz));
}

TEST_CASE("multiplication examples") {
  CHECK(poly("x+y", xy) * poly("x-y", xy) == poly("x^2 - y^2", xy));
  const Polynomial p = poly("(x+y)^2", xy) * poly("y^2", xy);
  CHECK(p == poly("x^2*y^2 + 2*x*y^3 + y^4", xy));
  CHECK(mul(p, Polynomial::constant(2, 1)) == p);
}

TEST_CASE("arity mismatch is rejected") {
  CHECK_THROWS_AS(poly("x", xy) + poly("x", xyz), ArityError);
  CHECK_THROWS_AS(poly("x", xy) * poly("x", xyz), ArityError);
}

TEST_CASE("product agrees with the schoolbook oracle and stays canonical") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t arity = static_cast<std::size_t>(rng.range(1, 4));
    const Polynomial a = testing::random_poly(rng, arity, 4, 6);
    const Polynomial b = testing::random_poly(rng, arity, 4, 6);
    const Polynomial c = a * b;
    CHECK(testing::as_map(c) == testing::naive_product(a, b));
    CHECK(sorted_descending(c));
    CHECK(sorted_descending(a + b));
    CHECK(sorted_descending(a - b));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("ring axioms on random polynomials") {
  testing::Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial a = testing::random_poly(rng, 3, 3, 4);
    const Polynomial b = testing::random_poly(rng, 3, 3, 4);
    const Polynomial c = testing::random_poly(rng, 3, 3, 4);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a.pow(3) == a * a * a);
  }
}

TEST_CASE("substitution examples") {
  const VarNames source{"x1", "y1", "z1", "u"};
  const VarNames target{"x2", "y2", "z2", "v"};
  const Polynomial p = poly("x1*y1 - z1^2 + 1", source);
  const Polynomial q = poly("x2^2*y2 - z2^2 + 1", target);
  CHECK(substitute(p, russell_map()) == q);
  CHECK(substitute(p, PolyMap::identity(4)) == p);
  CHECK(substitute(poly("x", xy), PolyMap(2, {poly("x+y^2", xy), poly("y", xy)})) == poly("x+y^2", xy));
}

TEST_CASE("substitution agrees with pointwise evaluation") {
  testing::Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial p = testing::random_poly(rng, 3, 3, 5);
    const PolyMap f = testing::random_map(rng, 3, 2, 2);
    const auto pt = testing::random_point(rng, 2);
    CHECK(testing::evaluate(substitute(p, f), pt) == testing::evaluate(p, testing::evaluate(f, pt)));
  }
}

TEST_CASE("composition is diagrammatic") {
  testing::Rng rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial p = testing::random_poly(rng, 2, 3, 4);
    const PolyMap f = testing::random_map(rng, 2, 3, 2);
    const PolyMap g = testing::random_map(rng, 3, 2, 2);
    const PolyMap h = testing::random_map(rng, 2, 2, 2);
    CHECK(substitute(p, compose_maps(f, g)) == substitute(substitute(p, f), g));
    CHECK(compose_maps(compose_maps(f, g), h) == compose_maps(f, compose_maps(g, h)));
    CHECK(compose_maps(f, PolyMap::identity(3)) == f);
  }
  const PolyMap shear(2, {poly("x+y", xy), poly("y", xy)});
  const PolyMap back(2, {poly("x-y", xy), poly("y", xy)});
  CHECK(compose_maps(shear, back) == PolyMap::identity(2));
  CHECK_THROWS_AS(compose_maps(shear, PolyMap::identity(3)), ArityError);
}

TEST_CASE("exact division") {
  CHECK(exact_div(poly("x^2 - y^2", xy), poly("x - y", xy)) == poly("x + y", xy));
  CHECK_FALSE(exact_div(poly("x*y + 1", xy), poly("x + 1", xy)).has_value());
  const Polynomial image = substitute(poly("x1*y1 - z1^2 + 1", {"x1", "y1", "z1", "u"}), russell_map());
  CHECK(exact_div(image, poly("x2^2*y2 - z2^2 + 1", {"x2", "y2", "z2", "v"})) == Polynomial::constant(4, 1));
  CHECK_THROWS_AS(exact_div(poly("x", xy), Polynomial(2)), std::domain_error);

  testing::Rng rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial d = testing::random_poly(rng, 3, 3, 3);
    const Polynomial h = testing::random_poly(rng, 3, 3, 4);
    if (d.is_zero()) continue;
    CHECK(exact_div(d * h, d) == h);
    if (!d.is_constant()) {
      // d never divides d*h + 1
      CHECK_FALSE(exact_div(d * h + Polynomial::constant(3, 1), d).has_value());
    }
  }
}

TEST_CASE("total degree") {
  CHECK(total_degree(poly("x^2*y^2", xy)) == 4);
  CHECK(total_degree(poly("x*(1 + x*y + z^2) - 1", xyz)) == 3);
  CHECK_FALSE(total_degree(Polynomial(2)).has_value());
  CHECK(total_degree(Polynomial(2)) < total_degree(Polynomial::constant(2, 1)));
}

TEST_CASE("gradient") {
  const VarNames vars{"x", "y", "z1", "z2"};
  const auto g = gradient(poly("1 + x*y + z1^2 + z2^2", vars));
  REQUIRE(g.size() == 4);
  CHECK(g[0] == poly("y", vars));
  CHECK(g[1] == poly("x", vars));
  CHECK(g[2] == poly("2*z1", vars));
  CHECK(g[3] == poly("2*z2", vars));
  for (const auto& d : gradient(Polynomial::constant(3, 7))) CHECK(d.is_zero());
  const auto h = gradient(poly("x^2*y", xy));
  CHECK(h[0] == poly("2*x*y", xy));
  CHECK(h[1] == poly("x^2", xy));
}

TEST_CASE("derivative matches the term-by-term power rule") {
  testing::Rng rng(16);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial p = testing::random_poly(rng, 2, 5, 5);
    Polynomial expected(2);
    for (const auto& t : p.terms()) {
      if (t.exponents[0] == 0) continue;
      Exponents e = t.exponents;
      --e[0];
      expected += Polynomial::monomial(e, t.coeff * t.exponents[0]);
    }
    CHECK(p.derivative(0) == expected);
  }
}

TEST_CASE("jacobian and rank") {
  const PolyMap tri(2, {poly("x", xy), poly("y + x^2", xy)});
  const PolyMatrix j = jacobian(tri);
  CHECK(j[0][0] == Polynomial::constant(2, 1));
  CHECK(j[0][1].is_zero());
  CHECK(j[1][0] == poly("2*x", xy));
  CHECK(j[1][1] == Polynomial::constant(2, 1));
  CHECK(polynomial_matrix_rank(j) == 2);

  const PolyMatrix id = jacobian(PolyMap::identity(3));
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) CHECK(id[r][c] == Polynomial::constant(3, r == c ? 1 : 0));
  }

  const PolyMatrix dep = jacobian(PolyMap(2, {poly("x+y", xy), poly("(x+y)^2", xy)}));
  CHECK(dep[1][0] == poly("2*x + 2*y", xy));
  CHECK(dep[1][1] == poly("2*x + 2*y", xy));
  CHECK(polynomial_matrix_rank(dep) == 1);
}

TEST_CASE("rename_extend") {
  const VarNames four{"x1", "x2", "y1", "y2"};
  const std::vector<std::size_t> tail{2, 3};
  CHECK(rename_extend(poly("x1 + x2", {"x1", "x2"}), 4, tail) == poly("y1 + y2", four));
  const Polynomial p = poly("x^2*y - 3", xy);
  const std::vector<std::size_t> same{0, 1};
  CHECK(rename_extend(p, 2, same) == p);
  const std::vector<std::size_t> spread{0, 2};
  CHECK(rename_extend(p, 3, spread) == poly("x^2*z - 3", xyz));
  const std::vector<std::size_t> clash{1, 1};
  CHECK_THROWS(rename_extend(p, 3, clash));
}

TEST_CASE("primitive and monic normalizations") {
  const Polynomial p = poly("4/3*x^2 - 2/3*y", xy);
  CHECK(p.primitive() == poly("2*x^2 - y", xy));
  CHECK(p.monic() == poly("x^2 - 1/2*y", xy));
  CHECK((-p).primitive() == poly("2*x^2 - y", xy));
}

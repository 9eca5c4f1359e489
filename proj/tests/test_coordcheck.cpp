#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "tamekit/coordcheck.hpp"
#include "tamekit/lp.hpp"

using namespace tamekit;
using tamekit::testing::poly;

namespace {

const VarNames xy{"x", "y"};
const VarNames xyz{"x", "y", "z"};

using Point = std::pair<long, long>;

long cross(const Point& o, const Point& a, const Point& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Andrew's monotone chain; collinear points are not vertices.
std::set<Point> hull_vertices(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return {pts.begin(), pts.end()};
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  return {hull.begin(), hull.begin() + static_cast<long>(k) - 1};
}

std::set<Point> as_points(const std::vector<Exponents>& es) {
  std::set<Point> out;
  for (const auto& e : es) out.emplace(e[0], e[1]);
  return out;
}

}  // namespace

TEST_CASE("vertex examples") {
  CHECK(as_points(newton_vertices(poly("x*y + x^2*y^2", xy)).vertices()) == std::set<Point>{{1, 1}, {2, 2}});
  CHECK(newton_vertices(poly("x", xyz)).vertices() == std::vector<Exponents>{{1, 0, 0}});
  CHECK(as_points(newton_vertices(poly("1 + x + y + x*y", xy)).vertices()) ==
        std::set<Point>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const auto r = newton_vertices(poly("1 + x*y + x^2*y^2", xy));
  CHECK(as_points(r.vertices()) == std::set<Point>{{0, 0}, {2, 2}});
  CHECK_THROWS(newton_vertices(Polynomial(2)));
}

TEST_CASE("vertices agree with a planar hull on random supports") {
  testing::Rng rng(51);
  for (int trial = 0; trial < 150; ++trial) {
    const Polynomial p = testing::random_poly(rng, 2, 6, 9);
    std::vector<Point> pts;
    for (const auto& t : p.terms()) pts.emplace_back(t.exponents[0], t.exponents[1]);
    const VertexReport r = newton_vertices(p);
    CHECK(as_points(r.vertices()) == hull_vertices(pts));
    for (std::size_t i = 0; i < r.support.size(); ++i) CHECK(check_certificate(r, i));
  }
}

TEST_CASE("certificates in three variables re-check") {
  testing::Rng rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    const VertexReport r = newton_vertices(testing::random_poly(rng, 3, 5, 8));
    for (std::size_t i = 0; i < r.support.size(); ++i) CHECK(check_certificate(r, i));
  }
}

TEST_CASE("hadas check") {
  CHECK(std::holds_alternative<PassesNecessary>(hadas_check(poly("x", xy))));
  const auto v = hadas_check(poly("x^2*y^2", xy));
  REQUIRE(std::holds_alternative<NotCoordinate>(v));
  CHECK(std::get<NotCoordinate>(v).witness == Exponents{2, 2});
  CHECK(std::holds_alternative<PassesNecessary>(hadas_check(poly("y + x^2", xy))));
  CHECK(std::holds_alternative<NotCoordinate>(hadas_check(poly("x*y + x^2*y^2", xy))));
  // Interior positive points do not count.
  CHECK(std::holds_alternative<PassesNecessary>(hadas_check(poly("x^2 + y^2 + x*y", xy))));
}

TEST_CASE("tame coordinates pass the hadas check") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const TameWord w = random_tame(2 + seed % 2, 5, 3, seed);
    const Polynomial c = word_to_polymap(w).image(0);
    CHECK(std::holds_alternative<PassesNecessary>(hadas_check(c)));
  }
}

TEST_CASE("dominating monomial") {
  CHECK(dominating_check(poly("x^2*y^2", xy)) == Exponents{2, 2});
  CHECK_FALSE(dominating_check(poly("(x+y)^2*y^2", xy)).has_value());
  CHECK_FALSE(dominating_check(poly("x^2*y^2 + x^3", xy)).has_value());
  CHECK(dominating_check(poly("x^2*y^2 - 5*x*y + x + 3", xy)) == Exponents{2, 2});
  CHECK_FALSE(dominating_check(poly("x^2 + x", xy)).has_value());
}

TEST_CASE("rigidity report") {
  const auto a = rigidity_report(poly("x^2*y^2", xy));
  CHECK(std::get<NotCoordinate>(a.hadas).witness == Exponents{2, 2});
  CHECK(a.dominating == Exponents{2, 2});
  const auto b = rigidity_report(poly("x", xy));
  CHECK(std::holds_alternative<PassesNecessary>(b.hadas));
  CHECK_FALSE(b.dominating.has_value());
  const auto c = rigidity_report(poly("1 + x*y + z^2", xyz));
  CHECK(std::holds_alternative<PassesNecessary>(c.hadas));
  CHECK_FALSE(c.dominating.has_value());
  CHECK_FALSE(c.conclusions.empty());
}

TEST_CASE("nonnegative feasibility") {
  const RationalMatrix a{{1, 1, 0}, {0, 1, 1}};
  const auto x = nonnegative_solution(a, {3, 5});
  REQUIRE(x.has_value());
  for (const auto& xi : *x) CHECK(xi >= 0);
  CHECK((*x)[0] + (*x)[1] == 3);
  CHECK((*x)[1] + (*x)[2] == 5);
  CHECK_FALSE(nonnegative_solution({{1, 1}}, {-1}).has_value());
  CHECK_FALSE(nonnegative_solution({{1, -1}, {1, -1}}, {1, 2}).has_value());
  CHECK(nonnegative_solution({}, {}).has_value());

  testing::Rng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rng.range(1, 4));
    const std::size_t cols = static_cast<std::size_t>(rng.range(1, 5));
    RationalMatrix m(rows, std::vector<Rational>(cols));
    std::vector<Rational> x0(cols);
    for (auto& v : x0) v = rng.range(0, 3);
    std::vector<Rational> b(rows, 0);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        m[r][c] = rng.range(-3, 3);
        b[r] += m[r][c] * x0[c];
      }
    }
    const auto sol = nonnegative_solution(m, b);
    REQUIRE(sol.has_value());
    for (std::size_t r = 0; r < rows; ++r) {
      Rational lhs = 0;
      for (std::size_t c = 0; c < cols; ++c) lhs += m[r][c] * (*sol)[c];
      CHECK(lhs == b[r]);
    }
    for (const auto& v : *sol) CHECK(v >= 0);
  }
}

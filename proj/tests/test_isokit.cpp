#include <doctest.h>

#include "support.hpp"
#include "tamekit/errors.hpp"
#include "tamekit/isokit.hpp"

using namespace tamekit;
using tamekit::testing::poly;

namespace {

Presentation make(VarNames gens, std::initializer_list<const char*> rels) {
  Presentation p;
  p.generators = std::move(gens);
  for (const char* r : rels) p.relations.push_back(poly(r, p.generators));
  return p;
}

const VarNames russell_source{"x1", "y1", "z1", "u"};
const VarNames russell_target{"x2", "y2", "z2", "v"};

PolyMap russell_forward() {
  const auto& t = russell_target;
  return PolyMap(4, {poly("x2", t), poly("x2*v^2 + 2*z2*v + x2*y2", t), poly("x2*v + z2", t),
                     poly("x2*v^3 + 3*z2*v^2 + 3*x2*y2*v + y2*z2", t)});
}

}  // namespace

TEST_CASE("presentation validation") {
  CHECK_NOTHROW(make({"x", "y"}, {"x*y - 1"}).validate());
  Presentation dup = make({"x", "y"}, {});
  dup.generators = {"x", "x"};
  CHECK_THROWS(dup.validate());
  Presentation wrong = make({"x", "y"}, {"x"});
  wrong.relations.push_back(Polynomial::variable(3, 0));
  CHECK_THROWS(wrong.validate());
}

TEST_CASE("homomorphism checks") {
  const Presentation a = make(russell_source, {"x1*y1 - z1^2 + 1"});
  const Presentation b = make(russell_target, {"x2^2*y2 - z2^2 + 1"});
  CHECK(check_hom(russell_forward(), a, b));
  CHECK(check_hom(PolyMap::identity(4), a, a));
  auto images = russell_forward().images();
  images[1] = poly("v", russell_target);
  CHECK_FALSE(check_hom(PolyMap(4, images), a, b));
}

TEST_CASE("verify_iso examples") {
  const VarNames left{"y", "x"};
  const VarNames right{"u", "x"};
  const Presentation a = make(left, {"y*(x^2 + 1) - 1"});
  const Presentation b = make(right, {"u*(x^2 + 1)^2 - 1"});
  IsoWitness w{a, b, PolyMap(2, {poly("u*(x^2 + 1)", right), poly("x", right)}),
               PolyMap(2, {poly("y^2", left), poly("x", left)})};
  CHECK(verify_iso(w));
  IsoWitness id{a, a, PolyMap::identity(2), PolyMap::identity(2)};
  CHECK(verify_iso(id));
  w.backward = PolyMap(2, {poly("y", left), poly("x", left)});
  CHECK_FALSE(verify_iso(w));
}

TEST_CASE("moves and their gates") {
  const VarNames xyz{"x", "y", "z"};
  const Presentation start = make(xyz, {"x*(1 + x*y + z^2) - 1"});
  const auto r1 = apply_move(start, RewriteRelations{{poly("x*(1 + x*y + z^2) - 1", xyz),
                                                      poly("x*y*(1 + x*y + z^2) - y", xyz)}});
  CHECK(r1.next.relations.size() == 2);
  CHECK_THROWS_AS(apply_move(start, RewriteRelations{{poly("x*y - 1", xyz)}}), MoveRejected);

  const auto r2 = apply_move(r1.next, Adjoin{"u", poly("x*y", xyz)});
  const VarNames xyzu{"x", "y", "z", "u"};
  CHECK(r2.next.generators == xyzu);
  CHECK(r2.backward.image(3) == poly("x*y", xyz));
  CHECK_THROWS_AS(apply_move(r1.next, Adjoin{"y", poly("x", xyz)}), MoveRejected);

  const auto r3 = apply_move(
      r2.next, RewriteRelations{{poly("x*(1 + u + z^2) - 1", xyzu), poly("y - u*(1 + u + z^2)", xyzu),
                                 poly("u - x*y", xyzu)}});
  const auto r4 = apply_move(r3.next, Eliminate{"y", poly("u + u^2 + u*z^2", xyzu)});
  const VarNames xzu{"x", "z", "u"};
  CHECK(r4.next.generators == xzu);
  CHECK(r4.forward.image(1) == poly("u + u^2 + u*z^2", xzu));
  CHECK_THROWS_AS(apply_move(r3.next, Eliminate{"y", poly("u", xyzu)}), MoveRejected);
  CHECK_THROWS_AS(apply_move(r3.next, Eliminate{"y", poly("y", xyzu)}), MoveRejected);
}

TEST_CASE("scripts") {
  const VarNames xy{"x", "y"};
  const Presentation p = make(xy, {"x*y - 1"});
  const auto empty = run_script(p, {});
  CHECK(empty.witness.verified);
  CHECK(empty.witness.forward == PolyMap::identity(2));

  const auto chain = builtin_theorem16(1, 0);
  CHECK(chain.witness.verified);
  CHECK(chain.steps.size() == 8);
  CHECK(builtin_theorem16(2, 1).witness.verified);

  Script corrupted = parse_script(theorem16_script_text(1, 0));
  auto& adjoin = std::get<Adjoin>(corrupted.moves[2]);
  adjoin.defining = adjoin.defining + Polynomial::constant(adjoin.defining.arity(), 1);
  try {
    run_script(corrupted.start, corrupted.moves, corrupted.end);
    FAIL("corrupted chain accepted");
  } catch (const MoveRejected& e) {
    CHECK(e.index() == 3);
  }
}

TEST_CASE("script parsing") {
  const Script s = parse_script(
      "# sample\n"
      "start U : gens x,y ; rel x*y - 1\n"
      "adjoin u := x + y\n"
      "eliminate y := u - x\n"
      "end V : gens x,u ; rel x*(u - x) - 1\n");
  CHECK(s.moves.size() == 2);
  REQUIRE(s.end.has_value());
  const auto r = run_script(s.start, s.moves, s.end);
  CHECK(r.witness.verified);

  auto line_of = [](const std::string& text) -> long {
    try {
      parse_script(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(line_of("adjoin u := x\n") == 1);
  CHECK(line_of("start U : gens x ; rel x\nadjoin x := 1\n") == 2);
  CHECK(line_of("start U : gens x ; rel x\neliminate y := 1\n") == 2);
  CHECK(line_of("start U : gens x ; rel w\n") == 1);
  CHECK(line_of("start U : gens x\n\nfrob\n") == 3);
  CHECK(line_of("") == 0);
}

TEST_CASE("builtin russell") {
  const RussellReport r = builtin_russell();
  CHECK(r.homomorphism);
  CHECK(r.surjectivity.size() == 4);
  for (const auto& c : r.surjectivity) CHECK(c.passed);
  CHECK(r.inverse_found);
  CHECK(r.witness.verified);
  CHECK(r.witness.forward == russell_forward());
}

TEST_CASE("builtin prop32") {
  const VarNames vars{"x", "y1"};
  const Polynomial p = poly("x^2 + y1^3 + 1", vars);
  const auto two = builtin_prop32(p, vars, 2);
  CHECK(two.closed_form.verified);
  CHECK(two.script.witness.verified);
  CHECK(two.maps_agree);

  const auto one = builtin_prop32(p, vars, 1);
  CHECK(one.closed_form.forward == PolyMap::identity(3));
  CHECK(one.closed_form.verified);

  const VarNames xs{"x"};
  const auto three = builtin_prop32(poly("x", xs), xs, 3);
  CHECK(three.closed_form.verified);
  const auto& src = three.closed_form.source.generators;
  CHECK(three.closed_form.backward.image(0) == poly(src[0] + "^3", src));
}

TEST_CASE("inverting homomorphisms") {
  const VarNames left{"y", "x"};
  const VarNames right{"u", "x"};
  const Presentation a = make(left, {"y*x - 1"});
  const Presentation b = make(right, {"u*x^2 - 1"});
  const PolyMap f(2, {poly("u*x", right), poly("x", right)});
  const auto g = try_invert_hom(f, a, b);
  REQUIRE(g.has_value());
  const Ideal ia = a.ideal();
  CHECK(ia.equivalent(g->image(0), poly("y^2", left)));
  CHECK(try_invert_hom(PolyMap::identity(2), a, a) == PolyMap::identity(2));

  // x -> x^2 on K[x] is not onto.
  const Presentation line = make({"x"}, {});
  CHECK_FALSE(try_invert_hom(PolyMap(1, {poly("x^2", {"x"})}), line, line).has_value());
}

TEST_CASE("gradient fullness") {
  const VarNames v{"x", "y", "z1", "z2"};
  CHECK(is_gradient_full(poly("1 + x*y + z1^2 + z2^2", v)));
  CHECK_FALSE(is_gradient_full(poly("x*y + z1^2", v)));
  CHECK_FALSE(is_gradient_full(poly("x^2*y + z1^2 + z2^2", v)));
}

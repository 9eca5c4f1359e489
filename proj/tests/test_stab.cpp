#include <doctest.h>

#include "support.hpp"
#include "tamekit/errors.hpp"
#include "tamekit/stab.hpp"

using namespace tamekit;
using tamekit::testing::poly;

namespace {

const VarNames x12{"x1", "x2"};
const VarNames doubled{"x1", "x2", "y1", "y2"};
const VarNames x123{"x1", "x2", "x3"};

PolyMap map2(const char* a, const char* b) { return PolyMap(2, {poly(a, x12), poly(b, x12)}); }
PolyMap map4(std::initializer_list<const char*> images) {
  std::vector<Polynomial> out;
  for (const char* t : images) out.push_back(poly(t, doubled));
  return PolyMap(4, std::move(out));
}

// Words built only from linear, permutation and scale generators.
TameWord random_linear_word(std::uint64_t seed, std::size_t arity) {
  TameWord out(arity);
  const TameWord source = random_tame(arity, 6, 1, seed);
  for (const auto& g : source.gens()) {
    // Translations make the map affine, which the construction does not cover.
    if (const auto* e = std::get_if<Elementary>(&g);
        e && !e->addend.is_zero() && (total_degree(e->addend) != 1 || e->addend.terms().back().exponents.total() != 1)) {
      continue;
    }
    out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("closed form examples") {
  CHECK(stabilization_closed_form(PolyMap::identity(2), PolyMap::identity(2)) == map4({"x1", "x2", "-y1", "-y2"}));
  CHECK(stabilization_closed_form(map2("x1", "x2 + x1^2"), map2("x1", "x2 - x1^2")) ==
        map4({"x1", "x2 + x1^2", "-y1", "y1^2 - y2"}));
  const PolyMap swap = map2("x2", "x1");
  CHECK(stabilization_closed_form(swap, swap) == map4({"x2", "x1", "-y2", "-y1"}));
}

TEST_CASE("stabilization word shape") {
  const PolyMap phi = map2("x1 + 2*x2", "x2");
  const PolyMap inv = map2("x1 - 2*x2", "x2");
  const TameWord w = stabilization_word(phi, inv);
  REQUIRE(w.size() == 7);
  CHECK(w.arity() == 4);
  const auto& first = std::get<Elementary>(w.gens()[0]);
  CHECK(first.target == 0);
  CHECK(first.addend == poly("y1 + 2*y2", doubled));
  const auto& second_block = std::get<Elementary>(w.gens()[2]);
  CHECK(second_block.target == 2);
  CHECK(second_block.addend == poly("-x1 + 2*x2", doubled));
  CHECK(std::get<Permutation>(w.gens()[4]).perm == std::vector<std::size_t>{2, 3, 0, 1});
  CHECK(std::get<Elementary>(w.gens()[6]).addend == poly("x2", doubled));
}

TEST_CASE("stabilize is exact for linear automorphisms") {
  const auto id = stabilize(PolyMap::identity(2), PolyMap::identity(2));
  CHECK(id.generator_count == 7);
  CHECK(word_to_polymap(id.word) == id.closed_form);
  const PolyMap swap = map2("x2", "x1");
  CHECK(word_to_polymap(stabilize(swap, swap).word) == stabilization_closed_form(swap, swap));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 1 + seed % 3;
    const TameWord w = random_linear_word(seed, n);
    const PolyMap phi = word_to_polymap(w);
    const PolyMap inv = word_to_polymap(invert_word(w));
    const auto r = stabilize(phi, inv);
    CHECK(r.generator_count == 3 * n + 1);
    CHECK(word_to_polymap(r.word) == stabilization_closed_form(phi, inv));
  }
}

TEST_CASE("stabilize rejects bad input and reports mismatches") {
  CHECK_THROWS_AS(stabilize(map2("x1", "x1*x2"), PolyMap::identity(2)), std::invalid_argument);
  CHECK_THROWS_AS(stabilize(PolyMap::identity(2), PolyMap::identity(3)), std::invalid_argument);
  try {
    stabilize(map2("x1", "x2 + x1^2"), map2("x1", "x2 - x1^2"));
    FAIL("expected the composed word to differ from the closed form");
  } catch (const ClosedFormMismatch& e) {
    CHECK(e.expected() == map4({"x1", "x2 + x1^2", "-y1", "y1^2 - y2"}));
    CHECK(word_to_polymap(e.word()) == e.composed());
    CHECK_FALSE(e.composed() == e.expected());
  }
}

TEST_CASE("stabilize_tuple") {
  const PolyMap phi = map2("3*x1 + x2", "x1");
  const PolyMap inv = map2("x2", "x1 - 3*x2");
  const std::vector<Polynomial> ps{poly("x1", x12), poly("x1*x2 + 1", x12)};
  std::vector<Polynomial> qs;
  for (const auto& p : ps) qs.push_back(substitute(p, phi));
  const auto r = stabilize_tuple(ps, qs, phi, inv);
  const std::vector<std::size_t> slots{0, 1};
  for (std::size_t i = 0; i < ps.size(); ++i) {
    CHECK(apply_word(r.word, rename_extend(ps[i], 4, slots)) == rename_extend(qs[i], 4, slots));
  }
  const std::vector<Polynomial> fixed{poly("x1^2 - x2", x12)};
  CHECK_NOTHROW(stabilize_tuple(fixed, fixed, PolyMap::identity(2), PolyMap::identity(2)));
  const std::vector<Polynomial> wrong{poly("x2", x12)};
  CHECK_THROWS_AS(stabilize_tuple(ps, wrong, phi, inv), std::invalid_argument);
}

TEST_CASE("specialize examples") {
  const PolyMap phi(3, {poly("x1 + x3^2", x123), poly("x2", x123), poly("x3", x123)});
  const std::vector<std::size_t> drop{2};
  const std::vector<Polynomial> q{poly("x2", x12)};
  CHECK(specialize(phi, drop, q) == map2("x1 + x2^2", "x2"));
  CHECK(specialize(phi, {}, {}) == phi);
  CHECK(specialize(PolyMap::identity(3), drop, q) == PolyMap::identity(2));
  const std::vector<Polynomial> full{poly("x1*x2", x123)};
  CHECK(specialize(phi, drop, full) == map2("x1 + x1^2*x2^2", "x2"));
  const std::vector<Polynomial> bad{poly("x3", x123)};
  CHECK_THROWS(specialize(phi, drop, bad));
}

TEST_CASE("injectivity examples") {
  CHECK(is_injective(map2("x1", "x2 + x1^2")));
  CHECK_FALSE(is_injective(map2("x1", "x1")));
  CHECK_FALSE(is_injective(map2("x1 + x2", "(x1 + x2)^2")));
  CHECK(is_injective(map2("x1^2", "x2^3")));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    CHECK(is_injective(word_to_polymap(random_tame(1 + seed % 3, 5, 3, seed))));
  }
}

TEST_CASE("injective specialization") {
  CHECK(find_injective_specialization(TameWord(3)) == poly("x1", x12));

  const TameWord last(3, {Elementary{2, poly("x1^2 + x2", x123)}});
  const Polynomial q = find_injective_specialization(last);
  CHECK(q == poly("x1 - x1^2 - x2", x12));

  const TameWord first(3, {Elementary{0, poly("x3^2", x123)}});
  const Polynomial q1 = find_injective_specialization(first);
  const std::vector<std::size_t> drop{2};
  const std::vector<Polynomial> qs{q1};
  CHECK(is_injective(specialize(word_to_polymap(first), drop, qs)));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const TameWord w = random_tame(2 + seed % 2, 4, 3, seed);
    const Polynomial found = find_injective_specialization(w);
    const std::vector<Polynomial> one{found};
    const std::vector<std::size_t> d{w.arity() - 1};
    CHECK(is_injective(specialize(word_to_polymap(w), d, one)));
  }
}

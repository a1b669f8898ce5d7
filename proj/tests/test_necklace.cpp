#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "quiverlab/dsl.hpp"
#include "quiverlab/errors.hpp"
#include "quiverlab/necklace.hpp"

using namespace quiverlab;
namespace qt = quiverlab::testing;

namespace {

DoubleQuiver jordan() {
  return double_quiver(parse_quiver("quiver { vertices v  arrow a v v }"));
}

DoubleQuiver a2() {
  return double_quiver(parse_quiver("quiver { vertices v1 v2  arrow a v1 v2 }"));
}

}  // namespace

TEST_CASE("canonicalize: rotations collapse, open walks rejected") {
  DoubleQuiver dj = jordan();
  // (a, a*) and (a*, a)
  CHECK(canonicalize(dj, Path::make(dj, {0, 1})) == canonicalize(dj, Path::make(dj, {1, 0})));
  // (a, a, a*) and (a, a*, a)
  CHECK(canonicalize(dj, Path::make(dj, {0, 0, 1})) ==
        canonicalize(dj, Path::make(dj, {0, 1, 0})));

  DoubleQuiver da = a2();
  CHECK_THROWS_AS(canonicalize(da, Path::make(da, {0})), DomainError);
}

TEST_CASE("multiply: idempotents and composability") {
  DoubleQuiver da = a2();
  PathElement e1 = PathElement::of(Path::idempotent(0));
  PathElement e2 = PathElement::of(Path::idempotent(1));
  CHECK(multiply(da, e1, e1) == e1);
  CHECK(multiply(da, e1, e2).is_zero());

  PathElement a = PathElement::of(Path::make(da, {0}));
  PathElement astar = PathElement::of(Path::make(da, {1}));
  // a* . a traverses a then a*, closed at v1
  PathElement prod = multiply(da, astar, a);
  REQUIRE(prod.terms().size() == 1);
  const Path& p = prod.terms().begin()->first;
  CHECK(p.arrows == std::vector<int>{0, 1});
  CHECK(p.tail(da) == 0);
  CHECK(p.head(da) == 0);

  CHECK(multiply(da, a, a).is_zero());

  // identity action on both sides
  CHECK(multiply(da, a, e1) == a);
  CHECK(multiply(da, e2, a) == a);
}

TEST_CASE("moment element: Jordan, A_2 and empty") {
  DoubleQuiver dj = jordan();
  PathElement m = moment_element(dj);
  REQUIRE(m.terms().size() == 2);
  // aa* evaluates after a* then a; stored as the traversal (a*, a)
  Path aastar{0, {1, 0}};
  Path astara{0, {0, 1}};
  CHECK(m.terms().at(aastar) == Rat(1));
  CHECK(m.terms().at(astara) == Rat(-1));

  DoubleQuiver da = a2();
  PathElement m2 = moment_element(da);
  REQUIRE(m2.terms().size() == 2);
  std::set<int> base_vertices;
  for (const auto& [p, c] : m2.terms()) base_vertices.insert(p.tail(da));
  CHECK(base_vertices == std::set<int>{0, 1});

  DoubleQuiver bare = double_quiver(parse_quiver("quiver { vertices u }"));
  CHECK(moment_element(bare).is_zero());
}

TEST_CASE("bracket: frozen Jordan table against the brute-force enumerator") {
  DoubleQuiver dj = jordan();
  NecklaceWord a = canonicalize(dj, Path::make(dj, {0}));
  NecklaceWord astar = canonicalize(dj, Path::make(dj, {1}));
  NecklaceWord aa = canonicalize(dj, Path::make(dj, {0, 0}));
  NecklaceWord astar2 = canonicalize(dj, Path::make(dj, {1, 1}));

  LieElement e = bracket(dj, a, astar);
  REQUIRE(e.terms().size() == 1);
  CHECK(e.terms().begin()->first == NecklaceWord::vertex(0));
  CHECK(e.terms().begin()->second == Rat(1));
  CHECK(qt::to_table(dj, e) == qt::brute_force_bracket(dj, a, astar));

  LieElement four = bracket(dj, aa, astar2);
  REQUIRE(four.terms().size() == 1);
  CHECK(four.terms().begin()->first == canonicalize(dj, Path::make(dj, {0, 1})));
  CHECK(four.terms().begin()->second == Rat(4));
  CHECK(qt::to_table(dj, four) == qt::brute_force_bracket(dj, aa, astar2));
}

TEST_CASE("bracket: self-bracket vanishes") {
  qt::Rng rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    DoubleQuiver dq = double_quiver(qt::random_quiver(rng, 3, 4));
    NecklaceWord w = qt::random_necklace(rng, dq, 6);
    CHECK(bracket(dq, w, w).is_zero());
  }
}

TEST_CASE("bracket: vertex necklaces are central") {
  qt::Rng rng(62);
  for (int trial = 0; trial < 30; ++trial) {
    DoubleQuiver dq = double_quiver(qt::random_quiver(rng, 3, 4));
    NecklaceWord w = qt::random_necklace(rng, dq, 5);
    for (int v = 0; v < dq.vertex_count(); ++v) {
      CHECK(bracket(dq, NecklaceWord::vertex(v), w).is_zero());
      CHECK(bracket(dq, w, NecklaceWord::vertex(v)).is_zero());
    }
  }
}

TEST_CASE("bracket: rotation independence") {
  qt::Rng rng(63);
  for (int trial = 0; trial < 40; ++trial) {
    DoubleQuiver dq = double_quiver(qt::random_quiver(rng, 3, 4));
    NecklaceWord w1 = qt::random_necklace(rng, dq, 6);
    NecklaceWord w2 = qt::random_necklace(rng, dq, 6);
    if (w1.is_vertex() || w2.is_vertex()) continue;
    // rebuild w1 from an arbitrary rotation of its representative
    std::vector<int> arrows = w1.arrows();
    int shift = rng.uniform(0, static_cast<int>(arrows.size()) - 1);
    std::rotate(arrows.begin(), arrows.begin() + shift, arrows.end());
    NecklaceWord rotated = canonicalize(dq, Path::make(dq, arrows));
    CHECK(rotated == w1);
    CHECK(bracket(dq, rotated, w2) == bracket(dq, w1, w2));
  }
}

TEST_CASE("bracket: matches the brute-force enumerator on random words") {
  qt::Rng rng(64);
  for (int trial = 0; trial < 120; ++trial) {
    DoubleQuiver dq = double_quiver(qt::random_quiver(rng, 3, 4));
    NecklaceWord w1 = qt::random_necklace(rng, dq, 6);
    NecklaceWord w2 = qt::random_necklace(rng, dq, 6);
    CHECK(qt::to_table(dq, bracket(dq, w1, w2)) == qt::brute_force_bracket(dq, w1, w2));
  }
}

TEST_CASE("bracket: antisymmetry, Jacobi and grading on random words") {
  qt::Rng rng(65);
  int tested = 0;
  for (int trial = 0; trial < 60; ++trial) {
    DoubleQuiver dq = double_quiver(qt::random_quiver(rng, 3, 4));
    NecklaceWord x = qt::random_necklace(rng, dq, 6);
    NecklaceWord y = qt::random_necklace(rng, dq, 6);
    NecklaceWord z = qt::random_necklace(rng, dq, 6);

    LieElement xy = bracket(dq, x, y);
    CHECK((xy + bracket(dq, y, x)).is_zero());

    for (const auto& [w, c] : xy.terms())
      CHECK(w.length() == x.length() + y.length() - 2);

    LieElement lx = LieElement::of(x);
    LieElement ly = LieElement::of(y);
    LieElement lz = LieElement::of(z);
    LieElement jacobi = bracket(dq, lx, bracket(dq, ly, lz)) +
                        bracket(dq, ly, bracket(dq, lz, lx)) +
                        bracket(dq, lz, bracket(dq, lx, ly));
    CHECK(jacobi.is_zero());
    ++tested;
  }
  CHECK(tested == 60);
}

TEST_CASE("bracket: bilinear extension") {
  DoubleQuiver dj = jordan();
  NecklaceWord a = canonicalize(dj, Path::make(dj, {0}));
  NecklaceWord astar = canonicalize(dj, Path::make(dj, {1}));

  LieElement zero;
  CHECK(bracket(dj, LieElement::of(a, Rat(2)), zero).is_zero());

  LieElement six = bracket(dj, LieElement::of(a, Rat(2)), LieElement::of(astar, Rat(3)));
  REQUIRE(six.terms().size() == 1);
  CHECK(six.terms().begin()->second == Rat(6));
  CHECK(six.terms().begin()->first == NecklaceWord::vertex(0));

  CHECK(bracket(dj, LieElement::of(NecklaceWord::vertex(0)), LieElement::of(a)).is_zero());
}

TEST_CASE("parse_word: tokens, duals, validation") {
  DoubleQuiver cm = double_quiver(
      parse_quiver("quiver { vertices v0 vinf  arrow x v0 v0  arrow v vinf v0 }"));
  NecklaceWord w = parse_word(cm, "x x* v v*");
  CHECK(w.length() == 4);

  CHECK_THROWS_AS(parse_word(cm, "x y"), ParseError);    // unknown arrow
  CHECK_THROWS_AS(parse_word(cm, "v"), DomainError);     // not closed
  CHECK_THROWS_AS(parse_word(cm, "v v"), DomainError);   // not composable
}

#include <doctest.h>

#include "oracles.hpp"
#include "quiverlab/dsl.hpp"
#include "quiverlab/errors.hpp"
#include "quiverlab/moment.hpp"

using namespace quiverlab;
namespace qt = quiverlab::testing;

namespace {

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

const char* kCalogeroMoser = "quiver { vertices v0 vinf  arrow x v0 v0  arrow v vinf v0 }";
const char* kJordan = "quiver { vertices v  arrow a v v }";
const char* kTwoLoop = "quiver { vertices v  arrow a v v  arrow b v v }";

RatMatrix rm(long rows, long cols, std::initializer_list<long> entries) {
  RatMatrix m(rows, cols);
  auto it = entries.begin();
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) m(r, c) = Rat(*it++);
  return m;
}

// Exact Calogero-Moser point for alpha = (2,1), lambda = (1,-2):
//   X = diag(0,1), X* = [[0,1],[-1,0]], V = (1,1)^T, V* = (1,1),
// so [X,X*] + V V* = I and -V* V = -2.
std::vector<RatMatrix> cm_exact_point() {
  return {rm(2, 2, {0, 0, 0, 1}),    // x
          rm(2, 1, {1, 1}),          // v
          rm(2, 2, {0, 1, -1, 0}),   // x*
          rm(1, 2, {1, 1})};         // v*
}

}  // namespace

TEST_CASE("moment: no arrows, commuting scalars, elementary matrices") {
  DoubleQuiver bare = double_quiver(parse_quiver("quiver { vertices u }"));
  RepPoint none = RepPoint::exact_zeros(bare, iv({3}));
  MomentValue mv = moment(bare, iv({3}), none);
  CHECK(std::get<0>(mv.blocks)[0].is_zero());

  DoubleQuiver dj = double_quiver(parse_quiver(kJordan));
  std::vector<RatMatrix> scalars{rm(1, 1, {7}), rm(1, 1, {5})};
  MomentValue zero = moment(dj, iv({1}), RepPoint{scalars});
  CHECK(std::get<0>(zero.blocks)[0].is_zero());

  // V_a = E12, V_a* = E21 -> diag(1,-1)
  std::vector<RatMatrix> elem{rm(2, 2, {0, 1, 0, 0}), rm(2, 2, {0, 0, 1, 0})};
  MomentValue diag = moment(dj, iv({2}), RepPoint{elem});
  const RatMatrix& block = std::get<0>(diag.blocks)[0];
  CHECK(block == rm(2, 2, {1, 0, 0, -1}));
}

TEST_CASE("moment: shape validation") {
  DoubleQuiver dj = double_quiver(parse_quiver(kJordan));
  std::vector<RatMatrix> wrong{rm(1, 1, {1}), rm(2, 2, {0, 0, 0, 0})};
  CHECK_THROWS_AS(moment(dj, iv({2}), RepPoint{wrong}), DomainError);
}

TEST_CASE("moment: trace identity on random rational points") {
  qt::Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    Quiver q = qt::random_quiver(rng, 3, 4);
    DoubleQuiver dq = double_quiver(q);
    IntVec alpha(q.vertex_count());
    for (auto& a : alpha) a = rng.uniform(1, 3);
    for (int pt = 0; pt < 100; ++pt) {
      std::vector<RatMatrix> V = qt::random_exact_point(rng, dq, alpha);
      std::vector<RatMatrix> m = moment_blocks(dq, alpha, V);
      Rat total(0);
      for (const auto& b : m) total += b.trace();
      CHECK(total == 0);
    }
  }
}

TEST_CASE("moment: exact quadratic expansion of the differential") {
  qt::Rng rng(72);
  for (int trial = 0; trial < 25; ++trial) {
    Quiver q = qt::random_quiver(rng, 3, 4);
    DoubleQuiver dq = double_quiver(q);
    IntVec alpha(q.vertex_count());
    for (auto& a : alpha) a = rng.uniform(1, 2);
    std::vector<RatMatrix> V = qt::random_exact_point(rng, dq, alpha);
    std::vector<RatMatrix> X = qt::random_exact_point(rng, dq, alpha);
    std::vector<RatMatrix> sum(V.size());
    for (std::size_t c = 0; c < V.size(); ++c) sum[c] = V[c] + X[c];

    std::vector<RatMatrix> lhs = moment_blocks(dq, alpha, sum);
    std::vector<RatMatrix> mu_v = moment_blocks(dq, alpha, V);
    std::vector<RatMatrix> d = moment_differential(dq, alpha, V, X);
    std::vector<RatMatrix> quad = moment_blocks(dq, alpha, X);
    for (std::size_t i = 0; i < lhs.size(); ++i)
      CHECK(lhs[i] - mu_v[i] - d[i] == quad[i]);
  }
}

TEST_CASE("evaluate: idempotents, paths, and the moment cross-check") {
  DoubleQuiver dj = double_quiver(parse_quiver(kJordan));
  std::vector<RatMatrix> elem{rm(2, 2, {0, 1, 0, 0}), rm(2, 2, {0, 0, 1, 0})};
  RepPoint point{elem};

  auto id = std::get<0>(evaluate(dj, iv({2}), PathElement::of(Path::idempotent(0)), point));
  CHECK(id == RatMatrix::Identity(2, 2));

  // a a* (traversal a* then a) evaluates to E12 E21 = E11
  PathElement aastar = PathElement::of(Path::make(dj, {1, 0}));
  auto prod = std::get<0>(evaluate(dj, iv({2}), aastar, point));
  CHECK(prod == rm(2, 2, {1, 0, 0, 0}));

  qt::Rng rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    Quiver q = qt::random_quiver(rng, 3, 4);
    DoubleQuiver dq = double_quiver(q);
    IntVec alpha(q.vertex_count());
    for (auto& a : alpha) a = rng.uniform(1, 2);
    std::vector<RatMatrix> V = qt::random_exact_point(rng, dq, alpha);
    RatMatrix via_element = evaluate_element(dq, alpha, moment_element(dq), V);
    RatMatrix via_moment = embed_blocks(alpha, moment_blocks(dq, alpha, V));
    CHECK(via_element == via_moment);
  }
}

TEST_CASE("evaluate: deformed relation vanishes exactly at the fiber point") {
  // moment_element - lambda as a path element (lambda enters on the vertex
  // idempotents) evaluates to zero exactly at the exact Calogero-Moser point.
  DoubleQuiver cm = double_quiver(parse_quiver(kCalogeroMoser));
  PathElement relation = moment_element(cm);
  relation.add(Path::idempotent(0), Rat(-1));  // lambda_0 = 1
  relation.add(Path::idempotent(1), Rat(2));   // lambda_inf = -2
  RatMatrix value = evaluate_element(cm, iv({2, 1}), relation, cm_exact_point());
  CHECK(value.is_zero());

  // and it does not vanish away from the fiber
  std::vector<RatMatrix> off = cm_exact_point();
  off[0](0, 0) += 1;
  CHECK_FALSE(evaluate_element(cm, iv({2, 1}), relation, off).is_zero());
}

TEST_CASE("jacobian_rank: zero point, Calogero-Moser witness, Jordan witness") {
  DoubleQuiver dj = double_quiver(parse_quiver(kJordan));
  CHECK(jacobian_rank(dj, iv({2}), RepPoint::exact_zeros(dj, iv({2}))) == 0);

  DoubleQuiver cm = double_quiver(parse_quiver(kCalogeroMoser));
  RepPoint witness{cm_exact_point()};
  // full rank = sum alpha_i^2 - 1 = 4, exact arithmetic
  CHECK(jacobian_rank(cm, iv({2, 1}), witness) == 4);

  // Jordan alpha = (2): diag(1,2) with zero dual arrow never reaches rank 3
  std::vector<RatMatrix> jw{rm(2, 2, {1, 0, 0, 2}), rm(2, 2, {0, 0, 0, 0})};
  CHECK(jacobian_rank(dj, iv({2}), RepPoint{jw}) == 2);
}

TEST_CASE("jacobian_rank: floating agrees with exact on random points") {
  qt::Rng rng(74);
  for (int trial = 0; trial < 10; ++trial) {
    Quiver q = qt::random_quiver(rng, 2, 3);
    DoubleQuiver dq = double_quiver(q);
    IntVec alpha(q.vertex_count());
    for (auto& a : alpha) a = rng.uniform(1, 2);
    std::vector<RatMatrix> V = qt::random_exact_point(rng, dq, alpha);
    std::vector<CMat> W;
    for (const auto& m : V) {
      CMat c = CMat::Zero(m.rows(), m.cols());
      for (long r = 0; r < m.rows(); ++r)
        for (long s = 0; s < m.cols(); ++s) c(r, s) = Complex(m(r, s).get_d(), 0.0);
      W.push_back(std::move(c));
    }
    CHECK(jacobian_rank(dq, alpha, RepPoint{V}) == jacobian_rank(dq, alpha, RepPoint{W}));
  }
}

TEST_CASE("endomorphism_dimension: at least one intertwiner always") {
  qt::Rng rng(75);
  for (int trial = 0; trial < 15; ++trial) {
    Quiver q = qt::random_quiver(rng, 3, 4);
    DoubleQuiver dq = double_quiver(q);
    IntVec alpha(q.vertex_count());
    for (auto& a : alpha) a = rng.uniform(1, 2);
    std::vector<RatMatrix> V = qt::random_exact_point(rng, dq, alpha);
    CHECK(endomorphism_dimension(dq, alpha, RepPoint{V}) >= 1);
  }
}

TEST_CASE("endomorphism_dimension: frozen cases") {
  DoubleQuiver dj = double_quiver(parse_quiver(kJordan));
  CHECK(endomorphism_dimension(dj, iv({3}), RepPoint::exact_zeros(dj, iv({3}))) == 9);

  // block-diagonal sum of two distinct 1-dimensional representations of the
  // two-loop quiver: only diagonal intertwiners survive
  DoubleQuiver tl = double_quiver(parse_quiver(kTwoLoop));
  std::vector<RatMatrix> sum{rm(2, 2, {1, 0, 0, 2}), rm(2, 2, {3, 0, 0, 5}),
                             rm(2, 2, {0, 0, 0, 0}), rm(2, 2, {0, 0, 0, 0})};
  CHECK(endomorphism_dimension(tl, iv({2}), RepPoint{sum}) == 2);

  DoubleQuiver cm = double_quiver(parse_quiver(kCalogeroMoser));
  CHECK(endomorphism_dimension(cm, iv({2, 1}), RepPoint{cm_exact_point()}) == 1);
}

TEST_CASE("newton_sample: trivial fiber, solvable fiber, obstruction") {
  DoubleQuiver dj = double_quiver(parse_quiver(kJordan));
  NewtonOutcome zero = newton_sample(dj, iv({2}), {Rat(0)}, 1, 5);
  CHECK(zero.converged);
  CHECK(zero.residual <= 1e-8);
  CHECK(zero.restarts_used == 1);  // the zero start already solves lambda = 0
  CHECK(zero.iterations == 0);

  DoubleQuiver cm = double_quiver(parse_quiver(kCalogeroMoser));
  NewtonOutcome cm11 = newton_sample(cm, iv({1, 1}), {Rat(1), Rat(-1)}, 7, 20);
  CHECK(cm11.converged);
  CHECK(cm11.residual <= 1e-8);

  CHECK_THROWS_AS(newton_sample(cm, iv({1, 1}), {Rat(1), Rat(0)}, 7, 20), DomainError);
}

TEST_CASE("newton_sample: deterministic for a fixed seed") {
  DoubleQuiver cm = double_quiver(parse_quiver(kCalogeroMoser));
  NewtonOutcome one = newton_sample(cm, iv({2, 1}), {Rat(1), Rat(-2)}, 42, 20);
  NewtonOutcome two = newton_sample(cm, iv({2, 1}), {Rat(1), Rat(-2)}, 42, 20);
  REQUIRE(one.converged);
  REQUIRE(two.converged);
  CHECK(one.residual == two.residual);
  CHECK(one.restarts_used == two.restarts_used);
  REQUIRE(one.point.size() == two.point.size());
  for (std::size_t c = 0; c < one.point.size(); ++c)
    CHECK((one.point[c].array() == two.point[c].array()).all());
}

TEST_CASE("verify: Calogero-Moser (2,1) numeric witness confirms the theorem") {
  SigmaQuery query = SigmaQuery::make(parse_quiver(kCalogeroMoser), {Rat(1), Rat(-2)},
                                      iv({2, 1}));
  LabReport report = verify(query, 11, 20);
  REQUIRE(report.converged);
  CHECK(report.residual <= 1e-8);
  CHECK(report.ambient_dimension == 12);
  CHECK(report.expected_rank == 4);
  CHECK(report.jacobian_rank == 4);
  CHECK(report.fiber_dimension == 8);
  CHECK(report.endomorphism_dimension == 1);
  CHECK(report.simple == true);
  CHECK(report.quotient_estimate == 4);
  CHECK(report.verdict_check == "confirmed");
}

TEST_CASE("verify: single loop-free vertex is trivially smooth") {
  SigmaQuery query =
      SigmaQuery::make(parse_quiver("quiver { vertices u }"), {Rat(0)}, iv({1}));
  LabReport report = verify(query, 5, 5);
  REQUIRE(report.converged);
  CHECK(report.ambient_dimension == 0);
  CHECK(report.jacobian_rank == 0);
  CHECK(report.fiber_dimension == 0);
  CHECK(report.expected_rank == 0);
  CHECK(report.quotient_estimate == 0);
  CHECK(report.verdict_check == "confirmed");
}

TEST_CASE("verify: infeasible fiber is reported, not fatal") {
  // Two isolated vertices, nonzero weights orthogonal to alpha: the moment
  // map is identically zero, so the fiber over lambda is empty.
  SigmaQuery query = SigmaQuery::make(parse_quiver("quiver { vertices u w }"),
                                      {Rat(1), Rat(-1)}, iv({1, 1}));
  LabReport report = verify(query, 2, 4);
  CHECK_FALSE(report.converged);
  CHECK(report.restarts_used == 4);
  CHECK(report.residual > 1.0);
  CHECK_FALSE(report.jacobian_rank.has_value());
  CHECK(report.verdict_check == "n/a");
}

TEST_CASE("verify: Jordan (2) reports the rank deficit") {
  SigmaQuery query = SigmaQuery::make(parse_quiver(kJordan), {Rat(0)}, iv({2}));
  LabReport report = verify(query, 3, 10);
  REQUIRE(report.converged);
  REQUIRE(report.jacobian_rank.has_value());
  CHECK(*report.jacobian_rank < 3);
  CHECK(report.verdict_check == "n/a");  // (2) is not in Sigma_0

  CHECK_THROWS_AS(verify(SigmaQuery::make(parse_quiver(kJordan), {Rat(1)}, iv({2})), 3, 5),
                  DomainError);
}

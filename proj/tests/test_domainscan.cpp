#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "qloop/domainscan.hpp"
#include "qloop/errors.hpp"

using namespace qloop;

namespace {

const double kGammaMax1 = std::sqrt(17.0) / 4;  // K=1 outer boundary
const double kDeltaMax1 = 0.25;                 // K=1 inner boundary
const double kGammaMax2 = std::sqrt(21.0) / 4;  // K=2
const double kDeltaMax2 = std::sqrt(5.0) / 4;

}  // namespace

TEST_CASE("no swept axes: one record at the fixed point") {
  const auto g = build_graph(1, 1);
  const AmendedCouplingSet fixed{Rational(1, 2), Rational(1, 8), 0};
  const ScanGrid grid = scan(g, ScanAxes{}, fixed);
  REQUIRE(grid.records.size() == 1);
  const ScanRecord& r = grid.records[0];
  CHECK(r.gamma == 0.5);
  CHECK(r.delta == 0.125);
  CHECK(r.z == 0.0);
  CHECK(r.all_real);
  CHECK_FALSE(r.marginal);
}

TEST_CASE("grid is row-major in (gamma, delta, z)") {
  const auto g = build_graph(1, 1);
  ScanAxes axes;
  axes.gamma = AxisRange{0.0, 1.0, 3};
  axes.delta = AxisRange{0.0, 0.1, 2};
  const ScanGrid grid = scan(g, axes, AmendedCouplingSet{0, 0, 0});
  REQUIRE(grid.records.size() == 6);
  const double expected[6][2] = {{0.0, 0.0}, {0.0, 0.1}, {0.5, 0.0},
                                 {0.5, 0.1}, {1.0, 0.0}, {1.0, 0.1}};
  for (int i = 0; i < 6; ++i) {
    CHECK(grid.records[std::size_t(i)].gamma == expected[i][0]);
    CHECK(grid.records[std::size_t(i)].delta == expected[i][1]);
    CHECK(grid.records[std::size_t(i)].z == 0.0);
  }
}

TEST_CASE("axis endpoints and single-value axes") {
  const auto g = build_graph(1, 1);
  ScanAxes axes;
  axes.delta = AxisRange{-0.2, 0.2, 5};
  axes.gamma = AxisRange{0.7, 0.7, 1};
  const ScanGrid grid = scan(g, axes, AmendedCouplingSet{0, 0, 0});
  REQUIRE(grid.records.size() == 5);
  CHECK(grid.records[0].delta == -0.2);
  CHECK(grid.records[1].delta == -0.1);
  CHECK(grid.records[2].delta == 0.0);
  CHECK(grid.records[4].delta == 0.2);
  for (const auto& r : grid.records) {
    CHECK(r.gamma == 0.7);
    CHECK(r.all_real);  // gamma and delta both inside their K=1 bounds
  }
}

TEST_CASE("classification matches the K=1 radicand signs") {
  const auto g = build_graph(1, 1);
  ScanAxes axes;
  axes.gamma = AxisRange{0.0, 1.2, 4};  // 0, 0.4, 0.8, 1.2
  axes.delta = AxisRange{0.0, 0.3, 3};  // 0, 0.15, 0.3
  const ScanGrid grid = scan(g, axes, AmendedCouplingSet{0, 0, 0});
  REQUIRE(grid.records.size() == 12);
  for (const auto& r : grid.records) {
    const bool expect_real = r.gamma < kGammaMax1 && r.delta < kDeltaMax1;
    CHECK(r.all_real == expect_real);
    if (!r.all_real) {
      // the larger of the two complexified pair imaginaries
      double im = 0.0;
      const double rg = 17 - 16 * r.gamma * r.gamma;
      const double rd = 1 - 16 * r.delta * r.delta;
      if (rg < 0) im = std::max(im, std::sqrt(-rg) / 2);
      if (rd < 0) im = std::max(im, std::sqrt(-rd) / 2);
      CHECK(std::abs(r.max_imag - im) <= 1e-9);
    }
  }
}

TEST_CASE("z axis sweep, K=2") {
  const auto g = build_graph(2, 1);
  ScanAxes axes;
  axes.z = AxisRange{0.0, 1.5, 3};  // 0, 0.75, 1.5
  const ScanGrid grid = scan(g, axes, AmendedCouplingSet{0, 0, 0});
  REQUIRE(grid.records.size() == 3);
  // inner radicand 5 - 4 z^2 turns negative past sqrt(5)/2 ~ 1.118
  CHECK(grid.records[0].all_real);
  CHECK(grid.records[1].all_real);
  CHECK_FALSE(grid.records[2].all_real);
  CHECK(grid.records[2].max_imag == doctest::Approx(1.0).epsilon(1e-9));
  for (const auto& r : grid.records) CHECK(r.marginal);  // K=2 doublet
}

TEST_CASE("parallel scan is deterministic") {
  const auto g = build_graph(2, 1);
  ScanAxes axes;
  axes.gamma = AxisRange{-1.3, 1.3, 7};
  axes.delta = AxisRange{-0.7, 0.7, 5};
  const ScanGrid a = scan(g, axes, AmendedCouplingSet{0, 0, 0}, 1e-10, 1);
  const ScanGrid b = scan(g, axes, AmendedCouplingSet{0, 0, 0}, 1e-10, 4);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].gamma == b.records[i].gamma);
    CHECK(a.records[i].delta == b.records[i].delta);
    CHECK(a.records[i].z == b.records[i].z);
    CHECK(a.records[i].all_real == b.records[i].all_real);
    CHECK(a.records[i].max_imag == b.records[i].max_imag);
    CHECK(a.records[i].marginal == b.records[i].marginal);
  }
}

TEST_CASE("uncertifiable points are flagged, not fatal") {
  const auto g = build_graph(1, 1);
  ScanAxes axes;
  axes.gamma = AxisRange{0.1, 0.3, 2};
  const ScanGrid grid = scan(g, axes, AmendedCouplingSet{0, 0, 0}, 1e-30);
  REQUIRE(grid.records.size() == 2);
  for (const auto& r : grid.records) {
    CHECK_FALSE(r.all_real);
    CHECK(r.marginal);
    CHECK(std::isnan(r.max_imag));
  }
}

TEST_CASE("boundary bisection recovers the K=1 closed forms") {
  const auto g = build_graph(1, 1);
  const BoundaryResult d = reality_boundary(
      g, Var::Delta, AmendedCouplingSet{0, 0, 0}, 0.0, 1.0);
  CHECK(std::abs(d.critical - kDeltaMax1) <= 1e-6);
  CHECK(d.axis == Var::Delta);
  CHECK(d.bracket_width <= 5e-9 * 1.01);
  // the midpoint lands on the marginal point 1/4 each round, so the
  // re-probe shrinks the bracket 8x per iteration; 1.0 -> 1e-8 needs >= 9
  CHECK(d.iterations >= 9);

  const BoundaryResult ga = reality_boundary(
      g, Var::Gamma, AmendedCouplingSet{0, 0, 0}, 0.0, 2.0);
  CHECK(std::abs(ga.critical - kGammaMax1) <= 1e-6);
}

TEST_CASE("boundary bisection, K=2 (every point marginal)") {
  const auto g = build_graph(2, 1);
  const BoundaryResult ga = reality_boundary(
      g, Var::Gamma, AmendedCouplingSet{0, 0, 0}, 0.0, 2.0);
  CHECK(std::abs(ga.critical - kGammaMax2) <= 1e-6);
  const BoundaryResult d = reality_boundary(
      g, Var::Delta, AmendedCouplingSet{0, 0, 0}, 0.0, 1.0);
  CHECK(std::abs(d.critical - kDeltaMax2) <= 1e-6);
  const BoundaryResult z = reality_boundary(
      g, Var::Z, AmendedCouplingSet{0, 0, 0}, 0.0, 2.0);
  CHECK(std::abs(z.critical - std::sqrt(5.0) / 2) <= 1e-6);
}

TEST_CASE("boundary position is independent of the other coupling") {
  const auto g = build_graph(1, 1);
  // gamma well inside its own bound must not move the delta boundary
  const BoundaryResult d = reality_boundary(
      g, Var::Delta, AmendedCouplingSet{Rational(9, 10), 0, 0}, 0.0, 1.0);
  CHECK(std::abs(d.critical - kDeltaMax1) <= 1e-6);
  CHECK(d.fixed.gamma == Rational(9, 10));
  const BoundaryResult ga = reality_boundary(
      g, Var::Gamma, AmendedCouplingSet{0, Rational(1, 5), 0}, 0.0, 2.0);
  CHECK(std::abs(ga.critical - kGammaMax1) <= 1e-6);
}

TEST_CASE("bracket orientation: all_real side must be lo") {
  const auto g = build_graph(1, 1);
  // [-1, 0] has the real side at hi; the contract is directional
  CHECK_THROWS_AS(reality_boundary(g, Var::Delta, AmendedCouplingSet{0, 0, 0},
                                   -1.0, 0.0),
                  BracketError);
}

TEST_CASE("bracket validation") {
  const auto g = build_graph(1, 1);
  // both ends real
  CHECK_THROWS_AS(reality_boundary(g, Var::Delta, AmendedCouplingSet{0, 0, 0},
                                   0.0, 0.1),
                  BracketError);
  // both ends complex
  CHECK_THROWS_AS(reality_boundary(g, Var::Delta, AmendedCouplingSet{0, 0, 0},
                                   0.5, 1.0),
                  BracketError);
  // reversed bracket
  CHECK_THROWS_AS(reality_boundary(g, Var::Delta, AmendedCouplingSet{0, 0, 0},
                                   1.0, 0.0),
                  std::exception);
  // E is not a sweep axis
  CHECK_THROWS_AS(reality_boundary(g, Var::E, AmendedCouplingSet{0, 0, 0},
                                   0.0, 1.0),
                  std::domain_error);
}

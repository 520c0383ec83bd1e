#include "fixtures.hpp"
#include "oracles.hpp"

#include <e3a/metrics.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace e3a;

namespace {

HvConfig raw_reference(Vector ref, std::size_t samples = 1'000'000) {
  HvConfig cfg;
  cfg.normalize_by_front_range = false;
  cfg.reference_point = std::move(ref);
  cfg.samples = samples;
  return cfg;
}

/// Binomial standard error of an estimate with true value `exact` in a box
/// of volume `box`.
double hv_sigma(double exact, double box, std::size_t samples) {
  const double p = exact / box;
  return box * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

} // namespace

TEST(Igd, Examples) {
  const ReferenceSet ref{{{0, 1}, {1, 0}}};
  EXPECT_EQ(igd(ref.points, ref), 0.0);
  const ObjectiveMatrix one{{0, 1}};
  EXPECT_NEAR(igd(one, ref), std::sqrt(2.0) / 2.0, 1e-15);
}

TEST(Igd, Errors) {
  const ReferenceSet ref{{{0, 1}}};
  const ObjectiveMatrix none;
  try {
    (void)igd(none, ref);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptySet);
  }
  const ObjectiveMatrix wrong{{0, 1, 2}};
  EXPECT_THROW((void)igd(wrong, ref), Error);
}

TEST(Igd, MatchesDoubleLoop) {
  std::mt19937_64 gen(101);
  for (int t = 0; t < 100; ++t) {
    const auto sol = fixtures::random_points(gen, 1 + t % 20, 3);
    const auto ref = fixtures::random_points(gen, 1 + (t * 7) % 20, 3);
    EXPECT_NEAR(igd(sol, ReferenceSet{ref}), oracle::igd(sol, ref), 1e-12);
  }
}

TEST(Igd, ZeroIffReferenceCovered) {
  std::mt19937_64 gen(103);
  const auto ref = fixtures::random_points(gen, 10, 3);
  auto sol = ref;
  sol.push_back({5, 5, 5});
  EXPECT_EQ(igd(sol, ReferenceSet{ref}), 0.0);
  sol.erase(sol.begin());
  EXPECT_GT(igd(sol, ReferenceSet{ref}), 0.0);
}

TEST(Igd, AddingAReferencePointNeverHurts) {
  std::mt19937_64 gen(107);
  for (int t = 0; t < 50; ++t) {
    const auto ref = fixtures::random_points(gen, 15, 3);
    auto sol = fixtures::random_points(gen, 8, 3);
    const double before = igd(sol, ReferenceSet{ref});
    sol.push_back(ref[static_cast<std::size_t>(t) % ref.size()]);
    EXPECT_LE(igd(sol, ReferenceSet{ref}), before);
  }
}

TEST(HvExact2d, Examples) {
  const ObjectiveMatrix single{{0.5, 0.5}};
  EXPECT_DOUBLE_EQ(hv_exact_2d(single, Vector{1, 1}), 0.25);
  const ObjectiveMatrix two{{0.2, 0.8}, {0.8, 0.2}};
  EXPECT_NEAR(hv_exact_2d(two, Vector{1, 1}), 0.28, 1e-15);
  EXPECT_NEAR(oracle::hv_grid_2d(two, {1, 1}), 0.28, 1e-15);
  const ObjectiveMatrix with_interior{{0.2, 0.8}, {0.8, 0.2}, {0.9, 0.9}, {0.5, 0.85}};
  EXPECT_NEAR(hv_exact_2d(with_interior, Vector{1, 1}), 0.28, 1e-15);
}

TEST(HvExact2d, MatchesGridIntegration) {
  std::mt19937_64 gen(109);
  for (int t = 0; t < 100; ++t) {
    const auto pts = fixtures::random_points(gen, 1 + t % 15, 2);
    EXPECT_NEAR(hv_exact_2d(pts, Vector{1.1, 1.1}), oracle::hv_grid_2d(pts, {1.1, 1.1}), 1e-12);
  }
}

TEST(HvExact2d, RejectsOtherDimensions) {
  const ObjectiveMatrix pts{{0.5, 0.5, 0.5}};
  try {
    (void)hv_exact_2d(pts, Vector{1, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionUnsupported);
  }
}

TEST(HvMonteCarlo, SingletonRectangle) {
  RngStream rng(1);
  const ObjectiveMatrix single{{0.5, 0.5}};
  const double est = hv_monte_carlo(single, raw_reference({1, 1}), rng);
  // The sampling box is exactly the dominated rectangle.
  EXPECT_NEAR(est, 0.25, 4.0 * hv_sigma(0.25, 1.0, 1'000'000));
}

TEST(HvMonteCarlo, PointAtReferenceGivesZero) {
  RngStream rng(2);
  const ObjectiveMatrix at_ref{{1.0, 1.0}};
  EXPECT_EQ(hv_monte_carlo(at_ref, raw_reference({1, 1}), rng), 0.0);
  const ObjectiveMatrix beyond{{1.2, 0.5}};
  EXPECT_EQ(hv_monte_carlo(beyond, raw_reference({1, 1}), rng), 0.0);
}

TEST(HvMonteCarlo, MatchesExact2dWithinFourSigma) {
  std::mt19937_64 gen(113);
  RngStream rng(3);
  const Vector ref{1.1, 1.1};
  for (int t = 0; t < 30; ++t) {
    const auto pts = fixtures::random_points(gen, 2 + t % 10, 2);
    const double exact = hv_exact_2d(pts, ref);
    const auto lo = ideal_point(pts);
    const double box = (ref[0] - lo[0]) * (ref[1] - lo[1]);
    const auto cfg = raw_reference(ref, 200'000);
    // A lone point fills the sampling box, so only rounding remains.
    EXPECT_NEAR(hv_monte_carlo(pts, cfg, rng), exact, std::max(4.0 * hv_sigma(exact, box, cfg.samples), 1e-12));
  }
}

TEST(HvMonteCarlo, NormalizesByFrontRange) {
  RngStream a(4);
  RngStream b(4);
  const ObjectiveMatrix raw{{1.0, 6.0}, {3.0, 2.0}};
  HvConfig cfg;
  cfg.front_ideal = {0.0, 0.0};
  cfg.front_nadir = {4.0, 8.0};
  cfg.samples = 100'000;
  const ObjectiveMatrix scaled{{0.25, 0.75}, {0.75, 0.25}};
  EXPECT_DOUBLE_EQ(hv_monte_carlo(raw, cfg, a), hv_monte_carlo(scaled, raw_reference({1.1, 1.1}, 100'000), b));
}

TEST(HvMonteCarlo, ThreadCountDoesNotChangeTheEstimate) {
  std::mt19937_64 gen(127);
  const auto pts = fixtures::simplex_points(gen, 30, 4);
  auto cfg = raw_reference(Vector(4, 1.1), 300'000);
  RngStream r1(5);
  const double one = hv_monte_carlo(pts, cfg, r1);
  cfg.threads = 4;
  RngStream r4(5);
  EXPECT_EQ(hv_monte_carlo(pts, cfg, r4), one);
}

TEST(HvMonteCarlo, IndependentSeedsAgreeWithinFiveSigma) {
  std::mt19937_64 gen(131);
  const auto pts = fixtures::random_points(gen, 10, 2);
  const Vector ref{1.1, 1.1};
  const double exact = hv_exact_2d(pts, ref);
  const auto lo = ideal_point(pts);
  const double box = (ref[0] - lo[0]) * (ref[1] - lo[1]);
  const auto cfg = raw_reference(ref, 100'000);
  const double sigma = hv_sigma(exact, box, cfg.samples);
  RngStream r1(6);
  RngStream r2(7);
  const double e1 = hv_monte_carlo(pts, cfg, r1);
  const double e2 = hv_monte_carlo(pts, cfg, r2);
  EXPECT_NE(e1, e2);
  EXPECT_NEAR(e1, e2, 5.0 * std::sqrt(2.0) * sigma);
}

TEST(DasDennis, StandardCounts) {
  EXPECT_EQ(das_dennis(3, 13).size(), 105u);
  EXPECT_EQ(das_dennis(5, 5).size(), 126u);
  EXPECT_EQ(das_dennis(2, 1), (ObjectiveMatrix{{1, 0}, {0, 1}}));
}

TEST(DasDennis, CountMatchesBinomialAndSumsToOne) {
  for (std::size_t m = 2; m <= 6; ++m) {
    for (std::size_t h = 1; h <= 8; ++h) {
      const auto pts = das_dennis(m, h);
      EXPECT_EQ(pts.size(), binomial(h + m - 1, m - 1));
      for (const auto& p : pts) {
        EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-12);
        for (double v : p) {
          const double scaled = v * static_cast<double>(h);
          EXPECT_NEAR(scaled, std::round(scaled), 1e-9);
          EXPECT_GE(v, 0.0);
        }
      }
    }
  }
}

TEST(TwoLayer, StandardCountsAndClosure) {
  const auto ten = two_layer(10, 3, 1);
  EXPECT_EQ(ten.size(), 230u);
  const auto fifteen = two_layer(15, 2, 2);
  EXPECT_EQ(fifteen.size(), 240u);
  for (const auto* set : {&ten, &fifteen}) {
    for (const auto& p : *set) {
      EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-12);
    }
  }
}

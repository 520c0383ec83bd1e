#pragma once

#include "core.hpp"
#include "dominance.hpp"
#include "problems.hpp"
#include "rng.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>

namespace e3a {

/// SBX and polynomial-mutation settings. An unset mutation probability
/// means 1/d.
struct VariationParams {
  double p_crossover = 1.0;
  std::optional<double> p_mutation;
  double eta_c = 20.0;
  double eta_m = 20.0;

  [[nodiscard]] double mutation_rate(std::size_t d) const noexcept {
    return p_mutation.value_or(d > 0 ? 1.0 / static_cast<double>(d) : 0.0);
  }

  void validate() const {
    auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!prob(p_crossover) || (p_mutation && !prob(*p_mutation)) || !(eta_c > 0.0) || !(eta_m > 0.0)) {
      throw Error(Errc::InvalidConfig, "variation: probabilities must be in [0,1], indices positive");
    }
  }
};

/// SBX spread factor for a uniform draw u in [0,1); beta(0.5) = 1.
inline double sbx_spread_factor(double u, double eta) {
  const double exponent = 1.0 / (eta + 1.0);
  return u <= 0.5 ? std::pow(2.0 * u, exponent) : std::pow(2.0 - 2.0 * u, -exponent);
}

namespace detail {

/// Binary tournament on rank: two distinct members, lower rank wins, a coin
/// decides ties.
inline std::size_t rank_tournament(std::span<const std::size_t> ranks, RngStream& rng) {
  const auto n = ranks.size();
  if (n == 1) {
    return 0;
  }
  const auto a = static_cast<std::size_t>(rng.below(n));
  auto b = static_cast<std::size_t>(rng.below(n - 1));
  if (b >= a) {
    ++b;
  }
  if (ranks[a] != ranks[b]) {
    return ranks[a] < ranks[b] ? a : b;
  }
  return rng.coin() ? a : b;
}

inline double clamp_to(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

} // namespace detail

/// `count` parents chosen by independent binary tournaments on rank.
inline IndexList mating_selection(const Population& pop, const FrontPartition& fronts,
                                  std::size_t count, RngStream& rng) {
  if (count % 2 != 0) {
    throw Error(Errc::OddParentCount, "mating_selection: parent count must be even");
  }
  if (pop.empty()) {
    throw Error(Errc::EmptyPopulation, "mating_selection needs a nonempty population");
  }
  const auto ranks = fronts.ranks(pop.size());
  IndexList out(count);
  for (auto& p : out) {
    p = detail::rank_tournament(ranks, rng);
  }
  return out;
}

/// Simulated binary crossover of one parent pair. One draw gates the whole
/// pair; per variable the spread factor takes a random sign and is reset to
/// 1 (plain copy) with probability 0.5. Children are clamped to the box.
inline std::pair<Vector, Vector> sbx_crossover(std::span<const double> p1, std::span<const double> p2,
                                               const VariationParams& params, const Bounds& bounds,
                                               RngStream& rng) {
  if (p1.size() != p2.size() || p1.size() != bounds.size()) {
    throw Error(Errc::DimensionMismatch, "sbx_crossover: parent and bound lengths differ");
  }
  Vector c1(p1.begin(), p1.end());
  Vector c2(p2.begin(), p2.end());
  if (rng.uniform() >= params.p_crossover) {
    return {std::move(c1), std::move(c2)};
  }
  for (std::size_t i = 0; i < c1.size(); ++i) {
    double beta = sbx_spread_factor(rng.uniform(), params.eta_c);
    if (rng.coin()) {
      beta = -beta;
    }
    if (rng.uniform() < 0.5) {
      beta = 1.0;
    }
    const double mean = 0.5 * (p1[i] + p2[i]);
    const double half = 0.5 * (p1[i] - p2[i]);
    c1[i] = detail::clamp_to(mean + beta * half, bounds.lower[i], bounds.upper[i]);
    c2[i] = detail::clamp_to(mean - beta * half, bounds.lower[i], bounds.upper[i]);
  }
  return {std::move(c1), std::move(c2)};
}

/// Bounded polynomial mutation (perturbation scaled by the distance to the
/// nearer bound), each variable with probability mutation_rate(d).
inline Vector polynomial_mutation(std::span<const double> x, const VariationParams& params,
                                  const Bounds& bounds, RngStream& rng) {
  if (x.size() != bounds.size()) {
    throw Error(Errc::DimensionMismatch, "polynomial_mutation: vector and bound lengths differ");
  }
  const double rate = params.mutation_rate(x.size());
  const double power = 1.0 / (params.eta_m + 1.0);
  Vector y(x.begin(), x.end());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (rng.uniform() >= rate) {
      continue;
    }
    const double mu = rng.uniform();
    const double lo = bounds.lower[i];
    const double hi = bounds.upper[i];
    const double range = hi - lo;
    if (!(range > 0.0)) {
      continue;
    }
    const double v = detail::clamp_to(y[i], lo, hi);
    double delta = 0.0;
    if (mu <= 0.5) {
      const double xy = 1.0 - (v - lo) / range;
      delta = std::pow(2.0 * mu + (1.0 - 2.0 * mu) * std::pow(xy, params.eta_m + 1.0), power) - 1.0;
    } else {
      const double xy = 1.0 - (hi - v) / range;
      delta = 1.0 - std::pow(2.0 * (1.0 - mu) + 2.0 * (mu - 0.5) * std::pow(xy, params.eta_m + 1.0), power);
    }
    y[i] = detail::clamp_to(v + delta * range, lo, hi);
  }
  return y;
}

/// Offspring population of the same size: tournament parents, pairwise SBX,
/// then mutation and evaluation. With an odd size the last tournament
/// winner is paired with a uniformly drawn member and only its first child
/// is kept.
inline Population make_offspring(const Population& pop, const FrontPartition& fronts,
                                 const VariationParams& params, const Problem& problem,
                                 RngStream& rng) {
  const auto n = pop.size();
  const auto& bounds = problem.bounds();
  Population out(pop.problem_id());
  out.reserve(n);

  auto breed = [&](std::size_t a, std::size_t b, bool keep_both) {
    auto [c1, c2] = sbx_crossover(pop[a].decision(), pop[b].decision(), params, bounds, rng);
    out.add(problem.make_solution(polynomial_mutation(c1, params, bounds, rng)));
    if (keep_both) {
      out.add(problem.make_solution(polynomial_mutation(c2, params, bounds, rng)));
    }
  };

  const auto parents = mating_selection(pop, fronts, n - n % 2, rng);
  for (std::size_t i = 0; i + 1 < parents.size(); i += 2) {
    breed(parents[i], parents[i + 1], true);
  }
  if (n % 2 == 1) {
    const auto ranks = fronts.ranks(n);
    const auto last = detail::rank_tournament(ranks, rng);
    const auto partner = static_cast<std::size_t>(rng.below(n));
    breed(last, partner, false);
  }
  return out;
}

} // namespace e3a

#pragma once

#include "core.hpp"
#include "dominance.hpp"
#include "metrics.hpp"
#include "problems.hpp"
#include "rng.hpp"
#include "selection.hpp"
#include "variation.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace e3a {

struct AlgorithmConfig {
  std::size_t population_size = 105;
  std::size_t max_generations = 300;
  VariationParams variation;
  Selector selector = Selector::E3A;
  std::uint64_t seed = 0;

  void validate(const Problem& problem) const {
    if (population_size < problem.num_objectives()) {
      throw Error(Errc::InvalidConfig, "population size must be at least the objective count");
    }
    if (max_generations < 1) {
      throw Error(Errc::InvalidConfig, "max_generations must be at least 1");
    }
    variation.validate();
  }
};

struct RunResult {
  Population population;
  /// IGD of the population after each generation; empty unless a trace
  /// reference set was supplied.
  std::vector<double> igd_trace;
  std::size_t generations = 0;
};

/// n solutions drawn uniformly from the problem's box.
inline Population random_population(const Problem& problem, std::size_t n, RngStream& rng) {
  const auto& bounds = problem.bounds();
  Population pop(problem.id());
  pop.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Vector x(bounds.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = rng.uniform(bounds.lower[i], bounds.upper[i]);
    }
    pop.add(problem.make_solution(std::move(x)));
  }
  return pop;
}

/// Generational loop: rank, tournament, SBX + mutation, then environmental
/// selection from parents plus offspring back to n. All randomness comes
/// from one stream seeded with cfg.seed.
inline RunResult run(const Problem& problem, const AlgorithmConfig& cfg,
                     const ReferenceSet* trace_reference = nullptr) {
  cfg.validate(problem);
  RngStream rng(cfg.seed);
  const auto n = cfg.population_size;

  RunResult result;
  auto pop = random_population(problem, n, rng);
  for (std::size_t gen = 0; gen < cfg.max_generations; ++gen) {
    const auto fronts = fast_nondominated_sort(pop);
    auto offspring = make_offspring(pop, fronts, cfg.variation, problem, rng);

    Population combined(problem.id());
    combined.reserve(2 * n);
    for (const auto& s : pop) {
      combined.add(s);
    }
    for (auto& s : offspring) {
      combined.add(std::move(s));
    }
    pop = environmental_selection(combined, n, cfg.selector);
    ++result.generations;

    if (trace_reference != nullptr) {
      const auto objs = pop.objectives();
      result.igd_trace.push_back(igd(objs, *trace_reference));
    }
  }
  fast_nondominated_sort(pop);
  result.population = std::move(pop);
  return result;
}

} // namespace e3a

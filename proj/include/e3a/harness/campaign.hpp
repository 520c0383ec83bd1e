#pragma once

#include "../algorithm.hpp"
#include "../metrics.hpp"
#include "../problems.hpp"
#include "../rng.hpp"
#include "../selection.hpp"
#include "config.hpp"
#include "records.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <filesystem>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace e3a::harness {

namespace fs = std::filesystem;

inline constexpr const char* results_file = "results.csv";
inline constexpr const char* summary_file = "summary.csv";
inline constexpr const char* fronts_dir = "fronts";
inline constexpr const char* resolved_config_file = "config.json";

/// Seed of one cell; a function of the master seed and the cell key only, so
/// the schedule and worker count never change results.
inline std::uint64_t cell_seed(std::uint64_t master, std::string_view problem, std::size_t m,
                               std::string_view algorithm, std::size_t run) {
  std::string key(problem);
  key += '|' + std::to_string(m) + '|';
  key += algorithm;
  key += '|' + std::to_string(run);
  return derive_seed(master, fnv1a64(key));
}

inline std::string front_file_name(std::string_view problem, std::size_t m, std::string_view algorithm,
                                   std::size_t run) {
  std::string out(problem);
  out += "_m" + std::to_string(m) + '_';
  out += algorithm;
  out += "_run" + std::to_string(run) + ".txt";
  return out;
}

/// Everything shared by the runs of one problem entry.
struct ProblemContext {
  ProblemSpec spec;
  std::shared_ptr<const Problem> problem;
  ReferenceSet reference;
  Vector front_ideal;
  Vector front_nadir;
  std::size_t population_size = 0;
};

inline ProblemContext prepare_problem(const ExperimentConfig& cfg, const ProblemSpec& spec) {
  ProblemContext ctx;
  ctx.spec = spec;
  ctx.problem = make_problem(spec.id, spec.m, spec.d);
  ctx.population_size = cfg.population_size_for(spec.m);
  if (spec.reference_file) {
    ctx.reference = read_front_file(*spec.reference_file);
  } else {
    ctx.reference = ctx.problem->sample_pareto_front(cfg.reference_size_for(spec.m));
  }
  if (ctx.reference.empty()) {
    throw Error(Errc::EmptySet, "empty reference set for " + spec.id);
  }
  if (ctx.reference.points.front().size() != spec.m) {
    throw Error(Errc::DimensionMismatch, "reference set dimension differs from m for " + spec.id);
  }
  if (auto range = ctx.problem->front_range()) {
    ctx.front_ideal = range->first;
    ctx.front_nadir = range->second;
  } else {
    ctx.front_ideal = ideal_point(ctx.reference.points);
    ctx.front_nadir = nadir_point(ctx.reference.points);
  }
  return ctx;
}

struct Cell {
  std::size_t problem_index = 0;
  std::string algorithm;
  std::size_t run = 0;
};

/// Runs one cell and, when `front_path` is nonempty, dumps its final
/// objective vectors there.
inline RunRecord run_cell(const ExperimentConfig& cfg, const ProblemContext& ctx,
                          std::string_view algorithm, std::size_t run, const std::string& front_path = {}) {
  const auto selector = parse_selector(algorithm);
  if (!selector) {
    throw Error(Errc::UnsupportedAlgorithm, std::string(algorithm));
  }
  RunRecord rec;
  rec.problem = ctx.spec.id;
  rec.m = ctx.spec.m;
  rec.algorithm = std::string(algorithm);
  rec.run = run;
  rec.seed = cell_seed(cfg.master_seed, rec.problem, rec.m, rec.algorithm, run);

  AlgorithmConfig alg;
  alg.population_size = ctx.population_size;
  alg.max_generations = cfg.generations;
  alg.variation = cfg.variation;
  alg.selector = *selector;
  alg.seed = rec.seed;

  const auto start = std::chrono::steady_clock::now();
  auto result = e3a::run(*ctx.problem, alg);
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rec.generations = result.generations;

  const auto objs = result.population.objectives();
  rec.igd = igd(objs, ctx.reference);

  HvConfig hv;
  hv.samples = cfg.hv_samples;
  hv.front_ideal = ctx.front_ideal;
  hv.front_nadir = ctx.front_nadir;
  RngStream hv_rng(derive_seed(rec.seed, fnv1a64("hv")));
  rec.hv = hv_monte_carlo(objs, hv, hv_rng);

  if (!std::isfinite(rec.igd) || !std::isfinite(rec.hv) || rec.igd < 0.0 || rec.hv < 0.0) {
    throw Error(Errc::InvalidConfig, "non-finite indicator in " + rec.problem + " run " + std::to_string(run));
  }
  if (!front_path.empty()) {
    write_front_file(front_path, objs);
  }
  return rec;
}

struct CampaignOptions {
  std::size_t jobs = 1;
  /// Keep results.csv and skip cells already recorded there.
  bool resume = false;
};

/// Runs every (problem, algorithm, run) cell of `cfg` on `jobs` worker
/// threads. Records are appended to <output_dir>/results.csv as cells
/// finish. Returns all records, including resumed ones, in cell order.
inline std::vector<RunRecord> run_campaign(const ExperimentConfig& cfg, const CampaignOptions& opts = {}) {
  cfg.validate();
  std::vector<ProblemContext> contexts;
  contexts.reserve(cfg.problems.size());
  for (const auto& spec : cfg.problems) {
    contexts.push_back(prepare_problem(cfg, spec));
  }

  const fs::path out_dir(cfg.output_dir);
  std::error_code ec;
  fs::create_directories(out_dir / fronts_dir, ec);
  if (ec) {
    throw Error(Errc::IoError, "cannot create " + (out_dir / fronts_dir).string() + ": " + ec.message());
  }
  {
    std::ofstream resolved(out_dir / resolved_config_file);
    resolved << to_json(cfg).dump(2) << '\n';
  }

  const auto results_path = (out_dir / results_file).string();
  using Key = std::tuple<std::string, std::size_t, std::string, std::size_t>;
  std::map<Key, RunRecord> done;
  if (opts.resume && fs::exists(results_path)) {
    for (auto& r : read_results(results_path)) {
      Key key{r.problem, r.m, r.algorithm, r.run};
      done.emplace(std::move(key), std::move(r));
    }
  }

  std::vector<Cell> cells;
  for (std::size_t p = 0; p < cfg.problems.size(); ++p) {
    for (const auto& a : cfg.algorithms) {
      for (std::size_t r = 0; r < cfg.runs; ++r) {
        cells.push_back({p, a, r});
      }
    }
  }

  std::vector<std::optional<RunRecord>> records(cells.size());
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    const auto& spec = cfg.problems[c.problem_index];
    if (auto it = done.find({spec.id, spec.m, c.algorithm, c.run}); it != done.end()) {
      records[i] = it->second;
    } else {
      pending.push_back(i);
    }
  }

  RecordAppender appender(results_path, opts.resume);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    while (!failed.load()) {
      const auto slot = next.fetch_add(1);
      if (slot >= pending.size()) {
        return;
      }
      const auto i = pending[slot];
      const auto& c = cells[i];
      const auto& ctx = contexts[c.problem_index];
      try {
        std::string front_path;
        if (cfg.dump_fronts) {
          front_path = (out_dir / fronts_dir / front_file_name(ctx.spec.id, ctx.spec.m, c.algorithm, c.run)).string();
        }
        records[i] = run_cell(cfg, ctx, c.algorithm, c.run, front_path);
        appender.append(*records[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) {
          error = std::current_exception();
        }
        failed = true;
      }
    }
  };

  const auto jobs = std::max<std::size_t>(1, std::min(opts.jobs, pending.size()));
  {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
      pool.emplace_back(worker);
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }

  std::vector<RunRecord> out;
  out.reserve(records.size());
  for (auto& r : records) {
    out.push_back(std::move(*r));
  }
  return out;
}

} // namespace e3a::harness

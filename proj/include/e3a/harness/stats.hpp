#pragma once

#include "../core.hpp"
#include "records.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace e3a::harness {

struct MeanStd {
  std::size_t count = 0;
  double mean = 0.0;
  /// Sample standard deviation (n - 1 denominator); 0 for a single value.
  double std = 0.0;
  /// Fewer than two values, so the spread is undefined.
  bool degenerate = true;
};

inline MeanStd mean_std(std::span<const double> values) {
  MeanStd out;
  out.count = values.size();
  if (values.empty()) {
    return out;
  }
  out.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  out.degenerate = values.size() < 2;
  if (!out.degenerate) {
    double ss = 0.0;
    for (double v : values) {
      ss += (v - out.mean) * (v - out.mean);
    }
    out.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return out;
}

struct CellSummary {
  std::string problem;
  std::size_t m = 0;
  std::string algorithm;
  MeanStd igd;
  MeanStd hv;
};

inline constexpr std::string_view summary_header =
    "problem,m,algorithm,runs,igd_mean,igd_std,hv_mean,hv_std,degenerate";

/// Per (problem, m, algorithm) statistics, ordered by that key.
inline std::vector<CellSummary> summarize(std::span<const RunRecord> records) {
  using Key = std::tuple<std::string, std::size_t, std::string>;
  std::map<Key, std::pair<std::vector<double>, std::vector<double>>> groups;
  for (const auto& r : records) {
    auto& [igds, hvs] = groups[{r.problem, r.m, r.algorithm}];
    igds.push_back(r.igd);
    hvs.push_back(r.hv);
  }
  std::vector<CellSummary> out;
  for (const auto& [key, values] : groups) {
    const auto& [problem, m, algorithm] = key;
    out.push_back({problem, m, algorithm, mean_std(values.first), mean_std(values.second)});
  }
  return out;
}

inline std::string to_csv_row(const CellSummary& s) {
  std::string out = s.problem + ',' + std::to_string(s.m) + ',' + s.algorithm + ',' + std::to_string(s.igd.count);
  for (double v : {s.igd.mean, s.igd.std, s.hv.mean, s.hv.std}) {
    out += ',' + format_double(v);
  }
  out += s.igd.degenerate ? ",1" : ",0";
  return out;
}

struct FriedmanResult {
  /// Uncorrected chi-square statistic with k - 1 degrees of freedom.
  double statistic = 0.0;
  /// Mean rank of each algorithm across problems (1 = best).
  std::vector<double> average_ranks;
  std::size_t problems = 0;
  std::size_t algorithms = 0;
};

/// Ranks of one row, ascending, ties sharing the average rank.
inline std::vector<double> fractional_ranks(std::span<const double> row) {
  std::vector<std::size_t> order(row.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::ranges::stable_sort(order, [&](std::size_t a, std::size_t b) { return row[a] < row[b]; });
  std::vector<double> ranks(row.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && row[order[j + 1]] == row[order[i]]) {
      ++j;
    }
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) {
      ranks[order[t]] = avg;
    }
    i = j + 1;
  }
  return ranks;
}

/// Friedman test over a problems x algorithms score table. Lower scores
/// rank first unless `higher_is_better`.
inline FriedmanResult friedman_test(const std::vector<std::vector<double>>& scores,
                                    bool higher_is_better = false) {
  if (scores.size() < 2) {
    throw Error(Errc::InvalidConfig, "friedman_test needs at least two problems");
  }
  const auto k = scores.front().size();
  if (k < 2) {
    throw Error(Errc::InvalidConfig, "friedman_test needs at least two algorithms");
  }
  FriedmanResult out;
  out.problems = scores.size();
  out.algorithms = k;
  out.average_ranks.assign(k, 0.0);
  for (const auto& row : scores) {
    if (row.size() != k) {
      throw Error(Errc::DimensionMismatch, "friedman_test: ragged score table");
    }
    std::vector<double> keyed(row);
    if (higher_is_better) {
      for (auto& v : keyed) {
        v = -v;
      }
    }
    const auto ranks = fractional_ranks(keyed);
    for (std::size_t j = 0; j < k; ++j) {
      out.average_ranks[j] += ranks[j];
    }
  }
  const auto n = static_cast<double>(scores.size());
  const auto kd = static_cast<double>(k);
  double sum_sq = 0.0;
  for (auto& r : out.average_ranks) {
    r /= n;
    sum_sq += r * r;
  }
  out.statistic = std::max(0.0, 12.0 * n / (kd * (kd + 1.0)) * (sum_sq - kd * (kd + 1.0) * (kd + 1.0) / 4.0));
  return out;
}

} // namespace e3a::harness

#pragma once

#include "core.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace e3a {

enum class DominanceRelation { Dominates, DominatedBy, NonDominated, Equal };

/// Pareto comparison for minimization. Equal vectors do not dominate each other.
inline DominanceRelation dominates(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(Errc::DimensionMismatch, "dominates: objective vectors differ in length");
  }
  bool a_better = false;
  bool b_better = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) {
      a_better = true;
    } else if (b[i] < a[i]) {
      b_better = true;
    }
    if (a_better && b_better) {
      return DominanceRelation::NonDominated;
    }
  }
  if (a_better) {
    return DominanceRelation::Dominates;
  }
  if (b_better) {
    return DominanceRelation::DominatedBy;
  }
  return DominanceRelation::Equal;
}

/// Nondomination levels as index lists; front 0 is the nondominated set.
struct FrontPartition {
  std::vector<IndexList> fronts;

  [[nodiscard]] std::size_t size() const noexcept { return fronts.size(); }
  [[nodiscard]] const IndexList& operator[](std::size_t k) const { return fronts[k]; }

  /// rank[i] is the index of the front containing i.
  [[nodiscard]] std::vector<std::size_t> ranks(std::size_t n) const {
    std::vector<std::size_t> out(n, 0);
    for (std::size_t k = 0; k < fronts.size(); ++k) {
      for (auto i : fronts[k]) {
        out[i] = k;
      }
    }
    return out;
  }
};

/// Deb's fast nondominated sort, O(m n^2). Indices inside each front are
/// ascending.
inline FrontPartition fast_nondominated_sort(ObjectiveView points) {
  detail::require_rectangular(points, "fast_nondominated_sort needs a nonempty set");
  const auto n = points.size();

  std::vector<std::vector<std::size_t>> dominated(n);
  std::vector<std::size_t> dom_count(n, 0);

  FrontPartition out;
  IndexList current;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      switch (dominates(points[i], points[j])) {
      case DominanceRelation::Dominates:
        dominated[i].push_back(j);
        ++dom_count[j];
        break;
      case DominanceRelation::DominatedBy:
        dominated[j].push_back(i);
        ++dom_count[i];
        break;
      default:
        break;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (dom_count[i] == 0) {
      current.push_back(i);
    }
  }

  while (!current.empty()) {
    IndexList next;
    for (auto i : current) {
      for (auto j : dominated[i]) {
        if (--dom_count[j] == 0) {
          next.push_back(j);
        }
      }
    }
    std::ranges::sort(next);
    out.fronts.push_back(std::move(current));
    current = std::move(next);
  }
  return out;
}

/// Sorts the population and writes each member's rank.
inline FrontPartition fast_nondominated_sort(Population& pop) {
  if (pop.empty()) {
    throw Error(Errc::EmptyPopulation, "fast_nondominated_sort needs a nonempty population");
  }
  const auto objs = pop.objectives();
  auto fronts = fast_nondominated_sort(ObjectiveView{objs});
  for (std::size_t k = 0; k < fronts.size(); ++k) {
    for (auto i : fronts[k]) {
      pop[i].set_rank(k);
    }
  }
  return fronts;
}

/// Indices of the members not dominated by any other member.
inline IndexList nondominated_indices(ObjectiveView points) {
  IndexList out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
      dominated = j != i && dominates(points[j], points[i]) == DominanceRelation::Dominates;
    }
    if (!dominated) {
      out.push_back(i);
    }
  }
  return out;
}

} // namespace e3a

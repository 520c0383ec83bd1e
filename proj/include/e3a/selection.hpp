#pragma once

#include "core.hpp"
#include "dominance.hpp"
#include "normalization.hpp"
#include "scalarization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string_view>

namespace e3a {

// ---------------------------------------------------------------------------
// Shift-based distance
// ---------------------------------------------------------------------------

/// Moves `y` onto `x` in every objective where y is better than x.
inline Vector shift(std::span<const double> y, std::span<const double> x) {
  if (x.size() != y.size()) {
    throw Error(Errc::DimensionMismatch, "shift: vector lengths differ");
  }
  Vector out(y.begin(), y.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] < x[i]) {
      out[i] = x[i];
    }
  }
  return out;
}

/// Euclidean distance between x and shift(y, x). Only objectives where y is
/// worse than x contribute.
inline double shifted_distance(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(Errc::DimensionMismatch, "shifted_distance: vector lengths differ");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double gap = y[i] - x[i];
    if (gap > 0.0) {
      sum += gap * gap;
    }
  }
  return std::sqrt(sum);
}

/// Minimum shifted distance from x to the members of `selected`.
inline double sd(std::span<const double> x, ObjectiveView selected) {
  if (selected.empty()) {
    throw Error(Errc::EmptySelectedSet, "sd needs at least one selected solution");
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& y : selected) {
    best = std::min(best, shifted_distance(x, y));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Greedy max-sd selection
// ---------------------------------------------------------------------------

/// Incremental state of the greedy selection over normalized candidates.
/// For every unselected candidate x, sd_cache()[x] is the current
/// sd(x, selected); entries of selected candidates are meaningless.
class SelectionState {
public:
  struct Step {
    std::size_t index;
    double sd;
  };

  SelectionState(ObjectiveView normalized, IndexList initial)
      : points_{normalized}
      , selected_{std::move(initial)}
      , taken_(normalized.size(), false)
      , cache_(normalized.size(), std::numeric_limits<double>::infinity()) {
    for (auto q : selected_) {
      if (q >= points_.size()) {
        throw Error(Errc::DimensionMismatch, "SelectionState: selected index out of range");
      }
      taken_[q] = true;
    }
    for (std::size_t x = 0; x < points_.size(); ++x) {
      if (taken_[x]) {
        continue;
      }
      for (auto q : selected_) {
        cache_[x] = std::min(cache_[x], shifted_distance(points_[x], points_[q]));
      }
    }
  }

  [[nodiscard]] const IndexList& selected() const noexcept { return selected_; }
  [[nodiscard]] std::span<const double> sd_cache() const noexcept { return cache_; }
  [[nodiscard]] bool is_selected(std::size_t i) const { return taken_.at(i); }
  [[nodiscard]] std::size_t remaining() const noexcept {
    return points_.size() - selected_.size();
  }

  /// Adds the unselected candidate with the largest cached sd (lowest index
  /// on ties) and refreshes the cache against it.
  Step step() {
    std::optional<std::size_t> best;
    for (std::size_t x = 0; x < points_.size(); ++x) {
      if (!taken_[x] && (!best || cache_[x] > cache_[*best])) {
        best = x;
      }
    }
    if (!best) {
      throw Error(Errc::BudgetExceedsCandidates, "SelectionState: no unselected candidates left");
    }
    const auto s = *best;
    const Step out{s, cache_[s]};
    taken_[s] = true;
    selected_.push_back(s);
    for (std::size_t x = 0; x < points_.size(); ++x) {
      if (!taken_[x]) {
        cache_[x] = std::min(cache_[x], shifted_distance(points_[x], points_[s]));
      }
    }
    return out;
  }

private:
  ObjectiveView points_;
  IndexList selected_;
  std::vector<bool> taken_;
  Vector cache_;
};

// ---------------------------------------------------------------------------
// Boundary solutions
// ---------------------------------------------------------------------------

/// Per-axis minimizers of agg over ideal-translated objectives, duplicates
/// removed, in axis order.
inline IndexList boundary_selection(ObjectiveView candidates, const NormalizationContext& ctx) {
  detail::require_rectangular(candidates, "boundary_selection needs a nonempty candidate set");
  if (candidates.front().size() != ctx.size()) {
    throw Error(Errc::DimensionMismatch, "boundary_selection: context dimension differs");
  }
  IndexList out;
  for (auto b : detail::axis_extremes(candidates, ctx.ideal)) {
    if (std::ranges::find(out, b) == out.end()) {
      out.push_back(b);
    }
  }
  return out;
}

namespace detail {

/// Keeps the `k` boundary solutions with smallest agg under their own axis
/// weight (ties to the lower axis), preserving their order in `boundary`.
inline IndexList truncate_boundary(ObjectiveView candidates, const NormalizationContext& ctx,
                                   const IndexList& boundary, std::size_t k) {
  if (boundary.size() <= k) {
    return boundary;
  }
  const auto m = ctx.size();
  const Vector zero(m, 0.0);
  struct Key {
    double value;
    std::size_t axis;
    std::size_t pos;
  };
  std::vector<Key> keys;
  for (std::size_t pos = 0; pos < boundary.size(); ++pos) {
    const auto b = boundary[pos];
    Vector translated(m);
    for (std::size_t i = 0; i < m; ++i) {
      translated[i] = candidates[b][i] - ctx.ideal[i];
    }
    Key key{std::numeric_limits<double>::infinity(), m, pos};
    const bool is_extreme = std::ranges::find(ctx.extreme_indices, b) != ctx.extreme_indices.end();
    for (std::size_t j = 0; j < m; ++j) {
      if (is_extreme && ctx.extreme_indices[j] != b) {
        continue;
      }
      const double value = agg(translated, AxisWeight::make(j, m), zero);
      if (value < key.value) {
        key.value = value;
        key.axis = j;
      }
    }
    keys.push_back(key);
  }
  std::ranges::sort(keys, [](const Key& a, const Key& b) {
    return a.value != b.value ? a.value < b.value : a.axis < b.axis;
  });
  keys.resize(k);
  std::ranges::sort(keys, {}, &Key::pos);
  IndexList out;
  for (const auto& key : keys) {
    out.push_back(boundary[key.pos]);
  }
  return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Population maintenance
// ---------------------------------------------------------------------------

/// Extends `initial` to exactly k members by repeatedly adding the candidate
/// with the largest sd to the already selected set, measured on the
/// normalized objectives. If `initial` already exceeds k it is cut down by
/// the boundary-overflow rule. When `trace` is given, each greedy addition is
/// appended to it.
inline IndexList nonboundary_selection(ObjectiveView candidates, const NormalizationContext& ctx,
                                       IndexList initial, std::size_t k,
                                       std::vector<SelectionState::Step>* trace = nullptr) {
  if (k > candidates.size()) {
    throw Error(Errc::BudgetExceedsCandidates, "nonboundary_selection: k exceeds candidate count");
  }
  if (initial.size() > k) {
    return detail::truncate_boundary(candidates, ctx, initial, k);
  }
  const auto normalized = normalize(candidates, ctx);
  SelectionState state(normalized, std::move(initial));
  while (state.selected().size() < k) {
    auto step = state.step();
    if (trace != nullptr) {
      trace->push_back(step);
    }
  }
  return state.selected();
}

/// Chooses k of the candidates: boundary solutions first, then the greedy
/// max-sd fill. Returned indices are in selection order.
inline IndexList population_maintenance(ObjectiveView candidates, std::size_t k,
                                        std::vector<SelectionState::Step>* trace = nullptr) {
  detail::require_rectangular(candidates, "population_maintenance needs a nonempty candidate set");
  if (k >= candidates.size()) {
    throw Error(Errc::NoTruncationNeeded, "population_maintenance: k must be below the candidate count");
  }
  if (k == 0) {
    return {};
  }
  const auto ctx = build_context(candidates);
  auto boundary = boundary_selection(candidates, ctx);
  return nonboundary_selection(candidates, ctx, std::move(boundary), k, trace);
}

// ---------------------------------------------------------------------------
// Crowding-distance baseline
// ---------------------------------------------------------------------------

/// NSGA-II crowding distance. Each objective is scaled by its range over the
/// set; extremes of every objective with nonzero range get +inf.
inline Vector crowding_distance(ObjectiveView points) {
  detail::require_rectangular(points, "crowding_distance needs a nonempty set");
  const auto n = points.size();
  const auto m = points.front().size();
  Vector dist(n, 0.0);
  IndexList order(n);
  for (std::size_t i = 0; i < m; ++i) {
    std::iota(order.begin(), order.end(), 0);
    std::ranges::stable_sort(order, [&](auto a, auto b) { return points[a][i] < points[b][i]; });
    const double range = points[order.back()][i] - points[order.front()][i];
    if (!(range > 0.0)) {
      continue;
    }
    dist[order.front()] = std::numeric_limits<double>::infinity();
    dist[order.back()] = std::numeric_limits<double>::infinity();
    for (std::size_t r = 1; r + 1 < n; ++r) {
      dist[order[r]] += (points[order[r + 1]][i] - points[order[r - 1]][i]) / range;
    }
  }
  return dist;
}

/// Keeps the k candidates with largest crowding distance, lower index first
/// on ties. Result is in ascending index order.
inline IndexList crowding_truncation_baseline(ObjectiveView candidates, std::size_t k) {
  detail::require_rectangular(candidates, "crowding_truncation_baseline needs a nonempty set");
  if (k >= candidates.size()) {
    throw Error(Errc::NoTruncationNeeded, "crowding_truncation_baseline: k must be below the candidate count");
  }
  const auto dist = crowding_distance(candidates);
  IndexList order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::ranges::stable_sort(order, [&](auto a, auto b) { return dist[a] > dist[b]; });
  order.resize(k);
  std::ranges::sort(order);
  return order;
}

// ---------------------------------------------------------------------------
// Environmental selection
// ---------------------------------------------------------------------------

enum class Selector { E3A, CrowdingBaseline };

constexpr std::string_view to_string(Selector s) noexcept {
  return s == Selector::E3A ? "E3A" : "CrowdingBaseline";
}

inline std::optional<Selector> parse_selector(std::string_view name) noexcept {
  if (name == "E3A") {
    return Selector::E3A;
  }
  if (name == "CrowdingBaseline") {
    return Selector::CrowdingBaseline;
  }
  return std::nullopt;
}

/// Survivor indices: whole fronts while they fit, then `selector` truncates
/// the critical front to the remaining budget.
inline IndexList environmental_selection_indices(ObjectiveView combined, std::size_t n,
                                                 Selector selector = Selector::E3A) {
  if (combined.size() < n) {
    throw Error(Errc::InsufficientSolutions, "environmental_selection: fewer solutions than n");
  }
  if (n == 0) {
    return {};
  }
  const auto fronts = fast_nondominated_sort(combined);
  IndexList out;
  out.reserve(n);
  std::size_t f = 0;
  while (out.size() + fronts[f].size() < n) {
    out.insert(out.end(), fronts[f].begin(), fronts[f].end());
    ++f;
  }
  const auto& critical = fronts[f];
  const auto budget = n - out.size();
  if (budget == critical.size()) {
    out.insert(out.end(), critical.begin(), critical.end());
    return out;
  }

  ObjectiveMatrix candidates;
  candidates.reserve(critical.size());
  for (auto i : critical) {
    candidates.push_back(combined[i]);
  }
  const auto picked = selector == Selector::E3A
                          ? population_maintenance(candidates, budget)
                          : crowding_truncation_baseline(candidates, budget);
  for (auto p : picked) {
    out.push_back(critical[p]);
  }
  return out;
}

inline Population environmental_selection(const Population& combined, std::size_t n,
                                          Selector selector = Selector::E3A) {
  const auto objs = combined.objectives();
  const auto keep = environmental_selection_indices(objs, n, selector);
  return combined.subset(keep);
}

inline IndexList population_maintenance(const Population& candidates, std::size_t k) {
  const auto objs = candidates.objectives();
  return population_maintenance(ObjectiveView{objs}, k);
}

} // namespace e3a

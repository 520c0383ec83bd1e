#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace e3a {

using Vector = std::vector<double>;
using ObjectiveMatrix = std::vector<Vector>;
using ObjectiveView = std::span<const Vector>;
using IndexList = std::vector<std::size_t>;

enum class Errc {
  EmptyPopulation,
  DimensionMismatch,
  EmptySelectedSet,
  BudgetExceedsCandidates,
  NoTruncationNeeded,
  InsufficientSolutions,
  OddParentCount,
  InvalidDecisionVector,
  NoAnalyticFront,
  EmptySet,
  DimensionUnsupported,
  InvalidConfig,
  UnsupportedProblem,
  UnsupportedAlgorithm,
  IoError,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
  case Errc::EmptyPopulation: return "EmptyPopulation";
  case Errc::DimensionMismatch: return "DimensionMismatch";
  case Errc::EmptySelectedSet: return "EmptySelectedSet";
  case Errc::BudgetExceedsCandidates: return "BudgetExceedsCandidates";
  case Errc::NoTruncationNeeded: return "NoTruncationNeeded";
  case Errc::InsufficientSolutions: return "InsufficientSolutions";
  case Errc::OddParentCount: return "OddParentCount";
  case Errc::InvalidDecisionVector: return "InvalidDecisionVector";
  case Errc::NoAnalyticFront: return "NoAnalyticFront";
  case Errc::EmptySet: return "EmptySet";
  case Errc::DimensionUnsupported: return "DimensionUnsupported";
  case Errc::InvalidConfig: return "InvalidConfig";
  case Errc::UnsupportedProblem: return "UnsupportedProblem";
  case Errc::UnsupportedAlgorithm: return "UnsupportedAlgorithm";
  case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

/// Library exception. `what()` starts with the error name, e.g.
/// "EmptyPopulation: ideal_point needs at least one member".
class Error : public std::runtime_error {
public:
  Error(Errc code, std::string_view detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + std::string(detail))
      , code_{code} {
  }

  [[nodiscard]] Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

/// Box constraints of a decision space.
struct Bounds {
  Vector lower;
  Vector upper;

  [[nodiscard]] std::size_t size() const noexcept { return lower.size(); }

  [[nodiscard]] bool contains(std::span<const double> x) const noexcept {
    if (x.size() != lower.size()) {
      return false;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!(x[i] >= lower[i] && x[i] <= upper[i])) {
        return false;
      }
    }
    return true;
  }
};

/// A decision vector together with its evaluated objective vector.
/// Both are fixed at construction; the nondomination rank is the only
/// annotation that changes afterwards.
class Solution {
public:
  Solution() = default;
  Solution(Vector decision, Vector objectives)
      : decision_{std::move(decision)}
      , objectives_{std::move(objectives)} {
  }

  [[nodiscard]] const Vector& decision() const noexcept { return decision_; }
  [[nodiscard]] const Vector& objectives() const noexcept { return objectives_; }

  [[nodiscard]] std::optional<std::size_t> rank() const noexcept { return rank_; }
  void set_rank(std::size_t rank) noexcept { rank_ = rank; }
  void clear_rank() noexcept { rank_.reset(); }

  friend bool operator==(const Solution&, const Solution&) = default;

private:
  Vector decision_;
  Vector objectives_;
  std::optional<std::size_t> rank_;
};

/// Ordered collection of solutions belonging to one problem. All members
/// share the same decision and objective dimensions.
class Population {
public:
  Population() = default;
  explicit Population(std::string problem_id)
      : problem_id_{std::move(problem_id)} {
  }

  void add(Solution s) {
    if (!members_.empty()) {
      const auto& front = members_.front();
      if (s.decision().size() != front.decision().size() ||
          s.objectives().size() != front.objectives().size()) {
        throw Error(Errc::DimensionMismatch, "population members must share d and m");
      }
    }
    members_.push_back(std::move(s));
  }

  void reserve(std::size_t n) { members_.reserve(n); }

  [[nodiscard]] const std::string& problem_id() const noexcept { return problem_id_; }
  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] bool empty() const noexcept { return members_.empty(); }

  [[nodiscard]] std::size_t num_objectives() const noexcept {
    return members_.empty() ? 0 : members_.front().objectives().size();
  }
  [[nodiscard]] std::size_t num_variables() const noexcept {
    return members_.empty() ? 0 : members_.front().decision().size();
  }

  [[nodiscard]] const Solution& operator[](std::size_t i) const { return members_[i]; }
  [[nodiscard]] Solution& operator[](std::size_t i) { return members_[i]; }

  [[nodiscard]] auto begin() const noexcept { return members_.begin(); }
  [[nodiscard]] auto end() const noexcept { return members_.end(); }
  [[nodiscard]] auto begin() noexcept { return members_.begin(); }
  [[nodiscard]] auto end() noexcept { return members_.end(); }

  [[nodiscard]] std::span<const Solution> members() const noexcept { return members_; }

  /// Copy of the objective vectors, row k belonging to member k.
  [[nodiscard]] ObjectiveMatrix objectives() const {
    ObjectiveMatrix out;
    out.reserve(members_.size());
    for (const auto& s : members_) {
      out.push_back(s.objectives());
    }
    return out;
  }

  /// New population holding copies of the members at `indices`, in that order.
  [[nodiscard]] Population subset(std::span<const std::size_t> indices) const {
    Population out(problem_id_);
    out.reserve(indices.size());
    for (auto i : indices) {
      out.members_.push_back(members_.at(i));
    }
    return out;
  }

private:
  std::string problem_id_;
  std::vector<Solution> members_;
};

namespace detail {

inline void require_rectangular(ObjectiveView points, std::string_view what) {
  if (points.empty()) {
    throw Error(Errc::EmptyPopulation, what);
  }
  const auto m = points.front().size();
  for (const auto& p : points) {
    if (p.size() != m) {
      throw Error(Errc::DimensionMismatch, what);
    }
  }
}

} // namespace detail

/// Component-wise minimum of all objective vectors.
inline Vector ideal_point(ObjectiveView points) {
  detail::require_rectangular(points, "ideal_point needs a nonempty set");
  Vector out = points.front();
  for (const auto& p : points) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = std::min(out[i], p[i]);
    }
  }
  return out;
}

/// Component-wise maximum of all objective vectors.
inline Vector nadir_point(ObjectiveView points) {
  detail::require_rectangular(points, "nadir_point needs a nonempty set");
  Vector out = points.front();
  for (const auto& p : points) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = std::max(out[i], p[i]);
    }
  }
  return out;
}

inline Vector ideal_point(const Population& pop) {
  if (pop.empty()) {
    throw Error(Errc::EmptyPopulation, "ideal_point needs a nonempty population");
  }
  const auto objs = pop.objectives();
  return ideal_point(ObjectiveView{objs});
}

inline Vector nadir_point(const Population& pop) {
  if (pop.empty()) {
    throw Error(Errc::EmptyPopulation, "nadir_point needs a nonempty population");
  }
  const auto objs = pop.objectives();
  return nadir_point(ObjectiveView{objs});
}

} // namespace e3a

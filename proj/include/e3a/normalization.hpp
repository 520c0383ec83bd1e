#pragma once

#include "core.hpp"
#include "scalarization.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace e3a {

/// Adaptive objective normalization in the NSGA-III style:
/// f_hat_i = (f_i - ideal_i) / intercepts_i.
struct NormalizationContext {
  static constexpr double min_intercept = 1e-10;

  Vector ideal;
  Vector intercepts;
  /// extreme_indices[j] is the candidate closest to objective axis j.
  IndexList extreme_indices;
  /// True when the hyperplane through the extreme points was unusable and the
  /// intercepts fell back to the per-axis range.
  bool used_fallback = false;

  [[nodiscard]] std::size_t size() const noexcept { return ideal.size(); }
};

/// Builds the context from a candidate set: ideal point, axis-extreme
/// solutions found with agg on ideal-translated objectives, and the axis
/// intercepts of the hyperplane through those extremes.
///
/// The hyperplane is discarded when its linear system is singular or any
/// intercept is non-finite, non-positive, or below 1e-10. Intercepts then
/// become the per-axis maximum of the translated objectives, with 1.0
/// substituted for any axis whose range is below 1e-10.
inline NormalizationContext build_context(ObjectiveView candidates) {
  detail::require_rectangular(candidates, "build_context needs a nonempty candidate set");
  const auto m = candidates.front().size();

  NormalizationContext ctx;
  ctx.ideal = ideal_point(candidates);
  ctx.extreme_indices = detail::axis_extremes(candidates, ctx.ideal);
  ctx.intercepts.assign(m, 0.0);

  Eigen::MatrixXd extremes(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto& p = candidates[ctx.extreme_indices[j]];
    for (std::size_t i = 0; i < m; ++i) {
      extremes(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = p[i] - ctx.ideal[i];
    }
  }

  bool ok = false;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(extremes);
  if (lu.isInvertible()) {
    const Eigen::VectorXd plane = lu.solve(Eigen::VectorXd::Ones(static_cast<Eigen::Index>(m)));
    ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      const double intercept = 1.0 / plane(static_cast<Eigen::Index>(i));
      ok = std::isfinite(intercept) && intercept >= NormalizationContext::min_intercept;
      ctx.intercepts[i] = intercept;
    }
  }

  if (!ok) {
    ctx.used_fallback = true;
    const auto nadir = nadir_point(candidates);
    for (std::size_t i = 0; i < m; ++i) {
      const double range = nadir[i] - ctx.ideal[i];
      ctx.intercepts[i] = range < NormalizationContext::min_intercept ? 1.0 : range;
    }
  }
  return ctx;
}

inline Vector normalize_point(std::span<const double> f, const NormalizationContext& ctx) {
  if (f.size() != ctx.size()) {
    throw Error(Errc::DimensionMismatch, "normalize: objective length differs from context");
  }
  Vector out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i] = (f[i] - ctx.ideal[i]) / ctx.intercepts[i];
  }
  return out;
}

inline ObjectiveMatrix normalize(ObjectiveView candidates, const NormalizationContext& ctx) {
  ObjectiveMatrix out;
  out.reserve(candidates.size());
  for (const auto& f : candidates) {
    out.push_back(normalize_point(f, ctx));
  }
  return out;
}

inline NormalizationContext build_context(const Population& candidates) {
  if (candidates.empty()) {
    throw Error(Errc::EmptyPopulation, "build_context needs a nonempty candidate set");
  }
  const auto objs = candidates.objectives();
  return build_context(ObjectiveView{objs});
}

inline ObjectiveMatrix normalize(const Population& candidates, const NormalizationContext& ctx) {
  const auto objs = candidates.objectives();
  return normalize(ObjectiveView{objs}, ctx);
}

} // namespace e3a

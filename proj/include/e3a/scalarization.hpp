#pragma once

#include "core.hpp"

#include <cmath>
#include <span>

namespace e3a {

/// Weight vector lying almost on objective axis `axis`: 1 on that axis and
/// 1e-6 elsewhere.
struct AxisWeight {
  static constexpr double off_axis = 1e-6;

  std::size_t axis = 0;
  Vector w;

  static AxisWeight make(std::size_t axis, std::size_t m) {
    if (axis >= m) {
      throw Error(Errc::DimensionMismatch, "AxisWeight: axis out of range");
    }
    AxisWeight out{axis, Vector(m, off_axis)};
    out.w[axis] = 1.0;
    return out;
  }
};

/// Modified Tchebycheff scalarization: max_i |x_i - z_i| / w_i.
inline double agg(std::span<const double> x, const AxisWeight& weight,
                  std::span<const double> z_min) {
  if (x.size() != weight.w.size() || z_min.size() != x.size()) {
    throw Error(Errc::DimensionMismatch, "agg: vector lengths differ");
  }
  double out = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    out = std::max(out, std::abs(x[i] - z_min[i]) / weight.w[i]);
  }
  return out;
}

namespace detail {

/// For every axis j, the lowest index minimizing agg(p - ideal, w_j, 0).
/// May contain repeats.
inline IndexList axis_extremes(ObjectiveView points, std::span<const double> ideal) {
  const auto m = ideal.size();
  const Vector zero(m, 0.0);
  IndexList out(m, 0);
  Vector translated(m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto weight = AxisWeight::make(j, m);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < points.size(); ++k) {
      for (std::size_t i = 0; i < m; ++i) {
        translated[i] = points[k][i] - ideal[i];
      }
      const double value = agg(translated, weight, zero);
      if (value < best) {
        best = value;
        out[j] = k;
      }
    }
  }
  return out;
}

} // namespace detail

} // namespace e3a

#pragma once

#include "core.hpp"
#include "metrics.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <numeric>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

namespace e3a {

/// Box-constrained benchmark problem with m minimized objectives.
class Problem {
public:
  Problem(std::string id, std::size_t m, std::size_t d)
      : id_{std::move(id)}
      , m_{m}
      , bounds_{Vector(d, 0.0), Vector(d, 1.0)} {
  }
  virtual ~Problem() = default;

  [[nodiscard]] const std::string& id() const noexcept { return id_; }
  [[nodiscard]] std::size_t num_objectives() const noexcept { return m_; }
  [[nodiscard]] std::size_t num_variables() const noexcept { return bounds_.size(); }
  [[nodiscard]] const Bounds& bounds() const noexcept { return bounds_; }

  /// Objective vector of x; throws InvalidDecisionVector outside the box.
  [[nodiscard]] Vector evaluate(std::span<const double> x) const {
    if (!bounds_.contains(x)) {
      throw Error(Errc::InvalidDecisionVector,
                  id_ + ": decision vector has the wrong length or leaves the box");
    }
    return objectives(x);
  }

  [[nodiscard]] Solution make_solution(Vector x) const {
    auto f = evaluate(x);
    return Solution(std::move(x), std::move(f));
  }

  [[nodiscard]] virtual bool has_analytic_front() const noexcept { return false; }

  /// `count` points on the true Pareto front.
  [[nodiscard]] virtual ReferenceSet sample_pareto_front(std::size_t /*count*/) const {
    throw Error(Errc::NoAnalyticFront, id_ + " has no analytic front sampler");
  }

  /// Closed-form [ideal, nadir] of the true front, when known.
  [[nodiscard]] virtual std::optional<std::pair<Vector, Vector>> front_range() const {
    return std::nullopt;
  }

  /// True when f lies on the analytic Pareto front within `tol`.
  [[nodiscard]] virtual bool on_front(std::span<const double> /*f*/, double /*tol*/) const {
    throw Error(Errc::NoAnalyticFront, id_ + " has no front-membership predicate");
  }

protected:
  [[nodiscard]] virtual Vector objectives(std::span<const double> x) const = 0;

  std::string id_;
  std::size_t m_;
  Bounds bounds_;
};

namespace detail {

constexpr double half_pi = std::numbers::pi / 2.0;

/// Das-Dennis lattice with the fewest divisions giving at least `count` points.
inline ObjectiveMatrix lattice_at_least(std::size_t m, std::size_t count) {
  std::size_t h = 1;
  while (binomial(h + m - 1, m - 1) < count) {
    ++h;
  }
  return das_dennis(m, h);
}

/// Picks `count` spread-out rows: the per-axis minimizers first, then
/// repeatedly the row farthest from everything picked so far (lowest index
/// on ties).
inline ObjectiveMatrix farthest_point_subsample(const ObjectiveMatrix& candidates,
                                                std::size_t count) {
  if (candidates.size() <= count) {
    return candidates;
  }
  const auto n = candidates.size();
  const auto m = candidates.front().size();
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  std::vector<bool> taken(n, false);
  ObjectiveMatrix out;
  out.reserve(count);

  auto take = [&](std::size_t s) {
    taken[s] = true;
    out.push_back(candidates[s]);
    for (std::size_t i = 0; i < n; ++i) {
      if (!taken[i]) {
        nearest[i] = std::min(nearest[i], euclidean_distance(candidates[i], candidates[s]));
      }
    }
  };

  for (std::size_t j = 0; j < m && out.size() < count; ++j) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (candidates[i][j] < candidates[best][j]) {
        best = i;
      }
    }
    if (!taken[best]) {
      take(best);
    }
  }
  while (out.size() < count) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < n; ++i) {
      if (!taken[i] && (!best || nearest[i] > nearest[*best])) {
        best = i;
      }
    }
    take(*best);
  }
  return out;
}

/// Every index tuple of a dims-dimensional grid with `per_axis` points per
/// axis, first axis varying fastest.
inline std::vector<std::vector<std::size_t>> grid_indices(std::size_t dims, std::size_t per_axis) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> idx(dims, 0);
  while (true) {
    out.push_back(idx);
    std::size_t axis = 0;
    while (axis < dims && ++idx[axis] == per_axis) {
      idx[axis++] = 0;
    }
    if (axis == dims) {
      break;
    }
  }
  return out;
}

/// Evenly spaced grid over [0,1]^dims with `per_axis` points per axis.
inline ObjectiveMatrix unit_grid(std::size_t dims, std::size_t per_axis) {
  const double step = per_axis > 1 ? 1.0 / static_cast<double>(per_axis - 1) : 0.0;
  ObjectiveMatrix out;
  for (const auto& idx : grid_indices(dims, per_axis)) {
    Vector v(dims);
    for (std::size_t i = 0; i < dims; ++i) {
      v[i] = static_cast<double>(idx[i]) * step;
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// Smallest per-axis resolution r with r^dims >= target.
inline std::size_t grid_resolution(std::size_t dims, std::size_t target) {
  std::size_t r = 2;
  auto size = [&](std::size_t res) {
    double total = 1.0;
    for (std::size_t i = 0; i < dims; ++i) {
      total *= static_cast<double>(res);
    }
    return total;
  };
  while (size(r) < static_cast<double>(target)) {
    ++r;
  }
  return r;
}

/// DTLZ-style spherical map: f_j = scale_j * prod_{i < m-1-j} cos(theta_i) * sin(theta_{m-1-j}).
template<typename Scale>
Vector spherical(std::span<const double> theta, std::size_t m, Scale&& scale) {
  Vector f(m);
  for (std::size_t j = 0; j < m; ++j) {
    double v = scale(j);
    for (std::size_t i = 0; i + 1 + j < m; ++i) {
      v *= std::cos(theta[i]);
    }
    if (j > 0) {
      v *= std::sin(theta[m - 1 - j]);
    }
    f[j] = v;
  }
  return f;
}

inline bool all_nonnegative(std::span<const double> f, double tol) {
  return std::ranges::all_of(f, [tol](double v) { return v >= -tol; });
}

} // namespace detail

// ---------------------------------------------------------------------------
// DTLZ1: linear front sum(f) = 0.5, multimodal g.
// ---------------------------------------------------------------------------
class Dtlz1 final : public Problem {
public:
  explicit Dtlz1(std::size_t m, std::optional<std::size_t> d = std::nullopt)
      : Problem("DTLZ1", m, d.value_or(m + 4)) {
  }

  [[nodiscard]] bool has_analytic_front() const noexcept override { return true; }

  [[nodiscard]] ReferenceSet sample_pareto_front(std::size_t count) const override {
    auto lattice = detail::farthest_point_subsample(detail::lattice_at_least(m_, count), count);
    for (auto& v : lattice) {
      for (auto& c : v) {
        c *= 0.5;
      }
    }
    return {std::move(lattice)};
  }

  [[nodiscard]] std::optional<std::pair<Vector, Vector>> front_range() const override {
    return std::pair{Vector(m_, 0.0), Vector(m_, 0.5)};
  }

  [[nodiscard]] bool on_front(std::span<const double> f, double tol) const override {
    double sum = 0.0;
    for (double v : f) {
      sum += v;
    }
    return f.size() == m_ && detail::all_nonnegative(f, tol) && std::abs(sum - 0.5) <= tol;
  }

protected:
  [[nodiscard]] Vector objectives(std::span<const double> x) const override {
    const auto d = x.size();
    double g = static_cast<double>(d - m_ + 1);
    for (std::size_t i = m_ - 1; i < d; ++i) {
      const double t = x[i] - 0.5;
      g += t * t - std::cos(20.0 * std::numbers::pi * t);
    }
    g *= 100.0;
    Vector f(m_);
    for (std::size_t j = 0; j < m_; ++j) {
      double v = 0.5 * (1.0 + g);
      for (std::size_t i = 0; i + 1 + j < m_; ++i) {
        v *= x[i];
      }
      if (j > 0) {
        v *= 1.0 - x[m_ - 1 - j];
      }
      f[j] = v;
    }
    return f;
  }
};

// ---------------------------------------------------------------------------
// DTLZ2: concave unit-sphere front.
// ---------------------------------------------------------------------------
class Dtlz2 final : public Problem {
public:
  explicit Dtlz2(std::size_t m, std::optional<std::size_t> d = std::nullopt)
      : Problem("DTLZ2", m, d.value_or(m + 9)) {
  }

  [[nodiscard]] bool has_analytic_front() const noexcept override { return true; }

  [[nodiscard]] ReferenceSet sample_pareto_front(std::size_t count) const override {
    auto lattice = detail::farthest_point_subsample(detail::lattice_at_least(m_, count), count);
    for (auto& v : lattice) {
      const double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
      for (auto& c : v) {
        c /= norm;
      }
    }
    return {std::move(lattice)};
  }

  [[nodiscard]] std::optional<std::pair<Vector, Vector>> front_range() const override {
    return std::pair{Vector(m_, 0.0), Vector(m_, 1.0)};
  }

  [[nodiscard]] bool on_front(std::span<const double> f, double tol) const override {
    double sum = 0.0;
    for (double v : f) {
      sum += v * v;
    }
    return f.size() == m_ && detail::all_nonnegative(f, tol) && std::abs(sum - 1.0) <= tol;
  }

protected:
  [[nodiscard]] Vector objectives(std::span<const double> x) const override {
    double g = 0.0;
    for (std::size_t i = m_ - 1; i < x.size(); ++i) {
      g += (x[i] - 0.5) * (x[i] - 0.5);
    }
    Vector theta(m_ - 1);
    for (std::size_t i = 0; i + 1 < m_; ++i) {
      theta[i] = x[i] * detail::half_pi;
    }
    return detail::spherical(theta, m_, [g](std::size_t) { return 1.0 + g; });
  }
};

// ---------------------------------------------------------------------------
// MaF1: inverted linear front, sum(f) = m - 1.
// ---------------------------------------------------------------------------
class Maf1 final : public Problem {
public:
  explicit Maf1(std::size_t m, std::optional<std::size_t> d = std::nullopt)
      : Problem("MaF1", m, d.value_or(m + 9)) {
  }

  [[nodiscard]] bool has_analytic_front() const noexcept override { return true; }

  [[nodiscard]] ReferenceSet sample_pareto_front(std::size_t count) const override {
    auto lattice = detail::farthest_point_subsample(detail::lattice_at_least(m_, count), count);
    for (auto& v : lattice) {
      for (auto& c : v) {
        c = 1.0 - c;
      }
    }
    return {std::move(lattice)};
  }

  [[nodiscard]] std::optional<std::pair<Vector, Vector>> front_range() const override {
    return std::pair{Vector(m_, 0.0), Vector(m_, 1.0)};
  }

  [[nodiscard]] bool on_front(std::span<const double> f, double tol) const override {
    double sum = 0.0;
    for (double v : f) {
      sum += v;
      if (v > 1.0 + tol) {
        return false;
      }
    }
    return f.size() == m_ && detail::all_nonnegative(f, tol) &&
           std::abs(sum - static_cast<double>(m_ - 1)) <= tol;
  }

protected:
  [[nodiscard]] Vector objectives(std::span<const double> x) const override {
    double g = 0.0;
    for (std::size_t i = m_ - 1; i < x.size(); ++i) {
      g += (x[i] - 0.5) * (x[i] - 0.5);
    }
    Vector f(m_);
    for (std::size_t j = 0; j < m_; ++j) {
      double prod = 1.0;
      for (std::size_t i = 0; i + 1 + j < m_; ++i) {
        prod *= x[i];
      }
      if (j > 0) {
        prod *= 1.0 - x[m_ - 1 - j];
      }
      f[j] = (1.0 + g) * (1.0 - prod);
    }
    return f;
  }
};

// ---------------------------------------------------------------------------
// MaF2: DTLZ2 variant whose front is the part of the unit sphere with every
// angle in [pi/8, 3pi/8]; each objective has its own slice of distance
// variables.
// ---------------------------------------------------------------------------
class Maf2 final : public Problem {
public:
  explicit Maf2(std::size_t m, std::optional<std::size_t> d = std::nullopt)
      : Problem("MaF2", m, d.value_or(m + 9)) {
  }

  [[nodiscard]] bool has_analytic_front() const noexcept override { return true; }

  [[nodiscard]] ReferenceSet sample_pareto_front(std::size_t count) const override {
    const auto dims = m_ - 1;
    const auto grid = detail::unit_grid(dims, detail::grid_resolution(dims, 4 * count));
    ObjectiveMatrix candidates;
    candidates.reserve(grid.size());
    for (const auto& pos : grid) {
      candidates.push_back(front_point(pos));
    }
    return {detail::farthest_point_subsample(candidates, count)};
  }

  [[nodiscard]] bool on_front(std::span<const double> f, double tol) const override {
    if (f.size() != m_ || !detail::all_nonnegative(f, tol)) {
      return false;
    }
    double sum = 0.0;
    for (double v : f) {
      sum += v * v;
    }
    if (std::abs(sum - 1.0) > tol) {
      return false;
    }
    // Recover the angles from the last objective backwards.
    const double lo = std::numbers::pi / 8.0 - tol;
    const double hi = 3.0 * std::numbers::pi / 8.0 + tol;
    double cos_prod = 1.0;
    for (std::size_t i = 0; i + 1 < m_; ++i) {
      const double s = std::clamp(f[m_ - 1 - i] / cos_prod, -1.0, 1.0);
      const double theta = std::asin(s);
      if (theta < lo || theta > hi) {
        return false;
      }
      cos_prod *= std::cos(theta);
    }
    return true;
  }

protected:
  [[nodiscard]] Vector objectives(std::span<const double> x) const override {
    const auto d = x.size();
    const auto per = (d - m_ + 1) / m_;
    Vector g(m_, 0.0);
    for (std::size_t j = 0; j < m_; ++j) {
      const auto begin = (m_ - 1) + j * per;
      const auto end = j + 1 == m_ ? d : (m_ - 1) + (j + 1) * per;
      for (std::size_t i = begin; i < end; ++i) {
        const double t = (x[i] / 2.0 + 0.25) - 0.5;
        g[j] += t * t;
      }
    }
    Vector theta(m_ - 1);
    for (std::size_t i = 0; i + 1 < m_; ++i) {
      theta[i] = (x[i] / 2.0 + 0.25) * detail::half_pi;
    }
    return detail::spherical(theta, m_, [&g](std::size_t j) { return 1.0 + g[j]; });
  }

private:
  [[nodiscard]] Vector front_point(std::span<const double> position) const {
    Vector theta(m_ - 1);
    for (std::size_t i = 0; i + 1 < m_; ++i) {
      theta[i] = (position[i] / 2.0 + 0.25) * detail::half_pi;
    }
    return detail::spherical(theta, m_, [](std::size_t) { return 1.0; });
  }
};

// ---------------------------------------------------------------------------
// MaF6: degenerate front (a curve for every m), DTLZ5(2, m) style.
// ---------------------------------------------------------------------------
class Maf6 final : public Problem {
public:
  static constexpr std::size_t manifold_dim = 2;

  explicit Maf6(std::size_t m, std::optional<std::size_t> d = std::nullopt)
      : Problem("MaF6", m, d.value_or(m + 9)) {
  }

  [[nodiscard]] bool has_analytic_front() const noexcept override { return true; }

  [[nodiscard]] ReferenceSet sample_pareto_front(std::size_t count) const override {
    const auto steps = std::max<std::size_t>(20 * count, 2);
    ObjectiveMatrix candidates;
    candidates.reserve(steps);
    for (std::size_t s = 0; s < steps; ++s) {
      candidates.push_back(curve_point(static_cast<double>(s) / static_cast<double>(steps - 1)));
    }
    return {detail::farthest_point_subsample(candidates, count)};
  }

  [[nodiscard]] bool on_front(std::span<const double> f, double tol) const override {
    if (f.size() != m_ || !detail::all_nonnegative(f, tol)) {
      return false;
    }
    const double t = std::asin(std::clamp(f[m_ - 1], 0.0, 1.0)) / detail::half_pi;
    const auto p = curve_point(t);
    return euclidean_distance(p, f) <= tol;
  }

protected:
  [[nodiscard]] Vector objectives(std::span<const double> x) const override {
    double g = 0.0;
    for (std::size_t i = m_ - 1; i < x.size(); ++i) {
      g += (x[i] - 0.5) * (x[i] - 0.5);
    }
    Vector theta(m_ - 1);
    for (std::size_t i = 0; i + 1 < m_; ++i) {
      double v = x[i];
      if (i + 1 >= manifold_dim) {
        v = (1.0 + 2.0 * g * v) / (2.0 + 2.0 * g);
      }
      theta[i] = v * detail::half_pi;
    }
    return detail::spherical(theta, m_, [g](std::size_t) { return 1.0 + 100.0 * g; });
  }

private:
  [[nodiscard]] Vector curve_point(double t) const {
    Vector theta(m_ - 1, std::numbers::pi / 4.0);
    theta[0] = t * detail::half_pi;
    return detail::spherical(theta, m_, [](std::size_t) { return 1.0; });
  }
};

// ---------------------------------------------------------------------------
// MaF7: DTLZ7, mixed and disconnected front.
// ---------------------------------------------------------------------------
class Maf7 final : public Problem {
public:
  explicit Maf7(std::size_t m, std::optional<std::size_t> d = std::nullopt)
      : Problem("MaF7", m, d.value_or(m + 19)) {
  }

  /// Per-coordinate shape term; the last objective at g = 1 is
  /// 2 * (m - sum_j h(f_j)).
  static double h(double v) { return v / 2.0 * (1.0 + std::sin(3.0 * std::numbers::pi * v)); }

  [[nodiscard]] bool has_analytic_front() const noexcept override { return true; }

  /// Nondominated values of one leading objective: [0, a] and (b, c], where
  /// a and c are the first two local maxima of h and h(b) = h(a).
  struct FrontIntervals {
    double a;
    double b;
    double c;
  };

  static const FrontIntervals& front_intervals() {
    static const FrontIntervals iv = [] {
      constexpr double k = 3.0 * std::numbers::pi;
      const auto dh = [](double v) { return 0.5 * (1.0 + std::sin(k * v)) + 0.5 * k * v * std::cos(k * v); };
      // Root of f on [lo, hi] given f(lo) > 0 > f(hi) or the reverse.
      const auto bisect = [](auto f, double lo, double hi) {
        const bool rising = f(lo) < 0.0;
        for (int it = 0; it < 200; ++it) {
          const double mid = 0.5 * (lo + hi);
          ((f(mid) < 0.0) == rising ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
      };
      FrontIntervals out{};
      out.a = bisect(dh, 0.1, 0.4);
      out.c = bisect(dh, 0.75, 0.95);
      const double level = h(out.a);
      out.b = bisect([&](double v) { return h(v) - level; }, 0.5, out.c);
      return out;
    }();
    return iv;
  }

  /// Lattice over the first m-1 objectives restricted to the nondominated
  /// intervals, then farthest-point subsampled. Along each axis h is strictly
  /// increasing on the joined intervals, so no two lattice points dominate
  /// each other.
  [[nodiscard]] ReferenceSet sample_pareto_front(std::size_t count) const override {
    const auto dims = m_ - 1;
    const auto& iv = front_intervals();
    const double length = iv.a + (iv.c - iv.b);
    std::size_t resolution = 2;
    while (std::pow(static_cast<double>(resolution), static_cast<double>(dims)) < 4.0 * static_cast<double>(count)) {
      ++resolution;
    }
    Vector values(resolution);
    for (std::size_t s = 0; s < resolution; ++s) {
      const double t = length * static_cast<double>(s) / static_cast<double>(resolution - 1);
      values[s] = t <= iv.a ? t : iv.b + (t - iv.a);
    }
    values.back() = iv.c;

    ObjectiveMatrix candidates;
    for (const auto& idx : detail::grid_indices(dims, resolution)) {
      Vector f(m_);
      double sum = 0.0;
      for (std::size_t j = 0; j < dims; ++j) {
        f[j] = values[idx[j]];
        sum += h(f[j]);
      }
      f[m_ - 1] = 2.0 * (static_cast<double>(m_) - sum);
      candidates.push_back(std::move(f));
    }
    return {detail::farthest_point_subsample(candidates, count)};
  }

  [[nodiscard]] bool on_front(std::span<const double> f, double tol) const override {
    if (f.size() != m_) {
      return false;
    }
    const auto& iv = front_intervals();
    double sum = 0.0;
    for (std::size_t j = 0; j + 1 < m_; ++j) {
      const double v = f[j];
      const bool inside = (v >= -tol && v <= iv.a + tol) || (v > iv.b - tol && v <= iv.c + tol);
      if (!inside) {
        return false;
      }
      sum += h(v);
    }
    return std::abs(f[m_ - 1] - 2.0 * (static_cast<double>(m_) - sum)) <= tol;
  }

protected:
  [[nodiscard]] Vector objectives(std::span<const double> x) const override {
    double mean = 0.0;
    for (std::size_t i = m_ - 1; i < x.size(); ++i) {
      mean += x[i];
    }
    mean /= static_cast<double>(x.size() - m_ + 1);
    const double g = 1.0 + 9.0 * mean;
    Vector f(m_);
    double sum = 0.0;
    for (std::size_t j = 0; j + 1 < m_; ++j) {
      f[j] = x[j];
      sum += f[j] / (1.0 + g) * (1.0 + std::sin(3.0 * std::numbers::pi * f[j]));
    }
    f[m_ - 1] = (1.0 + g) * (static_cast<double>(m_) - sum);
    return f;
  }
};

/// Problem ids accepted by make_problem.
inline constexpr std::string_view supported_problems[] = {"DTLZ1", "DTLZ2", "MaF1", "MaF2", "MaF6", "MaF7"};

inline std::shared_ptr<const Problem> make_problem(std::string_view id, std::size_t m,
                                                   std::optional<std::size_t> d = std::nullopt) {
  if (m < 2) {
    throw Error(Errc::InvalidConfig, "problems need at least two objectives");
  }
  if (d && *d < m) {
    throw Error(Errc::InvalidConfig, "decision dimension must be at least m");
  }
  if (id == "DTLZ1") return std::make_shared<Dtlz1>(m, d);
  if (id == "DTLZ2") return std::make_shared<Dtlz2>(m, d);
  if (id == "MaF1") return std::make_shared<Maf1>(m, d);
  if (id == "MaF2") return std::make_shared<Maf2>(m, d);
  if (id == "MaF6") return std::make_shared<Maf6>(m, d);
  if (id == "MaF7") return std::make_shared<Maf7>(m, d);
  throw Error(Errc::UnsupportedProblem, std::string(id));
}

// ---------------------------------------------------------------------------
// Front files: one objective vector per line, whitespace separated.
// ---------------------------------------------------------------------------

inline std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
  return std::string(buf, end);
}

inline ReferenceSet read_front_stream(std::istream& in) {
  ReferenceSet out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    std::istringstream fields(line);
    Vector v;
    std::string token;
    while (fields >> token) {
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw Error(Errc::IoError, "front file line " + std::to_string(line_no) + ": bad number '" + token + "'");
      }
      v.push_back(value);
    }
    if (!out.points.empty() && v.size() != out.points.front().size()) {
      throw Error(Errc::DimensionMismatch, "front file line " + std::to_string(line_no) + ": ragged row");
    }
    out.points.push_back(std::move(v));
  }
  return out;
}

inline ReferenceSet read_front_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::IoError, "cannot open front file " + path);
  }
  auto out = read_front_stream(in);
  if (out.empty()) {
    throw Error(Errc::EmptySet, "front file " + path + " holds no points");
  }
  return out;
}

inline void write_front_stream(std::ostream& out, ObjectiveView points) {
  for (const auto& p : points) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      out << (i ? " " : "") << format_double(p[i]);
    }
    out << '\n';
  }
}

inline void write_front_file(const std::string& path, ObjectiveView points) {
  std::ofstream out(path);
  if (!out) {
    throw Error(Errc::IoError, "cannot write front file " + path);
  }
  write_front_stream(out, points);
}

} // namespace e3a

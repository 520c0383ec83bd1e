#pragma once

#include "core.hpp"
#include "dominance.hpp"
#include "rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace e3a {

/// Sample of the true Pareto front.
struct ReferenceSet {
  ObjectiveMatrix points;

  [[nodiscard]] std::size_t size() const noexcept { return points.size(); }
  [[nodiscard]] bool empty() const noexcept { return points.empty(); }
};

// ---------------------------------------------------------------------------
// Reference directions
// ---------------------------------------------------------------------------

/// Binomial coefficient C(n, k) in 64-bit arithmetic.
constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
  }
  return out;
}

/// Das-Dennis simplex lattice: every vector with components in
/// {0, 1/H, ..., 1} summing to one. C(H+m-1, m-1) points, in
/// lexicographically descending order of the leading components.
inline ObjectiveMatrix das_dennis(std::size_t m, std::size_t divisions) {
  if (m < 1 || divisions < 1) {
    throw Error(Errc::InvalidConfig, "das_dennis needs m >= 1 and H >= 1");
  }
  ObjectiveMatrix out;
  out.reserve(static_cast<std::size_t>(binomial(divisions + m - 1, m - 1)));
  std::vector<std::size_t> counts(m, 0);
  const auto h = static_cast<double>(divisions);

  auto recurse = [&](auto& self, std::size_t axis, std::size_t left) -> void {
    if (axis + 1 == m) {
      counts[axis] = left;
      Vector v(m);
      for (std::size_t i = 0; i < m; ++i) {
        v[i] = static_cast<double>(counts[i]) / h;
      }
      out.push_back(std::move(v));
      return;
    }
    for (std::size_t c = left + 1; c-- > 0;) {
      counts[axis] = c;
      self(self, axis + 1, left - c);
    }
  };
  recurse(recurse, 0, divisions);
  return out;
}

/// Outer Das-Dennis layer plus an inner layer pulled halfway toward the
/// simplex centroid (v -> v/2 + 1/(2m)). Exact duplicates are dropped.
inline ObjectiveMatrix two_layer(std::size_t m, std::size_t outer_divisions,
                                 std::size_t inner_divisions) {
  auto out = das_dennis(m, outer_divisions);
  const auto centroid_share = 0.5 / static_cast<double>(m);
  for (auto v : das_dennis(m, inner_divisions)) {
    for (auto& c : v) {
      c = 0.5 * c + centroid_share;
    }
    const bool duplicate = std::ranges::any_of(out, [&](const Vector& u) {
      for (std::size_t i = 0; i < m; ++i) {
        if (std::abs(u[i] - v[i]) > 1e-12) {
          return false;
        }
      }
      return true;
    });
    if (!duplicate) {
      out.push_back(std::move(v));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// IGD
// ---------------------------------------------------------------------------

inline double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

/// Mean distance from each reference point to its nearest solution.
inline double igd(ObjectiveView solutions, const ReferenceSet& reference) {
  if (solutions.empty() || reference.empty()) {
    throw Error(Errc::EmptySet, "igd needs nonempty solution and reference sets");
  }
  const auto m = reference.points.front().size();
  for (const auto& s : solutions) {
    if (s.size() != m) {
      throw Error(Errc::DimensionMismatch, "igd: solution and reference dimensions differ");
    }
  }
  double total = 0.0;
  for (const auto& z : reference.points) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : solutions) {
      best = std::min(best, euclidean_distance(z, s));
    }
    total += best;
  }
  return total / static_cast<double>(reference.size());
}

// ---------------------------------------------------------------------------
// Hypervolume
// ---------------------------------------------------------------------------

struct HvConfig {
  /// Used as given when `normalize_by_front_range` is off.
  Vector reference_point;
  std::size_t samples = 1'000'000;
  /// Map objectives by the front's [ideal, nadir] range and measure against
  /// the point (1.1, ..., 1.1).
  bool normalize_by_front_range = true;
  Vector front_ideal;
  Vector front_nadir;
  /// Worker threads; the estimate does not depend on this value.
  std::size_t threads = 1;

  static constexpr double reference_scale = 1.1;
  static constexpr std::size_t block_size = 1u << 16;
};

/// Exact dominated area of a 2-objective set bounded by `reference`.
inline double hv_exact_2d(ObjectiveView solutions, std::span<const double> reference) {
  if (reference.size() != 2) {
    throw Error(Errc::DimensionUnsupported, "hv_exact_2d handles two objectives only");
  }
  std::vector<std::pair<double, double>> pts;
  for (const auto& s : solutions) {
    if (s.size() != 2) {
      throw Error(Errc::DimensionUnsupported, "hv_exact_2d handles two objectives only");
    }
    if (s[0] < reference[0] && s[1] < reference[1]) {
      pts.emplace_back(s[0], s[1]);
    }
  }
  std::ranges::sort(pts);
  double area = 0.0;
  double ceiling = reference[1];
  for (const auto& [x, y] : pts) {
    if (y < ceiling) {
      area += (reference[0] - x) * (ceiling - y);
      ceiling = y;
    }
  }
  return area;
}

/// Monte Carlo hypervolume. Samples are drawn uniformly from the box
/// [component-wise minimum of the solutions, reference point]; the estimate
/// is the dominated fraction times the box volume. Sampling runs in fixed
/// blocks, each with its own stream derived from one draw of `rng`, and
/// block counts are summed in block order.
inline double hv_monte_carlo(ObjectiveView solutions, const HvConfig& cfg, RngStream& rng) {
  if (solutions.empty()) {
    throw Error(Errc::EmptySet, "hv_monte_carlo needs at least one solution");
  }
  const auto m = solutions.front().size();

  ObjectiveMatrix pts(solutions.begin(), solutions.end());
  Vector reference;
  if (cfg.normalize_by_front_range) {
    if (cfg.front_ideal.size() != m || cfg.front_nadir.size() != m) {
      throw Error(Errc::DimensionMismatch, "hv_monte_carlo: front range missing or wrong size");
    }
    for (auto& p : pts) {
      for (std::size_t i = 0; i < m; ++i) {
        const double range = cfg.front_nadir[i] - cfg.front_ideal[i];
        p[i] = (p[i] - cfg.front_ideal[i]) / (range > 0.0 ? range : 1.0);
      }
    }
    reference.assign(m, HvConfig::reference_scale);
  } else {
    reference = cfg.reference_point;
  }
  if (reference.size() != m) {
    throw Error(Errc::DimensionMismatch, "hv_monte_carlo: reference point has the wrong size");
  }

  std::erase_if(pts, [&](const Vector& p) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!(p[i] < reference[i])) {
        return true;
      }
    }
    return false;
  });
  const std::uint64_t base_seed = rng.next_u64();
  if (pts.empty() || cfg.samples == 0) {
    return 0.0;
  }
  pts = [&] {
    ObjectiveMatrix kept;
    for (auto i : nondominated_indices(pts)) {
      kept.push_back(pts[i]);
    }
    return kept;
  }();

  const auto lower = ideal_point(pts);
  double volume = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    volume *= reference[i] - lower[i];
  }

  const auto blocks = (cfg.samples + HvConfig::block_size - 1) / HvConfig::block_size;
  std::vector<std::uint64_t> hits(blocks, 0);
  auto run_block = [&](std::size_t b) {
    RngStream stream(derive_seed(base_seed, b));
    const auto begin = b * HvConfig::block_size;
    const auto count = std::min(HvConfig::block_size, cfg.samples - begin);
    Vector sample(m);
    std::uint64_t local = 0;
    for (std::size_t s = 0; s < count; ++s) {
      for (std::size_t i = 0; i < m; ++i) {
        sample[i] = stream.uniform(lower[i], reference[i]);
      }
      for (const auto& p : pts) {
        bool covers = true;
        for (std::size_t i = 0; i < m && covers; ++i) {
          covers = p[i] <= sample[i];
        }
        if (covers) {
          ++local;
          break;
        }
      }
    }
    hits[b] = local;
  };

  const auto workers = std::max<std::size_t>(1, std::min(cfg.threads, blocks));
  if (workers == 1) {
    for (std::size_t b = 0; b < blocks; ++b) {
      run_block(b);
    }
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t b = w; b < blocks; b += workers) {
          run_block(b);
        }
      });
    }
  }

  std::uint64_t total = 0;
  for (auto h : hits) {
    total += h;
  }
  return volume * static_cast<double>(total) / static_cast<double>(cfg.samples);
}

} // namespace e3a

#pragma once

// Reference implementations used only by the tests. Each one is written from
// the textbook definition and deliberately shares no code with the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;
using Idx = std::vector<std::size_t>;

inline bool dominates(const Vec& a, const Vec& b) {
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) {
      return false;
    }
    strict = strict || a[i] < b[i];
  }
  return strict;
}

/// Fronts by repeatedly removing the nondominated subset of what is left.
inline std::vector<std::set<std::size_t>> strip_sort(const Mat& pts) {
  std::set<std::size_t> left;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    left.insert(i);
  }
  std::vector<std::set<std::size_t>> fronts;
  while (!left.empty()) {
    std::set<std::size_t> front;
    for (auto i : left) {
      bool dominated = false;
      for (auto j : left) {
        dominated = dominated || dominates(pts[j], pts[i]);
      }
      if (!dominated) {
        front.insert(i);
      }
    }
    for (auto i : front) {
      left.erase(i);
    }
    fronts.push_back(front);
  }
  return fronts;
}

/// Solves A x = b by Gaussian elimination with partial pivoting; nullopt
/// when a pivot vanishes.
inline std::optional<Vec> gauss_solve(Mat a, Vec b) {
  const auto n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) {
        piv = r;
      }
    }
    if (std::abs(a[piv][c]) < 1e-14) {
      return std::nullopt;
    }
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) {
        a[r][k] -= f * a[c][k];
      }
      b[r] -= f * b[c];
    }
  }
  Vec x(n);
  for (std::size_t r = n; r-- > 0;) {
    double s = b[r];
    for (std::size_t k = r + 1; k < n; ++k) {
      s -= a[r][k] * x[k];
    }
    x[r] = s / a[r][r];
  }
  return x;
}

inline double tchebycheff_axis(const Vec& translated, std::size_t axis) {
  double v = 0.0;
  for (std::size_t i = 0; i < translated.size(); ++i) {
    const double w = i == axis ? 1.0 : 1e-6;
    v = std::max(v, std::abs(translated[i]) / w);
  }
  return v;
}

struct Normalized {
  Vec ideal;
  Vec intercepts;
  Idx extremes;
  Mat points;
};

/// Ideal point, axis extremes, hyperplane intercepts (with the range
/// fallback) and the normalized matrix.
inline Normalized normalize(const Mat& pts) {
  const auto m = pts.front().size();
  Normalized out;
  out.ideal.assign(m, std::numeric_limits<double>::infinity());
  Vec nadir(m, -std::numeric_limits<double>::infinity());
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < m; ++i) {
      out.ideal[i] = std::min(out.ideal[i], p[i]);
      nadir[i] = std::max(nadir[i], p[i]);
    }
  }
  Mat translated;
  for (const auto& p : pts) {
    Vec t(m);
    for (std::size_t i = 0; i < m; ++i) {
      t[i] = p[i] - out.ideal[i];
    }
    translated.push_back(t);
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pts.size(); ++k) {
      if (tchebycheff_axis(translated[k], j) < tchebycheff_axis(translated[best], j)) {
        best = k;
      }
    }
    out.extremes.push_back(best);
  }
  Mat a;
  for (auto e : out.extremes) {
    a.push_back(translated[e]);
  }
  bool ok = false;
  if (auto plane = gauss_solve(a, Vec(m, 1.0))) {
    ok = true;
    out.intercepts.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      out.intercepts[i] = 1.0 / (*plane)[i];
      ok = ok && std::isfinite(out.intercepts[i]) && out.intercepts[i] >= 1e-10;
    }
  }
  if (!ok) {
    out.intercepts.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double r = nadir[i] - out.ideal[i];
      out.intercepts[i] = r < 1e-10 ? 1.0 : r;
    }
  }
  for (const auto& t : translated) {
    Vec v(m);
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = t[i] / out.intercepts[i];
    }
    out.points.push_back(v);
  }
  return out;
}

/// Distance from x to y raised componentwise to at least x.
inline double shifted(const Vec& x, const Vec& y) {
  Vec s(y);
  for (std::size_t i = 0; i < x.size(); ++i) {
    s[i] = std::max(y[i], x[i]);
  }
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    d += (s[i] - x[i]) * (s[i] - x[i]);
  }
  return std::sqrt(d);
}

struct GreedyStep {
  std::size_t index;
  double sd;
};

/// Greedy max-min fill that recomputes every sd from scratch at each step.
inline std::vector<GreedyStep> greedy(const Mat& normalized, Idx selected, std::size_t k) {
  std::vector<GreedyStep> steps;
  while (selected.size() < k) {
    std::optional<std::size_t> best;
    double best_sd = -1.0;
    for (std::size_t x = 0; x < normalized.size(); ++x) {
      if (std::find(selected.begin(), selected.end(), x) != selected.end()) {
        continue;
      }
      double v = std::numeric_limits<double>::infinity();
      for (auto q : selected) {
        v = std::min(v, shifted(normalized[x], normalized[q]));
      }
      if (!best || v > best_sd) {
        best = x;
        best_sd = v;
      }
    }
    selected.push_back(*best);
    steps.push_back({*best, best_sd});
  }
  return steps;
}

/// Whole maintenance pipeline: normalization, deduplicated boundary set,
/// overflow truncation by own-axis value, greedy fill.
inline Idx maintenance(const Mat& pts, std::size_t k) {
  const auto norm = normalize(pts);
  const auto m = pts.front().size();
  Idx boundary;
  for (auto e : norm.extremes) {
    if (std::find(boundary.begin(), boundary.end(), e) == boundary.end()) {
      boundary.push_back(e);
    }
  }
  if (boundary.size() > k) {
    struct Entry {
      double value;
      std::size_t axis;
      std::size_t pos;
    };
    std::vector<Entry> entries;
    for (std::size_t pos = 0; pos < boundary.size(); ++pos) {
      Vec t(m);
      for (std::size_t i = 0; i < m; ++i) {
        t[i] = pts[boundary[pos]][i] - norm.ideal[i];
      }
      Entry e{std::numeric_limits<double>::infinity(), m, pos};
      for (std::size_t j = 0; j < m; ++j) {
        if (norm.extremes[j] == boundary[pos] && tchebycheff_axis(t, j) < e.value) {
          e.value = tchebycheff_axis(t, j);
          e.axis = j;
        }
      }
      entries.push_back(e);
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
      return a.value != b.value ? a.value < b.value : a.axis < b.axis;
    });
    entries.resize(k);
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.pos < b.pos; });
    Idx out;
    for (const auto& e : entries) {
      out.push_back(boundary[e.pos]);
    }
    return out;
  }
  Idx out = boundary;
  for (const auto& s : greedy(norm.points, boundary, k)) {
    out.push_back(s.index);
  }
  return out;
}

/// Crowding distance following the NSGA-II pseudo-code, range-normalized.
inline Vec crowding(const Mat& pts) {
  const auto n = pts.size();
  const auto m = pts.front().size();
  Vec dist(n, 0.0);
  const double inf = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::pair<double, std::size_t>> sorted;
    for (std::size_t k = 0; k < n; ++k) {
      sorted.emplace_back(pts[k][i], k);
    }
    std::sort(sorted.begin(), sorted.end());
    const double lo = sorted.front().first;
    const double hi = sorted.back().first;
    if (hi - lo <= 0.0) {
      continue;
    }
    dist[sorted.front().second] = inf;
    dist[sorted.back().second] = inf;
    for (std::size_t r = 1; r + 1 < n; ++r) {
      if (dist[sorted[r].second] != inf) {
        dist[sorted[r].second] += (sorted[r + 1].first - sorted[r - 1].first) / (hi - lo);
      }
    }
  }
  return dist;
}

inline double igd(const Mat& sol, const Mat& ref) {
  double total = 0.0;
  for (const auto& z : ref) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : sol) {
      double d = 0.0;
      for (std::size_t i = 0; i < z.size(); ++i) {
        d += (z[i] - s[i]) * (z[i] - s[i]);
      }
      best = std::min(best, std::sqrt(d));
    }
    total += best;
  }
  return total / static_cast<double>(ref.size());
}

/// Exact 2-D dominated area by summing the cells of the grid spanned by all
/// coordinates, each cell counted when some point covers its lower corner.
inline double hv_grid_2d(const Mat& pts, const Vec& ref) {
  std::set<double> xs{ref[0]};
  std::set<double> ys{ref[1]};
  for (const auto& p : pts) {
    if (p[0] < ref[0] && p[1] < ref[1]) {
      xs.insert(p[0]);
      ys.insert(p[1]);
    }
  }
  const Vec vx(xs.begin(), xs.end());
  const Vec vy(ys.begin(), ys.end());
  double area = 0.0;
  for (std::size_t a = 0; a + 1 < vx.size(); ++a) {
    for (std::size_t b = 0; b + 1 < vy.size(); ++b) {
      bool covered = false;
      for (const auto& p : pts) {
        covered = covered || (p[0] <= vx[a] && p[1] <= vy[b]);
      }
      if (covered) {
        area += (vx[a + 1] - vx[a]) * (vy[b + 1] - vy[b]);
      }
    }
  }
  return area;
}

/// Rank-sum form 12/(N k (k+1)) sum S_j^2 - 3 N (k+1), midranks for ties.
inline double friedman(const Mat& scores) {
  const auto n = scores.size();
  const auto k = scores.front().size();
  Vec rank_sum(k, 0.0);
  for (const auto& row : scores) {
    for (std::size_t j = 0; j < k; ++j) {
      double less = 0.0;
      double equal = 0.0;
      for (std::size_t t = 0; t < k; ++t) {
        if (row[t] < row[j]) {
          less += 1.0;
        } else if (row[t] == row[j]) {
          equal += 1.0;
        }
      }
      rank_sum[j] += less + (equal + 1.0) / 2.0;
    }
  }
  double ss = 0.0;
  for (double s : rank_sum) {
    ss += s * s;
  }
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  return 12.0 / (nd * kd * (kd + 1.0)) * ss - 3.0 * nd * (kd + 1.0);
}

/// Welford running mean and sample standard deviation.
inline std::pair<double, double> streaming_moments(const Vec& xs) {
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t n = 0;
  for (double x : xs) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }
  return {mean, n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1)) : 0.0};
}

/// Probability that member i wins one binary tournament over two distinct
/// uniformly drawn members, lower rank winning and ties split evenly.
inline Vec tournament_probabilities(const Idx& ranks) {
  const auto n = ranks.size();
  Vec p(n, 0.0);
  const double pair = 1.0 / static_cast<double>(n * (n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        continue;
      }
      const double win = ranks[i] < ranks[j] ? 1.0 : (ranks[i] == ranks[j] ? 0.5 : 0.0);
      p[i] += 2.0 * pair * win;
    }
  }
  return p;
}

/// Uniform random matrix from std::mt19937_64, independent of the library RNG.
inline Mat random_matrix(std::mt19937_64& gen, std::size_t n, std::size_t m, double lo = 0.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  Mat out(n, Vec(m));
  for (auto& row : out) {
    for (auto& v : row) {
      v = u(gen);
    }
  }
  return out;
}

} // namespace oracle

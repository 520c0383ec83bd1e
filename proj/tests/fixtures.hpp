#pragma once

#include <e3a/core.hpp>

#include <array>
#include <random>

namespace fixtures {

/// Two-objective instance of the worked selection example, candidates A..G
/// in index order 0..6. A and G are the extremes; with identity
/// normalization the greedy fill picks D (sd 8.5), F (4), B (3).
inline e3a::ObjectiveMatrix seven_point_example() {
  return {{0.0, 20.0}, {3.0, 17.0}, {9.5, 13.0}, {11.5, 9.0}, {13.5, 7.0}, {16.0, 4.0}, {20.0, 0.0}};
}

inline constexpr std::array<char, 7> seven_point_labels{'A', 'B', 'C', 'D', 'E', 'F', 'G'};

/// Uniform random points on the unit simplex; distinct points on it never
/// dominate each other.
inline e3a::ObjectiveMatrix simplex_points(std::mt19937_64& gen, std::size_t n, std::size_t m) {
  std::exponential_distribution<double> e(1.0);
  e3a::ObjectiveMatrix out(n, e3a::Vector(m));
  for (auto& row : out) {
    double sum = 0.0;
    for (auto& v : row) {
      v = e(gen);
      sum += v;
    }
    for (auto& v : row) {
      v /= sum;
    }
  }
  return out;
}

inline e3a::ObjectiveMatrix random_points(std::mt19937_64& gen, std::size_t n, std::size_t m) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  e3a::ObjectiveMatrix out(n, e3a::Vector(m));
  for (auto& row : out) {
    for (auto& v : row) {
      v = u(gen);
    }
  }
  return out;
}

} // namespace fixtures

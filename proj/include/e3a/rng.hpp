#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string_view>

namespace e3a {

namespace detail {
__extension__ using uint128 = unsigned __int128;
} // namespace detail

/// splitmix64 finalizer (Steele, Lea, Flood 2014). Used both to expand a
/// 64-bit seed into generator state and as the mixing step for derived seeds.
constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  return splitmix64(x);
}

/// Seed of sub-stream `stream` of `seed`. Distinct stream ids give
/// statistically independent xoshiro states.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return mix64(seed ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

/// 64-bit FNV-1a over the bytes of `text`.
constexpr std::uint64_t fnv1a64(std::string_view text,
                                std::uint64_t hash = 0xcbf29ce484222325ULL) noexcept {
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

/// Seeded random stream: xoshiro256** (Blackman and Vigna 2018) with the
/// 256-bit state filled by four splitmix64 draws from the seed. Every
/// conversion (uniform double, bounded integer) is defined here so that a
/// seed yields the same sequence on every platform and standard library.
class RngStream {
public:
  using result_type = std::uint64_t;

  explicit constexpr RngStream(std::uint64_t seed = 0) noexcept
      : seed_{seed} {
    std::uint64_t sm = seed;
    for (auto& word : state_) {
      word = splitmix64(sm);
    }
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  [[nodiscard]] constexpr std::uint64_t seed() const noexcept { return seed_; }

  constexpr result_type next_u64() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  constexpr result_type operator()() noexcept { return next_u64(); }

  /// Uniform double in [0, 1) from the top 53 bits.
  constexpr double uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  constexpr double uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform();
  }

  /// Unbiased integer in [0, bound) using Lemire's multiply-and-reject.
  /// `bound` must be positive.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    auto product = static_cast<detail::uint128>(next_u64()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<detail::uint128>(next_u64()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  constexpr bool coin() noexcept { return (next_u64() >> 63) != 0; }

  /// Independent stream for worker or block `stream`; does not advance *this.
  [[nodiscard]] constexpr RngStream split(std::uint64_t stream) const noexcept {
    return RngStream(derive_seed(seed_, stream));
  }

private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_{};
};

} // namespace e3a

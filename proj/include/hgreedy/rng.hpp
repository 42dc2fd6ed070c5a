#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "hgreedy/hypergraph.hpp"

namespace hgreedy {

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based per-trial seed; depends only on (base, index).
constexpr std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(base) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). Lemire's multiply-shift with rejection,
/// so results do not depend on the standard library's distributions.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  unsigned __int128 m = static_cast<unsigned __int128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(rng()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

/// Uniform double in (0, 1).
inline double uniform_open01(Rng& rng) {
  for (;;) {
    const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (x > 0.0) return x;
  }
}

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

/// Uniformly random permutation of 0..n-1.
inline std::vector<Vertex> random_ranking(std::size_t n, Rng& rng) {
  std::vector<Vertex> r(n);
  std::iota(r.begin(), r.end(), Vertex{0});
  shuffle(r, rng);
  return r;
}

}  // namespace hgreedy

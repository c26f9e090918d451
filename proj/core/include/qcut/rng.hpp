// Copyright 2026 The qcut authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCUT_RNG_HPP
#define QCUT_RNG_HPP

#include <cstdint>
#include <random>

namespace qcut {

// mt19937_64 is fully specified by the standard, so sequences are portable.
// Distribution helpers are hand-rolled below because the std distribution
// classes are implementation-defined and would break byte-level determinism.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives an independent stream seed from a master seed and a stream index
/// (shot index, retry attempt, optimizer step, ...).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t s = master;
  std::uint64_t a = splitmix64(s);
  s = a ^ (index * 0xda942042e4dd58b5ULL + 0x2545f4914f6cdd1dULL);
  std::uint64_t b = splitmix64(s);
  return b;
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(Rng& rng, double p) { return uniform_unit(rng) < p; }

/// Uniform integer in [0, n). Rejection-sampled, exactly uniform.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

/// Uniform k-bit word, k <= 64.
inline std::uint64_t uniform_bits(Rng& rng, int k) {
  if (k <= 0) return 0;
  return k >= 64 ? rng() : (rng() >> (64 - k));
}

}  // namespace qcut

#endif  // QCUT_RNG_HPP

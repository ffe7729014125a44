// Copyright 2026 The Authors.
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

// Portable randomness helpers.
//
// std::mt19937_64 is bit-exact across standard libraries; the standard
// distributions are not, so the conversions below are done by hand. Monte
// Carlo coins use a counter-based construction (SplitMix64 finalizer) so
// that the outcome of each (simulation, edge) pair is a pure function of
// the master seed.

#ifndef IMCSN_RNG_H_
#define IMCSN_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace imcsn {

using Engine = std::mt19937_64;

// SplitMix64 output function (Steele, Lea, Flood 2014).
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t MixPair(std::uint64_t a, std::uint64_t b) {
  return Mix64(Mix64(a) ^ (b + 0x632be59bd9b4e019ULL));
}

// 64-bit FNV-1a.
constexpr std::uint64_t HashLabel(std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Uniform double in [0, 1) from the top 53 bits.
constexpr double ToUnitInterval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection; bound must be positive.
inline std::uint64_t UniformBelow(Engine& engine, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = engine();
  } while (x >= limit);
  return x % bound;
}

inline double UniformUnit(Engine& engine) { return ToUnitInterval(engine()); }

// Engine for a named sub-stream of a master seed.
inline Engine DeriveEngine(std::uint64_t master_seed, std::uint64_t stream) {
  return Engine(MixPair(master_seed, stream));
}

}  // namespace imcsn

#endif  // IMCSN_RNG_H_

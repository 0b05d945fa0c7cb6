// Copyright 2026 The MutForge Project Authors
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

#ifndef MUTFORGE_MUTATION_RANDOM_H_
#define MUTFORGE_MUTATION_RANDOM_H_

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace mutforge {

using Rng = std::mt19937_64;

// Unbiased draw from [0, n) that yields the same sequence on every standard
// library, unlike std::uniform_int_distribution.
inline uint64_t UniformIndex(Rng& rng, uint64_t n) {
  if (n == 0) return 0;
  uint64_t limit = std::numeric_limits<uint64_t>::max() -
                   std::numeric_limits<uint64_t>::max() % n;
  for (;;) {
    uint64_t draw = rng();
    if (draw < limit) return draw % n;
  }
}

inline uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t Fnv1a(std::string_view text) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

// Folds `value` into `seed`; order sensitive.
inline uint64_t MixSeed(uint64_t seed, uint64_t value) {
  return SplitMix64(seed ^ SplitMix64(value));
}

}  // namespace mutforge

#endif  // MUTFORGE_MUTATION_RANDOM_H_

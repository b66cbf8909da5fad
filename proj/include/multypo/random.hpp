/* Copyright 2026 The MulTypo Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef MULTYPO_RANDOM_HPP_
#define MULTYPO_RANDOM_HPP_

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace multypo {

// Seeded stream of random draws. The engine is std::mt19937_64, whose
// output sequence is fixed by the standard; the conversions to doubles and
// bounded integers are done here instead of through <random>
// distributions, whose algorithms are implementation-defined. Together
// that makes a seed reproduce the same draws on every platform.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

// Seed of one document: depends only on the run seed and the document id,
// never on processing order.
constexpr std::uint64_t derive_document_seed(std::uint64_t run_seed,
                                             std::string_view doc_id) {
  return splitmix64(run_seed ^ splitmix64(fnv1a64(doc_id)));
}

}  // namespace multypo

#endif  // MULTYPO_RANDOM_HPP_

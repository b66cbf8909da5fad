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

#ifndef MULTYPO_SAMPLING_HPP_
#define MULTYPO_SAMPLING_HPP_

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "multypo/error.hpp"
#include "multypo/random.hpp"

namespace multypo {

enum class TypoOp { kReplace = 0, kInsert = 1, kDelete = 2, kTranspose = 3 };

inline constexpr std::array<TypoOp, 4> kAllOps = {
    TypoOp::kReplace, TypoOp::kInsert, TypoOp::kDelete, TypoOp::kTranspose};

// Indexed by TypoOp. Insertions are rarer than the other three kinds.
inline constexpr std::array<double, 4> kOpProbabilities = {0.2825, 0.1525,
                                                           0.2825, 0.2825};

inline std::string_view to_string(TypoOp op) {
  switch (op) {
    case TypoOp::kReplace: return "replace";
    case TypoOp::kInsert: return "insert";
    case TypoOp::kDelete: return "delete";
    case TypoOp::kTranspose: return "transpose";
  }
  return "replace";
}

inline std::optional<TypoOp> parse_op(std::string_view name) {
  for (TypoOp op : kAllOps) {
    if (to_string(op) == name) return op;
  }
  return std::nullopt;
}

// Number of unicode scalars in a UTF-8 string (continuation bytes skipped).
inline std::size_t char_length(std::string_view utf8) {
  std::size_t n = 0;
  for (char c : utf8) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

struct WordWeights {
  std::vector<double> values;

  double total() const {
    double sum = 0.0;
    for (double w : values) sum += w;
    return sum;
  }

  // Selection probabilities; all zero when no word is eligible.
  std::vector<double> probabilities() const {
    std::vector<double> p(values.size(), 0.0);
    const double sum = total();
    if (sum <= 0.0) return p;
    for (std::size_t i = 0; i < values.size(); ++i) p[i] = values[i] / sum;
    return p;
  }
};

// sqrt(char length) for eligible words, 0 otherwise.
inline WordWeights word_weights(std::span<const std::string> words,
                                const std::vector<bool>& eligibility) {
  if (words.size() != eligibility.size()) {
    throw std::invalid_argument("word_weights: size mismatch");
  }
  WordWeights out;
  out.values.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    out.values.push_back(
        eligibility[i] ? std::sqrt(static_cast<double>(char_length(words[i])))
                       : 0.0);
  }
  return out;
}

// Draws i with probability weights[i] / sum(weights). One uniform draw.
inline std::size_t sample_index(std::span<const double> weights,
                                RandomSource& rng) {
  double total = 0.0;
  std::size_t last_positive = weights.size();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] > 0.0) {
      total += weights[i];
      last_positive = i;
    }
  }
  if (last_positive == weights.size()) {
    throw DataError("no eligible words");
  }
  const double target = rng.uniform01() * total;
  double cumulative = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    cumulative += weights[i];
    if (target < cumulative) return i;
  }
  return last_positive;
}

inline std::size_t sample_index(const WordWeights& weights, RandomSource& rng) {
  return sample_index(std::span<const double>(weights.values), rng);
}

namespace sampling_detail {

// Unnormalized weight of position `index` in a word of `length` >= 2:
// 0 at the start, 0.1 on the second character rising linearly to 0.2 on the
// last. With length 2 the last-character value wins.
constexpr double raw_position_weight(std::size_t index, std::size_t length) {
  if (index == 0) return 0.0;
  if (length == 2) return 0.2;
  return 0.1 + 0.1 * static_cast<double>(index - 1) /
                   static_cast<double>(length - 2);
}

}  // namespace sampling_detail

inline std::vector<double> position_weights(std::size_t length) {
  if (length < 2) {
    throw std::invalid_argument("position_weights: length must be >= 2");
  }
  std::vector<double> w(length);
  double sum = 0.0;
  for (std::size_t i = 0; i < length; ++i) {
    w[i] = sampling_detail::raw_position_weight(i, length);
    sum += w[i];
  }
  for (double& x : w) x /= sum;
  return w;
}

// Never returns 0. One uniform draw, no allocation.
inline std::size_t sample_position(std::size_t length, RandomSource& rng) {
  if (length < 2) {
    throw std::invalid_argument("sample_position: length must be >= 2");
  }
  double total = 0.0;
  for (std::size_t i = 1; i < length; ++i) {
    total += sampling_detail::raw_position_weight(i, length);
  }
  const double target = rng.uniform01() * total;
  double cumulative = 0.0;
  for (std::size_t i = 1; i < length; ++i) {
    cumulative += sampling_detail::raw_position_weight(i, length);
    if (target < cumulative) return i;
  }
  return length - 1;
}

// Set of operations still available for a word during one selection round.
class OpSet {
 public:
  static OpSet all() { return OpSet(0b1111); }

  bool empty() const { return bits_ == 0; }
  bool contains(TypoOp op) const { return bits_ & bit(op); }
  void remove(TypoOp op) { bits_ &= ~bit(op); }

 private:
  explicit OpSet(unsigned bits) : bits_(bits) {}
  static unsigned bit(TypoOp op) { return 1u << static_cast<unsigned>(op); }

  unsigned bits_;
};

// Draws an operation from the fixed mix restricted to `available`
// (renormalized). One uniform draw.
inline TypoOp sample_op_among(OpSet available, RandomSource& rng) {
  std::array<double, 4> weights{};
  for (TypoOp op : kAllOps) {
    if (available.contains(op)) {
      weights[static_cast<std::size_t>(op)] =
          kOpProbabilities[static_cast<std::size_t>(op)];
    }
  }
  return kAllOps[sample_index(std::span<const double>(weights), rng)];
}

inline TypoOp sample_op(RandomSource& rng) {
  return sample_op_among(OpSet::all(), rng);
}

inline WordWeights halve_weight(WordWeights weights, std::size_t index) {
  if (index >= weights.values.size() || !(weights.values[index] > 0.0)) {
    throw std::logic_error("halve_weight: weight at index " +
                           std::to_string(index) + " is not positive");
  }
  weights.values[index] /= 2.0;
  return weights;
}

}  // namespace multypo

#endif  // MULTYPO_SAMPLING_HPP_

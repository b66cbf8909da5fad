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

#ifndef MULTYPO_ENGINE_HPP_
#define MULTYPO_ENGINE_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multypo/error.hpp"
#include "multypo/language.hpp"
#include "multypo/layout.hpp"
#include "multypo/lexicon.hpp"
#include "multypo/operations.hpp"
#include "multypo/random.hpp"
#include "multypo/sampling.hpp"
#include "multypo/unicode.hpp"

namespace multypo {

enum class Mode { kMulTypo, kNaive };

inline std::string_view to_string(Mode mode) {
  return mode == Mode::kMulTypo ? "multypo" : "naive";
}

inline std::optional<Mode> parse_mode(std::string_view name) {
  if (name == "multypo") return Mode::kMulTypo;
  if (name == "naive") return Mode::kNaive;
  return std::nullopt;
}

inline constexpr int kDefaultMaxRetries = 100;

struct CorruptionConfig {
  LanguageId language = LanguageId::parse("eng_Latn");
  double rate = 0.0;
  std::uint64_t seed = 0;
  Mode mode = Mode::kMulTypo;
  int max_retries = kDefaultMaxRetries;

  void validate() const {
    if (!(rate >= 0.0 && rate <= 1.0)) {
      throw UsageError("rate must lie in [0, 1]");
    }
    if (max_retries < 1) throw UsageError("max_retries must be >= 1");
  }
};

struct TypoEvent {
  std::size_t word_index = 0;
  std::size_t position = 0;
  TypoOp op = TypoOp::kReplace;
  std::string before;
  std::string after;

  friend bool operator==(const TypoEvent&, const TypoEvent&) = default;
};

struct CorruptionResult {
  std::string text;
  std::vector<TypoEvent> events;
  std::size_t requested = 0;
  std::size_t applied = 0;
  std::size_t shortfall = 0;
  int retries = 0;

  friend bool operator==(const CorruptionResult&,
                         const CorruptionResult&) = default;
};

// round(rate * word_count) with halves rounded away from zero. The small
// slack absorbs binary representation error, so 0.15 * 10 gives 2.
inline std::size_t target_typo_count(double rate, std::size_t word_count) {
  const double exact = rate * static_cast<double>(word_count);
  return static_cast<std::size_t>(std::floor(exact + 0.5 + 1e-9));
}

namespace engine_detail {

struct WordState {
  std::u32string text;
  bool edited = false;
  bool space_appended = false;
  std::vector<std::u32string> history;  // validity keys, oldest first

  // States are compared with the borrowed space counted in, so that moving
  // the space back out ("th e" -> "the ") registers as a revert.
  std::u32string key_for(const std::u32string& candidate,
                         bool appended) const {
    return appended ? candidate : candidate + U' ';
  }
};

inline Edit apply_op(TypoOp op, Mode mode, std::u32string_view word,
                     std::size_t position, const KeyboardLayout& layout,
                     bool may_append_space, RandomSource& rng) {
  const bool naive = mode == Mode::kNaive;
  switch (op) {
    case TypoOp::kReplace:
      return naive ? apply_replace_naive(word, position, layout, rng)
                   : apply_replace(word, position, layout, rng);
    case TypoOp::kInsert:
      return naive ? apply_insert_naive(word, position, layout, rng)
                   : apply_insert(word, position, layout, rng);
    case TypoOp::kDelete:
      return apply_delete(word, position);
    case TypoOp::kTranspose:
      return naive ? apply_transpose_naive(word, position, may_append_space)
                   : apply_transpose(word, position, layout, may_append_space);
  }
  return Edit::fail(EditFailure::kOutOfRange);
}

}  // namespace engine_detail

// Injects round(rate * n) typos into `text`, one word at a time:
//
//   1. draw a word with probability proportional to its current weight
//      (sqrt of its length, halved after every typo it receives; zero for
//      ineligible words);
//   2. draw an operation from the ones not yet tried on this word, then a
//      position from the word's current length;
//   3. apply it; failed or invalid edits fall through to the next untried
//      operation; once all four fail, one retry is spent and a new word is
//      drawn.
//
// Stops when the target is met or max_retries retries have been spent.
// All draws come from a single stream seeded with config.seed.
inline CorruptionResult corrupt(std::string_view text,
                                const CorruptionConfig& config,
                                const KeyboardLayout& layout,
                                const IgnoreSet& ignore) {
  config.validate();
  TokenizedText tokens = tokenize(text);
  const std::size_t n = tokens.words.size();

  CorruptionResult result;
  result.requested = target_typo_count(config.rate, n);
  if (result.requested == 0) {
    result.text = std::string(text);
    return result;
  }

  std::vector<bool> eligible(n);
  for (std::size_t i = 0; i < n; ++i) {
    eligible[i] = is_eligible(tokens.words[i], ignore);
  }
  WordWeights weights = word_weights(tokens.words, eligible);

  std::vector<engine_detail::WordState> states(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!eligible[i]) continue;
    states[i].text = *unicode::decode_utf8(tokens.words[i]);
    states[i].history.push_back(states[i].key_for(states[i].text, false));
  }

  RandomSource rng(config.seed);
  while (result.applied < result.requested &&
         result.retries < config.max_retries) {
    if (!(weights.total() > 0.0)) break;
    const std::size_t wi = sample_index(weights, rng);
    engine_detail::WordState& state = states[wi];
    // The borrowed space would glue this word to the next one, so a
    // protected neighbor keeps its space.
    const bool may_append_space =
        wi + 1 < n && !state.space_appended &&
        tokens.separators[wi + 1].starts_with(' ') &&
        !is_ignored(tokens.words[wi + 1], ignore);

    bool committed = false;
    for (OpSet untried = OpSet::all(); !untried.empty();) {
      const TypoOp op = sample_op_among(untried, rng);
      untried.remove(op);
      const std::size_t position = sample_position(state.text.size(), rng);
      Edit edit = engine_detail::apply_op(op, config.mode, state.text,
                                          position, layout, may_append_space,
                                          rng);
      if (!edit.ok()) continue;
      const bool appended =
          state.space_appended || (op == TypoOp::kTranspose &&
                                   edit.word.size() == state.text.size() + 1);
      std::u32string key = state.key_for(edit.word, appended);
      if (!is_valid(key, state.history)) continue;

      result.events.push_back({wi, position, op,
                               unicode::encode_utf8(state.text),
                               unicode::encode_utf8(edit.word)});
      state.text = std::move(edit.word);
      state.history.push_back(std::move(key));
      state.space_appended = appended;
      state.edited = true;
      weights = halve_weight(std::move(weights), wi);
      if (state.text.size() < 2) weights.values[wi] = 0.0;
      ++result.applied;
      committed = true;
      break;
    }
    if (!committed) ++result.retries;
  }
  result.shortfall = result.requested - result.applied;

  std::string out = tokens.separators[0];
  for (std::size_t i = 0; i < n; ++i) {
    out += states[i].edited ? unicode::encode_utf8(states[i].text)
                            : tokens.words[i];
    std::string_view separator = tokens.separators[i + 1];
    if (states[i].space_appended) separator.remove_prefix(1);
    out += separator;
  }
  result.text = std::move(out);
  return result;
}

inline CorruptionResult corrupt(
    std::string_view text, const CorruptionConfig& config,
    const LayoutRegistry& registry,
    const std::map<LanguageId, IgnoreSet>& ignore_sets) {
  auto it = ignore_sets.find(config.language);
  if (it == ignore_sets.end()) {
    throw UsageError("no ignore set loaded for " + config.language.code());
  }
  return corrupt(text, config, registry.at(config.language), it->second);
}

}  // namespace multypo

#endif  // MULTYPO_ENGINE_HPP_

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

#ifndef MULTYPO_OPERATIONS_HPP_
#define MULTYPO_OPERATIONS_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "multypo/layout.hpp"
#include "multypo/random.hpp"
#include "multypo/unicode.hpp"

namespace multypo {

enum class EditFailure {
  kOutOfRange,         // position 0 or past the end
  kWhitespace,         // only a transposition may move whitespace
  kNoNeighbors,        // reference character has no neighbor key
  kSameHandOrUnknown,  // transposition pair not typed by different hands
  kNoPartner,          // last character and no trailing space available
};

inline std::string_view to_string(EditFailure failure) {
  switch (failure) {
    case EditFailure::kOutOfRange: return "position out of range";
    case EditFailure::kWhitespace: return "whitespace character";
    case EditFailure::kNoNeighbors: return "no neighbors";
    case EditFailure::kSameHandOrUnknown: return "same-hand or unknown";
    case EditFailure::kNoPartner: return "no transposition partner";
  }
  return "unknown";
}

// Outcome of one typo operation on a word. `word` is meaningful only when
// ok().
struct Edit {
  std::u32string word;
  std::optional<EditFailure> failure;

  bool ok() const { return !failure.has_value(); }

  static Edit success(std::u32string word) { return {std::move(word), {}}; }
  static Edit fail(EditFailure why) { return {{}, why}; }
};

namespace ops_detail {

inline bool in_range(std::u32string_view word, std::size_t position) {
  return position >= 1 && position < word.size();
}

// Uniform member of `alphabet` other than `excluded` (if present).
inline std::optional<char32_t> draw_other(std::span<const char32_t> alphabet,
                                          char32_t excluded,
                                          RandomSource& rng) {
  auto it = std::lower_bound(alphabet.begin(), alphabet.end(), excluded);
  const bool present = it != alphabet.end() && *it == excluded;
  const std::size_t pool = alphabet.size() - (present ? 1 : 0);
  if (pool == 0) return std::nullopt;
  std::size_t k = rng.uniform_below(pool);
  if (present && k >= static_cast<std::size_t>(it - alphabet.begin())) ++k;
  return alphabet[k];
}

}  // namespace ops_detail

// Replaces the character at `position` by one of its horizontal neighbors,
// chosen uniformly and given the original character's case.
inline Edit apply_replace(std::u32string_view word, std::size_t position,
                          const KeyboardLayout& layout, RandomSource& rng) {
  if (!ops_detail::in_range(word, position)) {
    return Edit::fail(EditFailure::kOutOfRange);
  }
  const char32_t original = word[position];
  if (unicode::is_whitespace(original)) {
    return Edit::fail(EditFailure::kWhitespace);
  }
  auto candidates = layout.neighbors(original);
  if (candidates.empty()) return Edit::fail(EditFailure::kNoNeighbors);
  const char32_t pick = candidates[rng.uniform_below(candidates.size())];
  std::u32string out(word);
  out[position] = unicode::match_case(pick, original);
  return Edit::success(std::move(out));
}

// Inserts a neighbor of the character at `position` right after it.
inline Edit apply_insert(std::u32string_view word, std::size_t position,
                         const KeyboardLayout& layout, RandomSource& rng) {
  if (!ops_detail::in_range(word, position)) {
    return Edit::fail(EditFailure::kOutOfRange);
  }
  const char32_t reference = word[position];
  if (unicode::is_whitespace(reference)) {
    return Edit::fail(EditFailure::kWhitespace);
  }
  auto candidates = layout.neighbors(reference);
  if (candidates.empty()) return Edit::fail(EditFailure::kNoNeighbors);
  const char32_t pick = candidates[rng.uniform_below(candidates.size())];
  std::u32string out(word);
  out.insert(out.begin() + position + 1, unicode::match_case(pick, reference));
  return Edit::success(std::move(out));
}

inline Edit apply_delete(std::u32string_view word, std::size_t position) {
  if (!ops_detail::in_range(word, position)) {
    return Edit::fail(EditFailure::kOutOfRange);
  }
  if (unicode::is_whitespace(word[position])) {
    return Edit::fail(EditFailure::kWhitespace);
  }
  std::u32string out(word);
  out.erase(position, 1);
  return Edit::success(std::move(out));
}

namespace ops_detail {

template <typename HandCheck>
Edit transpose_with(std::u32string_view word, std::size_t position,
                    bool may_append_space, HandCheck&& hands_ok) {
  if (!in_range(word, position)) return Edit::fail(EditFailure::kOutOfRange);
  std::u32string out(word);
  if (position + 1 == out.size()) {
    if (!may_append_space) return Edit::fail(EditFailure::kNoPartner);
    out.push_back(U' ');
  }
  if (!hands_ok(out[position], out[position + 1])) {
    return Edit::fail(EditFailure::kSameHandOrUnknown);
  }
  std::swap(out[position], out[position + 1]);
  return Edit::success(std::move(out));
}

}  // namespace ops_detail

// Swaps the characters at `position` and `position + 1` when they are typed
// by different hands. On the last character the partner is a trailing space
// borrowed from the following separator, allowed only if
// `may_append_space` (non-final word that has not borrowed one yet). A
// successful swap then returns a word one character longer.
inline Edit apply_transpose(std::u32string_view word, std::size_t position,
                            const KeyboardLayout& layout,
                            bool may_append_space) {
  return ops_detail::transpose_with(
      word, position, may_append_space, [&](char32_t a, char32_t b) {
        return crosses_hands(layout.hand_of(a), layout.hand_of(b));
      });
}

// Layout-unconstrained variants used by the naive baseline. Deletion is the
// same in both modes.

inline Edit apply_replace_naive(std::u32string_view word, std::size_t position,
                                const KeyboardLayout& layout,
                                RandomSource& rng) {
  if (!ops_detail::in_range(word, position)) {
    return Edit::fail(EditFailure::kOutOfRange);
  }
  const char32_t original = word[position];
  if (unicode::is_whitespace(original)) {
    return Edit::fail(EditFailure::kWhitespace);
  }
  auto pick = ops_detail::draw_other(layout.alphabet(),
                                     unicode::to_lower(original), rng);
  if (!pick) return Edit::fail(EditFailure::kNoNeighbors);
  std::u32string out(word);
  out[position] = unicode::match_case(*pick, original);
  return Edit::success(std::move(out));
}

inline Edit apply_insert_naive(std::u32string_view word, std::size_t position,
                               const KeyboardLayout& layout,
                               RandomSource& rng) {
  if (!ops_detail::in_range(word, position)) {
    return Edit::fail(EditFailure::kOutOfRange);
  }
  const char32_t reference = word[position];
  if (unicode::is_whitespace(reference)) {
    return Edit::fail(EditFailure::kWhitespace);
  }
  auto alphabet = layout.alphabet();
  if (alphabet.empty()) return Edit::fail(EditFailure::kNoNeighbors);
  const char32_t pick = alphabet[rng.uniform_below(alphabet.size())];
  std::u32string out(word);
  out.insert(out.begin() + position + 1, unicode::match_case(pick, reference));
  return Edit::success(std::move(out));
}

inline Edit apply_transpose_naive(std::u32string_view word,
                                  std::size_t position,
                                  bool may_append_space) {
  return ops_detail::transpose_with(word, position, may_append_space,
                                    [](char32_t, char32_t) { return true; });
}

// An edit is valid unless it reproduces the current state or any earlier
// state of the word, which would undo or cancel a previous typo.
inline bool is_valid(std::u32string_view candidate,
                     std::span<const std::u32string> history) {
  for (const auto& state : history) {
    if (state == candidate) return false;
  }
  return true;
}

}  // namespace multypo

#endif  // MULTYPO_OPERATIONS_HPP_

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

#include "multypo/operations.hpp"

#include <set>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace multypo {
namespace {

using ::testing::UnorderedElementsAre;
using testing::qwerty;

std::u32string u32(std::string_view s) { return *unicode::decode_utf8(s); }
std::string u8(const std::u32string& s) { return unicode::encode_utf8(s); }

// Collects every distinct outcome of a randomized edit over many seeds.
template <typename Fn>
std::set<std::string> outcomes(Fn&& fn) {
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RandomSource rng(seed);
    const Edit e = fn(rng);
    seen.insert(e.ok() ? u8(e.word) : "<fail>");
  }
  return seen;
}

TEST(ReplaceTest, DrawsFromNeighbors) {
  EXPECT_THAT(outcomes([](RandomSource& r) {
                return apply_replace(u32("ideas"), 4, qwerty(), r);
              }),
              UnorderedElementsAre("ideaa", "idead"));
}

TEST(ReplaceTest, SingleNeighborIsForced) {
  RandomSource rng(0);
  EXPECT_EQ(u8(apply_replace(u32("qq"), 1, qwerty(), rng).word), "qw");
}

TEST(ReplaceTest, AbsentCharacterFails) {
  RandomSource rng(0);
  EXPECT_EQ(apply_replace(u32("a1b"), 1, qwerty(), rng).failure,
            EditFailure::kNoNeighbors);
}

TEST(ReplaceTest, MatchesCase) {
  EXPECT_THAT(outcomes([](RandomSource& r) {
                return apply_replace(u32("IDEAS"), 4, qwerty(), r);
              }),
              UnorderedElementsAre("IDEAA", "IDEAD"));
}

TEST(ReplaceTest, CyrillicUppercase) {
  // 'В' folds to 'в', whose ЙЦУКЕН neighbors are 'ы' and 'а'.
  EXPECT_THAT(outcomes([](RandomSource& r) {
                return apply_replace(u32("дВ"), 1, testing::layout_for("rus_Cyrl"),
                                     r);
              }),
              UnorderedElementsAre("дЫ", "дА"));
}

TEST(ReplaceTest, PositionOutOfRangeFails) {
  RandomSource rng(0);
  EXPECT_EQ(apply_replace(u32("ab"), 0, qwerty(), rng).failure,
            EditFailure::kOutOfRange);
  EXPECT_EQ(apply_replace(u32("ab"), 2, qwerty(), rng).failure,
            EditFailure::kOutOfRange);
}

TEST(ReplaceTest, WhitespaceFails) {
  RandomSource rng(0);
  EXPECT_EQ(apply_replace(u32("th e"), 2, qwerty(), rng).failure,
            EditFailure::kWhitespace);
}

TEST(InsertTest, ReferenceExample) {
  const auto seen = outcomes([](RandomSource& r) {
    return apply_insert(u32("green"), 4, qwerty(), r);
  });
  EXPECT_THAT(seen, UnorderedElementsAre("greenb", "greenm"));
}

TEST(InsertTest, InsertsAfterReference) {
  EXPECT_THAT(outcomes([](RandomSource& r) {
                return apply_insert(u32("hi"), 1, qwerty(), r);
              }),
              UnorderedElementsAre("hiu", "hio"));
}

TEST(InsertTest, AbsentCharacterFails) {
  RandomSource rng(0);
  EXPECT_EQ(apply_insert(u32("x9"), 1, qwerty(), rng).failure,
            EditFailure::kNoNeighbors);
}

TEST(DeleteTest, Examples) {
  EXPECT_EQ(u8(apply_delete(u32("Colorless"), 2).word), "Coorless");
  EXPECT_EQ(u8(apply_delete(u32("ab"), 1).word), "a");
  EXPECT_EQ(u8(apply_delete(u32("smell"), 4).word), "smel");
  EXPECT_EQ(apply_delete(u32("ab"), 0).failure, EditFailure::kOutOfRange);
  EXPECT_EQ(apply_delete(u32("th e"), 2).failure, EditFailure::kWhitespace);
}

TEST(TransposeTest, CrossHandSwap) {
  const Edit e = apply_transpose(u32("furiously"), 6, qwerty(), false);
  ASSERT_TRUE(e.ok());
  EXPECT_EQ(u8(e.word), "furioulsy");
}

TEST(TransposeTest, SameHandFails) {
  // "as" as a final word: position 1 has no partner at all.
  EXPECT_FALSE(apply_transpose(u32("as"), 1, qwerty(), false).ok());
  EXPECT_EQ(apply_transpose(u32("ase"), 1, qwerty(), false).failure,
            EditFailure::kSameHandOrUnknown);
}

TEST(TransposeTest, LastCharacterBorrowsSpace) {
  const Edit e = apply_transpose(u32("the"), 2, qwerty(), true);
  ASSERT_TRUE(e.ok());
  EXPECT_EQ(u8(e.word), "th e");
  EXPECT_EQ(apply_transpose(u32("the"), 2, qwerty(), false).failure,
            EditFailure::kNoPartner);
}

TEST(TransposeTest, UnknownHandFails) {
  EXPECT_EQ(apply_transpose(u32("a1"), 1, qwerty(), false).failure,
            EditFailure::kNoPartner);
  EXPECT_EQ(apply_transpose(u32("ab1"), 1, qwerty(), false).failure,
            EditFailure::kSameHandOrUnknown);
  EXPECT_EQ(apply_transpose(u32("ah1"), 1, qwerty(), false).failure,
            EditFailure::kSameHandOrUnknown);
}

TEST(TransposeTest, SpaceCanMoveFurther) {
  // After "th e", swapping ' ' with 'e' again is a legal edit; the engine
  // rejects it as a revert.
  const Edit e = apply_transpose(u32("th e"), 2, qwerty(), false);
  ASSERT_TRUE(e.ok());
  EXPECT_EQ(u8(e.word), "the ");
}

TEST(NaiveTest, ReplaceAvoidsOriginalAndStaysInAlphabet) {
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    RandomSource rng(seed);
    const Edit e = apply_replace_naive(u32("aS"), 1, qwerty(), rng);
    ASSERT_TRUE(e.ok());
    ASSERT_NE(e.word[1], U'S');
    ASSERT_TRUE(unicode::is_upper(e.word[1]));
    seen.insert(u8(e.word));
  }
  EXPECT_EQ(seen.size(), 25u);
}

TEST(NaiveTest, InsertCoversAlphabet) {
  std::set<char32_t> seen;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    RandomSource rng(seed);
    const Edit e = apply_insert_naive(u32("ab"), 1, qwerty(), rng);
    ASSERT_TRUE(e.ok());
    ASSERT_EQ(e.word.size(), 3u);
    seen.insert(e.word[2]);
  }
  EXPECT_EQ(seen.size(), 26u);
}

TEST(NaiveTest, TransposeIgnoresHands) {
  EXPECT_EQ(u8(apply_transpose_naive(u32("as"), 1, true).word), "a s");
  EXPECT_EQ(u8(apply_transpose_naive(u32("ase"), 1, false).word), "aes");
  EXPECT_EQ(apply_transpose_naive(u32("as"), 1, false).failure,
            EditFailure::kNoPartner);
}

TEST(IsValidTest, Examples) {
  const std::vector<std::u32string> reverted = {U"word", U"eord"};
  EXPECT_FALSE(is_valid(U"word", reverted));
  const std::vector<std::u32string> original = {U"word"};
  EXPECT_FALSE(is_valid(U"word", original));
  EXPECT_TRUE(is_valid(U"wprd", original));
  EXPECT_TRUE(is_valid(U"word", {}));
}

// Layout conformance across every shipped layout: every successful
// replace/insert introduces a neighbor, every transpose crosses hands.
TEST(OperationPropertyTest, ConformsOnAllLayouts) {
  std::mt19937_64 gen(5);
  for (std::string_view code : kSupportedLanguages) {
    const KeyboardLayout& layout = testing::layout_for(code);
    const auto alphabet = layout.alphabet();
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    RandomSource rng(17);
    for (int trial = 0; trial < 2000; ++trial) {
      std::u32string word;
      for (int k = 0; k < 6; ++k) word.push_back(alphabet[pick(gen)]);
      const std::size_t pos = 1 + trial % 5;
      const Edit r = apply_replace(word, pos, layout, rng);
      if (r.ok()) {
        ASSERT_TRUE(layout.are_neighbors(word[pos], r.word[pos])) << code;
        ASSERT_EQ(r.word.substr(0, pos), word.substr(0, pos));
      }
      const Edit i = apply_insert(word, pos, layout, rng);
      if (i.ok()) {
        ASSERT_TRUE(layout.are_neighbors(word[pos], i.word[pos + 1])) << code;
        ASSERT_EQ(i.word.size(), word.size() + 1);
      }
      const Edit t = apply_transpose(word, pos, layout, trial % 2 == 0);
      if (t.ok()) {
        ASSERT_TRUE(crosses_hands(layout.hand_of(t.word[pos]),
                                  layout.hand_of(t.word[pos + 1])))
            << code;
        ASSERT_EQ(t.word[0], word[0]);
      }
    }
  }
}

}  // namespace
}  // namespace multypo

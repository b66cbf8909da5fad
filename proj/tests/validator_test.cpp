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

#include "multypo/validator.hpp"

#include <sstream>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace multypo {
namespace {

using ::testing::HasSubstr;
using testing::ignore_for;
using testing::qwerty;

constexpr std::uint64_t kSamples = kMinValidationSamples;

TEST(ToleranceTest, FloorAndSigma) {
  EXPECT_DOUBLE_EQ(binomial_tolerance(0.5, 1000000, 0.003), 0.003);
  EXPECT_NEAR(binomial_tolerance(0.5, 100000, 0.003), 6 * 0.5 / std::sqrt(1e5),
              1e-12);
}

TEST(OperationMixTest, CorrectSamplerPasses) {
  const auto report = validate_operation_mix(kSamples, 3);
  EXPECT_TRUE(report.passed()) << report.to_text();
  EXPECT_EQ(report.checks.size(), 4u);
  EXPECT_DOUBLE_EQ(report.find("op_mix/insert")->expected, 0.1525);
}

TEST(OperationMixTest, UniformSamplerFails) {
  const auto report = validate_operation_mix(
      kSamples, 3, [](RandomSource& rng) {
        return kAllOps[rng.uniform_below(4)];
      });
  EXPECT_FALSE(report.passed());
  EXPECT_FALSE(report.find("op_mix/insert")->passed);
}

TEST(OperationMixTest, TooFewSamples) {
  EXPECT_THROW(validate_operation_mix(1000, 0), UsageError);
}

TEST(PositionTest, CorrectSamplerPasses) {
  for (std::size_t len : {2u, 3u, 4u, 10u}) {
    const auto report = validate_position_distribution(len, kSamples, len);
    EXPECT_TRUE(report.passed()) << report.to_text();
    EXPECT_EQ(report.checks.size(), len);
  }
}

TEST(PositionTest, UniformSamplerFails) {
  const auto report = validate_position_distribution(
      10, kSamples, 1, [](std::size_t len, RandomSource& rng) {
        return 1 + rng.uniform_below(len - 1);
      });
  EXPECT_FALSE(report.passed());
}

TEST(PositionTest, FirstCharacterHitFails) {
  const auto report = validate_position_distribution(
      4, kSamples, 1, [](std::size_t len, RandomSource& rng) {
        const std::size_t p = sample_position(len, rng);
        return rng.uniform01() < 1e-4 ? 0 : p;
      });
  EXPECT_FALSE(report.find("position/len4/0")->passed);
}

TEST(WordBiasTest, HiThere) {
  const auto report =
      validate_word_length_bias("hi there", kSamples, 5, qwerty(),
                                ignore_for("eng_Latn"));
  EXPECT_TRUE(report.passed()) << report.to_text();
  EXPECT_NEAR(report.find("word_bias/0:hi")->expected, 0.38742588672279316,
              1e-15);
  EXPECT_NEAR(report.find("word_bias/1:there")->expected, 0.6125741132772069,
              1e-15);
}

TEST(WordBiasTest, NeedsTwoEligibleWords) {
  EXPECT_THROW(validate_word_length_bias("hello 42", kSamples, 0, qwerty(),
                                         ignore_for("eng_Latn")),
               UsageError);
}

TEST(ReportTest, TextAndJson) {
  ValidationReport report;
  report.add({"a", 0.5, 0.5, 0.01, true, {}});
  report.add({"b", 0.5, 0.9, 0.01, false, "off"});
  EXPECT_FALSE(report.passed());
  EXPECT_THAT(report.to_text(), HasSubstr("overall: FAIL"));
  EXPECT_THAT(report.to_text(), HasSubstr("off"));
  const auto j = report.to_json();
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_EQ(j["checks"].size(), 2u);
}

std::string log_for(const std::vector<TypoEvent>& events,
                    std::string language = "eng_Latn") {
  DocumentEvents doc;
  doc.doc_id = "d";
  doc.language = std::move(language);
  doc.events = events;
  return to_log_line(doc) + "\n";
}

ValidationReport audit(const std::string& log, AuditTally* tally = nullptr) {
  std::istringstream in(log);
  return validate_constraints(in, testing::shipped_layouts(),
                              testing::shipped_ignore_sets(), tally);
}

TEST(ConstraintTest, ReferenceEditsPass) {
  AuditTally tally;
  const auto report = audit(
      log_for({{2, 4, TypoOp::kReplace, "ideas", "ideaa"},
               {1, 4, TypoOp::kInsert, "green", "greenm"},
               {0, 2, TypoOp::kDelete, "Colorless", "Coorless"},
               {4, 6, TypoOp::kTranspose, "furiously.", "furioulsy."},
               {3, 4, TypoOp::kTranspose, "smell", "smel l"}}),
      &tally);
  EXPECT_TRUE(report.passed()) << report.to_text();
  EXPECT_EQ(tally.events, 5u);
  EXPECT_EQ(tally.cross_hand, 2u);
}

TEST(ConstraintTest, NonNeighborReplacementFails) {
  const auto report = audit(log_for({{0, 1, TypoOp::kReplace, "cat", "cpt"}}));
  const auto* check = report.find("constraints/neighbor_keys");
  EXPECT_FALSE(check->passed);
  EXPECT_THAT(check->note, HasSubstr("doc d event 0"));
}

TEST(ConstraintTest, SameHandTransposeFails) {
  EXPECT_FALSE(audit(log_for({{0, 1, TypoOp::kTranspose, "ase", "aes"}}))
                   .find("constraints/cross_hand")
                   ->passed);
}

TEST(ConstraintTest, PositionZeroAndProtectedWords) {
  const auto report =
      audit(log_for({{0, 0, TypoOp::kDelete, "cat", "at"},
                     {1, 1, TypoOp::kDelete, "three", "tree"}}));
  EXPECT_FALSE(report.find("constraints/position_zero")->passed);
  EXPECT_FALSE(report.find("constraints/protected_words")->passed);
}

TEST(ConstraintTest, InconsistentEventFails) {
  EXPECT_FALSE(audit(log_for({{0, 1, TypoOp::kDelete, "cat", "cap"}}))
                   .find("constraints/consistent_events")
                   ->passed);
}

TEST(ConstraintTest, EngineOutputPassesOnEveryLanguage) {
  std::mt19937_64 gen(2);
  std::string log;
  for (std::string_view code : kSupportedLanguages) {
    CorruptionConfig c;
    c.language = LanguageId::parse(code);
    c.rate = 0.7;
    for (int t = 0; t < 100; ++t) {
      c.seed = t;
      const std::string text = testing::random_alphabet_sentence(
          gen, testing::layout_for(code), ignore_for(code), 10);
      const auto r =
          corrupt(text, c, testing::layout_for(code), ignore_for(code));
      DocumentEvents doc;
      doc.doc_id = std::to_string(t);
      doc.language = std::string(code);
      doc.events = r.events;
      log += to_log_line(doc) + "\n";
    }
  }
  AuditTally tally;
  const auto report = audit(log, &tally);
  EXPECT_TRUE(report.passed()) << report.to_text();
  EXPECT_GT(tally.events, 5000u);
}

TEST(ConstraintTest, MalformedLogLine) {
  EXPECT_THROW(audit("{}\n"), DataError);
  EXPECT_THROW(audit(log_for({}, "xyz_Latn")), UsageError);
}

TEST(CoincidenceTest, MatchesRawGridOracle) {
  for (std::string_view code : kSupportedLanguages) {
    const auto expected = testing::brute_force_coincidence(code);
    const auto got = expected_neighbor_coincidence(testing::layout_for(code));
    EXPECT_NEAR(got.replace, expected.first, 1e-12) << code;
    EXPECT_NEAR(got.insert, expected.second, 1e-12) << code;
  }
}

}  // namespace
}  // namespace multypo

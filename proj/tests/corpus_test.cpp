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

#include "multypo/corpus.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace multypo {
namespace {

using ::testing::HasSubstr;
using testing::ignore_for;
using testing::qwerty;

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

struct CorpusRun {
  std::string output;
  std::string events;
  RunReport report;
};

CorpusRun run(const std::string& input, CorpusOptions options) {
  std::istringstream in(input);
  std::ostringstream out, events;
  CorpusRun r;
  r.report = run_corpus(in, out, &events, options, qwerty(),
                        ignore_for("eng_Latn"));
  r.output = out.str();
  r.events = events.str();
  return r;
}

CorpusOptions plain(double rate, std::uint64_t seed) {
  CorpusOptions o;
  o.config.rate = rate;
  o.config.seed = seed;
  return o;
}

CorpusOptions records(double rate, std::string field) {
  CorpusOptions o = plain(rate, 1);
  o.format = InputFormat::kRecords;
  o.field = std::move(field);
  return o;
}

std::string corpus(int lines, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::string s;
  for (int i = 0; i < lines; ++i) s += testing::random_sentence(gen, 3, 20) + "\n";
  return s;
}

TEST(LocateFieldTest, FindsRawValueSpan) {
  const std::string line = R"({"a": 1, "q" : "x\"y", "b": [1, {"q": 2}]})";
  const auto span = locate_field(line, "q");
  ASSERT_TRUE(span.has_value());
  EXPECT_EQ(line.substr(span->begin, span->end - span->begin), R"("x\"y")");
  EXPECT_FALSE(locate_field(line, "zz").has_value());
}

TEST(LocateFieldTest, LastDuplicateWins) {
  const std::string line = R"({"q": "first", "q": "second"})";
  const auto span = locate_field(line, "q");
  ASSERT_TRUE(span.has_value());
  EXPECT_EQ(line.substr(span->begin, span->end - span->begin), R"("second")");
}

TEST(ReaderTest, PlainLinesBecomeDocuments) {
  std::istringstream in("one two\nthree\n\nfour");
  DocumentReader reader(in, InputFormat::kPlain, "");
  std::vector<std::string> texts;
  while (auto r = reader.next()) texts.push_back(r->text);
  EXPECT_THAT(texts, ::testing::ElementsAre("one two", "three", "", "four"));
}

TEST(ReaderTest, RecordErrorsNameTheLine) {
  auto error_for = [](const std::string& input) -> std::string {
    std::istringstream in(input);
    DocumentReader reader(in, InputFormat::kRecords, "q");
    try {
      while (reader.next()) {
      }
    } catch (const DataError& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_EQ(error_for("{\"q\": \"a\"}\n{\"answer\": \"b\"}\n"),
            "line 2: field 'q' absent");
  EXPECT_THAT(error_for("not json\n"), HasSubstr("line 1: not a JSON object"));
  EXPECT_THAT(error_for("{\"q\": 3}\n"), HasSubstr("is not a string"));
}

TEST(ReaderTest, RecordsRequireField) {
  std::istringstream in;
  EXPECT_THROW(DocumentReader(in, InputFormat::kRecords, ""), UsageError);
}

TEST(RunCorpusTest, OneOutputLinePerInputLine) {
  const std::string input = corpus(1000, 3);
  const CorpusRun r = run(input, plain(0.1, 7));
  EXPECT_EQ(lines_of(r.output).size(), 1000u);
  EXPECT_EQ(lines_of(r.events).size(), 1000u);
  EXPECT_EQ(r.report.documents, 1000u);
  EXPECT_DOUBLE_EQ(r.report.to_json()["rate"].get<double>(), 0.1);
  EXPECT_EQ(r.report.applied_typos,
            r.report.op_histogram[0] + r.report.op_histogram[1] +
                r.report.op_histogram[2] + r.report.op_histogram[3]);
}

TEST(RunCorpusTest, ZeroRateLogsEmptyEvents) {
  const std::string input = corpus(50, 4);
  const CorpusRun r = run(input, plain(0.0, 7));
  EXPECT_EQ(r.output, input);
  for (const auto& line : lines_of(r.events)) {
    EXPECT_TRUE(parse_log_line(line).events.empty());
  }
}

TEST(RunCorpusTest, SingleTypoEventHasAllFields) {
  const CorpusRun r = run("Colorless green ideas smell furiously.\n", plain(0.2, 1));
  const auto j = nlohmann::json::parse(lines_of(r.events).at(0));
  ASSERT_EQ(j["events"].size(), 1u);
  const auto& e = j["events"][0];
  for (const char* key : {"word_index", "position", "op", "before", "after"}) {
    EXPECT_TRUE(e.contains(key)) << key;
  }
  EXPECT_EQ(j["doc_id"], "1");
  EXPECT_EQ(j["language"], "eng_Latn");
}

TEST(RunCorpusTest, ShortfallIsReported) {
  const CorpusRun r = run("12 345 6789\nplain words here\n", plain(1.0, 1));
  EXPECT_EQ(r.report.shortfall_documents, 1u);
  EXPECT_EQ(lines_of(r.output).at(0), "12 345 6789");
}

TEST(RunCorpusTest, IndependentOfJobsAndBatchSize) {
  const std::string input = corpus(300, 5);
  const CorpusRun base = run(input, plain(0.4, 9));
  for (unsigned jobs : {2u, 4u}) {
    for (std::size_t batch : {1u, 7u, 4096u}) {
      CorpusOptions o = plain(0.4, 9);
      o.jobs = jobs;
      o.batch_size = batch;
      const CorpusRun other = run(input, o);
      EXPECT_EQ(other.output, base.output);
      EXPECT_EQ(other.events, base.events);
    }
  }
  EXPECT_NE(run(input, plain(0.4, 10)).output, base.output);
}

TEST(RunCorpusTest, RecordsKeepOtherFieldsByteExact) {
  const std::string line =
      R"({"doc_id": "a7", "q":"Colorless green ideas smell furiously.",)"
      R"(  "answer" : "Ideas é stay", "n": 1.50})";
  const CorpusRun r = run(line + "\n", records(0.4, "q"));
  const std::string out = lines_of(r.output).at(0);
  const std::size_t q = out.find(R"("q":)");
  ASSERT_NE(q, std::string::npos);
  EXPECT_EQ(out.substr(0, q), line.substr(0, q));
  const std::string tail = R"(,  "answer" : "Ideas é stay", "n": 1.50})";
  EXPECT_TRUE(out.ends_with(tail)) << out;
  const auto j = nlohmann::json::parse(out);
  EXPECT_NE(j["q"], "Colorless green ideas smell furiously.");
  EXPECT_EQ(nlohmann::json::parse(lines_of(r.events).at(0))["doc_id"], "a7");
}

TEST(RunCorpusTest, RecordsWithoutEventsAreUntouched) {
  const std::string line = R"({"q": "café 12",  "x": 1})";
  const CorpusRun r = run(line + "\n", records(0.0, "q"));
  EXPECT_EQ(r.output, line + "\n");
}

TEST(RunCorpusTest, IntegerDocIdsAndDuplicates) {
  const CorpusRun r = run("{\"doc_id\": 5, \"q\": \"hello world\"}\n",
                    records(0.5, "q"));
  EXPECT_EQ(parse_log_line(lines_of(r.events).at(0)).doc_id, "5");
  EXPECT_THROW(run("{\"doc_id\": 5, \"q\": \"a\"}\n{\"doc_id\": \"5\", \"q\": "
                   "\"b\"}\n",
                   records(0.5, "q")),
               DataError);
}

TEST(RunCorpusTest, RejectsZeroJobs) {
  CorpusOptions o = plain(0.1, 0);
  o.jobs = 0;
  EXPECT_THROW(run("a\n", o), UsageError);
}

TEST(PresetRateTest, Levels) {
  EXPECT_EQ(preset_rate("0"), 0.0);
  EXPECT_EQ(preset_rate("low"), 0.1);
  EXPECT_EQ(preset_rate("40"), 0.4);
  EXPECT_EQ(preset_rate("high"), 0.7);
  EXPECT_FALSE(preset_rate("50").has_value());
}

TEST(EventLogTest, RoundTrip) {
  DocumentEvents doc;
  doc.doc_id = "x";
  doc.language = "fra_Latn";
  doc.rate = 0.4;
  doc.seed = 18446744073709551615ULL;
  doc.mode = Mode::kNaive;
  doc.requested = 2;
  doc.shortfall = 1;
  doc.events.push_back({1, 2, TypoOp::kTranspose, "été", "éét"});
  const DocumentEvents back = parse_log_line(to_log_line(doc));
  EXPECT_EQ(back.doc_id, doc.doc_id);
  EXPECT_EQ(back.seed, doc.seed);
  EXPECT_EQ(back.mode, Mode::kNaive);
  EXPECT_EQ(back.events, doc.events);
  EXPECT_EQ(to_log_line(back), to_log_line(doc));
  EXPECT_THROW(parse_log_line("{\"doc_id\": \"x\"}"), DataError);
  EXPECT_THROW(parse_log_line("[]"), DataError);
}

}  // namespace
}  // namespace multypo

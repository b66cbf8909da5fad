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

#ifndef MULTYPO_CORPUS_HPP_
#define MULTYPO_CORPUS_HPP_

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "json.hpp"
#include "multypo/engine.hpp"
#include "multypo/error.hpp"
#include "multypo/event_log.hpp"
#include "multypo/layout.hpp"
#include "multypo/lexicon.hpp"
#include "multypo/random.hpp"

namespace multypo {

enum class InputFormat { kPlain, kRecords };

inline std::optional<InputFormat> parse_format(std::string_view name) {
  if (name == "plain") return InputFormat::kPlain;
  if (name == "records") return InputFormat::kRecords;
  return std::nullopt;
}

// Byte range of a value inside its raw input line.
struct ValueSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct DocumentRecord {
  std::size_t line_no = 0;
  std::string doc_id;
  std::string text;
  std::string raw;                 // records: the untouched input line
  std::optional<ValueSpan> span;   // records: where `text` lives in `raw`
};

namespace corpus_detail {

inline std::size_t skip_ws(std::string_view s, std::size_t i) {
  while (i < s.size() &&
         (s[i] == ' ' || s[i] == '\t' || s[i] == '\r' || s[i] == '\n')) {
    ++i;
  }
  return i;
}

// Index one past the closing quote of the string starting at s[i] == '"'.
inline std::size_t skip_string(std::string_view s, std::size_t i) {
  for (++i; i < s.size(); ++i) {
    if (s[i] == '\\') {
      ++i;
    } else if (s[i] == '"') {
      return i + 1;
    }
  }
  return std::string_view::npos;
}

inline std::size_t skip_value(std::string_view s, std::size_t i) {
  if (i >= s.size()) return std::string_view::npos;
  if (s[i] == '"') return skip_string(s, i);
  if (s[i] == '{' || s[i] == '[') {
    int depth = 0;
    while (i < s.size()) {
      const char c = s[i];
      if (c == '"') {
        i = skip_string(s, i);
        if (i == std::string_view::npos) return i;
        continue;
      }
      if (c == '{' || c == '[') ++depth;
      if (c == '}' || c == ']') {
        if (--depth == 0) return i + 1;
      }
      ++i;
    }
    return std::string_view::npos;
  }
  while (i < s.size() && s[i] != ',' && s[i] != '}' && s[i] != ' ' &&
         s[i] != '\t' && s[i] != '\r') {
    ++i;
  }
  return i;
}

}  // namespace corpus_detail

// Locates the raw value of top-level key `field` in a JSON object line that
// has already been validated. With duplicate keys the last one wins, as in
// the parsed object.
inline std::optional<ValueSpan> locate_field(std::string_view line,
                                             std::string_view field) {
  using namespace corpus_detail;
  std::optional<ValueSpan> found;
  std::size_t i = skip_ws(line, 0);
  if (i >= line.size() || line[i] != '{') return std::nullopt;
  i = skip_ws(line, i + 1);
  while (i < line.size() && line[i] == '"') {
    const std::size_t key_end = skip_string(line, i);
    if (key_end == std::string_view::npos) return std::nullopt;
    const std::string key =
        nlohmann::json::parse(line.substr(i, key_end - i)).get<std::string>();
    i = skip_ws(line, key_end);
    if (i >= line.size() || line[i] != ':') return std::nullopt;
    i = skip_ws(line, i + 1);
    const std::size_t value_end = skip_value(line, i);
    if (value_end == std::string_view::npos) return std::nullopt;
    if (key == field) found = ValueSpan{i, value_end};
    i = skip_ws(line, value_end);
    if (i < line.size() && line[i] == ',') i = skip_ws(line, i + 1);
  }
  return found;
}

// Streams documents one line at a time.
class DocumentReader {
 public:
  DocumentReader(std::istream& in, InputFormat format, std::string field)
      : in_(in), format_(format), field_(std::move(field)) {
    if (format_ == InputFormat::kRecords && field_.empty()) {
      throw UsageError("records format requires --field");
    }
  }

  std::optional<DocumentRecord> next() {
    std::string line;
    if (!std::getline(in_, line)) {
      if (in_.bad()) throw IoError("read error on input");
      return std::nullopt;
    }
    DocumentRecord record;
    record.line_no = ++line_no_;
    if (format_ == InputFormat::kPlain) {
      record.doc_id = std::to_string(record.line_no);
      record.text = std::move(line);
      return record;
    }
    parse_record(line, record);
    record.raw = std::move(line);
    return record;
  }

 private:
  void parse_record(const std::string& line, DocumentRecord& record) const {
    const std::string where = "line " + std::to_string(record.line_no) + ": ";
    auto j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) {
      throw DataError(where + "not a JSON object");
    }
    if (!j.contains(field_)) {
      throw DataError(where + "field '" + field_ + "' absent");
    }
    if (!j[field_].is_string()) {
      throw DataError(where + "field '" + field_ + "' is not a string");
    }
    record.text = j[field_].get<std::string>();
    record.span = locate_field(line, field_);
    if (!record.span) throw DataError(where + "cannot locate field value");
    if (auto id = j.find("doc_id"); id != j.end()) {
      if (id->is_string()) {
        record.doc_id = id->get<std::string>();
      } else if (id->is_number_integer()) {
        record.doc_id = id->dump();
      } else {
        throw DataError(where + "doc_id must be a string or an integer");
      }
    } else {
      record.doc_id = std::to_string(record.line_no);
    }
  }

  std::istream& in_;
  InputFormat format_;
  std::string field_;
  std::size_t line_no_ = 0;
};

// Output line for a corrupted document. Records keep every byte outside the
// corrupted field; an unchanged field keeps its original encoding too.
inline std::string render_output(const DocumentRecord& record,
                                 const CorruptionResult& result) {
  if (!record.span) return result.text;
  if (result.events.empty()) return record.raw;
  std::string out = record.raw.substr(0, record.span->begin);
  out += nlohmann::json(result.text).dump();
  out += record.raw.substr(record.span->end);
  return out;
}

struct RunReport {
  std::string language;
  double rate = 0.0;
  std::uint64_t seed = 0;
  Mode mode = Mode::kMulTypo;
  std::uint64_t documents = 0;
  std::uint64_t requested_typos = 0;
  std::uint64_t applied_typos = 0;
  std::uint64_t shortfall_documents = 0;
  std::array<std::uint64_t, 4> op_histogram{};

  void add(const CorruptionResult& result) {
    ++documents;
    requested_typos += result.requested;
    applied_typos += result.applied;
    if (result.shortfall > 0) ++shortfall_documents;
    for (const auto& e : result.events) {
      ++op_histogram[static_cast<std::size_t>(e.op)];
    }
  }

  OrderedJson to_json() const {
    OrderedJson j;
    j["language"] = language;
    j["rate"] = rate;
    j["seed"] = seed;
    j["mode"] = to_string(mode);
    j["documents"] = documents;
    j["requested_typos"] = requested_typos;
    j["applied_typos"] = applied_typos;
    j["shortfall_documents"] = shortfall_documents;
    OrderedJson histogram;
    for (TypoOp op : kAllOps) {
      histogram[std::string(to_string(op))] =
          op_histogram[static_cast<std::size_t>(op)];
    }
    j["op_histogram"] = std::move(histogram);
    return j;
  }
};

struct CorpusOptions {
  CorruptionConfig config;
  InputFormat format = InputFormat::kPlain;
  std::string field;
  unsigned jobs = 1;
  std::size_t batch_size = 4096;
};

// Corrupts every document of `in` and writes them to `out` in input order,
// with one event-log line per document to `events` when non-null. Each
// document uses its own seed derived from (run seed, doc_id), so the output
// does not depend on `jobs`. At most `batch_size` documents are held in
// memory.
inline RunReport run_corpus(std::istream& in, std::ostream& out,
                            std::ostream* events, const CorpusOptions& options,
                            const KeyboardLayout& layout,
                            const IgnoreSet& ignore) {
  options.config.validate();
  if (options.jobs == 0) throw UsageError("jobs must be >= 1");
  DocumentReader reader(in, options.format, options.field);
  RunReport report;
  report.language = options.config.language.code();
  report.rate = options.config.rate;
  report.seed = options.config.seed;
  report.mode = options.config.mode;

  std::unordered_set<std::string> seen_ids;
  std::vector<DocumentRecord> batch;
  std::vector<CorruptionResult> results;
  const std::size_t batch_size = std::max<std::size_t>(1, options.batch_size);

  auto process = [&](std::size_t i) {
    CorruptionConfig config = options.config;
    config.seed = derive_document_seed(options.config.seed, batch[i].doc_id);
    results[i] = corrupt(batch[i].text, config, layout, ignore);
  };

  bool done = false;
  while (!done) {
    batch.clear();
    while (batch.size() < batch_size) {
      auto record = reader.next();
      if (!record) {
        done = true;
        break;
      }
      if (!seen_ids.insert(record->doc_id).second) {
        throw DataError("line " + std::to_string(record->line_no) +
                        ": duplicate doc_id '" + record->doc_id + "'");
      }
      batch.push_back(std::move(*record));
    }
    results.assign(batch.size(), CorruptionResult{});

    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(options.jobs, batch.size()));
    if (workers <= 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) process(i);
    } else {
      std::atomic<std::size_t> cursor{0};
      std::vector<std::exception_ptr> errors(workers);
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = cursor++; i < batch.size(); i = cursor++) {
              process(i);
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }

    for (std::size_t i = 0; i < batch.size(); ++i) {
      out << render_output(batch[i], results[i]) << '\n';
      if (events != nullptr) {
        DocumentEvents doc;
        doc.doc_id = batch[i].doc_id;
        doc.language = report.language;
        doc.rate = report.rate;
        doc.seed = report.seed;
        doc.mode = report.mode;
        doc.requested = results[i].requested;
        doc.shortfall = results[i].shortfall;
        doc.events = results[i].events;
        *events << to_log_line(doc) << '\n';
      }
      report.add(results[i]);
    }
    if (!out) throw IoError("write error on output");
    if (events != nullptr && !*events) throw IoError("write error on events");
  }
  return report;
}

// Named corruption levels (fraction of words receiving a typo).
inline std::optional<double> preset_rate(std::string_view level) {
  if (level == "0" || level == "clean") return 0.0;
  if (level == "10" || level == "low") return 0.1;
  if (level == "40" || level == "medium") return 0.4;
  if (level == "70" || level == "high") return 0.7;
  return std::nullopt;
}

}  // namespace multypo

#endif  // MULTYPO_CORPUS_HPP_

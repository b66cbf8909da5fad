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

#ifndef MULTYPO_VALIDATOR_HPP_
#define MULTYPO_VALIDATOR_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "multypo/engine.hpp"
#include "multypo/error.hpp"
#include "multypo/event_log.hpp"
#include "multypo/layout.hpp"
#include "multypo/lexicon.hpp"
#include "multypo/random.hpp"
#include "multypo/sampling.hpp"
#include "multypo/unicode.hpp"

namespace multypo {

struct CheckResult {
  std::string name;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
  }

  void add(CheckResult check) { checks.push_back(std::move(check)); }

  void append(const ValidationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  std::string to_text() const {
    std::size_t width = 5;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    std::string out;
    char buffer[160];
    std::snprintf(buffer, sizeof(buffer), "%-*s  %12s  %12s  %10s  %s\n",
                  static_cast<int>(width), "check", "expected", "observed",
                  "tolerance", "result");
    out += buffer;
    for (const auto& c : checks) {
      std::snprintf(buffer, sizeof(buffer), "%-*s  %12.6f  %12.6f  %10.6f  %s",
                    static_cast<int>(width), c.name.c_str(), c.expected,
                    c.observed, c.tolerance, c.passed ? "PASS" : "FAIL");
      out += buffer;
      if (!c.note.empty()) out += "  (" + c.note + ")";
      out += '\n';
    }
    out += passed() ? "overall: PASS\n" : "overall: FAIL\n";
    return out;
  }

  OrderedJson to_json() const {
    OrderedJson j;
    j["passed"] = passed();
    OrderedJson list = OrderedJson::array();
    for (const auto& c : checks) {
      OrderedJson item;
      item["name"] = c.name;
      item["expected"] = c.expected;
      item["observed"] = c.observed;
      item["tolerance"] = c.tolerance;
      item["passed"] = c.passed;
      if (!c.note.empty()) item["note"] = c.note;
      list.push_back(std::move(item));
    }
    j["checks"] = std::move(list);
    return j;
  }
};

inline constexpr std::uint64_t kMinValidationSamples = 100000;
inline constexpr double kOpMixTolerance = 0.003;
inline constexpr double kPositionTolerance = 0.005;
inline constexpr double kWordBiasTolerance = 0.01;

// Six binomial standard errors of a frequency estimate from n draws, never
// tighter than `floor`.
inline double binomial_tolerance(double p, std::uint64_t n, double floor) {
  const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
  return std::max(floor, 6.0 * sigma);
}

namespace validator_detail {

inline void require_samples(std::uint64_t samples) {
  if (samples < kMinValidationSamples) {
    throw UsageError("at least " + std::to_string(kMinValidationSamples) +
                     " samples are required, got " + std::to_string(samples));
  }
}

inline CheckResult frequency_check(std::string name, double expected,
                                   std::uint64_t hits, std::uint64_t samples,
                                   double floor) {
  const double observed =
      static_cast<double>(hits) / static_cast<double>(samples);
  const double tolerance = binomial_tolerance(expected, samples, floor);
  return {std::move(name), expected, observed, tolerance,
          std::abs(observed - expected) <= tolerance, {}};
}

inline std::string format_double(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%g", x);
  return buffer;
}

}  // namespace validator_detail

// Draws `samples` operations from `sampler(rng)` and compares each
// category's frequency with the configured mix.
template <typename OpSampler>
ValidationReport validate_operation_mix(std::uint64_t samples,
                                        std::uint64_t seed,
                                        OpSampler&& sampler) {
  validator_detail::require_samples(samples);
  RandomSource rng(seed);
  std::array<std::uint64_t, 4> counts{};
  for (std::uint64_t i = 0; i < samples; ++i) {
    ++counts[static_cast<std::size_t>(sampler(rng))];
  }
  ValidationReport report;
  for (TypoOp op : kAllOps) {
    const auto k = static_cast<std::size_t>(op);
    report.add(validator_detail::frequency_check(
        "op_mix/" + std::string(to_string(op)), kOpProbabilities[k], counts[k],
        samples, kOpMixTolerance));
  }
  return report;
}

inline ValidationReport validate_operation_mix(std::uint64_t samples,
                                               std::uint64_t seed) {
  return validate_operation_mix(
      samples, seed, [](RandomSource& rng) { return sample_op(rng); });
}

// Position frequencies against position_weights(word_length); any hit on
// index 0 fails outright.
template <typename PositionSampler>
ValidationReport validate_position_distribution(std::size_t word_length,
                                                std::uint64_t samples,
                                                std::uint64_t seed,
                                                PositionSampler&& sampler) {
  validator_detail::require_samples(samples);
  if (word_length < 2) throw UsageError("word length must be >= 2");
  const std::vector<double> expected = position_weights(word_length);
  std::vector<std::uint64_t> counts(word_length, 0);
  RandomSource rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::size_t pos = sampler(word_length, rng);
    if (pos < word_length) ++counts[pos];
  }
  ValidationReport report;
  const std::string prefix = "position/len" + std::to_string(word_length) + "/";
  report.add({prefix + "0", 0.0, static_cast<double>(counts[0]), 0.0,
              counts[0] == 0, "hit count, must be exactly 0"});
  for (std::size_t i = 1; i < word_length; ++i) {
    report.add(validator_detail::frequency_check(prefix + std::to_string(i),
                                                 expected[i], counts[i],
                                                 samples, kPositionTolerance));
  }
  return report;
}

inline ValidationReport validate_position_distribution(std::size_t word_length,
                                                       std::uint64_t samples,
                                                       std::uint64_t seed) {
  return validate_position_distribution(
      word_length, samples, seed, [](std::size_t length, RandomSource& rng) {
        return sample_position(length, rng);
      });
}

// Runs `trials` single-typo corruptions of `sentence` and compares how often
// each word is hit with its normalized sqrt-length weight.
inline ValidationReport validate_word_length_bias(std::string_view sentence,
                                                  std::uint64_t trials,
                                                  std::uint64_t seed,
                                                  const KeyboardLayout& layout,
                                                  const IgnoreSet& ignore) {
  validator_detail::require_samples(trials);
  const TokenizedText tokens = tokenize(sentence);
  const std::size_t n = tokens.words.size();
  std::vector<bool> eligible(n);
  std::size_t eligible_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    eligible[i] = is_eligible(tokens.words[i], ignore);
    eligible_count += eligible[i] ? 1 : 0;
  }
  if (eligible_count < 2) {
    throw UsageError("sentence needs at least 2 eligible words");
  }
  const std::vector<double> expected =
      word_weights(tokens.words, eligible).probabilities();

  CorruptionConfig config;
  config.language = layout.language();
  config.rate = 1.0 / static_cast<double>(n);
  std::vector<std::uint64_t> hits(n, 0);
  std::uint64_t shortfalls = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    config.seed = splitmix64(seed + t);
    const CorruptionResult r = corrupt(sentence, config, layout, ignore);
    if (r.events.empty()) {
      ++shortfalls;
    } else {
      ++hits[r.events.front().word_index];
    }
  }
  ValidationReport report;
  for (std::size_t i = 0; i < n; ++i) {
    if (!eligible[i]) continue;
    CheckResult check = validator_detail::frequency_check(
        "word_bias/" + std::to_string(i) + ":" + tokens.words[i], expected[i],
        hits[i], trials, kWordBiasTolerance);
    report.add(std::move(check));
  }
  report.add({"word_bias/shortfall_trials", 0.0,
              static_cast<double>(shortfalls), 0.0, shortfalls == 0,
              "single-typo trials that applied nothing"});
  return report;
}

// Post-hoc audit of logged events against the layout constraints.
struct AuditTally {
  std::uint64_t documents = 0;
  std::uint64_t events = 0;
  std::uint64_t replaces = 0;
  std::uint64_t replace_neighbors = 0;
  std::uint64_t inserts = 0;
  std::uint64_t insert_neighbors = 0;
  std::uint64_t transposes = 0;
  std::uint64_t cross_hand = 0;
  std::uint64_t position_zero = 0;
  std::uint64_t inconsistent = 0;
  std::uint64_t protected_violations = 0;
  std::optional<std::string> first_violation;

  std::uint64_t neighbor_events() const { return replaces + inserts; }
  std::uint64_t neighbor_hits() const {
    return replace_neighbors + insert_neighbors;
  }
};

namespace validator_detail {

inline void note(AuditTally& tally, const std::string& doc_id, std::size_t k,
                 const std::string& what) {
  if (!tally.first_violation) {
    tally.first_violation =
        "doc " + doc_id + " event " + std::to_string(k) + ": " + what;
  }
}

}  // namespace validator_detail

inline void audit_document(const DocumentEvents& doc,
                           const KeyboardLayout& layout,
                           const IgnoreSet& ignore, AuditTally& tally) {
  using validator_detail::note;
  ++tally.documents;
  std::set<std::size_t> seen_words;
  for (std::size_t k = 0; k < doc.events.size(); ++k) {
    const TypoEvent& e = doc.events[k];
    ++tally.events;
    if (seen_words.insert(e.word_index).second && is_ignored(e.before, ignore)) {
      ++tally.protected_violations;
      note(tally, doc.doc_id, k, "ignored word '" + e.before + "' modified");
    }
    if (e.position == 0) {
      ++tally.position_zero;
      note(tally, doc.doc_id, k, "position 0 edited");
    }
    auto before = unicode::decode_utf8(e.before);
    auto after = unicode::decode_utf8(e.after);
    const std::size_t p = e.position;
    if (!before || !after || p >= before->size()) {
      ++tally.inconsistent;
      note(tally, doc.doc_id, k, "event does not describe a valid edit");
      continue;
    }
    const std::u32string& b = *before;
    const std::u32string& a = *after;
    bool consistent = false;
    switch (e.op) {
      case TypoOp::kReplace: {
        ++tally.replaces;
        consistent = a.size() == b.size() && a.compare(0, p, b, 0, p) == 0 &&
                     a.compare(p + 1, std::u32string::npos, b, p + 1) == 0 &&
                     a[p] != b[p];
        if (consistent && layout.are_neighbors(b[p], a[p])) {
          ++tally.replace_neighbors;
        } else if (consistent) {
          note(tally, doc.doc_id, k, "replacement is not a neighbor key");
        }
        break;
      }
      case TypoOp::kInsert: {
        ++tally.inserts;
        consistent = a.size() == b.size() + 1 &&
                     a.compare(0, p + 1, b, 0, p + 1) == 0 &&
                     a.compare(p + 2, std::u32string::npos, b, p + 1) == 0;
        if (consistent && layout.are_neighbors(b[p], a[p + 1])) {
          ++tally.insert_neighbors;
        } else if (consistent) {
          note(tally, doc.doc_id, k, "insertion is not a neighbor key");
        }
        break;
      }
      case TypoOp::kDelete: {
        std::u32string expected = b;
        expected.erase(p, 1);
        consistent = expected == a;
        break;
      }
      case TypoOp::kTranspose: {
        ++tally.transposes;
        std::u32string swapped = b;
        if (p + 1 == swapped.size()) swapped.push_back(U' ');
        const Hand h1 = layout.hand_of(swapped[p]);
        const Hand h2 = layout.hand_of(swapped[p + 1]);
        std::swap(swapped[p], swapped[p + 1]);
        consistent = swapped == a;
        if (consistent && crosses_hands(h1, h2)) {
          ++tally.cross_hand;
        } else if (consistent) {
          note(tally, doc.doc_id, k,
               "same-hand transposition (" + std::string(to_string(h1)) +
                   ", " + std::string(to_string(h2)) + ")");
        }
        break;
      }
    }
    if (!consistent) {
      ++tally.inconsistent;
      note(tally, doc.doc_id, k, "after is not the logged edit of before");
    }
  }
}

inline ValidationReport constraint_report(const AuditTally& tally) {
  auto ratio = [](std::uint64_t hits, std::uint64_t total) {
    return total == 0 ? 1.0
                      : static_cast<double>(hits) / static_cast<double>(total);
  };
  ValidationReport report;
  const std::string first = tally.first_violation.value_or("");
  const double neighbor = ratio(tally.neighbor_hits(), tally.neighbor_events());
  report.add({"constraints/neighbor_keys", 1.0, neighbor, 0.0,
              neighbor == 1.0,
              std::to_string(tally.neighbor_events()) + " replace/insert"});
  const double cross = ratio(tally.cross_hand, tally.transposes);
  report.add({"constraints/cross_hand", 1.0, cross, 0.0, cross == 1.0,
              std::to_string(tally.transposes) + " transpositions"});
  report.add({"constraints/position_zero", 0.0,
              static_cast<double>(tally.position_zero), 0.0,
              tally.position_zero == 0, {}});
  report.add({"constraints/protected_words", 0.0,
              static_cast<double>(tally.protected_violations), 0.0,
              tally.protected_violations == 0, {}});
  report.add({"constraints/consistent_events", 0.0,
              static_cast<double>(tally.inconsistent), 0.0,
              tally.inconsistent == 0, {}});
  if (!first.empty()) {
    for (auto& c : report.checks) {
      if (!c.passed) {
        c.note = "first violation: " + first;
        break;
      }
    }
  }
  return report;
}

// Audits every event of a log stream. Lines name their own language.
inline ValidationReport validate_constraints(
    std::istream& log, const LayoutRegistry& registry,
    const std::map<LanguageId, IgnoreSet>& ignore_sets,
    AuditTally* tally_out = nullptr) {
  AuditTally tally;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(log, line)) {
    ++line_no;
    if (line.empty()) continue;
    DocumentEvents doc;
    try {
      doc = parse_log_line(line);
    } catch (const DataError& e) {
      throw DataError("event log line " + std::to_string(line_no) + ": " +
                      e.what());
    }
    const LanguageId language = LanguageId::parse(doc.language);
    auto ignore = ignore_sets.find(language);
    if (ignore == ignore_sets.end()) {
      throw UsageError("no ignore set loaded for " + doc.language);
    }
    audit_document(doc, registry.at(language), ignore->second, tally);
  }
  if (tally_out != nullptr) *tally_out = tally;
  return constraint_report(tally);
}

inline ValidationReport validate_constraints(
    const std::filesystem::path& event_log, const LayoutRegistry& registry,
    const std::map<LanguageId, IgnoreSet>& ignore_sets,
    AuditTally* tally_out = nullptr) {
  std::ifstream in(event_log, std::ios::binary);
  if (!in) throw IoError("cannot read event log " + event_log.string());
  return validate_constraints(in, registry, ignore_sets, tally_out);
}

// Probability that a uniformly drawn naive replacement (uniform over the
// alphabet minus the original) or insertion (uniform over the alphabet)
// lands on a horizontal neighbor, for a reference character drawn
// uniformly from the alphabet. Brute-force enumeration.
struct NeighborCoincidence {
  double replace = 0.0;
  double insert = 0.0;
};

inline NeighborCoincidence expected_neighbor_coincidence(
    const KeyboardLayout& layout) {
  const auto alphabet = layout.alphabet();
  const double size = static_cast<double>(alphabet.size());
  double replace_sum = 0.0;
  double insert_sum = 0.0;
  for (char32_t reference : alphabet) {
    std::size_t replace_hits = 0;
    std::size_t insert_hits = 0;
    for (char32_t candidate : alphabet) {
      const bool hit = layout.are_neighbors(reference, candidate);
      if (candidate != reference && hit) ++replace_hits;
      if (hit) ++insert_hits;
    }
    replace_sum += static_cast<double>(replace_hits) / (size - 1.0);
    insert_sum += static_cast<double>(insert_hits) / size;
  }
  return {replace_sum / size, insert_sum / size};
}

}  // namespace multypo

#endif  // MULTYPO_VALIDATOR_HPP_

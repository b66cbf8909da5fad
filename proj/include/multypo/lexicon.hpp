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

#ifndef MULTYPO_LEXICON_HPP_
#define MULTYPO_LEXICON_HPP_

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multypo/error.hpp"
#include "multypo/language.hpp"
#include "multypo/layout.hpp"
#include "multypo/unicode.hpp"

namespace multypo {

// Words are maximal runs of non-whitespace; separators are the whitespace
// runs around them, so separators.size() == words.size() + 1 and
// separators[0] + words[0] + separators[1] + ... reproduces the input.
struct TokenizedText {
  std::vector<std::string> words;
  std::vector<std::string> separators;
};

inline TokenizedText tokenize(std::string_view text) {
  TokenizedText out;
  std::size_t i = 0;
  std::string separator;
  while (i < text.size()) {
    if (std::size_t n = unicode::whitespace_length(text, i); n > 0) {
      separator.append(text.substr(i, n));
      i += n;
      continue;
    }
    out.separators.push_back(std::move(separator));
    separator.clear();
    const std::size_t start = i;
    while (i < text.size() && unicode::whitespace_length(text, i) == 0) ++i;
    out.words.emplace_back(text.substr(start, i - start));
  }
  out.separators.push_back(std::move(separator));
  return out;
}

inline std::string detokenize(const TokenizedText& tokens) {
  std::string out = tokens.separators.front();
  for (std::size_t i = 0; i < tokens.words.size(); ++i) {
    out += tokens.words[i];
    out += tokens.separators[i + 1];
  }
  return out;
}

// Case-folded strings whose presence anywhere inside a word protects the
// word from corruption.
class IgnoreSet {
 public:
  IgnoreSet(LanguageId language, std::vector<std::string> entries)
      : language_(std::move(language)) {
    for (auto& entry : entries) add(entry);
    std::sort(entries_.begin(), entries_.end());
    entries_.erase(std::unique(entries_.begin(), entries_.end()),
                   entries_.end());
  }

  const LanguageId& language() const noexcept { return language_; }
  const std::vector<std::string>& entries() const noexcept { return entries_; }

  bool contains_entry(std::string_view entry) const {
    return std::binary_search(entries_.begin(), entries_.end(),
                              fold_utf8(entry));
  }

  // True iff some entry is a substring of the case-folded word.
  bool matches(std::string_view word) const {
    const std::string folded = fold_utf8(word);
    for (const auto& entry : entries_) {
      if (folded.find(entry) != std::string::npos) return true;
    }
    return false;
  }

  static std::string fold_utf8(std::string_view text) {
    auto decoded = unicode::decode_utf8(text);
    if (!decoded) return std::string(text);
    return unicode::encode_utf8(unicode::fold(*decoded));
  }

 private:
  void add(std::string_view entry) {
    if (!entry.empty()) entries_.push_back(fold_utf8(entry));
  }

  LanguageId language_;
  std::vector<std::string> entries_;
};

// Native digit blocks that the loader adds next to the ASCII digits.
inline std::vector<char32_t> native_digits(const LanguageId& language) {
  const std::string& code = language.code();
  char32_t zero = 0;
  std::vector<char32_t> extra;
  if (code == "ara_Arab") {
    zero = 0x0660;
  } else if (code == "hin_Deva") {
    zero = 0x0966;
  } else if (code == "ben_Beng") {
    zero = 0x09E6;
  } else if (code == "tam_Taml") {
    zero = 0x0BE6;
    extra = {0x0BF0, 0x0BF1, 0x0BF2};  // ten, hundred, thousand signs
  }
  std::vector<char32_t> digits;
  if (zero != 0) {
    for (char32_t d = 0; d < 10; ++d) digits.push_back(zero + d);
  }
  digits.insert(digits.end(), extra.begin(), extra.end());
  return digits;
}

// Parses an ignore file (one entry per line, '#' comments) and adds the
// ASCII and native digits.
inline IgnoreSet parse_ignore_set(const LanguageId& language,
                                  std::string_view source) {
  std::vector<std::string> entries;
  std::istringstream in{std::string(source)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view entry = layout_detail::trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    if (!unicode::decode_utf8(entry)) {
      throw DataError("line " + std::to_string(line_no) +
                      ": entry is not valid UTF-8");
    }
    if (entry.find_first_of(" \t") != std::string_view::npos) {
      throw DataError("line " + std::to_string(line_no) +
                      ": entry contains whitespace");
    }
    entries.emplace_back(entry);
  }
  for (char c = '0'; c <= '9'; ++c) entries.emplace_back(1, c);
  for (char32_t d : native_digits(language)) {
    entries.push_back(unicode::encode_utf8(d));
  }
  return IgnoreSet(language, std::move(entries));
}

inline std::map<LanguageId, IgnoreSet> load_ignore_sets(
    const std::filesystem::path& directory) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(directory, ec)) {
    throw IoError("ignore-set directory not found: " + directory.string());
  }
  std::map<LanguageId, IgnoreSet> sets;
  std::string missing;
  for (std::string_view code : kSupportedLanguages) {
    const LanguageId language = LanguageId::parse(code);
    const fs::path file = directory / (std::string(code) + ".ignore");
    if (!fs::exists(file)) {
      if (!missing.empty()) missing += ", ";
      missing += code;
      continue;
    }
    try {
      sets.emplace(language, parse_ignore_set(language, read_text_file(file)));
    } catch (const DataError& e) {
      throw DataError(file.filename().string() + ": " + e.what());
    }
  }
  if (!missing.empty()) throw DataError("missing ignore sets for: " + missing);
  return sets;
}

inline bool is_ignored(std::string_view word, const IgnoreSet& ignore) {
  return ignore.matches(word);
}

// Eligible words have at least two characters, decode as UTF-8 and contain
// no ignore-set entry.
inline bool is_eligible(std::string_view word, const IgnoreSet& ignore) {
  auto decoded = unicode::decode_utf8(word);
  if (!decoded || decoded->size() < 2) return false;
  return !ignore.matches(word);
}

}  // namespace multypo

#endif  // MULTYPO_LEXICON_HPP_

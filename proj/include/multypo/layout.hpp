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

#ifndef MULTYPO_LAYOUT_HPP_
#define MULTYPO_LAYOUT_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "multypo/error.hpp"
#include "multypo/language.hpp"
#include "multypo/unicode.hpp"

namespace multypo {

enum class Hand { kLeft, kRight, kNeutral, kUnknown };

inline std::string_view to_string(Hand hand) {
  switch (hand) {
    case Hand::kLeft: return "left";
    case Hand::kRight: return "right";
    case Hand::kNeutral: return "neutral";
    case Hand::kUnknown: return "unknown";
  }
  return "unknown";
}

// Two hands are compatible for a transposition when both are known and
// they differ. The space bar is struck by either thumb, so kNeutral differs
// from both kLeft and kRight.
constexpr bool crosses_hands(Hand a, Hand b) {
  return a != Hand::kUnknown && b != Hand::kUnknown && a != b;
}

struct KeySlot {
  char32_t character = 0;
  int row = 0;
  int column = 0;
  Hand hand = Hand::kUnknown;

  friend bool operator==(const KeySlot&, const KeySlot&) = default;
};

inline constexpr int kDefaultSplitColumn = 5;

class KeyboardLayout;
inline KeyboardLayout parse_layout(std::string_view source);

// One physical keyboard layout restricted to its letter keys. Lookups fold
// the query to lowercase first, so 'A' and 'a' share the 'a' slot.
class KeyboardLayout {
 public:
  const LanguageId& language() const noexcept { return language_; }

  // Sorted, lowercase/unicameral letter keys.
  std::span<const char32_t> alphabet() const noexcept { return alphabet_; }

  bool contains(char32_t ch) const {
    return keys_.contains(unicode::to_lower(ch));
  }

  const KeySlot* slot(char32_t ch) const {
    auto it = keys_.find(unicode::to_lower(ch));
    return it == keys_.end() ? nullptr : &it->second.slot;
  }

  // Horizontal neighbors on the same row, left one first. Absent characters
  // have none.
  std::span<const char32_t> neighbors(char32_t ch) const {
    auto it = keys_.find(unicode::to_lower(ch));
    if (it == keys_.end()) return {};
    return std::span<const char32_t>(it->second.neighbors.data(),
                                     it->second.neighbor_count);
  }

  bool are_neighbors(char32_t a, char32_t b) const {
    const char32_t folded = unicode::to_lower(b);
    for (char32_t n : neighbors(a)) {
      if (n == folded) return true;
    }
    return false;
  }

  Hand hand_of(char32_t ch) const {
    if (ch == U' ') return Hand::kNeutral;
    const KeySlot* s = slot(ch);
    return s == nullptr ? Hand::kUnknown : s->hand;
  }

  int split_column(int row) const {
    auto it = row_splits_.find(row);
    return it == row_splits_.end() ? kDefaultSplitColumn : it->second;
  }

  const std::map<int, int>& row_splits() const noexcept { return row_splits_; }

 private:
  friend KeyboardLayout parse_layout(std::string_view source);

  struct Entry {
    KeySlot slot;
    std::array<char32_t, 2> neighbors{};
    std::uint8_t neighbor_count = 0;
  };

  explicit KeyboardLayout(LanguageId language)
      : language_(std::move(language)) {}

  LanguageId language_;
  std::unordered_map<char32_t, Entry> keys_;
  std::vector<char32_t> alphabet_;
  std::map<int, int> row_splits_;
};

namespace layout_detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Keys that are not letters: digits (ASCII and the native digit blocks),
// ASCII/Latin-1 punctuation and symbols, general punctuation.
inline bool is_letter_key(char32_t c) {
  if (c < 0x80) return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
  if (c >= 0x80 && c <= 0xBF) return false;
  if (c == 0xD7 || c == 0xF7) return false;
  if (unicode::is_whitespace(c)) return false;
  if (c >= 0x2000 && c <= 0x206F) return false;
  constexpr std::array<char32_t, 7> kDigitZero = {
      0x0660, 0x06F0, 0x0966, 0x09E6, 0x0BE6, 0x0A66, 0x0AE6};
  for (char32_t zero : kDigitZero) {
    if (c >= zero && c < zero + 10) return false;
  }
  return true;
}

inline int parse_int(std::string_view text, std::size_t line_no,
                     const char* what) {
  int value = 0;
  if (text.empty()) {
    throw DataError("line " + std::to_string(line_no) + ": missing " + what);
  }
  for (char c : text) {
    if (c < '0' || c > '9' || value > 100000) {
      throw DataError("line " + std::to_string(line_no) + ": bad " + what +
                      " '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

inline std::string describe(char32_t c) {
  return "'" + unicode::encode_utf8(c) + "'";
}

}  // namespace layout_detail

// Placeholder token for a physical key that carries no letter (punctuation,
// dead keys, ligature keys). It occupies a column but never becomes a slot.
inline constexpr std::string_view kGapToken = "_";

// Parses the line-based layout format:
//
//   language: eng_Latn
//   row 0: q w e r t y u i o p
//   row 1 split 5: a s d f g h j k l
//
// Blank lines and lines starting with '#' are skipped. Errors carry the
// 1-based line number.
inline KeyboardLayout parse_layout(std::string_view source) {
  using layout_detail::trim;
  std::istringstream in{std::string(source)};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<LanguageId> language;

  struct PendingKey {
    char32_t ch;
    int row;
    int column;
    std::size_t line;
  };
  std::vector<PendingKey> pending;
  std::map<int, int> splits;
  std::map<std::pair<int, int>, std::size_t> occupied;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";

    if (!language) {
      constexpr std::string_view kPrefix = "language:";
      if (!line.starts_with(kPrefix)) {
        throw DataError(where + "malformed header, expected 'language: <id>'");
      }
      std::string_view code = trim(line.substr(kPrefix.size()));
      language = LanguageId::from_code(code);
      if (!language) {
        throw DataError(where + "unknown language '" + std::string(code) +
                        "'");
      }
      continue;
    }

    const auto colon = line.find(':');
    if (!line.starts_with("row ") || colon == std::string_view::npos) {
      throw DataError(where + "expected 'row <k> [split <s>]: <keys>'");
    }
    std::istringstream head{std::string(line.substr(4, colon - 4))};
    std::string row_text, split_word, split_text, extra;
    head >> row_text >> split_word >> split_text >> extra;
    const int row = layout_detail::parse_int(row_text, line_no, "row index");
    int split = kDefaultSplitColumn;
    if (!split_word.empty()) {
      if (split_word != "split" || !extra.empty()) {
        throw DataError(where + "malformed row header");
      }
      split = layout_detail::parse_int(split_text, line_no, "split column");
    }
    splits[row] = split;

    std::istringstream keys{std::string(line.substr(colon + 1))};
    std::string token;
    int column = 0;
    while (keys >> token) {
      const int this_column = column++;
      auto [it, inserted] =
          occupied.emplace(std::make_pair(row, this_column), line_no);
      if (!inserted) {
        throw DataError(where + "duplicate (row, column) (" +
                        std::to_string(row) + ", " +
                        std::to_string(this_column) + "), first on line " +
                        std::to_string(it->second));
      }
      if (token == kGapToken) continue;
      auto decoded = unicode::decode_utf8(token);
      if (!decoded || decoded->size() != 1) {
        throw DataError(where + "key '" + token +
                        "' is not a single character");
      }
      const char32_t ch = (*decoded)[0];
      if (!layout_detail::is_letter_key(ch)) {
        throw DataError(where + "key " + layout_detail::describe(ch) +
                        " is not a letter key");
      }
      if (unicode::to_lower(ch) != ch) {
        throw DataError(where + "key " + layout_detail::describe(ch) +
                        " must be lowercase");
      }
      pending.push_back({ch, row, this_column, line_no});
    }
  }

  if (!language) throw DataError("malformed header: layout is empty");
  if (pending.empty()) throw DataError("layout has no keys");

  KeyboardLayout layout(*language);
  layout.row_splits_ = splits;
  std::map<std::pair<int, int>, char32_t> grid;
  for (const PendingKey& key : pending) {
    KeyboardLayout::Entry entry;
    entry.slot = {key.ch, key.row, key.column,
                  key.column < splits[key.row] ? Hand::kLeft : Hand::kRight};
    auto [it, inserted] = layout.keys_.emplace(key.ch, entry);
    if (!inserted) {
      throw DataError("line " + std::to_string(key.line) +
                      ": duplicate character " +
                      layout_detail::describe(key.ch));
    }
    grid[{key.row, key.column}] = key.ch;
    layout.alphabet_.push_back(key.ch);
  }
  for (auto& [ch, entry] : layout.keys_) {
    for (int delta : {-1, 1}) {
      auto it = grid.find({entry.slot.row, entry.slot.column + delta});
      if (it != grid.end()) entry.neighbors[entry.neighbor_count++] = it->second;
    }
  }
  std::sort(layout.alphabet_.begin(), layout.alphabet_.end());
  return layout;
}

// Immutable set of layouts keyed by language.
class LayoutRegistry {
 public:
  LayoutRegistry() = default;

  explicit LayoutRegistry(std::vector<KeyboardLayout> layouts) {
    for (auto& layout : layouts) {
      LanguageId id = layout.language();
      layouts_.insert_or_assign(std::move(id), std::move(layout));
    }
  }

  // Throws UsageError when the language has no layout.
  const KeyboardLayout& at(const LanguageId& language) const {
    auto it = layouts_.find(language);
    if (it == layouts_.end()) {
      throw UsageError("no keyboard layout loaded for " + language.code());
    }
    return it->second;
  }

  bool contains(const LanguageId& language) const {
    return layouts_.contains(language);
  }

  std::size_t size() const noexcept { return layouts_.size(); }

  const std::map<LanguageId, KeyboardLayout>& layouts() const noexcept {
    return layouts_;
  }

 private:
  std::map<LanguageId, KeyboardLayout> layouts_;
};

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Loads `<LanguageId>.layout` for every supported language.
inline LayoutRegistry load_registry(const std::filesystem::path& directory) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(directory, ec)) {
    throw IoError("layout directory not found: " + directory.string());
  }
  std::vector<KeyboardLayout> layouts;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory)) {
    if (entry.is_regular_file() && entry.path().extension() == ".layout") {
      files.push_back(entry.path());
    }
  }
  if (files.empty()) {
    throw DataError("no layouts found in " + directory.string());
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    try {
      KeyboardLayout layout = parse_layout(read_text_file(file));
      if (layout.language().code() != file.stem().string()) {
        throw DataError("header declares " + layout.language().code());
      }
      layouts.push_back(std::move(layout));
    } catch (const DataError& e) {
      throw DataError(file.filename().string() + ": " + e.what());
    }
  }
  LayoutRegistry registry(std::move(layouts));
  std::string missing;
  for (std::string_view code : kSupportedLanguages) {
    if (!registry.contains(LanguageId::parse(code))) {
      if (!missing.empty()) missing += ", ";
      missing += code;
    }
  }
  if (!missing.empty()) {
    throw DataError("missing layouts for: " + missing);
  }
  return registry;
}

}  // namespace multypo

#endif  // MULTYPO_LAYOUT_HPP_

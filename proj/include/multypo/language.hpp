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

#ifndef MULTYPO_LANGUAGE_HPP_
#define MULTYPO_LANGUAGE_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "multypo/error.hpp"

namespace multypo {

// `<iso639-3>_<Script>` identifiers of the languages that ship with a
// keyboard layout and an ignore set.
inline constexpr std::array<std::string_view, 12> kSupportedLanguages = {
    "ara_Arab", "ben_Beng", "deu_Latn", "ell_Grek", "eng_Latn", "fra_Latn",
    "heb_Hebr", "hin_Deva", "hye_Armn", "kat_Geor", "rus_Cyrl", "tam_Taml",
};

class LanguageId {
 public:
  static std::optional<LanguageId> from_code(std::string_view code) {
    auto it = std::find(kSupportedLanguages.begin(), kSupportedLanguages.end(),
                        code);
    if (it == kSupportedLanguages.end()) return std::nullopt;
    return LanguageId(*it);
  }

  // Throws UsageError for anything outside kSupportedLanguages.
  static LanguageId parse(std::string_view code) {
    if (auto id = from_code(code)) return *id;
    throw UsageError("unsupported language '" + std::string(code) + "'");
  }

  const std::string& code() const noexcept { return code_; }

  friend auto operator<=>(const LanguageId&, const LanguageId&) = default;

 private:
  explicit LanguageId(std::string_view code) : code_(code) {}

  std::string code_;
};

}  // namespace multypo

#endif  // MULTYPO_LANGUAGE_HPP_

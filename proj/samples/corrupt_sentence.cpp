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

// Corrupts one sentence at 40% and prints every applied typo.
//
//   corrupt_sentence [lang] [sentence]

#include <iostream>
#include <string>

#include "multypo/multypo.hpp"

int main(int argc, char** argv) {
  const std::string data_dir = MULTYPO_DATA_DIR;
  const auto registry = multypo::load_registry(data_dir + "/layouts");
  const auto ignore_sets = multypo::load_ignore_sets(data_dir + "/ignore");

  multypo::CorruptionConfig config;
  config.language = multypo::LanguageId::parse(argc > 1 ? argv[1] : "eng_Latn");
  config.rate = 0.4;
  config.seed = 2024;
  const std::string text =
      argc > 2 ? argv[2] : "Colorless green ideas smell furiously.";

  const auto result = multypo::corrupt(text, config, registry, ignore_sets);
  std::cout << text << "\n" << result.text << "\n";
  for (const auto& e : result.events) {
    std::cout << "  word " << e.word_index << " pos " << e.position << " "
              << multypo::to_string(e.op) << ": " << e.before << " -> "
              << e.after << "\n";
  }
  return 0;
}

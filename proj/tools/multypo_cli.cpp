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

// Command-line front end: `multypo corrupt` and `multypo validate`.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "multypo/multypo.hpp"

#ifndef MULTYPO_DEFAULT_DATA_DIR
#define MULTYPO_DEFAULT_DATA_DIR "data"
#endif

namespace {

using multypo::ExitCode;

struct DataDirs {
  std::string layouts = std::string(MULTYPO_DEFAULT_DATA_DIR) + "/layouts";
  std::string ignore = std::string(MULTYPO_DEFAULT_DATA_DIR) + "/ignore";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--layouts-dir", layouts, "Directory of *.layout files")
        ->envname("MULTYPO_LAYOUTS_DIR")
        ->capture_default_str();
    cmd->add_option("--ignore-dir", ignore, "Directory of *.ignore files")
        ->envname("MULTYPO_IGNORE_DIR")
        ->capture_default_str();
  }
};

struct CorruptArgs {
  std::string lang;
  double rate = -1.0;
  std::string level;
  std::uint64_t seed = 0;
  std::string mode = "multypo";
  std::string format = "plain";
  std::string field;
  std::string input = "-";
  std::string output = "-";
  std::string events_out;
  std::string report_out;
  int max_retries = multypo::kDefaultMaxRetries;
  unsigned jobs = 1;
  DataDirs dirs;
};

struct ValidateArgs {
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
  std::string lang = "eng_Latn";
  std::string sentence = "hi there";
  std::string events_in;
  std::string report_out;
  DataDirs dirs;
};

std::ostream& open_output(const std::string& path,
                          std::unique_ptr<std::ofstream>& holder) {
  if (path == "-") return std::cout;
  holder = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*holder) throw multypo::IoError("cannot write " + path);
  return *holder;
}

void write_json_file(const std::string& path, const multypo::OrderedJson& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw multypo::IoError("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw multypo::IoError("write error on " + path);
}

int run_corrupt(const CorruptArgs& args) {
  multypo::CorpusOptions options;
  options.config.language = multypo::LanguageId::parse(args.lang);
  if (!args.level.empty()) {
    if (args.rate >= 0.0) {
      throw multypo::UsageError("--rate and --level are mutually exclusive");
    }
    auto preset = multypo::preset_rate(args.level);
    if (!preset) throw multypo::UsageError("unknown level '" + args.level + "'");
    options.config.rate = *preset;
  } else {
    if (args.rate < 0.0) throw multypo::UsageError("--rate or --level required");
    options.config.rate = args.rate;
  }
  options.config.seed = args.seed;
  options.config.mode = *multypo::parse_mode(args.mode);
  options.config.max_retries = args.max_retries;
  options.format = *multypo::parse_format(args.format);
  options.field = args.field;
  options.jobs = args.jobs;

  const auto registry = multypo::load_registry(args.dirs.layouts);
  const auto ignore_sets = multypo::load_ignore_sets(args.dirs.ignore);

  std::unique_ptr<std::ifstream> in_file;
  std::istream* in = &std::cin;
  if (args.input != "-") {
    in_file = std::make_unique<std::ifstream>(args.input, std::ios::binary);
    if (!*in_file) throw multypo::IoError("cannot read " + args.input);
    in = in_file.get();
  }
  std::unique_ptr<std::ofstream> out_file;
  std::ostream& out = open_output(args.output, out_file);
  std::unique_ptr<std::ofstream> events_file;
  std::ostream* events = nullptr;
  if (!args.events_out.empty()) events = &open_output(args.events_out, events_file);

  const multypo::RunReport report = multypo::run_corpus(
      *in, out, events, options, registry.at(options.config.language),
      ignore_sets.at(options.config.language));
  out.flush();
  if (events != nullptr) events->flush();
  if (!out || (events != nullptr && !*events)) {
    throw multypo::IoError("write error");
  }
  if (args.report_out.empty()) {
    std::cerr << report.to_json().dump() << '\n';
  } else {
    write_json_file(args.report_out, report.to_json());
  }
  return 0;
}

int run_validate(const ValidateArgs& args) {
  const auto language = multypo::LanguageId::parse(args.lang);
  const auto registry = multypo::load_registry(args.dirs.layouts);
  const auto ignore_sets = multypo::load_ignore_sets(args.dirs.ignore);

  multypo::ValidationReport report =
      multypo::validate_operation_mix(args.samples, args.seed);
  for (std::size_t length : {2u, 3u, 4u, 10u}) {
    report.append(multypo::validate_position_distribution(
        length, args.samples, args.seed + length));
  }
  report.append(multypo::validate_word_length_bias(
      args.sentence, args.samples, args.seed, registry.at(language),
      ignore_sets.at(language)));
  if (!args.events_in.empty()) {
    report.append(
        multypo::validate_constraints(args.events_in, registry, ignore_sets));
  }
  std::cout << report.to_text();
  if (!args.report_out.empty()) write_json_file(args.report_out, report.to_json());
  return report.passed() ? 0 : static_cast<int>(ExitCode::kData);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Keyboard-aware multilingual typo injection"};
  app.require_subcommand(1);

  CorruptArgs corrupt;
  CLI::App* corrupt_cmd =
      app.add_subcommand("corrupt", "Inject typos into a corpus");
  corrupt_cmd->add_option("--lang", corrupt.lang, "Language id, e.g. eng_Latn")
      ->envname("MULTYPO_LANG")
      ->required();
  corrupt_cmd->add_option("--rate", corrupt.rate, "Typo rate in [0, 1]")
      ->envname("MULTYPO_RATE")
      ->check(CLI::Range(0.0, 1.0));
  corrupt_cmd
      ->add_option("--level", corrupt.level,
                   "Preset rate: 0|10|40|70 or clean|low|medium|high")
      ->envname("MULTYPO_LEVEL");
  corrupt_cmd->add_option("--seed", corrupt.seed, "Run seed")
      ->envname("MULTYPO_SEED");
  corrupt_cmd->add_option("--mode", corrupt.mode, "multypo or naive")
      ->envname("MULTYPO_MODE")
      ->check(CLI::IsMember({"multypo", "naive"}));
  corrupt_cmd->add_option("--format", corrupt.format, "plain or records")
      ->envname("MULTYPO_FORMAT")
      ->check(CLI::IsMember({"plain", "records"}));
  corrupt_cmd->add_option("--field", corrupt.field,
                          "Attribute to corrupt in records format")
      ->envname("MULTYPO_FIELD");
  corrupt_cmd->add_option("--input", corrupt.input, "Input path, - for stdin")
      ->envname("MULTYPO_INPUT");
  corrupt_cmd->add_option("--output", corrupt.output, "Output path, - for stdout")
      ->envname("MULTYPO_OUTPUT");
  corrupt_cmd->add_option("--events-out", corrupt.events_out, "Event log path")
      ->envname("MULTYPO_EVENTS_OUT");
  corrupt_cmd->add_option("--report-out", corrupt.report_out,
                          "Run report path (default: stderr)")
      ->envname("MULTYPO_REPORT_OUT");
  corrupt_cmd->add_option("--max-retries", corrupt.max_retries,
                          "Failed word selections allowed per document")
      ->envname("MULTYPO_MAX_RETRIES")
      ->check(CLI::PositiveNumber);
  corrupt_cmd->add_option("--jobs", corrupt.jobs, "Worker threads")
      ->envname("MULTYPO_JOBS")
      ->check(CLI::PositiveNumber);
  corrupt.dirs.add_to(corrupt_cmd);

  ValidateArgs validate;
  CLI::App* validate_cmd = app.add_subcommand(
      "validate", "Check sampling distributions and layout constraints");
  validate_cmd->add_option("--samples", validate.samples, "Draws per check")
      ->envname("MULTYPO_SAMPLES")
      ->capture_default_str();
  validate_cmd->add_option("--seed", validate.seed, "Seed")
      ->envname("MULTYPO_SEED");
  validate_cmd->add_option("--lang", validate.lang, "Language of the bias check")
      ->envname("MULTYPO_LANG")
      ->capture_default_str();
  validate_cmd->add_option("--sentence", validate.sentence,
                           "Sentence for the word-length bias check")
      ->capture_default_str();
  validate_cmd->add_option("--events-in", validate.events_in,
                           "Event log to audit")
      ->envname("MULTYPO_EVENTS_IN");
  validate_cmd->add_option("--report-out", validate.report_out,
                           "Structured report path")
      ->envname("MULTYPO_REPORT_OUT");
  validate.dirs.add_to(validate_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::kUsage);
  }

  try {
    if (corrupt_cmd->parsed()) return run_corrupt(corrupt);
    return run_validate(validate);
  } catch (const multypo::Error& e) {
    std::cerr << "multypo: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "multypo: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kData);
  }
}

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

#ifndef MULTYPO_EVENT_LOG_HPP_
#define MULTYPO_EVENT_LOG_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "multypo/engine.hpp"
#include "multypo/error.hpp"
#include "multypo/sampling.hpp"

namespace multypo {

using OrderedJson = nlohmann::ordered_json;

// One line of the event log: every typo applied to one document.
struct DocumentEvents {
  std::string doc_id;
  std::string language;
  double rate = 0.0;
  std::uint64_t seed = 0;
  Mode mode = Mode::kMulTypo;
  std::size_t requested = 0;
  std::size_t shortfall = 0;
  std::vector<TypoEvent> events;
};

inline OrderedJson to_json(const TypoEvent& event) {
  OrderedJson j;
  j["word_index"] = event.word_index;
  j["position"] = event.position;
  j["op"] = to_string(event.op);
  j["before"] = event.before;
  j["after"] = event.after;
  return j;
}

inline OrderedJson to_json(const DocumentEvents& doc) {
  OrderedJson j;
  j["doc_id"] = doc.doc_id;
  j["language"] = doc.language;
  j["rate"] = doc.rate;
  j["seed"] = doc.seed;
  j["mode"] = to_string(doc.mode);
  j["requested"] = doc.requested;
  j["shortfall"] = doc.shortfall;
  OrderedJson events = OrderedJson::array();
  for (const auto& e : doc.events) events.push_back(to_json(e));
  j["events"] = std::move(events);
  return j;
}

inline std::string to_log_line(const DocumentEvents& doc) {
  return to_json(doc).dump();
}

// Throws DataError naming the missing or mistyped attribute.
inline DocumentEvents parse_log_line(std::string_view line) {
  OrderedJson j = OrderedJson::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw DataError("event log entry is not a JSON object");
  }
  try {
    DocumentEvents doc;
    doc.doc_id = j.at("doc_id").get<std::string>();
    doc.language = j.at("language").get<std::string>();
    doc.rate = j.at("rate").get<double>();
    doc.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("mode")) {
      auto mode = parse_mode(j["mode"].get<std::string>());
      if (!mode) throw DataError("unknown mode");
      doc.mode = *mode;
    }
    doc.requested = j.value("requested", std::size_t{0});
    doc.shortfall = j.value("shortfall", std::size_t{0});
    for (const auto& e : j.at("events")) {
      TypoEvent event;
      event.word_index = e.at("word_index").get<std::size_t>();
      event.position = e.at("position").get<std::size_t>();
      auto op = parse_op(e.at("op").get<std::string>());
      if (!op) throw DataError("unknown op '" + e["op"].dump() + "'");
      event.op = *op;
      event.before = e.at("before").get<std::string>();
      event.after = e.at("after").get<std::string>();
      doc.events.push_back(std::move(event));
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed event log entry: ") + e.what());
  }
}

}  // namespace multypo

#endif  // MULTYPO_EVENT_LOG_HPP_

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

#ifndef MULTYPO_ERROR_HPP_
#define MULTYPO_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace multypo {

// Exit codes shared by every CLI subcommand.
enum class ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kData = 2,
  kIo = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

// Bad flags, out-of-range parameters, unsupported languages.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message)
      : Error(ExitCode::kUsage, message) {}
};

// Malformed layout / ignore-set / corpus content.
class DataError : public Error {
 public:
  explicit DataError(const std::string& message)
      : Error(ExitCode::kData, message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message)
      : Error(ExitCode::kIo, message) {}
};

}  // namespace multypo

#endif  // MULTYPO_ERROR_HPP_

// Copyright 2026 The clsasr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clsasr {

enum class ErrorCode {
  Argument,
  Decode,
  MalformedWord,
  MixedScript,
  InventoryGap,
  UnmappableChar,
  UnknownLabel,
  MalformedCls,
  MissingLid,
  AlreadyTagged,
  Io,
  Parse,
  UnknownId,
  UndefinedRate,
};

const char* to_string(ErrorCode code);

// Every fallible operation in the library throws this. `position` is a
// code-point (or token) offset when the error refers to a place in the
// input, and npos otherwise.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(ErrorCode code, const std::string& message, std::size_t position = npos)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::size_t position_;
};

}  // namespace clsasr

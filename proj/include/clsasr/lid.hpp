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

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "clsasr/script.hpp"

namespace clsasr {

// Surface form of language-identity tags. The template must contain
// "{lang}", which is replaced by the lower-case language name; the default
// "<{lang}" yields "<hindi", "<gujarati", ...
class LidFormat {
 public:
  static constexpr std::string_view kDefault = "<{lang}";

  // Throws Error{Argument} for a template without "{lang}" or with
  // whitespace.
  LidFormat() : pattern_(kDefault) {}
  explicit LidFormat(std::string tmpl);

  const std::string& pattern() const { return pattern_; }
  std::string surface(LanguageId lang) const;
  std::optional<LanguageId> parse(std::string_view token) const;

 private:
  std::string pattern_;
};

// The language of the leading tag, if the first whitespace-delimited token
// is one.
std::optional<LanguageId> leading_lid(std::string_view text,
                                      const LidFormat& format = LidFormat());

// surface + " " + transcript; just the surface for an empty transcript.
// Throws Error{AlreadyTagged}.
std::string inject_lid(LanguageId lang, std::string_view transcript,
                       const LidFormat& format = LidFormat());

// Splits off the leading tag and the single separator after it. Throws
// Error{MissingLid}.
std::pair<LanguageId, std::string> strip_lid(std::string_view tagged,
                                             const LidFormat& format = LidFormat());

}  // namespace clsasr

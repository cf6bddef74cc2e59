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

#include "clsasr/lid.hpp"

#include <cctype>

namespace clsasr {

namespace {

constexpr std::string_view kPlaceholder = "{lang}";

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

std::string_view first_token(std::string_view text, std::size_t* end = nullptr) {
  std::size_t b = 0;
  while (b < text.size() && is_space(text[b])) ++b;
  std::size_t e = b;
  while (e < text.size() && !is_space(text[e])) ++e;
  if (end) *end = e;
  return text.substr(b, e - b);
}

}  // namespace

LidFormat::LidFormat(std::string tmpl) : pattern_(std::move(tmpl)) {
  if (pattern_.find(kPlaceholder) == std::string::npos)
    throw Error(ErrorCode::Argument, "LID format '" + pattern_ + "' lacks {lang}");
  for (char c : pattern_)
    if (is_space(c))
      throw Error(ErrorCode::Argument, "LID format '" + pattern_ + "' contains whitespace");
}

std::string LidFormat::surface(LanguageId lang) const {
  std::string out = pattern_;
  const auto at = out.find(kPlaceholder);
  out.replace(at, kPlaceholder.size(), name(lang));
  return out;
}

std::optional<LanguageId> LidFormat::parse(std::string_view token) const {
  for (LanguageId l : kAllLanguages)
    if (token == surface(l)) return l;
  return std::nullopt;
}

std::optional<LanguageId> leading_lid(std::string_view text, const LidFormat& format) {
  return format.parse(first_token(text));
}

std::string inject_lid(LanguageId lang, std::string_view transcript,
                       const LidFormat& format) {
  if (const auto existing = leading_lid(transcript, format)) {
    throw Error(ErrorCode::AlreadyTagged,
                "transcript already carries " + format.surface(*existing));
  }
  std::string out = format.surface(lang);
  if (!transcript.empty()) {
    out += ' ';
    out += transcript;
  }
  return out;
}

std::pair<LanguageId, std::string> strip_lid(std::string_view tagged,
                                             const LidFormat& format) {
  std::size_t end = 0;
  const std::string_view token = first_token(tagged, &end);
  const auto lang = format.parse(token);
  if (!lang) {
    throw Error(ErrorCode::MissingLid,
                token.empty() ? std::string("empty text has no LID token")
                              : "'" + std::string(token) + "' is not a LID token");
  }
  std::string_view rest = tagged.substr(end);
  if (!rest.empty()) rest.remove_prefix(1);
  return {*lang, std::string(rest)};
}

}  // namespace clsasr

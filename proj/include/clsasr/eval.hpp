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
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clsasr/script.hpp"

namespace clsasr {

enum class EditOp { Match, Substitute, Delete, Insert };

struct AlignedPair {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  EditOp op;
  std::size_t ref = npos;  // npos for insertions
  std::size_t hyp = npos;  // npos for deletions
};

struct ErrorCounts {
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;
  std::size_t matches = 0;
  std::size_t ref_tokens = 0;

  std::size_t errors() const { return substitutions + deletions + insertions; }
  ErrorCounts& operator+=(const ErrorCounts& o);
  // errors / ref_tokens, nullopt when the reference is empty.
  std::optional<double> rate() const;

  friend bool operator==(const ErrorCounts&, const ErrorCounts&) = default;
};

struct Alignment {
  std::vector<AlignedPair> ops;
  ErrorCounts counts;
};

// Levenshtein alignment with unit costs. The backtrace prefers
// Match > Substitute > Delete > Insert among equal-cost moves.
Alignment edit_distance_alignment(std::span<const std::string> ref,
                                  std::span<const std::string> hyp);

struct ErrorRate {
  ErrorCounts counts;
  // Empty reference: 0 when the hypothesis is empty too, otherwise
  // undefined. Either way `flagged` is set.
  std::optional<double> rate;
  bool flagged = false;

  // Throws Error{UndefinedRate}.
  double value() const;
};

std::vector<std::string> word_tokens(std::string_view text);
// NFC code points without whitespace, each as its own token.
std::vector<std::string> char_tokens(std::string_view text);

ErrorRate wer(std::string_view ref, std::string_view hyp);
ErrorRate cer(std::string_view ref, std::string_view hyp);

enum class MissingPolicy { Deletion, Error };

struct ScoreOptions {
  MissingPolicy missing = MissingPolicy::Deletion;
  // NFC, ZW removal and punctuation stripping before word scoring.
  bool normalize = false;
};

struct CorpusScore {
  std::map<LanguageId, ErrorCounts> wer;
  std::map<LanguageId, ErrorCounts> cer;
  ErrorCounts overall_wer;
  ErrorCounts overall_cer;
  std::size_t missing = 0;
  std::size_t utterances = 0;
};

// Pooled counts: the rate is total errors over total reference tokens, per
// language and overall. Ids without a language count only in the overall
// figures. Throws Error{UnknownId} for a hypothesis without a reference (or
// a missing hypothesis under MissingPolicy::Error).
CorpusScore score_corpus(const std::map<std::string, std::string>& refs,
                         const std::map<std::string, std::string>& hyps,
                         const std::map<std::string, LanguageId>& langs,
                         const ScoreOptions& opts = {});

struct ReportRow {
  std::string system;
  std::vector<std::optional<double>> wer;  // percent, one per language column
  std::vector<std::optional<double>> cer;  // empty when not reported
};

struct EvalReport {
  std::vector<std::string> languages;
  std::vector<ReportRow> rows;
};

// Columns: one per language with data, then "All".
EvalReport make_report(const std::string& system, const CorpusScore& score,
                       bool include_cer);

// Appends rows of `other`, adding any new language columns at the end.
void merge_into(EvalReport& report, const EvalReport& other);

enum class ReportFormat { Text, Tsv };

// Percentages with one decimal, rounded half away from zero.
std::string format_percent(std::optional<double> value);

std::string render_report(const EvalReport& report, ReportFormat format);

// Reads the TSV written by render_report. Throws Error{Parse}.
EvalReport parse_report_tsv(std::istream& in);

}  // namespace clsasr

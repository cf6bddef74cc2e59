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

#include "clsasr/eval.hpp"

#include <unicode/uchar.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>

#include "clsasr/cls.hpp"
#include "clsasr/utf8.hpp"

namespace clsasr {

ErrorCounts& ErrorCounts::operator+=(const ErrorCounts& o) {
  substitutions += o.substitutions;
  deletions += o.deletions;
  insertions += o.insertions;
  matches += o.matches;
  ref_tokens += o.ref_tokens;
  return *this;
}

std::optional<double> ErrorCounts::rate() const {
  if (ref_tokens == 0) return std::nullopt;
  return static_cast<double>(errors()) / static_cast<double>(ref_tokens);
}

Alignment edit_distance_alignment(std::span<const std::string> ref,
                                  std::span<const std::string> hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  // cost[i][j] = distance between ref[0,i) and hyp[0,j)
  std::vector<std::size_t> cost((n + 1) * (m + 1));
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return cost[i * (m + 1) + j]; };
  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = i;
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t diag = at(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      at(i, j) = std::min({diag, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }

  Alignment a;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] && at(i, j) == at(i - 1, j - 1)) {
      a.ops.push_back({EditOp::Match, i - 1, j - 1});
      ++a.counts.matches;
      --i, --j;
    } else if (i > 0 && j > 0 && at(i, j) == at(i - 1, j - 1) + 1) {
      a.ops.push_back({EditOp::Substitute, i - 1, j - 1});
      ++a.counts.substitutions;
      --i, --j;
    } else if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      a.ops.push_back({EditOp::Delete, i - 1, AlignedPair::npos});
      ++a.counts.deletions;
      --i;
    } else {
      a.ops.push_back({EditOp::Insert, AlignedPair::npos, j - 1});
      ++a.counts.insertions;
      --j;
    }
  }
  std::reverse(a.ops.begin(), a.ops.end());
  a.counts.ref_tokens = n;
  return a;
}

double ErrorRate::value() const {
  if (!rate) throw Error(ErrorCode::UndefinedRate, "empty reference with a non-empty hypothesis");
  return *rate;
}

std::vector<std::string> word_tokens(std::string_view text) { return utf8::split_ws(text); }

std::vector<std::string> char_tokens(std::string_view text) {
  std::vector<std::string> out;
  for (char32_t cp : utf8::decode(normalize(text))) {
    if (u_isUWhiteSpace(static_cast<UChar32>(cp))) continue;
    std::string s;
    utf8::append(s, cp);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

ErrorRate rate_of(const std::vector<std::string>& ref, const std::vector<std::string>& hyp) {
  ErrorRate r;
  r.counts = edit_distance_alignment(ref, hyp).counts;
  if (ref.empty()) {
    r.flagged = true;
    if (hyp.empty()) r.rate = 0.0;
  } else {
    r.rate = r.counts.rate();
  }
  return r;
}

std::string clean_for_scoring(std::string_view text) {
  return utf8::join(clean_words(normalize(text)), " ");
}

}  // namespace

ErrorRate wer(std::string_view ref, std::string_view hyp) {
  return rate_of(word_tokens(ref), word_tokens(hyp));
}

ErrorRate cer(std::string_view ref, std::string_view hyp) {
  return rate_of(char_tokens(ref), char_tokens(hyp));
}

CorpusScore score_corpus(const std::map<std::string, std::string>& refs,
                         const std::map<std::string, std::string>& hyps,
                         const std::map<std::string, LanguageId>& langs,
                         const ScoreOptions& opts) {
  for (const auto& [id, text] : hyps)
    if (!refs.count(id)) throw Error(ErrorCode::UnknownId, "hypothesis id '" + id + "' has no reference");

  CorpusScore score;
  for (const auto& [id, ref_raw] : refs) {
    const auto hyp_it = hyps.find(id);
    if (hyp_it == hyps.end()) {
      if (opts.missing == MissingPolicy::Error)
        throw Error(ErrorCode::UnknownId, "no hypothesis for id '" + id + "'");
      ++score.missing;
    }
    const std::string ref = opts.normalize ? clean_for_scoring(ref_raw) : ref_raw;
    const std::string hyp = hyp_it == hyps.end()          ? std::string()
                            : opts.normalize ? clean_for_scoring(hyp_it->second)
                                             : hyp_it->second;

    const ErrorCounts w = edit_distance_alignment(word_tokens(ref), word_tokens(hyp)).counts;
    const ErrorCounts c = edit_distance_alignment(char_tokens(ref), char_tokens(hyp)).counts;
    score.overall_wer += w;
    score.overall_cer += c;
    if (const auto l = langs.find(id); l != langs.end()) {
      score.wer[l->second] += w;
      score.cer[l->second] += c;
    }
    ++score.utterances;
  }
  return score;
}

namespace {

std::optional<double> percent(const ErrorCounts& c) {
  const auto r = c.rate();
  if (!r) return std::nullopt;
  return *r * 100.0;
}

}  // namespace

EvalReport make_report(const std::string& system, const CorpusScore& score, bool include_cer) {
  EvalReport report;
  ReportRow row{system, {}, {}};
  for (const auto& [lang, counts] : score.wer) {
    report.languages.push_back(display_name(lang));
    row.wer.push_back(percent(counts));
    if (include_cer) row.cer.push_back(percent(score.cer.at(lang)));
  }
  report.languages.push_back("All");
  row.wer.push_back(percent(score.overall_wer));
  if (include_cer) row.cer.push_back(percent(score.overall_cer));
  report.rows.push_back(std::move(row));
  return report;
}

void merge_into(EvalReport& report, const EvalReport& other) {
  for (const auto& lang : other.languages) {
    if (std::find(report.languages.begin(), report.languages.end(), lang) == report.languages.end()) {
      report.languages.push_back(lang);
      for (auto& row : report.rows) {
        row.wer.emplace_back();
        if (!row.cer.empty()) row.cer.emplace_back();
      }
    }
  }
  for (const auto& src : other.rows) {
    ReportRow row{src.system, std::vector<std::optional<double>>(report.languages.size()), {}};
    if (!src.cer.empty()) row.cer.resize(report.languages.size());
    for (std::size_t k = 0; k < other.languages.size(); ++k) {
      const auto col = static_cast<std::size_t>(
          std::find(report.languages.begin(), report.languages.end(), other.languages[k]) -
          report.languages.begin());
      row.wer[col] = src.wer[k];
      if (!src.cer.empty()) row.cer[col] = src.cer[k];
    }
    report.rows.push_back(std::move(row));
  }
}

std::string format_percent(std::optional<double> value) {
  if (!value) return "n/a";
  // Tolerance absorbs binary representation error so 23.45 prints 23.5.
  const double scaled = std::floor(std::fabs(*value) * 10.0 + 0.5 + 1e-9);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%.1f", *value < 0 && scaled > 0 ? "-" : "", scaled / 10.0);
  return buf;
}

std::string render_report(const EvalReport& report, ReportFormat format) {
  const bool with_metric =
      std::any_of(report.rows.begin(), report.rows.end(), [](const ReportRow& r) { return !r.cer.empty(); });

  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header{"System"};
  if (with_metric) header.push_back("Metric");
  header.insert(header.end(), report.languages.begin(), report.languages.end());
  table.push_back(header);
  for (const auto& row : report.rows) {
    auto emit = [&](const std::vector<std::optional<double>>& values, const char* metric) {
      std::vector<std::string> cells{row.system};
      if (with_metric) cells.push_back(metric);
      for (std::size_t k = 0; k < report.languages.size(); ++k)
        cells.push_back(format_percent(k < values.size() ? values[k] : std::nullopt));
      table.push_back(std::move(cells));
    };
    emit(row.wer, "WER");
    if (!row.cer.empty()) emit(row.cer, "CER");
  }

  std::ostringstream out;
  if (format == ReportFormat::Tsv) {
    for (const auto& cells : table) out << utf8::join(cells, "\t") << '\n';
    return out.str();
  }

  auto width = [](const std::string& s) { return utf8::decode(s).size(); };
  std::vector<std::size_t> widths(table.front().size(), 0);
  for (const auto& cells : table)
    for (std::size_t k = 0; k < cells.size(); ++k) widths[k] = std::max(widths[k], width(cells[k]));
  const std::size_t text_cols = with_metric ? 2 : 1;
  for (std::size_t r = 0; r < table.size(); ++r) {
    std::string line;
    for (std::size_t k = 0; k < table[r].size(); ++k) {
      const std::string& cell = table[r][k];
      const std::string pad(widths[k] - width(cell), ' ');
      if (k) line += "  ";
      line += k < text_cols ? cell + pad : pad + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
    if (r == 0) {
      std::string rule;
      for (std::size_t k = 0; k < widths.size(); ++k) {
        if (k) rule += "  ";
        rule += std::string(widths[k], '-');
      }
      out << rule << '\n';
    }
  }
  return out.str();
}

EvalReport parse_report_tsv(std::istream& in) {
  EvalReport report;
  std::string line;
  std::size_t line_no = 0;
  bool with_metric = false;
  bool have_header = false;
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, '\t')) out.push_back(cell);
    if (!s.empty() && s.back() == '\t') out.emplace_back();
    return out;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (utf8::trim(line).empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::Parse, "report line " + std::to_string(line_no) + ": " + why);
    };
    const auto cells = split(line);
    if (!have_header) {
      if (cells.empty() || cells[0] != "System") throw fail("expected a 'System' header");
      with_metric = cells.size() > 1 && cells[1] == "Metric";
      report.languages.assign(cells.begin() + (with_metric ? 2 : 1), cells.end());
      have_header = true;
      continue;
    }
    const std::size_t first = with_metric ? 2 : 1;
    if (cells.size() != first + report.languages.size()) throw fail("wrong number of columns");
    std::vector<std::optional<double>> values;
    for (std::size_t k = first; k < cells.size(); ++k) {
      if (cells[k] == "n/a" || cells[k].empty()) {
        values.emplace_back();
        continue;
      }
      try {
        std::size_t used = 0;
        values.emplace_back(std::stod(cells[k], &used));
        if (used != cells[k].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw fail("bad value '" + cells[k] + "'");
      }
    }
    const std::string metric = with_metric ? cells[1] : "WER";
    if (metric == "WER") {
      report.rows.push_back({cells[0], std::move(values), {}});
    } else if (metric == "CER") {
      if (report.rows.empty() || report.rows.back().system != cells[0])
        throw fail("CER row without a preceding WER row for '" + cells[0] + "'");
      report.rows.back().cer = std::move(values);
    } else {
      throw fail("unknown metric '" + metric + "'");
    }
  }
  if (in.bad()) throw Error(ErrorCode::Io, "report read failed");
  return report;
}

}  // namespace clsasr

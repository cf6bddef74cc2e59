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

// Command-line front end. Talks to the library only through clsasr.h.
//
// Exit codes: 0 ok, 1 usage, 2 data error, 3 internal error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "clsasr/clsasr.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

// Carries an exit code out of a subcommand.
struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(clsasr_status s) {
  switch (s) {
    case CLSASR_OK: return kExitOk;
    case CLSASR_E_ARGUMENT: return kExitUsage;
    case CLSASR_E_INTERNAL: return kExitInternal;
    default: return kExitData;
  }
}

void check(clsasr_status s, const std::string& where = {}) {
  if (s == CLSASR_OK) return;
  std::string msg = std::string(clsasr_status_name(s)) + ": " + clsasr_last_error();
  if (!where.empty()) msg = where + ": " + msg;
  throw Failure{exit_code_for(s), msg};
}

struct CString {
  char* p = nullptr;
  ~CString() { clsasr_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct ContextDeleter {
  void operator()(clsasr_context* c) const { clsasr_context_free(c); }
};
using Context = std::unique_ptr<clsasr_context, ContextDeleter>;

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return slurp(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitData, "cannot open " + path};
  return slurp(in);
}

// Writes to `path`, or stdout for "" / "-".
void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{kExitData, "cannot write " + path};
}

int language(const std::string& name) {
  const int l = clsasr_language_from_name(name.c_str());
  if (l < 0) throw Failure{kExitUsage, "unknown language '" + name + "'"};
  return l;
}

int script(const std::string& name) {
  const int s = clsasr_script_from_name(name.c_str());
  if (s < 0) throw Failure{kExitUsage, "unknown script '" + name + "'"};
  return s;
}

struct Globals {
  std::string lang;
  bool lenient = false;
  std::string lid_format;
  std::string data_dir;
};

Context make_context(const Globals& g) {
  clsasr_context* raw = nullptr;
  check(clsasr_context_new(g.data_dir.empty() ? nullptr : g.data_dir.c_str(), &raw), "data");
  Context ctx(raw);
  if (!g.lid_format.empty()) check(clsasr_context_set_lid_format(ctx.get(), g.lid_format.c_str()), "--lid-format");
  check(clsasr_context_set_strict(ctx.get(), g.lenient ? 0 : 1));
  return ctx;
}

int require_lang(const Globals& g) {
  if (g.lang.empty()) throw Failure{kExitUsage, "--lang is required"};
  return language(g.lang);
}

// Applies `fn` to every line of the input, keeping line structure.
template <typename F>
std::string map_lines(const std::string& input, F&& fn) {
  std::istringstream in(input);
  std::string line, out;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out += fn(line, line_no);
    out += '\n';
  }
  return out;
}

std::string line_tag(std::size_t line_no) { return "line " + std::to_string(line_no); }

void report_warnings(std::size_t warnings) {
  if (warnings) std::cerr << "clsasr: " << warnings << " warning(s)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Common-label text tools for Indic ASR corpora"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(clsasr_version()));

  Globals g;
  app.add_option("--lang", g.lang, "Language: hindi, marathi, gujarati, bengali, odia");
  auto* strict_flag = app.add_flag("--strict", "Fail on the first bad word (default)");
  app.add_flag("--lenient", g.lenient, "Drop bad words and count them as warnings")->excludes(strict_flag);
  app.add_option("--lid-format", g.lid_format, "LID token template, default \"<{lang}\"");
  app.add_option("--data-dir", g.data_dir, "Directory with categories/inventory/schwa_rules TSVs");

  std::string input, output;
  bool no_schwa = false, no_geminate = false;

  auto* detect = app.add_subcommand("detect", "Report the script of each input line");
  detect->add_option("input", input, "Input file (default stdin)");

  auto* to_cls = app.add_subcommand("to-cls", "Native text to common labels, line by line");
  to_cls->add_option("input", input, "Input file (default stdin)");
  to_cls->add_flag("--no-schwa", no_schwa, "Keep every inherent vowel");
  to_cls->add_flag("--no-geminate", no_geminate, "Keep doubled consonants as two labels");

  bool unified = false, fuzzy = false;
  std::vector<std::string> lexicons;
  auto* to_ns = app.add_subcommand("to-ns", "Common labels to native text, line by line");
  to_ns->add_option("input", input, "Input file (default stdin)");
  to_ns->add_flag("--unified", unified, "Read the language from each line's LID token");
  to_ns->add_option("--lexicon", lexicons, "Lexicon TSV, as PATH (for --lang) or LANG=PATH")->take_all();
  to_ns->add_flag("--fuzzy", fuzzy, "Correct unknown words one label away from a lexicon key");
  to_ns->add_flag("--no-schwa", no_schwa, "Labels were produced without schwa deletion");
  to_ns->add_flag("--no-geminate", no_geminate, "Labels were produced without geminate merging");

  std::string from, to;
  auto* translit = app.add_subcommand("translit", "Offset transliteration between scripts");
  translit->add_option("input", input, "Input file (default stdin)");
  translit->add_option("--from", from, "Source script")->required();
  translit->add_option("--to", to, "Target script")->required();

  std::string manifest, flavor = "cls", report_path;
  auto* prep = app.add_subcommand("prep", "Build training targets from a manifest");
  prep->add_option("manifest", manifest, "Manifest TSV (default stdin)");
  prep->add_option("--flavor", flavor, "native, native-lid, cls or cls-lid")->capture_default_str();
  prep->add_option("--out", output, "Target TSV (default stdout)");
  prep->add_option("--report", report_path, "Error/warning report (default stderr)");

  auto* lexicon = app.add_subcommand("lexicon", "Lexicon tools");
  lexicon->require_subcommand(1);
  std::vector<std::string> corpora;
  auto* lex_build = lexicon->add_subcommand("build", "Count native spellings per label key");
  lex_build->add_option("corpus", corpora, "Native-script text files (default stdin)");
  lex_build->add_option("--out", output, "Lexicon TSV (default stdout)");
  lex_build->add_flag("--no-schwa", no_schwa, "Key without schwa deletion");
  lex_build->add_flag("--no-geminate", no_geminate, "Key without geminate merging");

  std::string ref, hyp, lang_map, system = "system", missing = "deletion";
  bool normalize_text = false, with_cer = false;
  auto* score = app.add_subcommand("score", "WER/CER of hypotheses against references");
  score->add_option("--ref", ref, "Reference TSV (id<TAB>text)")->required();
  score->add_option("--hyp", hyp, "Hypothesis TSV (id<TAB>text)")->required();
  score->add_option("--langs", lang_map, "Language map (id<TAB>lang) or a manifest");
  score->add_option("--system", system, "Row label")->capture_default_str();
  score->add_option("--missing", missing, "Missing hypotheses: deletion or error")
      ->check(CLI::IsMember({"deletion", "error"}))
      ->capture_default_str();
  score->add_flag("--normalize", normalize_text, "NFC and strip punctuation before scoring");
  score->add_flag("--cer", with_cer, "Add CER rows");
  score->add_option("--out", output, "Also write the report TSV here");

  auto* stats = app.add_subcommand("stats", "Hours and utterances per language");
  stats->add_option("manifest", manifest, "Manifest TSV (default stdin)");

  std::vector<std::string> reports;
  std::string format = "text";
  auto* report = app.add_subcommand("report", "Merge and render report TSVs");
  report->add_option("reports", reports, "Report TSVs from score")->required();
  report->add_option("--format", format, "text or tsv")
      ->check(CLI::IsMember({"text", "tsv"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  const unsigned conv_flags = (no_schwa ? CLSASR_NO_SCHWA_DELETION : 0u) |
                              (no_geminate ? CLSASR_NO_GEMINATE : 0u);
  try {
    if (detect->parsed()) {
      const std::string text = read_input(input);
      write_output("", map_lines(text, [](const std::string& line, std::size_t n) {
        clsasr_detection d{};
        check(clsasr_detect(line.c_str(), &d), line_tag(n));
        if (d.kind == 0) return std::string(clsasr_script_name(d.script));
        if (d.kind == 2) return std::string("none");
        std::string out = "mixed";
        for (int s = 0; s < 4; ++s)
          if (d.counts[s]) out += " " + std::string(clsasr_script_name(s)) + ":" + std::to_string(d.counts[s]);
        return out;
      }));
    } else if (to_cls->parsed()) {
      Context ctx = make_context(g);
      const int lang = require_lang(g);
      std::size_t warnings = 0;
      const std::string text = read_input(input);
      write_output("", map_lines(text, [&](const std::string& line, std::size_t n) {
        CString out;
        std::size_t dropped = 0;
        check(clsasr_to_cls(ctx.get(), line.c_str(), lang, conv_flags, &out.p, &dropped), line_tag(n));
        warnings += dropped;
        return out.str();
      }));
      report_warnings(warnings);
    } else if (to_ns->parsed()) {
      Context ctx = make_context(g);
      if (unified == !g.lang.empty())
        throw Failure{kExitUsage, "give exactly one of --lang and --unified"};
      const int lang = unified ? CLSASR_LANG_UNIFIED : language(g.lang);
      for (const std::string& spec : lexicons) {
        const auto eq = spec.find('=');
        int lex_lang = lang;
        std::string path = spec;
        if (eq != std::string::npos) {
          lex_lang = language(spec.substr(0, eq));
          path = spec.substr(eq + 1);
        } else if (unified) {
          throw Failure{kExitUsage, "with --unified, give lexicons as LANG=PATH"};
        }
        check(clsasr_context_load_lexicon(ctx.get(), lex_lang, read_input(path).c_str(), 1), path);
      }
      const unsigned flags = conv_flags | (fuzzy ? CLSASR_FUZZY : 0u);
      std::size_t warnings = 0, ambiguous = 0;
      const std::string text = read_input(input);
      write_output("", map_lines(text, [&](const std::string& line, std::size_t n) {
        CString out;
        clsasr_ns_counts counts{};
        check(clsasr_to_ns(ctx.get(), line.c_str(), lang, flags, &out.p, &counts), line_tag(n));
        warnings += counts.dropped;
        ambiguous += counts.ambiguous;
        return out.str();
      }));
      if (ambiguous) std::cerr << "clsasr: " << ambiguous << " word(s) from ambiguous rule fallback\n";
      report_warnings(warnings);
    } else if (translit->parsed()) {
      Context ctx = make_context(g);
      const int a = script(from), b = script(to);
      const std::string text = read_input(input);
      write_output("", map_lines(text, [&](const std::string& line, std::size_t n) {
        CString out;
        check(clsasr_transliterate(ctx.get(), line.c_str(), a, b, &out.p), line_tag(n));
        return out.str();
      }));
    } else if (prep->parsed()) {
      Context ctx = make_context(g);
      const int f = clsasr_flavor_from_name(flavor.c_str());
      if (f < 0) throw Failure{kExitUsage, "unknown flavor '" + flavor + "'"};
      CString targets, rep;
      clsasr_prep_counts counts{};
      check(clsasr_prep(ctx.get(), read_input(manifest).c_str(), f, &targets.p, &rep.p, &counts), "manifest");
      write_output(output, targets.str());
      if (report_path.empty()) std::cerr << rep.str();
      else write_output(report_path, rep.str());
      std::cerr << "clsasr: " << counts.targets << " target(s), " << counts.errors << " error(s), "
                << counts.warnings << " warning(s)\n";
    } else if (lex_build->parsed()) {
      Context ctx = make_context(g);
      clsasr_lexicon_builder* raw = nullptr;
      check(clsasr_lexicon_builder_new(ctx.get(), require_lang(g), conv_flags, &raw));
      std::unique_ptr<clsasr_lexicon_builder, void (*)(clsasr_lexicon_builder*)> b(raw, clsasr_lexicon_builder_free);
      if (corpora.empty()) corpora.emplace_back("-");
      for (const std::string& path : corpora) check(clsasr_lexicon_builder_add(b.get(), read_input(path).c_str()), path);
      CString tsv;
      check(clsasr_lexicon_builder_tsv(b.get(), &tsv.p));
      write_output(output, tsv.str());
      std::size_t words = 0, skipped = 0, entries = 0;
      check(clsasr_lexicon_builder_counts(b.get(), &words, &skipped, &entries));
      std::cerr << "clsasr: " << entries << " key(s) from " << words << " word(s), " << skipped << " skipped\n";
    } else if (score->parsed()) {
      std::string langs;
      if (!lang_map.empty()) {
        // A manifest works too: keep its first two columns.
        const std::string raw = read_input(lang_map);
        std::istringstream in(raw);
        std::string line;
        while (std::getline(in, line)) {
          const auto t1 = line.find('\t');
          const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
          langs += line.substr(0, t2) + '\n';
        }
      }
      const unsigned flags = (normalize_text ? CLSASR_SCORE_NORMALIZE : 0u) |
                             (missing == "error" ? CLSASR_SCORE_MISSING_IS_ERROR : 0u) |
                             (with_cer ? CLSASR_SCORE_CER : 0u);
      CString tsv, text;
      clsasr_counts overall{};
      check(clsasr_score(read_input(ref).c_str(), read_input(hyp).c_str(),
                         lang_map.empty() ? nullptr : langs.c_str(), system.c_str(), flags, &tsv.p,
                         &overall));
      const char* one[] = {tsv.p};
      check(clsasr_report_render(one, 1, 0, &text.p));
      write_output("", text.str());
      if (!output.empty()) write_output(output, tsv.str());
    } else if (stats->parsed()) {
      CString table, rep;
      clsasr_stats s{};
      check(clsasr_corpus_stats(read_input(manifest).c_str(), &s, &table.p, &rep.p), "manifest");
      write_output("", table.str());
      std::cerr << rep.str();
      if (s.errors) std::cerr << "clsasr: " << s.errors << " record(s) skipped\n";
    } else if (report->parsed()) {
      std::vector<std::string> texts;
      for (const std::string& path : reports) texts.push_back(read_input(path));
      std::vector<const char*> ptrs;
      for (const std::string& t : texts) ptrs.push_back(t.c_str());
      CString out;
      check(clsasr_report_render(ptrs.data(), ptrs.size(), format == "tsv" ? 1 : 0, &out.p));
      write_output("", out.str());
    }
  } catch (const Failure& f) {
    std::cerr << "clsasr: " << f.message << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "clsasr: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

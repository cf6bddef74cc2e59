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

#include "clsasr/clsasr.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <memory>
#include <new>
#include <sstream>

#include "clsasr/corpus.hpp"
#include "clsasr/eval.hpp"
#include "clsasr/ns.hpp"
#include "clsasr/utf8.hpp"

using namespace clsasr;

struct clsasr_context {
  ClsConverter converter;
  LidFormat lid;
  bool strict = true;
  LexiconSet lexicons;
};

struct clsasr_lexicon_builder {
  const ClsConverter* converter;
  ConversionOptions opts;
  Lexicon lexicon;
  std::size_t words = 0;
  std::size_t skipped = 0;
};

namespace {

thread_local std::string g_last_error;

clsasr_status status_of(ErrorCode code) {
  return static_cast<clsasr_status>(static_cast<int>(code) + 1);
}

clsasr_status fail(clsasr_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, turning exceptions into status codes.
template <typename F>
clsasr_status guarded(F&& body) {
  try {
    body();
    return CLSASR_OK;
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CLSASR_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CLSASR_E_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size());
  p[s.size()] = '\0';
  return p;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::Argument, what);
}

LanguageId language_arg(int lang) {
  require(lang >= 0 && lang < static_cast<int>(kAllLanguages.size()), "language out of range");
  return kAllLanguages[static_cast<std::size_t>(lang)];
}

ScriptId script_arg(int script) {
  require(script >= 0 && script < static_cast<int>(kAllScripts.size()), "script out of range");
  return kAllScripts[static_cast<std::size_t>(script)];
}

ConversionOptions conversion(unsigned flags) {
  ConversionOptions o;
  o.schwa = !(flags & CLSASR_NO_SCHWA_DELETION);
  o.geminate = !(flags & CLSASR_NO_GEMINATE);
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// id<TAB>text lines. A line without a tab is an id with empty text.
std::map<std::string, std::string> read_id_map(std::string_view text, const char* what) {
  std::map<std::string, std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (utf8::trim(line).empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    std::string id(utf8::trim(line.substr(0, tab)));
    std::string value = tab == std::string::npos ? std::string() : line.substr(tab + 1);
    if (id.empty())
      throw Error(ErrorCode::Parse, std::string(what) + " line " + std::to_string(line_no) + ": empty id");
    if (!out.emplace(id, std::move(value)).second)
      throw Error(ErrorCode::Parse, std::string(what) + " line " + std::to_string(line_no) +
                                        ": duplicate id '" + id + "'");
  }
  return out;
}

void copy_counts(const ErrorCounts& c, clsasr_counts* out) {
  if (!out) return;
  out->substitutions = c.substitutions;
  out->deletions = c.deletions;
  out->insertions = c.insertions;
  out->matches = c.matches;
  out->ref_tokens = c.ref_tokens;
}

clsasr_status rate_call(ErrorRate (*metric)(std::string_view, std::string_view), const char* ref,
                        const char* hyp, double* rate, clsasr_counts* counts, int* flagged) {
  return guarded([&] {
    require(ref && hyp, "null text");
    const ErrorRate r = metric(ref, hyp);
    if (rate) *rate = r.rate ? *r.rate : std::numeric_limits<double>::quiet_NaN();
    copy_counts(r.counts, counts);
    if (flagged) *flagged = r.flagged ? 1 : 0;
  });
}

}  // namespace

extern "C" {

const char* clsasr_version(void) { return "0.1.0"; }

const char* clsasr_status_name(int status) {
  if (status == CLSASR_OK) return "Ok";
  if (status == CLSASR_E_INTERNAL) return "Internal";
  if (status > 0 && status < CLSASR_E_INTERNAL) return to_string(static_cast<ErrorCode>(status - 1));
  return "Unknown";
}

const char* clsasr_last_error(void) { return g_last_error.c_str(); }

void clsasr_string_free(char* s) { std::free(s); }

int clsasr_language_from_name(const char* name) {
  if (!name) return -1;
  const auto l = parse_language(name);
  return l ? static_cast<int>(index_of(*l)) : -1;
}

const char* clsasr_language_name(int lang) {
  if (lang < 0 || lang >= static_cast<int>(kAllLanguages.size())) return nullptr;
  return name(kAllLanguages[static_cast<std::size_t>(lang)]).data();
}

int clsasr_script_from_name(const char* name) {
  if (!name) return -1;
  const auto s = parse_script(name);
  return s ? static_cast<int>(index_of(*s)) : -1;
}

const char* clsasr_script_name(int script) {
  if (script < 0 || script >= static_cast<int>(kAllScripts.size())) return nullptr;
  return name(kAllScripts[static_cast<std::size_t>(script)]).data();
}

int clsasr_flavor_from_name(const char* name) {
  if (!name) return -1;
  const auto f = parse_flavor(name);
  return f ? static_cast<int>(*f) : -1;
}

clsasr_status clsasr_context_new(const char* data_dir, clsasr_context** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = nullptr;
    std::unique_ptr<clsasr_context> ctx;
    if (data_dir) {
      const std::string dir(data_dir);
      CategoryTable categories = CategoryTable::parse(read_file(dir + "/categories.tsv"));
      ClsInventory inventory = ClsInventory::parse(read_file(dir + "/inventory.tsv"), categories);
      SchwaRules rules = SchwaRules::parse(read_file(dir + "/schwa_rules.tsv"));
      ctx.reset(new clsasr_context{
          ClsConverter(std::move(categories), std::move(inventory), std::move(rules)), {}, true, {}});
    } else {
      ctx.reset(new clsasr_context{ClsConverter(), {}, true, {}});
    }
    *out = ctx.release();
  });
}

void clsasr_context_free(clsasr_context* ctx) { delete ctx; }

clsasr_status clsasr_context_set_lid_format(clsasr_context* ctx, const char* format) {
  return guarded([&] {
    require(ctx && format, "null argument");
    ctx->lid = LidFormat(format);
  });
}

clsasr_status clsasr_context_set_strict(clsasr_context* ctx, int strict) {
  return guarded([&] {
    require(ctx != nullptr, "null context");
    ctx->strict = strict != 0;
  });
}

clsasr_status clsasr_context_load_lexicon(clsasr_context* ctx, int lang, const char* tsv,
                                          int validate) {
  return guarded([&] {
    require(ctx && tsv, "null argument");
    const LanguageId l = language_arg(lang);
    std::istringstream in{std::string(tsv)};
    Lexicon lex = Lexicon::read(in, l, validate ? &ctx->converter : nullptr);
    ctx->lexicons.insert_or_assign(l, std::move(lex));
  });
}

clsasr_status clsasr_normalize(const char* text, char** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = dup(normalize(text));
  });
}

clsasr_status clsasr_detect(const char* text, clsasr_detection* out) {
  return guarded([&] {
    require(text && out, "null argument");
    const DetectionResult r = detect_script(normalize(text));
    out->kind = r.kind == DetectionResult::Kind::Single  ? 0
                : r.kind == DetectionResult::Kind::Mixed ? 1
                                                         : 2;
    out->script = r.kind == DetectionResult::Kind::Single ? static_cast<int>(index_of(r.script)) : -1;
    for (std::size_t i = 0; i < 4; ++i) out->counts[i] = r.counts[i];
  });
}

clsasr_status clsasr_transliterate(const clsasr_context* ctx, const char* text, int from_script,
                                   int to_script, char** out) {
  return guarded([&] {
    require(ctx && text && out, "null argument");
    *out = dup(transliterate_offset(normalize(text), script_arg(from_script), script_arg(to_script),
                                    ctx->converter.categories()));
  });
}

clsasr_status clsasr_to_cls(const clsasr_context* ctx, const char* text, int lang, unsigned flags,
                            char** out, size_t* dropped) {
  return guarded([&] {
    require(ctx && text && out, "null argument");
    TextOptions opts;
    opts.word = conversion(flags);
    opts.strict = ctx->strict;
    TextConversion r = ctx->converter.text_to_cls(text, language_arg(lang), opts);
    if (dropped) *dropped = r.errors.size();
    *out = dup(r.text);
  });
}

clsasr_status clsasr_to_ns(const clsasr_context* ctx, const char* text, int lang, unsigned flags,
                           char** out, clsasr_ns_counts* counts) {
  return guarded([&] {
    require(ctx && text && out, "null argument");
    const NsMode mode = lang == CLSASR_LANG_UNIFIED ? NsMode::unified() : NsMode::mono(language_arg(lang));
    NsOptions opts;
    opts.forward = conversion(flags);
    opts.fuzzy = (flags & CLSASR_FUZZY) != 0;
    opts.strict = ctx->strict;
    opts.lid = ctx->lid;
    const NsResult r = cls_text_to_ns(text, mode, ctx->lexicons, ctx->converter, opts);
    if (counts) {
      *counts = {};
      for (NsFlag f : r.flags) {
        if (f == NsFlag::Exact) ++counts->exact;
        else if (f == NsFlag::LexiconHit) ++counts->lexicon_hits;
        else ++counts->ambiguous;
      }
      counts->dropped = r.errors.size();
      counts->language = r.language ? static_cast<int>(index_of(*r.language)) : -1;
    }
    *out = dup(r.text);
  });
}

clsasr_status clsasr_lexicon_builder_new(const clsasr_context* ctx, int lang, unsigned flags,
                                         clsasr_lexicon_builder** out) {
  return guarded([&] {
    require(ctx && out, "null argument");
    *out = new clsasr_lexicon_builder{&ctx->converter, conversion(flags), Lexicon(language_arg(lang)), 0, 0};
  });
}

void clsasr_lexicon_builder_free(clsasr_lexicon_builder* b) { delete b; }

clsasr_status clsasr_lexicon_builder_add(clsasr_lexicon_builder* b, const char* text) {
  return guarded([&] {
    require(b && text, "null argument");
    std::istringstream in{std::string(text)};
    LexiconBuild part = build_lexicon(in, b->lexicon.language(), *b->converter, b->opts);
    for (const auto& [key, candidates] : part.lexicon.entries())
      for (const auto& c : candidates) b->lexicon.add(key, c.native, c.count);
    b->words += part.words;
    b->skipped += part.skipped;
  });
}

clsasr_status clsasr_lexicon_builder_counts(const clsasr_lexicon_builder* b, size_t* words,
                                            size_t* skipped, size_t* entries) {
  return guarded([&] {
    require(b != nullptr, "null builder");
    if (words) *words = b->words;
    if (skipped) *skipped = b->skipped;
    if (entries) *entries = b->lexicon.size();
  });
}

clsasr_status clsasr_lexicon_builder_tsv(const clsasr_lexicon_builder* b, char** out) {
  return guarded([&] {
    require(b && out, "null argument");
    std::ostringstream ss;
    b->lexicon.write(ss);
    *out = dup(ss.str());
  });
}

clsasr_status clsasr_prep(const clsasr_context* ctx, const char* manifest, int flavor,
                          char** targets, char** report, clsasr_prep_counts* counts) {
  return guarded([&] {
    require(ctx && manifest && targets && report, "null argument");
    require(flavor >= 0 && flavor <= CLSASR_FLAVOR_CLS_LID, "flavor out of range");
    const Manifest m = parse_manifest(std::string_view(manifest));
    PrepOptions opts;
    opts.text.strict = ctx->strict;
    opts.lid = ctx->lid;
    const PrepResult r = prep_corpus(m, static_cast<TargetFlavor>(flavor), ctx->converter, opts);
    std::ostringstream t, e;
    write_targets(t, r);
    write_report(e, r.errors);
    write_report(e, r.warnings);
    if (counts) *counts = {m.utterances.size(), r.targets.size(), r.errors.size(), r.warnings.size()};
    std::unique_ptr<char, decltype(&std::free)> tp(dup(t.str()), &std::free);
    *report = dup(e.str());
    *targets = tp.release();
  });
}

clsasr_status clsasr_corpus_stats(const char* manifest, clsasr_stats* out, char** table,
                                  char** report) {
  return guarded([&] {
    require(manifest && out, "null argument");
    const CorpusStats s = corpus_stats(parse_manifest(std::string_view(manifest)));
    *out = {};
    for (std::size_t i = 0; i < 5; ++i) {
      out->duration_ms[i] = s.per_language[i].duration_ms;
      out->utterances[i] = s.per_language[i].utterances;
    }
    out->total_duration_ms = s.total.duration_ms;
    out->total_utterances = s.total.utterances;
    out->errors = s.errors.size();
    std::unique_ptr<char, decltype(&std::free)> tp(table ? dup(render_stats(s)) : nullptr, &std::free);
    if (report) {
      std::ostringstream e;
      write_report(e, s.errors);
      *report = dup(e.str());
    }
    if (table) *table = tp.release();
  });
}

clsasr_status clsasr_wer(const char* ref, const char* hyp, double* rate, clsasr_counts* counts,
                         int* flagged) {
  return rate_call(&wer, ref, hyp, rate, counts, flagged);
}

clsasr_status clsasr_cer(const char* ref, const char* hyp, double* rate, clsasr_counts* counts,
                         int* flagged) {
  return rate_call(&cer, ref, hyp, rate, counts, flagged);
}

clsasr_status clsasr_score(const char* refs, const char* hyps, const char* langs,
                           const char* system, unsigned flags, char** report_tsv,
                           clsasr_counts* overall) {
  return guarded([&] {
    require(refs && hyps && system && report_tsv, "null argument");
    const auto ref_map = read_id_map(refs, "reference");
    const auto hyp_map = read_id_map(hyps, "hypothesis");
    std::map<std::string, LanguageId> lang_map;
    if (langs) {
      for (const auto& [id, value] : read_id_map(langs, "language map")) {
        const auto l = parse_language(utf8::trim(value));
        if (!l) throw Error(ErrorCode::Parse, "language map: unknown language '" + value + "' for '" + id + "'");
        lang_map.emplace(id, *l);
      }
    }
    ScoreOptions opts;
    opts.normalize = (flags & CLSASR_SCORE_NORMALIZE) != 0;
    opts.missing = (flags & CLSASR_SCORE_MISSING_IS_ERROR) ? MissingPolicy::Error : MissingPolicy::Deletion;
    const CorpusScore score = score_corpus(ref_map, hyp_map, lang_map, opts);
    copy_counts(score.overall_wer, overall);
    *report_tsv = dup(render_report(make_report(system, score, (flags & CLSASR_SCORE_CER) != 0),
                                    ReportFormat::Tsv));
  });
}

clsasr_status clsasr_report_render(const char* const* report_tsvs, size_t count, int format,
                                   char** out) {
  return guarded([&] {
    require(out && (report_tsvs || count == 0), "null argument");
    require(format == 0 || format == 1, "format must be 0 (text) or 1 (tsv)");
    EvalReport merged;
    for (std::size_t i = 0; i < count; ++i) {
      require(report_tsvs[i] != nullptr, "null report");
      std::istringstream in{std::string(report_tsvs[i])};
      merge_into(merged, parse_report_tsv(in));
    }
    *out = dup(render_report(merged, format == 0 ? ReportFormat::Text : ReportFormat::Tsv));
  });
}

}  // extern "C"

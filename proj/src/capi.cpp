/*
   Copyright 2026 The t44mf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "t44/t44.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "t44/checks.hpp"
#include "t44/render.hpp"

struct t44_context {
  t44::Context ctx;
};

struct t44_word {
  t44::WordSpec spec;
};

struct t44_factorization {
  t44::FactorizationRecord record;
};

namespace {

thread_local std::string last_error;

t44_status status_of(t44::ErrorCode c) { return static_cast<t44_status>(static_cast<int>(c) + 2); }

t44::ErrorCode code_of(t44_status s) { return static_cast<t44::ErrorCode>(static_cast<int>(s) - 2); }

template <class F>
t44_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return T44_OK;
  } catch (const t44::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return T44_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return T44_ERR_INTERNAL;
  }
}

t44_status null_arg(const char* name) {
  last_error = std::string("null argument: ") + name;
  return T44_ERR_NULL_ARGUMENT;
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::optional<t44::Rational> opt_rational(const char* s) {
  if (!s) return std::nullopt;
  return t44::parse_rational(s);
}

std::vector<t44::Rational> rationals(const char* const* v, std::size_t n) {
  std::vector<t44::Rational> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!v[i]) throw t44::Error(t44::ErrorCode::InvalidParameter, "null rational in list");
    out.push_back(t44::parse_rational(v[i]));
  }
  return out;
}

}  // namespace

extern "C" {

const char* t44_version(void) { return "1.0.0"; }

const char* t44_status_name(t44_status s) {
  switch (s) {
    case T44_OK: return "Ok";
    case T44_ERR_NULL_ARGUMENT: return "NullArgument";
    case T44_ERR_INTERNAL: return "Internal";
    default:
      if (s > T44_ERR_NULL_ARGUMENT && s < T44_ERR_INTERNAL) return t44::error_code_name(code_of(s));
      return "Unknown";
  }
}

int t44_status_is_input_error(t44_status s) {
  if (s == T44_ERR_NULL_ARGUMENT) return 1;
  if (s > T44_ERR_NULL_ARGUMENT && s < T44_ERR_INTERNAL) return t44::is_input_error(code_of(s)) ? 1 : 0;
  return 0;
}

const char* t44_last_error(void) { return last_error.c_str(); }

void t44_string_free(char* s) { std::free(s); }

t44_status t44_context_create(const char* lambda, const char* mu, t44_context** out) {
  if (!lambda) return null_arg("lambda");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new t44_context{t44::Context::create(t44::parse_rational(lambda), opt_rational(mu))};
  });
}

void t44_context_destroy(t44_context* ctx) { delete ctx; }

t44_status t44_word_create(const char* family, int n, const char* marks, int transposed, const char* mu,
                           t44_word** out) {
  if (!family) return null_arg("family");
  if (!out) return null_arg("out");
  return guarded([&] {
    std::optional<unsigned> size;
    if (n >= 0) size = static_cast<unsigned>(n);
    *out = new t44_word{t44::word_new(t44::parse_kind(family), size, transposed != 0,
                                      t44::parse_marks(marks ? marks : ""), opt_rational(mu))};
  });
}

void t44_word_destroy(t44_word* w) { delete w; }

t44_status t44_word_label(const t44_word* w, char** out) {
  if (!w) return null_arg("word");
  if (!out) return null_arg("out");
  return guarded([&] { *out = copy_out(t44::word_label(w->spec)); });
}

t44_status t44_word_string(const t44_word* w, char** out) {
  if (!w) return null_arg("word");
  if (!out) return null_arg("out");
  return guarded([&] { *out = copy_out(t44::word_string(w->spec)); });
}

t44_status t44_words_enumerate(unsigned max_n, t44_format format, char** out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    auto words = t44::enumerate_words(max_n);
    if (format == T44_FORMAT_JSON) {
      t44::Json arr = t44::Json::array();
      for (const auto& w : words) {
        t44::Json j = t44::word_to_json(w);
        j["label"] = t44::word_label(w);
        j["word"] = t44::word_string(w);
        arr.push_back(std::move(j));
      }
      *out = copy_out(t44::dump(arr));
      return;
    }
    std::string text;
    for (const auto& w : words) text += t44::word_label(w) + "  " + t44::word_string(w) + "\n";
    *out = copy_out(text);
  });
}

t44_status t44_factorization_generate(const t44_context* ctx, const t44_word* w, const t44_solve_options* opts,
                                      t44_factorization** out) {
  if (!ctx) return null_arg("context");
  if (!w) return null_arg("word");
  if (!out) return null_arg("out");
  return guarded([&] {
    t44::SolveOptions so;
    if (opts) {
      if (opts->degree_bound) so.degree_bound = opts->degree_bound;
      so.threads = opts->threads ? opts->threads : 1;
    }
    t44::Factorization f = t44::make_factorization(w->spec, ctx->ctx, so);
    *out = new t44_factorization{t44::make_record(f, w->spec)};
  });
}

t44_status t44_factorization_from_json(const char* json, t44_factorization** out) {
  if (!json) return null_arg("json");
  if (!out) return null_arg("out");
  return guarded([&] { *out = new t44_factorization{t44::record_from_json(t44::parse_json(json))}; });
}

void t44_factorization_destroy(t44_factorization* f) { delete f; }

t44_status t44_factorization_size(const t44_factorization* f, size_t* out) {
  if (!f) return null_arg("factorization");
  if (!out) return null_arg("out");
  *out = f->record.phi.rows();
  return T44_OK;
}

t44_status t44_factorization_to_json(const t44_factorization* f, char** out) {
  if (!f) return null_arg("factorization");
  if (!out) return null_arg("out");
  return guarded([&] { *out = copy_out(t44::dump(t44::record_to_json(f->record))); });
}

t44_status t44_factorization_to_text(const t44_factorization* f, int expanded, char** out) {
  if (!f) return null_arg("factorization");
  if (!out) return null_arg("out");
  return guarded([&] { *out = copy_out(t44::render_record(f->record, expanded != 0)); });
}

t44_status t44_factorization_entry(const t44_factorization* f, int which, size_t i, size_t j, int expanded,
                                   char** out) {
  if (!f) return null_arg("factorization");
  if (!out) return null_arg("out");
  return guarded([&] {
    if (which != 0 && which != 1) throw t44::Error(t44::ErrorCode::InvalidParameter, "which must be 0 or 1");
    const t44::PolyMatrix& m = which == 0 ? f->record.phi : f->record.psi;
    if (i >= m.rows() || j >= m.cols()) throw t44::Error(t44::ErrorCode::InvalidParameter, "entry out of range");
    *out = copy_out(t44::render_entry(f->record.context(), m(i, j), expanded != 0));
  });
}

t44_status t44_factorization_verify(const t44_factorization* f, t44_format format, int* ok, char** report) {
  if (!f) return null_arg("factorization");
  if (!ok) return null_arg("ok");
  return guarded([&] {
    t44::Context ctx = f->record.context();
    t44::VerificationReport r = t44::verify_factorization(ctx, f->record.phi, f->record.psi);
    *ok = r.ok() ? 1 : 0;
    if (report) *report = copy_out(format == T44_FORMAT_JSON ? t44::dump(t44::report_to_json(r)) : t44::render_report(r));
  });
}

t44_status t44_factorization_translate(const t44_factorization* f, t44_factorization** out) {
  if (!f) return null_arg("factorization");
  if (!out) return null_arg("out");
  return guarded([&] {
    t44::Context ctx = f->record.context();
    t44::Factorization g = t44::ar_translate(t44::Factorization::create(ctx, f->record.phi, f->record.psi));
    t44::FactorizationRecord r = t44::make_record(g, std::nullopt);
    r.mu = f->record.mu;
    *out = new t44_factorization{std::move(r)};
  });
}

t44_status t44_derive(const t44_context* ctx, const t44_word* w, t44_format format, int expanded, char** out,
                      t44_agreement* agreement) {
  if (!ctx) return null_arg("context");
  if (!w) return null_arg("word");
  if (!out) return null_arg("out");
  return guarded([&] {
    t44::Derivation d = t44::derive(w->spec, ctx->ctx);
    *out = copy_out(format == T44_FORMAT_JSON ? t44::dump(t44::derivation_to_json(d, ctx->ctx))
                                              : t44::render_derivation(d, ctx->ctx, expanded != 0));
    if (agreement) *agreement = static_cast<t44_agreement>(d.agreement);
  });
}

t44_status t44_ar_report(const t44_context* ctx, unsigned max_n, t44_format format, char** out, int* ok) {
  if (!ctx) return null_arg("context");
  if (!out) return null_arg("out");
  return guarded([&] {
    t44::ARReport r = t44::check_ar_pairings(ctx->ctx, max_n);
    *out = copy_out(format == T44_FORMAT_JSON ? t44::dump(t44::ar_report_to_json(r)) : t44::render_ar_report(r));
    if (ok) *ok = r.ok() ? 1 : 0;
  });
}

t44_status t44_check_all(const t44_check_options* opts, t44_format format, char** out, int* ok) {
  if (!opts) return null_arg("options");
  if (!out) return null_arg("out");
  return guarded([&] {
    t44::CheckConfig cfg;
    cfg.max_n = opts->max_n;
    if (opts->lambdas) cfg.lambdas = rationals(opts->lambdas, opts->lambda_count);
    if (opts->mus) cfg.mus = rationals(opts->mus, opts->mu_count);
    for (const auto& l : cfg.lambdas) (void)t44::Context::create(l);
    for (const auto& m : cfg.mus) (void)t44::Context::create(cfg.lambdas.empty() ? t44::Rational(2) : cfg.lambdas[0], m);
    cfg.seed = opts->seed;
    cfg.transform_trials = opts->transform_trials;
    if (opts->degree_bound) cfg.degree_bound = opts->degree_bound;
    if (opts->golden_json) cfg.goldens = t44::goldens_from_json(t44::parse_json(opts->golden_json));
    t44::CheckSummary s = t44::run_checks(cfg);
    *out = copy_out(format == T44_FORMAT_JSON ? t44::dump(t44::summary_to_json(s)) : t44::render_summary(s));
    if (ok) *ok = s.ok() ? 1 : 0;
  });
}

}  // extern "C"

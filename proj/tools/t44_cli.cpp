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

// t44mf command-line front end. Exit codes: 0 ok, 1 verification or check failure, 2 invalid input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "t44/t44.h"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct Options {
  std::string family;
  int n = -1;
  std::vector<std::string> marks;
  bool transpose = false;
  std::vector<std::string> lambdas;
  std::vector<std::string> mus;
  std::string format = "text";
  unsigned max_n = 4;
  std::uint64_t seed = 1;
  unsigned trials = 100;
  unsigned degree_bound = 4;
  unsigned threads = 1;
  bool expanded = false;
  std::string in;
  std::string out;
  std::string golden;
};

// Thrown to unwind with an exit code after the message has been printed.
struct Exit {
  int code;
};

int code_for(t44_status s) { return t44_status_is_input_error(s) ? kBadInput : kFailed; }

void check(t44_status s) {
  if (s == T44_OK) return;
  std::cerr << "error: " << t44_last_error() << "\n";
  throw Exit{code_for(s)};
}

void bad_input(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  throw Exit{kBadInput};
}

class OwnedString {
 public:
  ~OwnedString() { t44_string_free(p_); }
  char** put() { return &p_; }
  std::string str() const { return p_ ? p_ : ""; }

 private:
  char* p_ = nullptr;
};

template <class T, void (*Destroy)(T*)>
class Handle {
 public:
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Destroy(p_); }
  T** put() { return &p_; }
  T* get() const { return p_; }

 private:
  T* p_ = nullptr;
};

using Context = Handle<t44_context, t44_context_destroy>;
using Word = Handle<t44_word, t44_word_destroy>;
using Fact = Handle<t44_factorization, t44_factorization_destroy>;

t44_format format_of(const Options& o) { return o.format == "json" ? T44_FORMAT_JSON : T44_FORMAT_TEXT; }

std::string single(const std::vector<std::string>& v, const char* flag, const char* fallback) {
  if (v.empty()) return fallback ? fallback : "";
  if (v.size() > 1) bad_input(std::string("this command takes a single ") + flag);
  return v.front();
}

std::optional<std::string> mu_of(const Options& o) {
  if (o.mus.empty()) return std::nullopt;
  return single(o.mus, "--mu", nullptr);
}

void make_context(const Options& o, Context& ctx) {
  std::string lambda = single(o.lambdas, "--lambda", "2");
  auto mu = mu_of(o);
  check(t44_context_create(lambda.c_str(), mu ? mu->c_str() : nullptr, ctx.put()));
}

void make_word(const Options& o, Word& w) {
  if (o.family.empty()) bad_input("--family is required");
  std::string marks;
  for (const auto& m : o.marks) marks += m;
  auto mu = mu_of(o);
  bool w0 = o.family == "w0" || o.family == "W0";
  check(t44_word_create(o.family.c_str(), o.n, marks.c_str(), o.transpose ? 1 : 0, w0 && mu ? mu->c_str() : nullptr,
                        w.put()));
}

std::string read_input(const Options& o) {
  if (o.in.empty() || o.in == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream f(o.in, std::ios::binary);
  if (!f) bad_input("cannot read " + o.in);
  return {std::istreambuf_iterator<char>(f), {}};
}

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) bad_input("cannot write " + o.out);
  f << text;
}

std::string render(const Options& o, const t44_factorization* f) {
  OwnedString s;
  if (format_of(o) == T44_FORMAT_JSON)
    check(t44_factorization_to_json(f, s.put()));
  else
    check(t44_factorization_to_text(f, o.expanded ? 1 : 0, s.put()));
  return s.str();
}

int cmd_generate(const Options& o) {
  Context ctx;
  Word w;
  make_context(o, ctx);
  make_word(o, w);
  Fact f;
  t44_solve_options so{o.degree_bound, o.threads};
  check(t44_factorization_generate(ctx.get(), w.get(), &so, f.put()));
  write_output(o, render(o, f.get()));
  return kOk;
}

int cmd_derive(const Options& o) {
  Context ctx;
  Word w;
  make_context(o, ctx);
  make_word(o, w);
  OwnedString s;
  t44_agreement a = T44_AGREE_DIFFERS;
  check(t44_derive(ctx.get(), w.get(), format_of(o), o.expanded ? 1 : 0, s.put(), &a));
  write_output(o, s.str());
  return a == T44_AGREE_DIFFERS ? kFailed : kOk;
}

int cmd_verify(const Options& o) {
  std::string text = read_input(o);
  Fact f;
  check(t44_factorization_from_json(text.c_str(), f.put()));
  int ok = 0;
  OwnedString s;
  check(t44_factorization_verify(f.get(), format_of(o), &ok, s.put()));
  write_output(o, s.str());
  return ok ? kOk : kFailed;
}

int cmd_ar(const Options& o) {
  if (!o.in.empty() || !o.family.empty()) {
    Fact f;
    if (!o.in.empty()) {
      std::string text = read_input(o);
      check(t44_factorization_from_json(text.c_str(), f.put()));
    } else {
      Context ctx;
      Word w;
      make_context(o, ctx);
      make_word(o, w);
      t44_solve_options so{o.degree_bound, o.threads};
      check(t44_factorization_generate(ctx.get(), w.get(), &so, f.put()));
    }
    Fact g;
    check(t44_factorization_translate(f.get(), g.put()));
    write_output(o, render(o, g.get()));
    return kOk;
  }
  Context ctx;
  make_context(o, ctx);
  OwnedString s;
  int ok = 0;
  check(t44_ar_report(ctx.get(), o.max_n, format_of(o), s.put(), &ok));
  write_output(o, s.str());
  return ok ? kOk : kFailed;
}

int cmd_words(const Options& o) {
  OwnedString s;
  check(t44_words_enumerate(o.max_n, format_of(o), s.put()));
  write_output(o, s.str());
  return kOk;
}

int cmd_check_all(const Options& o) {
  std::vector<const char*> lambdas, mus;
  for (const auto& l : o.lambdas) lambdas.push_back(l.c_str());
  for (const auto& m : o.mus) mus.push_back(m.c_str());
  std::string golden;
  if (!o.golden.empty()) {
    std::ifstream f(o.golden, std::ios::binary);
    if (!f) bad_input("cannot read " + o.golden);
    golden.assign(std::istreambuf_iterator<char>(f), {});
  }
  t44_check_options co{};
  co.max_n = o.max_n;
  co.lambdas = lambdas.empty() ? nullptr : lambdas.data();
  co.lambda_count = lambdas.size();
  co.mus = mus.empty() ? nullptr : mus.data();
  co.mu_count = mus.size();
  co.seed = o.seed;
  co.transform_trials = o.trials;
  co.degree_bound = o.degree_bound;
  co.golden_json = o.golden.empty() ? nullptr : golden.c_str();
  OwnedString s;
  int ok = 0;
  check(t44_check_all(&co, format_of(o), s.put(), &ok));
  write_output(o, s.str());
  return ok ? kOk : kFailed;
}

void add_format(CLI::App* c, Options& o) {
  c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  c->add_option("--out", o.out, "Output path (default stdout)");
}

void add_word(CLI::App* c, Options& o) {
  c->add_option("--family", o.family, "Word family w0..w10");
  c->add_option("--n", o.n, "Word size")->check(CLI::NonNegativeNumber);
  c->add_option("--mark", o.marks, "Mark(s): + or -, repeatable or combined such as +-");
  c->add_flag("--transpose", o.transpose, "Use the transposed word");
}

void add_params(CLI::App* c, Options& o) {
  c->add_option("--lambda", o.lambdas, "Cross-ratio parameter as p/q (default 2)");
  c->add_option("--mu", o.mus, "Eigenvalue of the cycle w0 as p/q");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Matrix factorizations for first-level modules over T44"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(t44_version()));

  auto* gen = app.add_subcommand("generate", "Closed-form phi with solved psi, verified");
  add_word(gen, o);
  add_params(gen, o);
  add_format(gen, o);
  gen->add_option("--degree-bound", o.degree_bound, "Degree bound of the psi ansatz");
  gen->add_option("--threads", o.threads, "Worker threads for the psi solve");
  gen->add_flag("--expanded", o.expanded, "Render entries in x, y");

  auto* der = app.add_subcommand("derive", "Derive phi from the Ext block matrix and compare");
  add_word(der, o);
  add_params(der, o);
  add_format(der, o);
  der->add_flag("--expanded", o.expanded, "Render entries in x, y");

  auto* ver = app.add_subcommand("verify", "Re-verify a serialized factorization");
  ver->add_option("--in", o.in, "Input path (default stdin)");
  add_format(ver, o);

  auto* ar = app.add_subcommand("ar", "Translate a factorization, or report the pairing checks");
  ar->add_option("--in", o.in, "Serialized factorization to translate");
  add_word(ar, o);
  add_params(ar, o);
  add_format(ar, o);
  ar->add_option("--max-n", o.max_n, "Largest n for the pairing report");
  ar->add_option("--degree-bound", o.degree_bound, "Degree bound of the psi ansatz");
  ar->add_flag("--expanded", o.expanded, "Render entries in x, y");

  auto* words = app.add_subcommand("words", "Enumerate admissible words");
  words->add_option("--max-n", o.max_n, "Largest n");
  add_format(words, o);

  auto* all = app.add_subcommand("check-all", "Run the full check suite");
  add_params(all, o);
  add_format(all, o);
  all->add_option("--max-n", o.max_n, "Largest n");
  all->add_option("--seed", o.seed, "Seed of the random transforms");
  all->add_option("--trials", o.trials, "Random transforms per word");
  all->add_option("--degree-bound", o.degree_bound, "Degree bound of the psi ansatz");
  all->add_option("--golden", o.golden, "Golden worked-example file (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*gen) return cmd_generate(o);
    if (*der) return cmd_derive(o);
    if (*ver) return cmd_verify(o);
    if (*ar) return cmd_ar(o);
    if (*words) return cmd_words(o);
    if (*all) return cmd_check_all(o);
  } catch (const Exit& e) {
    return e.code;
  }
  return kBadInput;
}

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


#include "doctest.h"
#include "t44/checks.hpp"

using namespace t44;

namespace {

WordSpec w2(unsigned n, bool t = false) { return word_new(WordKind::W2, n, t, {Sign::Plus}); }

std::vector<std::string> names(const Presentation& p) {
  std::vector<std::string> out;
  for (const auto& g : p.generators) out.push_back(generator_name(g));
  return out;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == '\n') {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

}  // namespace

TEST_CASE("initial presentation of the worked example") {
  Context ctx = Context::create(2);
  Presentation p = presentation_from_ext(build_X(w2(2), ctx), ctx);
  CHECK(names(p) == std::vector<std::string>{"u3_1", "u3_2", "u3_3", "u4_1", "u4_2", "v1_1", "v1_2", "v2_1", "v2_2"});
  CHECK(p.relations.size() == 9);
  CHECK(lines(dump_presentation(p, ctx)) == std::vector<std::string>{"z3*u3_1 = 0",
                                                                     "z3*u3_2 = 0",
                                                                     "z3*u3_3 = 0",
                                                                     "z4*u4_1 = 0",
                                                                     "z4*u4_2 = 0",
                                                                     "z1*v1_1 - u3_1 - u4_1 = 0",
                                                                     "z1*v1_2 - u3_2 - u4_2 = 0",
                                                                     "z2*v2_1 - u3_1 - u3_2 - u4_1 = 0",
                                                                     "z2*v2_2 - u3_2 - u3_3 - u4_2 = 0"});
}

TEST_CASE("elimination reproduces the worked example") {
  Context ctx = Context::create(2);
  Presentation p = presentation_from_ext(build_X(w2(2), ctx), ctx);
  std::vector<EliminationStep> steps;
  Presentation r = eliminate_units(p, {}, &steps);
  CHECK(names(r) == std::vector<std::string>{"u3_1", "v1_1", "v2_1", "v1_2", "v2_2"});
  std::vector<std::string> gone;
  for (const auto& s : steps) gone.push_back(generator_name(s.eliminated));
  CHECK(gone == std::vector<std::string>{"u4_1", "u3_2", "u4_2", "u3_3"});
  CHECK(lines(dump_presentation(r, ctx)) == std::vector<std::string>{"z3*u3_1 = 0",
                                                                     "z4*(z1*v1_1 - u3_1) = 0",
                                                                     "z3*(-z1*v1_1 + z2*v2_1) = 0",
                                                                     "z4*(z1*v1_1 - z2*v2_1 + z1*v1_2) = 0",
                                                                     "z3*(-z1*v1_2 + z2*v2_2) = 0"});
  PolyMatrix phi = relation_matrix(r);
  CHECK(phi == golden_matrix(ctx, {{"z3", "0", "0", "0", "0"},
                                   {"-z4", "z1*z4", "0", "0", "0"},
                                   {"0", "-z1*z3", "z2*z3", "0", "0"},
                                   {"0", "z1*z4", "-z2*z4", "z1*z4", "0"},
                                   {"0", "0", "0", "-z1*z3", "z2*z3"}}));
  CHECK(phi.is_reduced());
}

TEST_CASE("regular module presentation") {
  Context ctx = Context::create(5);
  Presentation p = presentation_from_ext(build_X(word_new(WordKind::W10, std::nullopt, false, {}), ctx), ctx);
  CHECK(names(p) == std::vector<std::string>{"u34_1", "v12_1"});
  CHECK(lines(dump_presentation(p, ctx)) == std::vector<std::string>{"z3*z4*u34_1 = 0", "z1*z2*v12_1 - u34_1 = 0"});
  Presentation r = eliminate_units(p);
  CHECK(names(r) == std::vector<std::string>{"v12_1"});
  CHECK(relation_matrix(r) == PolyMatrix::from_rows({{ctx.F()}}));
}

TEST_CASE("zero block matrix is already minimal") {
  Context ctx = Context::create(2);
  ExtBlockMatrix x{{{1, 0, 0}}, {{1, 0, 0}}, ScalarMatrix(1, 1)};
  Presentation p = presentation_from_ext(x, ctx);
  CHECK(lines(dump_presentation(p, ctx)) == std::vector<std::string>{"z3*u3_1 = 0", "z1*v1_1 = 0"});
  Presentation r = eliminate_units(p);
  CHECK(names(r) == names(p));
  CHECK(relation_matrix(r) == PolyMatrix::from_rows({{ctx.z(3), BiPoly()}, {BiPoly(), ctx.z(1)}}));
}

TEST_CASE("relation matrix orderings") {
  Context ctx = Context::create(2);
  Presentation r = eliminate_units(presentation_from_ext(build_X(w2(2), ctx), ctx));
  PolyMatrix base = relation_matrix(r);
  PolyMatrix perm = relation_matrix(r, std::vector<std::size_t>{4, 3, 2, 1, 0});
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(perm(i, j) == base(i, 4 - j));
  CHECK(mat_det(perm) == mat_det(base));  // an even permutation
  CHECK(mat_det(relation_matrix(r, std::vector<std::size_t>{1, 0, 2, 3, 4})) == -mat_det(base));
  for (auto bad : {std::vector<std::size_t>{0, 1, 2, 3}, std::vector<std::size_t>{0, 0, 1, 2, 3},
                   std::vector<std::size_t>{0, 1, 2, 3, 5}}) {
    try {
      relation_matrix(r, bad);
      FAIL("expected BadOrdering");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BadOrdering);
    }
  }
}

TEST_CASE("derived matrix for w3(1)+ (frozen)") {
  Context ctx = Context::create(2);
  CHECK(derive_phi(word_new(WordKind::W3, 1u, false, {Sign::Plus}), ctx) ==
        golden_matrix(ctx, {{"z2*z3", "0", "0", "0", "0"},
                            {"-z2*z4", "z1*z4", "0", "0", "0"},
                            {"z2*z3", "-z1*z3", "z2*z3", "0", "0"},
                            {"0", "0", "-z2*z4", "z1*z4", "0"},
                            {"0", "0", "z2*z3", "-z1*z3", "z1*z2*z3"}}));
}

TEST_CASE("pivot order does not change size or determinant profile") {
  Context ctx = Context::create(2);
  for (const auto& w : {w2(3), word_new(WordKind::W3, 1u, false, {Sign::Plus})}) {
    Presentation p = presentation_from_ext(build_X(w, ctx), ctx);
    PolyMatrix base = relation_matrix(eliminate_units(p));
    auto want = det_profile(ctx, base).exponents;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      EliminationOptions opts;
      opts.random_seed = seed;
      PolyMatrix phi = relation_matrix(eliminate_units(p, opts));
      CHECK(phi.rows() == base.rows());
      CHECK(phi.is_reduced());
      CHECK(det_profile(ctx, phi).exponents == want);
    }
  }
}

TEST_CASE("derived matrices are minimal for every family") {
  Context ctx = Context::create(5, Rational(-2));
  for (const auto& w : enumerate_words(4)) {
    PolyMatrix phi = derive_phi(w, ctx);
    CAPTURE(word_label(w));
    CHECK(phi.is_square());
    CHECK(phi.is_reduced());
    CHECK(z_monomial_decompose(ctx, mat_det(phi)).has_value());
    CHECK(verify_factorization(ctx, phi, solve_psi(ctx, phi)).ok());
  }
}

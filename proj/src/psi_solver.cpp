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

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <utility>

#include "t44/matrix.hpp"

namespace t44 {

namespace {

// Sparse row of a linear system: sorted (column, coefficient) pairs plus one
// right-hand side per solved column of psi.
struct SparseRow {
  std::vector<std::pair<std::size_t, Rational>> entries;
  std::vector<Rational> rhs;
};

// row -= c * pivot, both sorted by column.
void eliminate(SparseRow& row, const SparseRow& pivot, const Rational& c) {
  std::vector<std::pair<std::size_t, Rational>> out;
  out.reserve(row.entries.size() + pivot.entries.size());
  auto a = row.entries.begin();
  auto b = pivot.entries.begin();
  while (a != row.entries.end() || b != pivot.entries.end()) {
    if (b == pivot.entries.end() || (a != row.entries.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == row.entries.end() || b->first < a->first) {
      out.emplace_back(b->first, -(c * b->second));
      ++b;
    } else {
      Rational v = a->second - c * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  row.entries = std::move(out);
  for (std::size_t k = 0; k < row.rhs.size(); ++k)
    if (pivot.rhs[k] != 0) row.rhs[k] -= c * pivot.rhs[k];
}

// Ansatz monomials are numbered degree-major, then by y-exponent.
Monomial ansatz_monomial(std::size_t idx) {
  std::size_t deg = 0;
  while ((deg + 1) * (deg + 2) / 2 <= idx) ++deg;
  std::uint32_t ey = static_cast<std::uint32_t>(idx - deg * (deg + 1) / 2);
  return {static_cast<std::uint32_t>(deg) - ey, ey};
}

// Solves phi * psi_col = F * e_col for the given columns at once; the
// coefficient matrix is shared, only the right-hand sides differ.
std::vector<std::vector<BiPoly>> solve_columns(const Context& ctx, const PolyMatrix& phi,
                                               const std::vector<std::size_t>& cols, unsigned bound) {
  const std::size_t d = phi.rows();
  const std::size_t nrhs = cols.size();
  const std::size_t per_entry = (bound + 1) * (bound + 2) / 2;
  // Unknowns of later entries get smaller indices: for (block) lower triangular
  // phi the leading unknown of each equation is then on the diagonal.
  auto var = [&](std::size_t k, std::size_t idx) { return (d - 1 - k) * per_entry + idx; };
  const std::size_t nvars = d * per_entry;

  std::vector<std::optional<SparseRow>> pivots(nvars);
  for (std::size_t i = 0; i < d; ++i) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, SparseRow> eqs;
    for (std::size_t k = 0; k < d; ++k) {
      for (const auto& t : phi(i, k).terms()) {
        for (std::size_t idx = 0; idx < per_entry; ++idx) {
          Monomial mu = ansatz_monomial(idx);
          eqs[{mu.ex + t.m.ex, mu.ey + t.m.ey}].entries.emplace_back(var(k, idx), t.c);
        }
      }
    }
    for (std::size_t r = 0; r < nrhs; ++r)
      if (cols[r] == i)
        for (const auto& t : ctx.F().terms()) {
          auto& row = eqs[{t.m.ex, t.m.ey}];
          row.rhs.resize(nrhs);
          row.rhs[r] += t.c;
        }
    for (auto& [mono, row] : eqs) {
      row.rhs.resize(nrhs);
      std::sort(row.entries.begin(), row.entries.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      // Merge duplicate unknowns.
      std::vector<std::pair<std::size_t, Rational>> merged;
      for (auto& e : row.entries) {
        if (!merged.empty() && merged.back().first == e.first) {
          merged.back().second += e.second;
          if (merged.back().second == 0) merged.pop_back();
        } else {
          merged.push_back(std::move(e));
        }
      }
      row.entries = std::move(merged);
      bool stored = false;
      while (!row.entries.empty()) {
        std::size_t lead = row.entries.front().first;
        if (!pivots[lead]) {
          Rational inv = 1 / row.entries.front().second;
          for (auto& e : row.entries) e.second *= inv;
          for (auto& v : row.rhs) v *= inv;
          pivots[lead] = std::move(row);
          stored = true;
          break;
        }
        Rational c = row.entries.front().second;
        eliminate(row, *pivots[lead], c);
      }
      if (stored) continue;
      for (std::size_t r = 0; r < nrhs; ++r)
        if (row.rhs[r] != 0)
          throw Error(ErrorCode::NoPolynomialSolution,
                      "column " + std::to_string(cols[r]) + " has no solution of degree <= " + std::to_string(bound));
    }
  }

  for (std::size_t v = 0; v < nvars; ++v)
    if (!pivots[v]) throw Error(ErrorCode::Singular, "solution is not unique; phi is singular");

  std::vector<std::vector<BiPoly>> out(nrhs, std::vector<BiPoly>(d));
  std::vector<Rational> x(nvars);
  for (std::size_t r = 0; r < nrhs; ++r) {
    for (std::size_t v = nvars; v-- > 0;) {
      const SparseRow& row = *pivots[v];
      Rational s = row.rhs[r];
      for (std::size_t e = 1; e < row.entries.size(); ++e) s -= row.entries[e].second * x[row.entries[e].first];
      x[v] = std::move(s);
    }
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<BiPoly::Term> terms;
      for (std::size_t idx = 0; idx < per_entry; ++idx) {
        const Rational& c = x[var(k, idx)];
        if (c != 0) terms.push_back({ansatz_monomial(idx), c});
      }
      out[r][k] = BiPoly(std::move(terms));
    }
  }
  return out;
}

}  // namespace

PolyMatrix solve_psi(const Context& ctx, const PolyMatrix& phi, const SolveOptions& opts) {
  if (!phi.is_square()) throw Error(ErrorCode::NotSquare, "solve_psi needs a square matrix");
  return solve_psi(ctx, phi, mat_det(phi), opts);
}

PolyMatrix solve_psi(const Context& ctx, const PolyMatrix& phi, const BiPoly& det_phi, const SolveOptions& opts) {
  if (!phi.is_square()) throw Error(ErrorCode::NotSquare, "solve_psi needs a square matrix");
  if (det_phi.is_zero()) throw Error(ErrorCode::Singular, "det(phi) = 0");
  const std::size_t d = phi.rows();
  std::vector<std::vector<BiPoly>> cols(d);

  // Columns are split round-robin into one group per thread.
  unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(d)));
  std::vector<std::vector<std::size_t>> groups(threads);
  for (std::size_t j = 0; j < d; ++j) groups[j % threads].push_back(j);
  auto run = [&](const std::vector<std::size_t>& group) {
    auto solved = solve_columns(ctx, phi, group, opts.degree_bound);
    for (std::size_t r = 0; r < group.size(); ++r) cols[group[r]] = std::move(solved[r]);
  };
  if (threads == 1) {
    run(groups[0]);
  } else {
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          run(groups[t]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  PolyMatrix psi(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) psi(i, j) = std::move(cols[j][i]);

  PolyMatrix fi = PolyMatrix::identity(d).scaled(ctx.F());
  if (mat_mul(psi, phi) != fi) throw Error(ErrorCode::VerificationFailed, "psi * phi != F * I");
  return psi;
}

}  // namespace t44

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

#include "t44/render.hpp"

#include <algorithm>

namespace t44 {

namespace {

std::string grid(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (width.size() <= j) width.push_back(0);
      width[j] = std::max(width[j], row[j].size());
    }
  std::string out;
  for (const auto& row : cells) {
    std::string line = "[ ";
    for (std::size_t j = 0; j < row.size(); ++j) {
      line += row[j] + std::string(width[j] - row[j].size(), ' ');
      if (j + 1 < row.size()) line += "  ";
    }
    out += line + " ]\n";
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_matrix(const Context& ctx, const PolyMatrix& m, bool expanded) {
  std::vector<std::vector<std::string>> cells(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) cells[i].push_back(render_entry(ctx, m(i, j), expanded));
  return grid(cells);
}

std::string render_ext(const ExtBlockMatrix& x) {
  std::vector<std::vector<std::string>> cells(x.entries.rows());
  for (std::size_t i = 0; i < x.entries.rows(); ++i)
    for (std::size_t j = 0; j < x.entries.cols(); ++j) cells[i].push_back(rational_to_string(x.entries(i, j)));
  std::string head = "row stripes (3, 4, 34) = (" + std::to_string(x.rows.size[0]) + ", " +
                     std::to_string(x.rows.size[1]) + ", " + std::to_string(x.rows.size[2]) +
                     "), column stripes (1, 2, 12) = (" + std::to_string(x.cols.size[0]) + ", " +
                     std::to_string(x.cols.size[1]) + ", " + std::to_string(x.cols.size[2]) + ")\n";
  return head + grid(cells);
}

std::string render_profile(const DetProfile& p) {
  const auto& e = p.exponents;
  return to_string(p) + "  (" + std::to_string(e[0]) + ", " + std::to_string(e[1]) + ", " + std::to_string(e[2]) +
         ", " + std::to_string(e[3]) + ")";
}

std::string render_report(const VerificationReport& r) {
  std::string out;
  out += "size d            : " + std::to_string(r.d) + "\n";
  out += "phi*psi = F*I     : " + yes_no(r.phi_psi_ok) + "\n";
  out += "psi*phi = F*I     : " + yes_no(r.psi_phi_ok) + "\n";
  out += "det identity      : " + yes_no(r.det_identity_ok) + "\n";
  out += "phi reduced       : " + yes_no(r.phi_reduced) + "\n";
  out += "psi reduced       : " + yes_no(r.psi_reduced) + "\n";
  out += "det phi           : " + (r.det_phi ? render_profile(*r.det_phi) : std::string("not a z-monomial")) + "\n";
  out += "det psi           : " + (r.det_psi ? render_profile(*r.det_psi) : std::string("not a z-monomial")) + "\n";
  out += std::string("verification      : ") + (r.ok() ? "ok" : "FAILED") + "\n";
  return out;
}

std::string render_record(const FactorizationRecord& r, bool expanded) {
  Context ctx = r.context();
  std::string out;
  if (r.word) out += "word   : " + word_label(*r.word) + "  " + word_string(*r.word) + "\n";
  out += "lambda : " + rational_to_string(r.lambda) + "\n";
  if (r.mu) out += "mu     : " + rational_to_string(*r.mu) + "\n";
  out += "\nphi =\n" + render_matrix(ctx, r.phi, expanded);
  out += "\npsi =\n" + render_matrix(ctx, r.psi, expanded);
  out += "\n" + render_report(verify_factorization(ctx, r.phi, r.psi));
  return out;
}

std::string render_ar_report(const ARReport& r) {
  std::string out;
  auto exps = [](const DetProfile& p) {
    const auto& e = p.exponents;
    return "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + "," +
           std::to_string(e[3]) + ")";
  };
  for (const auto& c : r.checks) {
    out += std::string(c.passed() ? "PASS " : "FAIL ") + c.rule + "  n=" + std::to_string(c.n) + "  " + c.source +
           " -> " + c.target;
    for (std::size_t i = 0; i < 2; ++i)
      out += "  [" + convention_name(static_cast<MarkConvention>(i)) + ": " + exps(c.source_psi[i]) + " vs " +
             exps(c.target_phi[i]) + (c.match[i] ? " match" : " differ") + "]";
    out += "\n";
  }
  for (const auto& f : r.failures) out += "failure: " + f + "\n";
  out += "self pairings: " + std::string(r.self_pairs_ok ? "ok" : "FAILED") + "\n";
  out += "tau^2 = id: " + std::string(r.involution_ok ? "ok" : "FAILED") + "\n";
  if (r.consistent.size() == 1)
    out += "consistent convention: " + convention_name(r.consistent.front()) + "\n";
  else
    out += "consistent conventions: " + std::to_string(r.consistent.size()) + " (expected exactly one)\n";
  return out;
}

}  // namespace t44

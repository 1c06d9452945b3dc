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

#ifndef T44_RENDER_HPP
#define T44_RENDER_HPP

#include <string>

#include "t44/factorizations.hpp"
#include "t44/families.hpp"
#include "t44/serialize.hpp"

namespace t44 {

/// Aligned grid, one matrix row per line, z-form entries unless expanded.
std::string render_matrix(const Context& ctx, const PolyMatrix& m, bool expanded = false);
std::string render_ext(const ExtBlockMatrix& x);
/// "z1^3*z2^2*z3^3*z4^3  (3, 2, 3, 3)"
std::string render_profile(const DetProfile& p);
std::string render_report(const VerificationReport& r);
std::string render_record(const FactorizationRecord& r, bool expanded = false);
std::string render_ar_report(const ARReport& r);

}  // namespace t44

#endif

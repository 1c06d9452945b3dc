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

#ifndef T44_ERROR_HPP
#define T44_ERROR_HPP

#include <stdexcept>
#include <string>

namespace t44 {

enum class ErrorCode {
  InvalidParameter,
  DivisionByZero,
  NotDivisible,
  ZeroInput,
  ShapeMismatch,
  NotSquare,
  Singular,
  NoPolynomialSolution,
  TooLarge,
  InvalidSize,
  InvalidMarks,
  InvalidEigenvalue,
  InvalidTranspose,
  SelfTranspose,
  NotAdmissible,
  NonSquareResult,
  BadOrdering,
  NotZMonomial,
  VerificationFailed,
  ParseError,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// True for codes caused by bad caller input rather than a failed check.
bool is_input_error(ErrorCode code) noexcept;

}  // namespace t44

#endif

// Copyright 2026 The iprob Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IPROB_ERROR_HPP
#define IPROB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace iprob {

// Error categories. The C API maps these one-to-one onto iprob_status.
enum class ErrorCode {
  kInvalidArgument = 1,
  kSpaceMismatch,
  kParse,
  kValidation,
  kNotFound,
  kPrecondition,
  kBudgetExceeded,
  kIo,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Largest sample space accepted by per-event exhaustive scans. Defaults to 16;
// the IPROB_MAX_EXHAUSTIVE environment variable overrides it (clamped to
// [1, 30]).
int exhaustive_outcome_cap();

// Cap for scans over triples of events: min(12, exhaustive_outcome_cap()).
int triple_scan_outcome_cap();

// Throws kBudgetExceeded when n exceeds cap.
void require_budget(std::size_t n, int cap, const char* what);

}  // namespace iprob

#endif  // IPROB_ERROR_HPP

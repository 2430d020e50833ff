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

#include "iprob/iprob.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "iprob/error.hpp"
#include "iprob/query.hpp"
#include "iprob/scenario.hpp"

struct iprob_scenario {
  iprob::Scenario value;
};

struct iprob_result {
  iprob::QueryResult value;
};

namespace {

thread_local std::string last_error;

iprob_status status_of(iprob::ErrorCode code) {
  switch (code) {
    case iprob::ErrorCode::kInvalidArgument: return IPROB_INVALID_ARGUMENT;
    case iprob::ErrorCode::kSpaceMismatch: return IPROB_SPACE_MISMATCH;
    case iprob::ErrorCode::kParse: return IPROB_PARSE;
    case iprob::ErrorCode::kValidation: return IPROB_VALIDATION;
    case iprob::ErrorCode::kNotFound: return IPROB_NOT_FOUND;
    case iprob::ErrorCode::kPrecondition: return IPROB_PRECONDITION;
    case iprob::ErrorCode::kBudgetExceeded: return IPROB_BUDGET_EXCEEDED;
    case iprob::ErrorCode::kIo: return IPROB_IO;
  }
  return IPROB_INTERNAL;
}

template <typename F>
iprob_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return IPROB_OK;
  } catch (const iprob::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return IPROB_INTERNAL;
}

iprob_status null_arg(const char* what) {
  last_error = std::string(what) + " must not be null";
  return IPROB_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* iprob_version(void) { return "1.0.0"; }

const char* iprob_status_string(iprob_status status) {
  switch (status) {
    case IPROB_OK: return "ok";
    case IPROB_INVALID_ARGUMENT: return "invalid argument";
    case IPROB_SPACE_MISMATCH: return "sample space mismatch";
    case IPROB_PARSE: return "parse error";
    case IPROB_VALIDATION: return "validation error";
    case IPROB_NOT_FOUND: return "not found";
    case IPROB_PRECONDITION: return "precondition failed";
    case IPROB_BUDGET_EXCEEDED: return "budget exceeded";
    case IPROB_IO: return "i/o error";
    case IPROB_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* iprob_last_error(void) { return last_error.c_str(); }

iprob_status iprob_scenario_load_file(const char* path, iprob_scenario** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = new iprob_scenario{iprob::Scenario::load_file(path)}; });
}

iprob_status iprob_scenario_load_string(const char* text, iprob_scenario** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = new iprob_scenario{iprob::Scenario::parse(text)}; });
}

iprob_status iprob_scenario_render(const iprob_scenario* scenario, char** out) {
  if (!scenario) return null_arg("scenario");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = dup_string(scenario->value.render()); });
}

void iprob_scenario_free(iprob_scenario* scenario) { delete scenario; }

iprob_status iprob_query(const iprob_scenario* scenario, const char* command, const char* mode,
                         const char* const* keys, const char* const* values, size_t n, iprob_result** out) {
  if (!command) return null_arg("command");
  if (!out) return null_arg("out");
  if (n > 0 && (!keys || !values)) return null_arg("keys/values");
  *out = nullptr;
  return guarded([&] {
    iprob::Query q;
    q.command = command;
    if (mode) q.mode = mode;
    for (size_t i = 0; i < n; ++i) {
      if (!keys[i] || !values[i]) throw iprob::Error(iprob::ErrorCode::kInvalidArgument, "null option entry");
      q.options.emplace_back(keys[i], values[i]);
    }
    *out = new iprob_result{iprob::run_query(scenario ? &scenario->value : nullptr, q)};
  });
}

iprob_status iprob_demo(const char* name, const char* weights_csv, iprob_result** out) {
  if (!name) return null_arg("name");
  const char* keys[] = {"weights"};
  const char* values[] = {weights_csv};
  return iprob_query(nullptr, "demo", name, keys, values, weights_csv ? 1 : 0, out);
}

const char* iprob_result_kind(const iprob_result* result) { return result ? result->value.kind.c_str() : ""; }
const char* iprob_result_text(const iprob_result* result) { return result ? result->value.text.c_str() : ""; }
const char* iprob_result_json(const iprob_result* result) { return result ? result->value.json.c_str() : ""; }
void iprob_result_free(iprob_result* result) { delete result; }

void iprob_string_free(char* s) { std::free(s); }

}  // extern "C"

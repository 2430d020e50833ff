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

/* C interface to the iprob library. All strings are UTF-8 and NUL-terminated.
 * Functions returning iprob_status leave a message retrievable with
 * iprob_last_error() on the calling thread. */

#ifndef IPROB_IPROB_H
#define IPROB_IPROB_H

#include <stddef.h>

#if defined(_WIN32)
#define IPROB_API __declspec(dllexport)
#else
#define IPROB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iprob_status {
  IPROB_OK = 0,
  IPROB_INVALID_ARGUMENT = 1,
  IPROB_SPACE_MISMATCH = 2,
  IPROB_PARSE = 3,
  IPROB_VALIDATION = 4,
  IPROB_NOT_FOUND = 5,
  IPROB_PRECONDITION = 6,
  IPROB_BUDGET_EXCEEDED = 7,
  IPROB_IO = 8,
  IPROB_INTERNAL = 99
} iprob_status;

typedef struct iprob_scenario iprob_scenario;
typedef struct iprob_result iprob_result;

IPROB_API const char* iprob_version(void);
IPROB_API const char* iprob_status_string(iprob_status status);
/* Message of the last failed call on this thread; "" if none. */
IPROB_API const char* iprob_last_error(void);

IPROB_API iprob_status iprob_scenario_load_file(const char* path, iprob_scenario** out);
IPROB_API iprob_status iprob_scenario_load_string(const char* text, iprob_scenario** out);
/* Canonical JSON; release with iprob_string_free. */
IPROB_API iprob_status iprob_scenario_render(const iprob_scenario* scenario, char** out);
IPROB_API void iprob_scenario_free(iprob_scenario* scenario);

/* Runs `command` with `n` option pairs (names without leading dashes).
 * `mode` may be NULL. `scenario` may be NULL for "demo". */
IPROB_API iprob_status iprob_query(const iprob_scenario* scenario, const char* command, const char* mode,
                                   const char* const* keys, const char* const* values, size_t n,
                                   iprob_result** out);
/* "ipcc" or "umbrella"; `weights_csv` may be NULL for the defaults. */
IPROB_API iprob_status iprob_demo(const char* name, const char* weights_csv, iprob_result** out);

/* Borrowed strings, valid until iprob_result_free. */
IPROB_API const char* iprob_result_kind(const iprob_result* result);
IPROB_API const char* iprob_result_text(const iprob_result* result);
IPROB_API const char* iprob_result_json(const iprob_result* result);
IPROB_API void iprob_result_free(iprob_result* result);

IPROB_API void iprob_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* IPROB_IPROB_H */

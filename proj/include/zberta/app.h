// Copyright 2026 The zberta Authors.
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

#ifndef ZBERTA_APP_H_
#define ZBERTA_APP_H_

#include <ostream>

#include "zberta/config.h"

namespace zberta {

// Process exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailures = 1;  // some records failed, join mismatch
inline constexpr int kExitUsage = 2;     // bad config or unreadable input

// Command entry points. `settings` holds config-file values merged with CLI
// flags; results go to --out (or `out` when absent), diagnostics to `log`.
int RunDiscover(const Settings &settings, std::ostream &out, std::ostream &log);
int RunClassify(const Settings &settings, std::ostream &out, std::ostream &log);
int RunTransformNli(const Settings &settings, std::ostream &out, std::ostream &log);
int RunEvaluate(const Settings &settings, std::ostream &out, std::ostream &log);
int RunServe(const Settings &settings, std::ostream &log);

}  // namespace zberta

#endif  // ZBERTA_APP_H_

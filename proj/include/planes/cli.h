// Copyright 2026 The Planes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PLANES_CLI_H_
#define PLANES_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace planes {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;

// Runs one `planes` subcommand. `args` excludes the program name; the path
// "-" reads from `in` or writes to `out`. Returns 0 on success or a true
// predicate, 1 on a false predicate, 2 on usage or validation errors.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace planes

#endif  // PLANES_CLI_H_

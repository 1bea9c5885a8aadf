// Copyright 2026 The orbitvol Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORBITVOL_CLI_HPP
#define ORBITVOL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitvol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitUsage = 64;

/// Runs one subcommand. `args` excludes the program name. JSON results go to
/// `out`, human-readable text (usage, help) to `err`; `in` serves as the
/// input source when neither --input nor --json is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Names of all subcommands, in usage order.
const std::vector<std::string>& subcommands();

}  // namespace orbitvol::cli

#endif  // ORBITVOL_CLI_HPP

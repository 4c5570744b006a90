// Copyright 2026 The cicy-invariants Authors
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

#ifndef CICY_CLI_HPP_
#define CICY_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace cicy::cli
{
inline constexpr int kExitOk = 0;
inline constexpr int kExitRecordError = 1;
inline constexpr int kExitUsage = 2;

/// Runs `cicy <subcommand> [flags]`. `args` excludes the program name.
/// Summary lines ("key=value") go to `out`, diagnostics to `err`.
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

}  // namespace cicy::cli

#endif  // CICY_CLI_HPP_

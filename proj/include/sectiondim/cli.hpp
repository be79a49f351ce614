// Copyright 2026 The sectiondim Authors.
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

#ifndef SECTIONDIM_CLI_HPP
#define SECTIONDIM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sectiondim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCap = 2;
inline constexpr int kExitNotFound = 3;

/// Runs one command line (args[0] is the program name). Reports go to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace sectiondim::cli

#endif  // SECTIONDIM_CLI_HPP

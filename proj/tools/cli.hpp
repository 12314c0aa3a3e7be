// SPDX-License-Identifier: Apache-2.0
//
// corrbound - eigenvalue bounds for exponential-model spatial correlation matrices
// Copyright (C) 2026 The corrbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef CORRBOUND_TOOLS_CLI_HPP
#define CORRBOUND_TOOLS_CLI_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace corrbound::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kFailure = 2 };

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses the flat sweep config format: one `key = value` per line, '#'
/// starts a comment, blank lines ignored. Keys are flag names without the
/// leading dashes; '_' and '-' are interchangeable. Throws Error(domain) on a
/// malformed line or duplicate key.
std::map<std::string, std::string> parse_config_text(const std::string& text);

} // namespace corrbound::cli

#endif

// Copyright 2026, The rulekit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RULEKIT_CLI_HPP
#define RULEKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rulekit::cli {

// Runs one rulekit invocation. `args` excludes the program name;
// `--input -` (the default) reads from `in`. Rendered text goes to
// `out`, diagnostics to `err`.
//
// Exit status: 0 success, 1 usage error, 2 data error.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace rulekit::cli

#endif  // RULEKIT_CLI_HPP

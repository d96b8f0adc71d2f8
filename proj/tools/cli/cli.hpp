/*
Copyright 2026 The pathpart Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef PATHPART_TOOLS_CLI_HPP
#define PATHPART_TOOLS_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pathpart::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kInfeasible = 3,
  kOversize = 4,
};

enum class Format { Text, Json };

struct RunConfig {
  std::string command;
  std::string input = "-";                 // path, "-" for stdin, or "gen:<family>:k=v,..."
  std::optional<std::string> partition;    // verify / layer: partition file instead of solving
  std::uint64_t seed = 0;                  // used by gen: specs without a seed
  std::size_t exact_limit = 20;
  std::optional<std::size_t> max_steps;    // default 10n
  Format format = Format::Text;
  bool with_exact = false;                 // verify: also run the exact solver
  // generate / sweep
  std::string family;
  std::string n, delta, Delta, m;          // integers or ranges "a..b"
  std::size_t seeds = 1;
  std::optional<std::string> manifest;
  std::size_t threads = 0;
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Runs a parsed configuration.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pathpart::cli

#endif  // PATHPART_TOOLS_CLI_HPP

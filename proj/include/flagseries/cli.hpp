/*
   Copyright 2026 The flagseries Authors

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

#ifndef FLAGSERIES_CLI_HPP
#define FLAGSERIES_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace flagseries {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitIdentityFailure = 1,
  kExitInvalidInput = 2,
  kExitInvariantViolation = 3,
};

/// Entry point of the command-line tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagseries

#endif  // FLAGSERIES_CLI_HPP

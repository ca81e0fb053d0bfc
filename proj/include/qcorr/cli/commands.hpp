// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCORR_CLI_COMMANDS_HPP
#define QCORR_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qcorr::cli {

enum ExitCode : int { kOk = 0, kValidationError = 1, kIoError = 2, kDomainError = 3 };

/// Runs the qcorr command line (gen, analyze, sweep, compare). `args`
/// excludes the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcorr::cli

#endif  // QCORR_CLI_COMMANDS_HPP

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

// State files: a JSON object
//   {"d_h": 3, "d_k": 3, "matrix": [[[re, im], ...], ...]}
// holding the full (d_h d_k) x (d_h d_k) matrix row-major in the flat basis
// i * d_k + a. Reals are written with 17 significant digits.

#ifndef QCORR_CLI_STATE_IO_HPP
#define QCORR_CLI_STATE_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qcorr/density_matrix.hpp"

namespace qcorr::cli {

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Locale-independent rendering with 17 significant digits.
std::string format_real(double value);

void write_state(std::ostream& out, const BipartiteOperator& op);
void write_state_file(const std::string& path, const BipartiteOperator& op);

/// Parses the JSON schema without checking density-matrix invariants.
/// Throws ValidationError on schema problems.
BipartiteOperator parse_state(std::istream& in);

/// Reads and validates (Hermiticity, PSD, trace, in that order). Throws
/// IoError when the file cannot be read and ValidationError otherwise.
DensityMatrix read_state_file(const std::string& path, const Tolerances& tol = {});

}  // namespace qcorr::cli

#endif  // QCORR_CLI_STATE_IO_HPP

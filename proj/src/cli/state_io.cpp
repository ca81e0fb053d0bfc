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

#include "qcorr/cli/state_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qcorr::cli {

std::string format_real(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

void write_state(std::ostream& out, const BipartiteOperator& op) {
  out << "{\"d_h\": " << op.dims.h << ", \"d_k\": " << op.dims.k << ", \"matrix\": [\n";
  for (Index r = 0; r < op.matrix.rows(); ++r) {
    out << "  [";
    for (Index c = 0; c < op.matrix.cols(); ++c) {
      if (c) out << ", ";
      out << '[' << format_real(op.matrix(r, c).real()) << ", " << format_real(op.matrix(r, c).imag()) << ']';
    }
    out << (r + 1 < op.matrix.rows() ? "],\n" : "]\n");
  }
  out << "]}\n";
}

void write_state_file(const std::string& path, const BipartiteOperator& op) {
  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write_state(file, op);
  if (!file.flush()) throw IoError("failed writing '" + path + "'");
}

BipartiteOperator parse_state(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("state file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("d_h") || !doc.contains("d_k") || !doc.contains("matrix"))
    throw ValidationError("state file must be an object with keys d_h, d_k, matrix");
  if (!doc["d_h"].is_number_integer() || !doc["d_k"].is_number_integer())
    throw ValidationError("d_h and d_k must be integers");
  const Dims dims{doc["d_h"].get<Index>(), doc["d_k"].get<Index>()};
  if (dims.h < 1 || dims.k < 1) throw ValidationError("d_h and d_k must be positive");

  const nlohmann::json& rows = doc["matrix"];
  const Index n = dims.total();
  if (!rows.is_array() || static_cast<Index>(rows.size()) != n) {
    std::ostringstream msg;
    msg << "matrix must have " << n << " rows";
    throw ValidationError(msg.str());
  }
  Matrix m(n, n);
  for (Index r = 0; r < n; ++r) {
    const nlohmann::json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      std::ostringstream msg;
      msg << "matrix row " << r << " must have " << n << " entries";
      throw ValidationError(msg.str());
    }
    for (Index c = 0; c < n; ++c) {
      const nlohmann::json& z = row[static_cast<std::size_t>(c)];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        std::ostringstream msg;
        msg << "matrix entry (" << r << "," << c << ") must be [re, im]";
        throw ValidationError(msg.str());
      }
      m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return BipartiteOperator(dims, std::move(m));
}

DensityMatrix read_state_file(const std::string& path, const Tolerances& tol) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for reading");
  return DensityMatrix::from_operator(parse_state(file), tol);
}

}  // namespace qcorr::cli

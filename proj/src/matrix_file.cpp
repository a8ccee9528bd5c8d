// Copyright 2026 The partialmat Authors.
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

#include "partialmat/matrix_file.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "partialmat/error.hpp"

namespace partialmat {

std::string serialize_matrix(const BlockMat& h) {
  nlohmann::ordered_json j;
  j["n"] = h.n();
  j["k"] = h.k();
  auto entries = nlohmann::ordered_json::array();
  for (const Complex& z : h.mat().entries()) entries.push_back({z.real(), z.imag()});
  j["entries"] = std::move(entries);
  return j.dump() + "\n";
}

BlockMat parse_matrix(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("matrix file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("entries")) {
    throw Error(ErrorKind::InvalidArgument, "matrix file needs keys n, k, entries");
  }
  const auto& jn = j["n"];
  const auto& jk = j["k"];
  if (!jn.is_number_unsigned() || !jk.is_number_unsigned()) {
    throw Error(ErrorKind::InvalidArgument, "n and k must be nonnegative integers");
  }
  const auto n = jn.get<std::size_t>();
  const auto k = jk.get<std::size_t>();
  if (n == 0 || k == 0) throw Error(ErrorKind::InvalidArgument, "n and k must be positive");
  const auto& je = j["entries"];
  if (!je.is_array()) throw Error(ErrorKind::InvalidArgument, "entries must be an array");
  const std::size_t d = n * k;
  if (je.size() != d * d) {
    throw Error(ErrorKind::DimMismatch, "expected " + std::to_string(d * d) +
                                            " entries, found " + std::to_string(je.size()));
  }
  std::vector<Complex> entries;
  entries.reserve(d * d);
  for (const auto& pair : je) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw Error(ErrorKind::InvalidArgument, "each entry must be a [re, im] number pair");
    }
    entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return BlockMat(n, k, ComplexMat(d, std::move(entries)));
}

BlockMat read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

void write_matrix_file(const std::filesystem::path& path, const BlockMat& h) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << serialize_matrix(h);
}

}  // namespace partialmat

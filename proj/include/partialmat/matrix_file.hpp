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

#ifndef PARTIALMAT_MATRIX_FILE_HPP
#define PARTIALMAT_MATRIX_FILE_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "partialmat/block.hpp"

namespace partialmat {

// Matrix files are JSON text:
//   {"n":2,"k":2,"entries":[[re,im],...]}
// with (nk)^2 row-major [re, im] pairs. Doubles are written in shortest
// round-trip form, so parse(serialize(h)) == h bit for bit.

std::string serialize_matrix(const BlockMat& h);

/// Throws InvalidArgument on malformed text and DimMismatch when the entry
/// count is not (nk)^2.
BlockMat parse_matrix(std::string_view text);

BlockMat read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const BlockMat& h);

}  // namespace partialmat

#endif

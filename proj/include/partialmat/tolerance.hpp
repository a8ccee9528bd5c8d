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

#ifndef PARTIALMAT_TOLERANCE_HPP
#define PARTIALMAT_TOLERANCE_HPP

#include <algorithm>

namespace partialmat {

/// Mixed absolute/relative tolerance used by every numeric comparison.
///
/// A quantity q counts as "nonnegative" when q >= -(abs + rel * scale),
/// where scale = max(1, largest magnitude among the compared quantities).
struct Tolerance {
  double abs = 1e-12;
  double rel = 1e-9;

  double bound(double scale) const { return abs + rel * std::max(1.0, scale); }

  bool nonnegative(double q, double scale) const { return q >= -bound(scale); }
};

}  // namespace partialmat

#endif

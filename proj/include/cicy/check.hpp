// Copyright 2026 The cicy-invariants Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CICY_CHECK_HPP_
#define CICY_CHECK_HPP_

#include "cicy/dataset.hpp"

#include <cstdint>
#include <vector>

namespace cicy
{
struct CheckOptions
{
  RangeConvention convention = RangeConvention::kLiteral;
  /// Random simultaneous row/column permutations tried per record.
  int permutations_per_record = 3;
  std::uint64_t seed = 0x5eed;
};

struct CheckReport
{
  std::size_t records = 0;
  std::size_t checks = 0;
  std::vector<Diagnostic> violations;
};

/// Re-derives every record from its configuration and checks:
/// permanent route == polynomial route for all d_rst, closed-form Chern
/// classes == series expansion, c1 = 0, chi = 2(h11 - h21) when Hodge numbers
/// are attached, gcd invariants unchanged under random row/column
/// permutations, divisibility of d_rst by d1 and [c2]_t by dp, and no inexact
/// division anywhere. Unfavorable records only get the Chern checks.
CheckReport run_invariant_battery(
  const std::vector<DatasetRecord> & records, const CheckOptions & options = {});

}  // namespace cicy

#endif  // CICY_CHECK_HPP_

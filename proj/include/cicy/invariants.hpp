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

#ifndef CICY_INVARIANTS_HPP_
#define CICY_INVARIANTS_HPP_

#include "cicy/chern.hpp"
#include "cicy/symmetric_tensor.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cicy
{
/// Index ranges used for the generating sets of d2 and d3.
///
/// kLiteral:
///   d2 = gcd{ d_rrs (all r, s), 2 d_rst (r < s < t) }
///   d3 = gcd{ d_rrr, 3 (d_rrs + d_rss), 3 (d_rrs - d_rss) (r < s), 6 d_rst (r < s < t) }
/// kCubicForm (coefficients of d(x, x, .) and d(x, x, x)):
///   d2 = gcd{ d_rrt (all r, t), 2 d_rst (r < s, all t) }
///   d3 = gcd{ d_rrr, 3 d_rrs (r != s), 6 d_rst (r < s < t) }
enum class RangeConvention { kLiteral, kCubicForm };

std::string_view to_string(RangeConvention convention);
std::optional<RangeConvention> parse_range_convention(std::string_view text);

struct GcdInvariants
{
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  std::int64_t d3 = 0;
  std::int64_t dp = 0;

  auto operator<=>(const GcdInvariants &) const = default;
};

/// gcd over a list with gcd() = 0 and gcd(0, a) = |a|.
std::int64_t gcd_of(std::span<const std::int64_t> values);

GcdInvariants gcd_invariants(
  const IntersectionTensor & d, const IntVector & c2_contracted,
  RangeConvention convention = RangeConvention::kLiteral);

struct HodgeNumbers
{
  int h11 = 0;
  int h21 = 0;

  auto operator<=>(const HodgeNumbers &) const = default;
};

/// (h11, h21, d1, d2, d3, dp); ordered lexicographically.
struct InvariantTuple
{
  int h11 = 0;
  int h21 = 0;
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  std::int64_t d3 = 0;
  std::int64_t dp = 0;

  auto operator<=>(const InvariantTuple &) const = default;
};

std::string to_string(const InvariantTuple & tuple);

class MissingHodge : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Throws MissingHodge when `hodge` is empty.
InvariantTuple topological_key(
  const std::optional<HodgeNumbers> & hodge, const GcdInvariants & gcds, std::string_view id = {});

/// Partition of item indices by key, buckets in ascending key order and
/// indices ascending inside each bucket.
struct Classification
{
  std::vector<InvariantTuple> keys;
  std::vector<std::vector<std::size_t>> buckets;

  std::size_t bucket_count() const { return buckets.size(); }
  /// bucket size -> number of buckets of that size
  std::map<std::size_t, std::size_t> size_histogram() const;
};

Classification classify(std::span<const InvariantTuple> keys);

}  // namespace cicy

#endif  // CICY_INVARIANTS_HPP_

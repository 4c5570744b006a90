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

#include "cicy/invariants.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace cicy
{
std::string_view to_string(RangeConvention convention)
{
  return convention == RangeConvention::kCubicForm ? "cubic-form" : "literal";
}

std::optional<RangeConvention> parse_range_convention(std::string_view text)
{
  if (text == "literal") {
    return RangeConvention::kLiteral;
  }
  if (text == "cubic-form") {
    return RangeConvention::kCubicForm;
  }
  return std::nullopt;
}

std::int64_t gcd_of(std::span<const std::int64_t> values)
{
  std::int64_t g = 0;
  for (std::int64_t v : values) {
    g = std::gcd(g, v);
  }
  return g;
}

namespace
{
class GcdAccumulator
{
public:
  void add(std::int64_t v) { value_ = std::gcd(value_, v); }
  std::int64_t value() const { return value_; }

private:
  std::int64_t value_ = 0;
};
}  // namespace

GcdInvariants gcd_invariants(
  const IntersectionTensor & d, const IntVector & c2_contracted, RangeConvention convention)
{
  const Index h = d.dim();
  if (c2_contracted.size() != h) {
    throw std::invalid_argument("gcd_invariants: dimension mismatch");
  }
  GcdAccumulator d1;
  GcdAccumulator d2;
  GcdAccumulator d3;
  GcdAccumulator dp;

  d.for_each_sorted([&](Index, Index, Index, std::int64_t v) { d1.add(v); });

  for (Index r = 0; r < h; ++r) {
    for (Index s = 0; s < h; ++s) {
      d2.add(d(r, r, s));
    }
  }
  for (Index r = 0; r < h; ++r) {
    d3.add(d(r, r, r));
  }
  for (Index r = 0; r < h; ++r) {
    for (Index s = r + 1; s < h; ++s) {
      if (convention == RangeConvention::kLiteral) {
        d3.add(3 * (d(r, r, s) + d(r, s, s)));
        d3.add(3 * (d(r, r, s) - d(r, s, s)));
      } else {
        d3.add(3 * d(r, r, s));
        d3.add(3 * d(r, s, s));
        for (Index t = 0; t < h; ++t) {
          d2.add(2 * d(r, s, t));
        }
      }
      for (Index t = s + 1; t < h; ++t) {
        if (convention == RangeConvention::kLiteral) {
          d2.add(2 * d(r, s, t));
        }
        d3.add(6 * d(r, s, t));
      }
    }
  }
  for (Index t = 0; t < h; ++t) {
    dp.add(c2_contracted(t));
  }
  return GcdInvariants{d1.value(), d2.value(), d3.value(), dp.value()};
}

std::string to_string(const InvariantTuple & tuple)
{
  std::ostringstream os;
  os << '(' << tuple.h11 << ", " << tuple.h21 << ", " << tuple.d1 << ", " << tuple.d2 << ", "
     << tuple.d3 << ", " << tuple.dp << ')';
  return os.str();
}

InvariantTuple topological_key(
  const std::optional<HodgeNumbers> & hodge, const GcdInvariants & gcds, std::string_view id)
{
  if (!hodge) {
    throw MissingHodge("record '" + std::string(id) + "' has no Hodge numbers");
  }
  return InvariantTuple{hodge->h11, hodge->h21, gcds.d1, gcds.d2, gcds.d3, gcds.dp};
}

std::map<std::size_t, std::size_t> Classification::size_histogram() const
{
  std::map<std::size_t, std::size_t> out;
  for (const auto & bucket : buckets) {
    ++out[bucket.size()];
  }
  return out;
}

Classification classify(std::span<const InvariantTuple> keys)
{
  std::map<InvariantTuple, std::vector<std::size_t>> grouped;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    grouped[keys[i]].push_back(i);
  }
  Classification out;
  for (auto & [key, members] : grouped) {
    out.keys.push_back(key);
    out.buckets.push_back(std::move(members));
  }
  return out;
}

}  // namespace cicy

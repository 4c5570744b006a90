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

#include "cicy/intersection.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <numeric>

namespace
{
using cicy::GcdInvariants;
using cicy::Index;
using cicy::IntVector;
using cicy::InvariantTuple;
using cicy::RangeConvention;
using cicy::testing::bicubic;
using cicy::testing::quintic;

GcdInvariants invariants_of(
  const cicy::ConfigurationMatrix & raw, RangeConvention convention = RangeConvention::kLiteral)
{
  const auto c = cicy::reduce(raw);
  const auto d = cicy::intersection_tensor(c);
  const auto chern = cicy::chern_data(c, d);
  return cicy::gcd_invariants(d, chern.c2_contracted, convention);
}

// Literal generating sets enumerated over all ordered index tuples and
// classified by index pattern.
GcdInvariants reference_literal(const cicy::IntersectionTensor & d, const IntVector & c2)
{
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  std::int64_t d3 = 0;
  std::int64_t dp = 0;
  const Index h = d.dim();
  for (Index r = 0; r < h; ++r) {
    for (Index s = 0; s < h; ++s) {
      for (Index t = 0; t < h; ++t) {
        d1 = std::gcd(d1, d(r, s, t));
        const bool distinct = r != s && s != t && r != t;
        if (distinct) {
          d2 = std::gcd(d2, 2 * d(r, s, t));
          d3 = std::gcd(d3, 6 * d(r, s, t));
        }
      }
      d2 = std::gcd(d2, d(r, r, s));
      if (r == s) {
        d3 = std::gcd(d3, d(r, r, r));
      } else {
        d3 = std::gcd(d3, 3 * (d(r, r, s) + d(r, s, s)));
        d3 = std::gcd(d3, 3 * (d(r, r, s) - d(r, s, s)));
      }
    }
    dp = std::gcd(dp, c2(r));
  }
  return {d1, d2, d3, dp};
}

TEST(GcdInvariantsTest, Quintic)
{
  const GcdInvariants expected{5, 5, 5, 50};
  EXPECT_EQ(invariants_of(quintic()), expected);
  EXPECT_EQ(invariants_of(quintic(), RangeConvention::kCubicForm), expected);
}

TEST(GcdInvariantsTest, BicubicLiteral)
{
  const GcdInvariants expected{3, 3, 18, 36};
  EXPECT_EQ(invariants_of(bicubic()), expected);
}

TEST(GcdInvariantsTest, BicubicCubicForm)
{
  // The cubic form 9 x1^2 x2 + 9 x1 x2^2 has coefficient gcd 9.
  const GcdInvariants expected{3, 3, 9, 36};
  EXPECT_EQ(invariants_of(bicubic(), RangeConvention::kCubicForm), expected);
}

TEST(GcdInvariantsTest, ZeroTensorGivesZeros)
{
  const GcdInvariants zeros{};
  EXPECT_EQ(cicy::gcd_invariants(cicy::IntersectionTensor(3), IntVector::Zero(3)), zeros);
  EXPECT_EQ(cicy::gcd_invariants(cicy::IntersectionTensor(0), IntVector(0)), zeros);
}

TEST(GcdInvariantsTest, DimensionMismatchThrows)
{
  EXPECT_THROW(
    cicy::gcd_invariants(cicy::IntersectionTensor(2), IntVector::Zero(3)), std::invalid_argument);
}

TEST(GcdOfTest, Conventions)
{
  EXPECT_EQ(cicy::gcd_of({}), 0);
  const std::vector<std::int64_t> a{0, -6};
  EXPECT_EQ(cicy::gcd_of(a), 6);
  const std::vector<std::int64_t> b{12, 18, 0};
  EXPECT_EQ(cicy::gcd_of(b), 6);
}

TEST(ConventionTest, ParseAndPrint)
{
  EXPECT_EQ(cicy::parse_range_convention("literal"), RangeConvention::kLiteral);
  EXPECT_EQ(cicy::parse_range_convention("cubic-form"), RangeConvention::kCubicForm);
  EXPECT_FALSE(cicy::parse_range_convention("other").has_value());
  EXPECT_EQ(cicy::to_string(RangeConvention::kCubicForm), "cubic-form");
}

TEST(GcdProperty, MatchesOrderedTupleReference)
{
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = cicy::reduce(cicy::testing::random_config_up_to(rng, 5, 8));
    const auto d = cicy::intersection_tensor(c);
    const auto chern = cicy::chern_data(c, d);
    EXPECT_EQ(cicy::gcd_invariants(d, chern.c2_contracted), reference_literal(d, chern.c2_contracted));
  }
}

TEST(GcdProperty, DivisibilityAndBasisPermutationInvariance)
{
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = cicy::reduce(cicy::testing::random_config_up_to(rng, 6, 9));
    const auto d = cicy::intersection_tensor(c);
    const auto chern = cicy::chern_data(c, d);
    for (auto convention : {RangeConvention::kLiteral, RangeConvention::kCubicForm}) {
      const auto g = cicy::gcd_invariants(d, chern.c2_contracted, convention);
      d.for_each_sorted([&](Index, Index, Index, std::int64_t v) {
        EXPECT_EQ(g.d1 == 0 ? v : v % g.d1, 0);
      });
      for (Index t = 0; t < chern.c2_contracted.size(); ++t) {
        EXPECT_EQ(g.dp == 0 ? chern.c2_contracted(t) : chern.c2_contracted(t) % g.dp, 0);
      }
      // d2's set contains every d_rrs, d3's every d_rrr: both are multiples of d1.
      EXPECT_EQ(g.d1 == 0 ? g.d2 : g.d2 % g.d1, 0);

      const auto perm = cicy::testing::random_permutation(rng, d.dim());
      IntVector c2p(d.dim());
      for (Index t = 0; t < d.dim(); ++t) {
        c2p(t) = chern.c2_contracted(perm[static_cast<std::size_t>(t)]);
      }
      EXPECT_EQ(cicy::gcd_invariants(d.permuted(perm), c2p, convention), g);
    }
  }
}

TEST(TopologicalKeyTest, AssemblesTuple)
{
  const auto key = cicy::topological_key(cicy::HodgeNumbers{1, 101}, GcdInvariants{5, 5, 5, 50});
  EXPECT_EQ(key, (InvariantTuple{1, 101, 5, 5, 5, 50}));
  EXPECT_EQ(cicy::to_string(key), "(1, 101, 5, 5, 5, 50)");
}

TEST(TopologicalKeyTest, MissingHodgeThrows)
{
  EXPECT_THROW(cicy::topological_key(std::nullopt, GcdInvariants{}, "x"), cicy::MissingHodge);
}

TEST(ClassifyTest, Buckets)
{
  const InvariantTuple a{1, 101, 5, 5, 5, 50};
  const InvariantTuple b{2, 83, 3, 3, 18, 36};
  {
    const std::vector<InvariantTuple> one{a};
    const auto c = cicy::classify(one);
    EXPECT_EQ(c.bucket_count(), 1u);
  }
  {
    const std::vector<InvariantTuple> keys{b, a, b};
    const auto c = cicy::classify(keys);
    ASSERT_EQ(c.bucket_count(), 2u);
    EXPECT_EQ(c.keys[0], a);
    EXPECT_EQ(c.buckets[1], (std::vector<std::size_t>{0, 2}));
    const auto hist = c.size_histogram();
    EXPECT_EQ(hist.at(1), 1u);
    EXPECT_EQ(hist.at(2), 1u);
  }
  EXPECT_EQ(cicy::classify({}).bucket_count(), 0u);
}

}  // namespace

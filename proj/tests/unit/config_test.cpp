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

#include "cicy/config.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace
{
using cicy::Index;
using cicy::testing::bicubic;
using cicy::testing::make_config;
using cicy::testing::quintic;

TEST(ValidateTest, QuinticAndBicubicAreValid)
{
  EXPECT_TRUE(cicy::validate(quintic()).ok());
  EXPECT_TRUE(cicy::validate(bicubic()).ok());
}

TEST(ValidateTest, BrokenRowSumIsNamed)
{
  const auto report = cicy::validate(make_config("bad", {4}, {{4}}));
  ASSERT_FALSE(report.ok());
  // The dimension sum still matches (4 = 3 + 1); only the row sum is wrong.
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0], "row 1 sums to 4, expected 5");
}

TEST(ValidateTest, ReportsEveryViolation)
{
  // n = (0, 3): non-positive dim; 0 + 3 != 3 + 2; row sums wrong; column 2 zero.
  const auto report = cicy::validate(make_config("bad", {0, 3}, {{1, 0}, {2, 0}}));
  EXPECT_GE(report.violations.size(), 4u);
  const auto has = [&](const std::string & needle) {
    return std::any_of(report.violations.begin(), report.violations.end(), [&](const auto & v) {
      return v.find(needle) != std::string::npos;
    });
  };
  EXPECT_TRUE(has("n_1 = 0 is not positive"));
  EXPECT_TRUE(has("ambient dimensions sum to 3, expected 3 + k = 5"));
  EXPECT_TRUE(has("row 2 sums to 2, expected 4"));
  EXPECT_TRUE(has("column 2 is all zero"));
}

TEST(ValidateTest, NegativeEntryAndShapeMismatch)
{
  EXPECT_FALSE(cicy::validate(make_config("neg", {4}, {{-1}})).ok());
  auto c = quintic();
  c.ambient_dims.resize(2);
  c.ambient_dims << 4, 1;
  const auto report = cicy::validate(c);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_NE(report.violations[0].find("expected m = 1"), std::string::npos);
}

TEST(ValidateTest, EmptyConfigurationIsInvalid)
{
  cicy::ConfigurationMatrix empty;
  EXPECT_FALSE(cicy::validate(empty).ok());
}

TEST(ValidateTest, DatasetBoundsAreEnforced)
{
  std::mt19937_64 rng(3);
  const auto too_many_polys = cicy::testing::random_config(rng, 4, 19);
  const auto report = cicy::validate(too_many_polys);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0], "k = 19 exceeds 18");
}

TEST(ReduceTest, QuinticUnchanged)
{
  const auto reduced = cicy::reduce(quintic());
  EXPECT_EQ(reduced.config(), quintic());
  EXPECT_TRUE(reduced.removed_rows().empty());
  EXPECT_TRUE(reduced.removed_columns().empty());
}

TEST(ReduceTest, StripsZeroPadding)
{
  // Bicubic zero-padded to a 3x3 frame, padding rows declared with n = 0.
  const auto padded = make_config("bicubic", {2, 2, 0}, {{3, 0, 0}, {3, 0, 0}, {0, 0, 0}});
  EXPECT_FALSE(cicy::validate(padded).ok());
  const auto reduced = cicy::reduce(padded);
  EXPECT_EQ(reduced.config(), bicubic());
  EXPECT_EQ(reduced.removed_rows(), std::vector<Index>({2}));
  EXPECT_EQ(reduced.removed_columns(), std::vector<Index>({1, 2}));
}

TEST(ReduceTest, ZeroRowWithPositiveDimensionIsRejected)
{
  // A zero row would need n_i + 1 = 0.
  const auto bad = make_config("bad", {4, 1}, {{5}, {0}});
  EXPECT_THROW(cicy::reduce(bad), cicy::InvalidConfiguration);
  try {
    cicy::reduce(bad);
  } catch (const cicy::InvalidConfiguration & e) {
    EXPECT_FALSE(e.report().ok());
  }
}

TEST(ReduceTest, RejectsInvalid)
{
  EXPECT_THROW(cicy::reduce(make_config("bad", {4}, {{4}})), cicy::InvalidConfiguration);
}

TEST(ReduceProperty, ValidStaysValidAndReduceIsIdempotent)
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto c = cicy::testing::random_config_up_to(rng, 6, 10);
    ASSERT_TRUE(cicy::validate(c).ok()) << cicy::validate(c).summary();
    const auto once = cicy::reduce(c);
    EXPECT_TRUE(cicy::validate(once.config()).ok());
    EXPECT_EQ(cicy::reduce(once), once);
  }
}

TEST(PermutationProperty, PermutedConfigurationsRemainValid)
{
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = cicy::testing::random_config_up_to(rng, 6, 10);
    const auto rows = cicy::testing::random_permutation(rng, c.num_factors());
    const auto cols = cicy::testing::random_permutation(rng, c.num_polynomials());
    const auto p = cicy::permute_polynomials(cicy::permute_factors(c, rows), cols);
    EXPECT_TRUE(cicy::validate(p).ok());
    for (Index i = 0; i < c.num_factors(); ++i) {
      EXPECT_EQ(p.ambient_dims(i), c.ambient_dims(rows[static_cast<std::size_t>(i)]));
    }
  }
}

TEST(PermutationTest, RejectsNonPermutations)
{
  const std::vector<Index> dup{0, 0};
  EXPECT_THROW(cicy::permute_factors(bicubic(), dup), std::invalid_argument);
  const std::vector<Index> short_perm{};
  EXPECT_THROW(cicy::permute_polynomials(bicubic(), short_perm), std::invalid_argument);
}

}  // namespace

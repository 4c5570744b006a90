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

#include "cicy/check.hpp"

#include "cicy/intersection.hpp"
#include "cicy/oracle/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace cicy
{
namespace
{
std::string triple_name(Index r, Index s, Index t)
{
  return "(" + std::to_string(r + 1) + " " + std::to_string(s + 1) + " " + std::to_string(t + 1) +
         ")";
}

std::vector<Index> random_permutation(Index n, std::mt19937_64 & rng)
{
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

class Checker
{
public:
  Checker(const DatasetRecord & record, const CheckOptions & options, std::size_t ordinal)
  : record_(record), options_(options), rng_(options.seed + ordinal)
  {
  }

  void run(CheckReport & report)
  {
    report_ = &report;
    try {
      check();
    } catch (const std::exception & e) {
      violation(std::string("exception: ") + e.what());
    }
  }

private:
  void violation(std::string message)
  {
    report_->violations.push_back({0, record_.id, std::move(message)});
  }

  bool expect(bool condition, const std::string & message)
  {
    ++report_->checks;
    if (!condition) {
      violation(message);
    }
    return condition;
  }

  void check()
  {
    std::optional<ReducedConfiguration> reduced;
    try {
      reduced = reduce(record_.config);
    } catch (const InvalidConfiguration & e) {
      expect(false, e.what());
      return;
    }

    const auto series = oracle::chern_series_oracle(*reduced);
    expect((series.c1.array() == 0).all(), "c1 does not vanish");
    const IntMatrix c2 = chern2_doubled(*reduced);
    expect(c2 == series.c2_doubled, "closed-form c2 differs from the series expansion");
    const auto c3 = chern3_tripled(*reduced);
    expect(c3 == series.c3_tripled, "closed-form c3 differs from the series expansion");

    if (record_.hodge && record_.hodge->h11 != reduced->num_factors()) {
      return;
    }

    const IntersectionTensor tensor = intersection_tensor(*reduced);
    const IntersectionTensor reference = oracle::intersection_tensor_oracle(*reduced);
    tensor.for_each_sorted([&](Index r, Index s, Index t, std::int64_t v) {
      expect(
        v == reference(r, s, t), "d" + triple_name(r, s, t) + " = " + std::to_string(v) +
                                   " but the polynomial route gives " +
                                   std::to_string(reference(r, s, t)));
    });

    const ChernData chern = chern_data(*reduced, tensor);
    if (record_.hodge) {
      const std::int64_t expected = 2 * (record_.hodge->h11 - record_.hodge->h21);
      expect(
        chern.euler == expected, "Euler characteristic " + std::to_string(chern.euler) +
                                   " != 2(h11 - h21) = " + std::to_string(expected));
    }

    const GcdInvariants gcds = gcd_invariants(tensor, chern.c2_contracted, options_.convention);
    tensor.for_each_sorted([&](Index r, Index s, Index t, std::int64_t v) {
      expect(
        gcds.d1 == 0 ? v == 0 : v % gcds.d1 == 0,
        "d1 = " + std::to_string(gcds.d1) + " does not divide d" + triple_name(r, s, t));
    });
    for (Index t = 0; t < chern.c2_contracted.size(); ++t) {
      const auto v = chern.c2_contracted(t);
      expect(
        gcds.dp == 0 ? v == 0 : v % gcds.dp == 0,
        "dp = " + std::to_string(gcds.dp) + " does not divide [c2]_" + std::to_string(t + 1));
    }

    for (int p = 0; p < options_.permutations_per_record; ++p) {
      const auto rows = random_permutation(reduced->num_factors(), rng_);
      const auto cols = random_permutation(reduced->num_polynomials(), rng_);
      const auto permuted =
        reduce(permute_polynomials(permute_factors(reduced->config(), rows), cols));
      const IntersectionTensor t2 = intersection_tensor(permuted);
      expect(
        t2 == tensor.permuted(rows), "intersection tensor is not permutation-equivariant");
      const ChernData chern2 = chern_data(permuted, t2);
      const GcdInvariants g2 = gcd_invariants(t2, chern2.c2_contracted, options_.convention);
      expect(g2 == gcds, "gcd invariants change under a row/column permutation");
      expect(chern2.euler == chern.euler, "Euler characteristic changes under a permutation");
    }
  }

  const DatasetRecord & record_;
  const CheckOptions & options_;
  std::mt19937_64 rng_;
  CheckReport * report_ = nullptr;
};
}  // namespace

CheckReport run_invariant_battery(
  const std::vector<DatasetRecord> & records, const CheckOptions & options)
{
  CheckReport report;
  for (std::size_t i = 0; i < records.size(); ++i) {
    Checker(records[i], options, i).run(report);
    ++report.records;
  }
  return report;
}

}  // namespace cicy

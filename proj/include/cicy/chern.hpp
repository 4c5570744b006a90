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

#ifndef CICY_CHERN_HPP_
#define CICY_CHERN_HPP_

#include "cicy/config.hpp"
#include "cicy/symmetric_tensor.hpp"

#include <Eigen/Core>

#include <cstdint>

namespace cicy
{
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

// [c2]_rs is half-integral and [c3]_rst third-integral in general, so the
// coefficient tensors are stored as 2 [c2] and 3 [c3]. Both use the
// ordered-index convention c2 = sum_{r,s} [c2]_rs x_r x_s.

/// 2 [c2]_rs = -delta_rs (n_r + 1) + sum_j q_r^j q_s^j
IntMatrix chern2_doubled(const ReducedConfiguration & config);

/// 3 [c3]_rst = delta_rst (n_r + 1) - sum_j q_r^j q_s^j q_t^j
SymmetricTensor3<std::int64_t> chern3_tripled(const ReducedConfiguration & config);

/// [c2]_t = sum over ordered (r, s) of [c2]_rs d_rst.
IntVector chern2_contracted(const IntMatrix & c2_doubled, const IntersectionTensor & d);

/// chi = sum over ordered (r, s, t) of [c3]_rst d_rst.
std::int64_t euler_characteristic(
  const SymmetricTensor3<std::int64_t> & c3_tripled, const IntersectionTensor & d);

struct ChernData
{
  IntMatrix c2_doubled;
  SymmetricTensor3<std::int64_t> c3_tripled;
  IntVector c2_contracted;
  std::int64_t euler = 0;

  friend bool operator==(const ChernData & a, const ChernData & b)
  {
    return a.c2_doubled.rows() == b.c2_doubled.rows() &&
           a.c2_doubled.cols() == b.c2_doubled.cols() && a.c2_doubled == b.c2_doubled &&
           a.c3_tripled == b.c3_tripled && a.c2_contracted.size() == b.c2_contracted.size() &&
           a.c2_contracted == b.c2_contracted && a.euler == b.euler;
  }
};

ChernData chern_data(const ReducedConfiguration & config, const IntersectionTensor & d);

}  // namespace cicy

#endif  // CICY_CHERN_HPP_

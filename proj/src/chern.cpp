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

#include "cicy/chern.hpp"

#include "cicy/intersection.hpp"

#include <string>

namespace cicy
{
IntMatrix chern2_doubled(const ReducedConfiguration & config)
{
  const IntMatrix q = config.degrees().cast<std::int64_t>();
  const IntVector n_plus_one = config.ambient_dims().cast<std::int64_t>().array() + 1;
  IntMatrix out = q * q.transpose();
  out.diagonal() -= n_plus_one;
  return out;
}

SymmetricTensor3<std::int64_t> chern3_tripled(const ReducedConfiguration & config)
{
  const IntMatrix q = config.degrees().cast<std::int64_t>();
  const Index m = q.rows();
  SymmetricTensor3<std::int64_t> out(m);
  for (Index r = 0; r < m; ++r) {
    for (Index s = r; s < m; ++s) {
      for (Index t = s; t < m; ++t) {
        std::int64_t value = -(q.row(r).array() * q.row(s).array() * q.row(t).array()).sum();
        if (r == t) {
          value += config.ambient_dims()(r) + 1;
        }
        out(r, s, t) = value;
      }
    }
  }
  return out;
}

IntVector chern2_contracted(const IntMatrix & c2_doubled, const IntersectionTensor & d)
{
  const Index h = d.dim();
  if (c2_doubled.rows() != h || c2_doubled.cols() != h) {
    throw std::invalid_argument("chern2_contracted: dimension mismatch");
  }
  IntVector out(h);
  for (Index t = 0; t < h; ++t) {
    std::int64_t sum = 0;
    for (Index r = 0; r < h; ++r) {
      for (Index s = 0; s < h; ++s) {
        sum += c2_doubled(r, s) * d(r, s, t);
      }
    }
    if (sum % 2 != 0) {
      throw InexactDivision(
        "contracted c2 component " + std::to_string(t + 1) + " is half-integral (" +
        std::to_string(sum) + "/2)");
    }
    out(t) = sum / 2;
  }
  return out;
}

std::int64_t euler_characteristic(
  const SymmetricTensor3<std::int64_t> & c3_tripled, const IntersectionTensor & d)
{
  const Index h = d.dim();
  if (c3_tripled.dim() != h) {
    throw std::invalid_argument("euler_characteristic: dimension mismatch");
  }
  std::int64_t sum = 0;
  // Ordered triples: each sorted triple stands for 1, 3 or 6 orderings.
  d.for_each_sorted([&](Index r, Index s, Index t, std::int64_t value) {
    const std::int64_t orderings = (r == t) ? 1 : (r == s || s == t) ? 3 : 6;
    sum += orderings * value * c3_tripled(r, s, t);
  });
  if (sum % 3 != 0) {
    throw InexactDivision("Euler characteristic " + std::to_string(sum) + "/3 is not integral");
  }
  return sum / 3;
}

ChernData chern_data(const ReducedConfiguration & config, const IntersectionTensor & d)
{
  ChernData out;
  out.c2_doubled = chern2_doubled(config);
  out.c3_tripled = chern3_tripled(config);
  out.c2_contracted = chern2_contracted(out.c2_doubled, d);
  out.euler = euler_characteristic(out.c3_tripled, d);
  return out;
}

}  // namespace cicy

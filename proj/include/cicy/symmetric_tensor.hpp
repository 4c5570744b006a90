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

#ifndef CICY_SYMMETRIC_TENSOR_HPP_
#define CICY_SYMMETRIC_TENSOR_HPP_

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace cicy
{
/// Totally symmetric rank-3 tensor over 0..dim-1, storing one entry per
/// sorted index triple r <= s <= t.
template <typename Scalar>
class SymmetricTensor3
{
public:
  using Index = Eigen::Index;

  SymmetricTensor3() = default;
  explicit SymmetricTensor3(Index dim)
  : dim_(dim), entries_(static_cast<std::size_t>(packed_size(dim)), Scalar(0))
  {
  }

  static Index packed_size(Index dim) { return dim * (dim + 1) * (dim + 2) / 6; }

  Index dim() const { return dim_; }

  /// Any ordering of (r, s, t) reads the same entry.
  const Scalar & operator()(Index r, Index s, Index t) const { return entries_[offset(r, s, t)]; }
  Scalar & operator()(Index r, Index s, Index t) { return entries_[offset(r, s, t)]; }

  std::span<const Scalar> packed() const { return entries_; }

  /// Visits every sorted triple r <= s <= t in lexicographic order.
  template <typename Visitor>
  void for_each_sorted(Visitor && visit) const
  {
    for (Index r = 0; r < dim_; ++r) {
      for (Index s = r; s < dim_; ++s) {
        for (Index t = s; t < dim_; ++t) {
          visit(r, s, t, (*this)(r, s, t));
        }
      }
    }
  }

  /// Result entry (r, s, t) is this tensor's entry (perm[r], perm[s], perm[t]).
  SymmetricTensor3 permuted(std::span<const Index> perm) const
  {
    if (static_cast<Index>(perm.size()) != dim_) {
      throw std::invalid_argument("SymmetricTensor3::permuted: permutation has wrong length");
    }
    SymmetricTensor3 out(dim_);
    for_each_sorted([&](Index r, Index s, Index t, const Scalar &) {
      out(r, s, t) = (*this)(perm[r], perm[s], perm[t]);
    });
    return out;
  }

  bool is_zero() const
  {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar & v) { return v == 0; });
  }

  friend bool operator==(const SymmetricTensor3 & a, const SymmetricTensor3 & b)
  {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

private:
  std::size_t offset(Index r, Index s, Index t) const
  {
    if (r < 0 || s < 0 || t < 0 || r >= dim_ || s >= dim_ || t >= dim_) {
      throw std::out_of_range("SymmetricTensor3: index out of range");
    }
    std::array<Index, 3> idx{r, s, t};
    std::sort(idx.begin(), idx.end());
    // Colexicographic rank of the multiset {idx[0] <= idx[1] <= idx[2]}.
    const Index a = idx[0];
    const Index b = idx[1];
    const Index c = idx[2];
    return static_cast<std::size_t>(c * (c + 1) * (c + 2) / 6 + b * (b + 1) / 2 + a);
  }

  Index dim_ = 0;
  std::vector<Scalar> entries_;
};

using IntersectionTensor = SymmetricTensor3<std::int64_t>;

}  // namespace cicy

#endif  // CICY_SYMMETRIC_TENSOR_HPP_

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

#ifndef CICY_PERMANENT_HPP_
#define CICY_PERMANENT_HPP_

#include <Eigen/Core>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

namespace cicy
{
using int128 = __int128;

template <typename T>
inline constexpr bool is_builtin_integer_v =
  std::is_integral_v<T> || std::is_same_v<std::remove_cv_t<T>, __int128>;

class ArithmeticOverflow : public std::overflow_error
{
public:
  using std::overflow_error::overflow_error;
};

class NonSquareMatrix : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Overflow-checked addition for builtin integers; plain addition for
/// arbitrary-precision scalars.
template <typename T>
T checked_add(const T & a, const T & b)
{
  if constexpr (is_builtin_integer_v<T>) {
    T out;
    if (__builtin_add_overflow(a, b, &out)) {
      throw ArithmeticOverflow("integer overflow in addition");
    }
    return out;
  } else {
    return a + b;
  }
}

template <typename T>
T checked_mul(const T & a, const T & b)
{
  if constexpr (is_builtin_integer_v<T>) {
    T out;
    if (__builtin_mul_overflow(a, b, &out)) {
      throw ArithmeticOverflow("integer overflow in multiplication");
    }
    return out;
  } else {
    return a * b;
  }
}

std::string to_string(int128 value);

/// Narrows with a range check.
template <typename To, typename From>
To narrow(const From & value)
{
  if constexpr (is_builtin_integer_v<From>) {
    if (value < static_cast<From>(std::numeric_limits<To>::min()) ||
        value > static_cast<From>(std::numeric_limits<To>::max())) {
      throw ArithmeticOverflow("value does not fit the target integer type");
    }
    return static_cast<To>(value);
  } else {
    return static_cast<To>(value);
  }
}

/// Permanent of a matrix whose rows come in groups of identical copies.
///
/// `row_types` holds one representative per group; a query supplies how many
/// copies of each representative the matrix contains. Expanding along columns,
/// the copies of one representative are interchangeable, so the subproblem
/// after fixing the first c columns is determined by the remaining copy count
/// of every representative. Those subproblems are memoized and shared across
/// queries with the same representatives, which is what makes the per-triple
/// extended matrices of a configuration cheap: they differ only in copy counts.
///
/// Zero entries and exhausted representatives are pruned.
template <typename Scalar = int128>
class RowMultisetPermanent
{
public:
  using Matrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

  /// `max_copies[i]` bounds the copy count of representative i in any query.
  RowMultisetPermanent(Matrix row_types, std::vector<int> max_copies)
  : rows_(std::move(row_types)), max_copies_(std::move(max_copies))
  {
    if (static_cast<Eigen::Index>(max_copies_.size()) != rows_.rows()) {
      throw std::invalid_argument("RowMultisetPermanent: one bound per row type required");
    }
    strides_.resize(max_copies_.size());
    std::uint64_t stride = 1;
    for (std::size_t i = 0; i < max_copies_.size(); ++i) {
      if (max_copies_[i] < 0) {
        throw std::invalid_argument("RowMultisetPermanent: negative copy bound");
      }
      strides_[i] = stride;
      const auto radix = static_cast<std::uint64_t>(max_copies_[i]) + 1;
      if (stride > std::numeric_limits<std::uint64_t>::max() / radix) {
        throw std::length_error("RowMultisetPermanent: state space too large");
      }
      stride *= radix;
    }
  }

  /// Permanent of the square matrix containing `copies[i]` copies of
  /// representative i. Copy counts must sum to the column count.
  Scalar operator()(std::span<const int> copies)
  {
    if (copies.size() != max_copies_.size()) {
      throw std::invalid_argument("RowMultisetPermanent: copy vector has wrong length");
    }
    long total = 0;
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < copies.size(); ++i) {
      if (copies[i] < 0 || copies[i] > max_copies_[i]) {
        throw std::out_of_range("RowMultisetPermanent: copy count out of bounds");
      }
      total += copies[i];
      code += strides_[i] * static_cast<std::uint64_t>(copies[i]);
    }
    if (total != rows_.cols()) {
      throw NonSquareMatrix(
        "extended matrix has " + std::to_string(total) + " rows and " +
        std::to_string(rows_.cols()) + " columns");
    }
    remaining_.assign(copies.begin(), copies.end());
    return expand(code, 0);
  }

  std::size_t cache_size() const { return memo_.size(); }

private:
  // The remaining copy counts sum to cols - column, so `code` alone keys the
  // subproblem.
  Scalar expand(std::uint64_t code, Eigen::Index column)
  {
    if (column == rows_.cols()) {
      return Scalar(1);
    }
    if (auto it = memo_.find(code); it != memo_.end()) {
      return it->second;
    }
    Scalar sum(0);
    for (Eigen::Index i = 0; i < rows_.rows(); ++i) {
      const int copies = remaining_[static_cast<std::size_t>(i)];
      const std::int64_t entry = rows_(i, column);
      if (copies == 0 || entry == 0) {
        continue;
      }
      --remaining_[static_cast<std::size_t>(i)];
      const Scalar sub = expand(code - strides_[static_cast<std::size_t>(i)], column + 1);
      ++remaining_[static_cast<std::size_t>(i)];
      if (sub != Scalar(0)) {
        const Scalar weight = Scalar(copies) * Scalar(entry);
        sum = checked_add(sum, checked_mul(weight, sub));
      }
    }
    memo_.emplace(code, sum);
    return sum;
  }

  Matrix rows_;
  std::vector<int> max_copies_;
  std::vector<std::uint64_t> strides_;
  std::vector<int> remaining_;
  std::unordered_map<std::uint64_t, Scalar> memo_;
};

namespace detail
{
template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived> & m)
{
  if (m.rows() != m.cols()) {
    throw NonSquareMatrix(
      "permanent of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
      " matrix is undefined");
  }
}

template <typename Derived>
Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> as_int64(
  const Eigen::MatrixBase<Derived> & m)
{
  static_assert(
    std::is_integral_v<typename Derived::Scalar>, "permanent expects an integer matrix");
  return m.template cast<std::int64_t>();
}

template <typename Scalar>
Scalar naive_expand(const Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> & a)
{
  const Eigen::Index n = a.rows();
  if (n == 0) {
    return Scalar(1);
  }
  if (n == 1) {
    return Scalar(a(0, 0));
  }
  if (n == 2) {
    return checked_add(
      checked_mul(Scalar(a(0, 0)), Scalar(a(1, 1))),
      checked_mul(Scalar(a(0, 1)), Scalar(a(1, 0))));
  }
  Scalar sum(0);
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> minor(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i, 0) == 0) {
      continue;
    }
    minor.topRows(i) = a.topRows(i).rightCols(n - 1);
    minor.bottomRows(n - 1 - i) = a.bottomRows(n - 1 - i).rightCols(n - 1);
    sum = checked_add(sum, checked_mul(Scalar(a(i, 0)), naive_expand<Scalar>(minor)));
  }
  return sum;
}
}  // namespace detail

/// Permanent by column expansion over grouped identical rows (see
/// RowMultisetPermanent). Exact; throws ArithmeticOverflow if `Scalar` is a
/// builtin integer that cannot hold an intermediate value.
template <typename Scalar = int128, typename Derived>
Scalar permanent(const Eigen::MatrixBase<Derived> & m)
{
  detail::require_square(m);
  const auto a = detail::as_int64(m);
  const Eigen::Index n = a.rows();
  if (n == 0) {
    return Scalar(1);
  }

  std::vector<Eigen::Index> representative;
  std::vector<int> copies;
  for (Eigen::Index i = 0; i < n; ++i) {
    auto same = std::find_if(representative.begin(), representative.end(), [&](Eigen::Index r) {
      return a.row(r) == a.row(i);
    });
    if (same == representative.end()) {
      representative.push_back(i);
      copies.push_back(1);
    } else {
      ++copies[static_cast<std::size_t>(same - representative.begin())];
    }
  }
  RowMultisetPermanent<Scalar> engine(a(representative, Eigen::all), copies);
  return engine(copies);
}

/// Ryser's inclusion-exclusion formula with Gray-code subset enumeration,
/// O(2^n n). Intermediate row sums can be large for dense inputs; prefer a
/// wide or arbitrary-precision `Scalar` there.
template <typename Scalar = int128, typename Derived>
Scalar permanent_ryser(const Eigen::MatrixBase<Derived> & m)
{
  detail::require_square(m);
  const auto a = detail::as_int64(m);
  const Eigen::Index n = a.rows();
  if (n == 0) {
    return Scalar(1);
  }
  if (n > 40) {
    throw std::length_error("permanent_ryser: matrix too large");
  }

  std::vector<Scalar> row_sums(static_cast<std::size_t>(n), Scalar(0));
  Scalar total(0);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t step = 1; step < subsets; ++step) {
    const int bit = std::countr_zero(step);
    const std::uint64_t mask = std::uint64_t{1} << bit;
    const bool added = (gray & mask) == 0;
    gray ^= mask;
    Scalar product(1);
    for (Eigen::Index i = 0; i < n; ++i) {
      auto & s = row_sums[static_cast<std::size_t>(i)];
      const Scalar entry(a(i, bit));
      s = added ? checked_add(s, entry) : checked_add(s, Scalar(-entry));
      if (product != Scalar(0)) {
        product = checked_mul(product, s);
      }
    }
    const bool odd = std::popcount(gray) % 2 == 1;
    total = odd ? checked_add(total, Scalar(-product)) : checked_add(total, product);
  }
  return (n % 2 == 1) ? Scalar(-total) : total;
}

/// Recursive first-column Laplace expansion with zero pruning and no
/// memoization. Factorial worst case; intended for small matrices and as a
/// cross-check of the faster routes.
template <typename Scalar = int128, typename Derived>
Scalar permanent_naive(const Eigen::MatrixBase<Derived> & m)
{
  detail::require_square(m);
  return detail::naive_expand<Scalar>(detail::as_int64(m));
}

enum class PermanentMethod { kExpansion, kRyser, kNaive };

template <typename Scalar = int128, typename Derived>
Scalar permanent(const Eigen::MatrixBase<Derived> & m, PermanentMethod method)
{
  switch (method) {
    case PermanentMethod::kRyser:
      return permanent_ryser<Scalar>(m);
    case PermanentMethod::kNaive:
      return permanent_naive<Scalar>(m);
    case PermanentMethod::kExpansion:
    default:
      return permanent<Scalar>(m);
  }
}

}  // namespace cicy

#endif  // CICY_PERMANENT_HPP_

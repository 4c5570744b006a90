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

#ifndef CICY_ORACLE_POLYNOMIAL_HPP_
#define CICY_ORACLE_POLYNOMIAL_HPP_

#include "cicy/permanent.hpp"

#include <map>
#include <span>
#include <vector>

namespace cicy::oracle
{
/// Sparse multivariate integer polynomial in a quotient ring that kills every
/// monomial with x_i^{e_i}, e_i > var_caps[i] (cap < 0 means unbounded), or
/// with total degree above total_cap (< 0 means unbounded).
class TruncatedPolynomial
{
public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, int128>;

  TruncatedPolynomial(std::vector<int> var_caps, int total_cap);

  static TruncatedPolynomial constant(std::vector<int> var_caps, int total_cap, int128 value);
  /// sum_i coefficients[i] x_i
  static TruncatedPolynomial linear(
    std::vector<int> var_caps, int total_cap, std::span<const std::int64_t> coefficients);
  static TruncatedPolynomial monomial(
    std::vector<int> var_caps, int total_cap, const Exponents & exponents, int128 coefficient = 1);

  std::size_t num_vars() const { return caps_.size(); }
  const Terms & terms() const { return terms_; }

  int128 coefficient(const Exponents & exponents) const;
  /// Terms of exactly this total degree.
  TruncatedPolynomial homogeneous_part(int degree) const;

  TruncatedPolynomial & operator+=(const TruncatedPolynomial & other);
  TruncatedPolynomial & operator*=(const TruncatedPolynomial & other);
  friend TruncatedPolynomial operator+(TruncatedPolynomial a, const TruncatedPolynomial & b)
  {
    return a += b;
  }
  friend TruncatedPolynomial operator*(TruncatedPolynomial a, const TruncatedPolynomial & b)
  {
    return a *= b;
  }
  TruncatedPolynomial pow(int exponent) const;
  TruncatedPolynomial operator-() const;

  bool is_zero() const { return terms_.empty(); }

private:
  bool admissible(const Exponents & exponents) const;
  void add_term(const Exponents & exponents, int128 value);
  void check_compatible(const TruncatedPolynomial & other) const;

  std::vector<int> caps_;
  int total_cap_;
  Terms terms_;
};

}  // namespace cicy::oracle

#endif  // CICY_ORACLE_POLYNOMIAL_HPP_

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

#include "cicy/oracle/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace cicy::oracle
{
TruncatedPolynomial::TruncatedPolynomial(std::vector<int> var_caps, int total_cap)
: caps_(std::move(var_caps)), total_cap_(total_cap)
{
}

TruncatedPolynomial TruncatedPolynomial::constant(
  std::vector<int> var_caps, int total_cap, int128 value)
{
  const std::size_t n = var_caps.size();
  return monomial(std::move(var_caps), total_cap, Exponents(n, 0), value);
}

TruncatedPolynomial TruncatedPolynomial::linear(
  std::vector<int> var_caps, int total_cap, std::span<const std::int64_t> coefficients)
{
  if (coefficients.size() != var_caps.size()) {
    throw std::invalid_argument("linear form has the wrong number of coefficients");
  }
  TruncatedPolynomial out(std::move(var_caps), total_cap);
  Exponents e(out.num_vars(), 0);
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    e[i] = 1;
    out.add_term(e, coefficients[i]);
    e[i] = 0;
  }
  return out;
}

TruncatedPolynomial TruncatedPolynomial::monomial(
  std::vector<int> var_caps, int total_cap, const Exponents & exponents, int128 coefficient)
{
  TruncatedPolynomial out(std::move(var_caps), total_cap);
  if (exponents.size() != out.num_vars()) {
    throw std::invalid_argument("monomial has the wrong number of exponents");
  }
  out.add_term(exponents, coefficient);
  return out;
}

int128 TruncatedPolynomial::coefficient(const Exponents & exponents) const
{
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? int128{0} : it->second;
}

TruncatedPolynomial TruncatedPolynomial::homogeneous_part(int degree) const
{
  TruncatedPolynomial out(caps_, total_cap_);
  for (const auto & [e, c] : terms_) {
    if (std::accumulate(e.begin(), e.end(), 0) == degree) {
      out.terms_.emplace(e, c);
    }
  }
  return out;
}

bool TruncatedPolynomial::admissible(const Exponents & exponents) const
{
  int total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) {
      throw std::invalid_argument("negative exponent");
    }
    if (caps_[i] >= 0 && exponents[i] > caps_[i]) {
      return false;
    }
    total += exponents[i];
  }
  return total_cap_ < 0 || total <= total_cap_;
}

void TruncatedPolynomial::add_term(const Exponents & exponents, int128 value)
{
  if (value == 0 || !admissible(exponents)) {
    return;
  }
  auto [it, inserted] = terms_.emplace(exponents, value);
  if (!inserted) {
    it->second = checked_add(it->second, value);
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

void TruncatedPolynomial::check_compatible(const TruncatedPolynomial & other) const
{
  if (caps_ != other.caps_ || total_cap_ != other.total_cap_) {
    throw std::invalid_argument("polynomials live in different quotient rings");
  }
}

TruncatedPolynomial & TruncatedPolynomial::operator+=(const TruncatedPolynomial & other)
{
  check_compatible(other);
  for (const auto & [e, c] : other.terms_) {
    add_term(e, c);
  }
  return *this;
}

TruncatedPolynomial & TruncatedPolynomial::operator*=(const TruncatedPolynomial & other)
{
  check_compatible(other);
  TruncatedPolynomial product(caps_, total_cap_);
  Exponents e(num_vars());
  for (const auto & [ea, ca] : terms_) {
    for (const auto & [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
      }
      product.add_term(e, checked_mul(ca, cb));
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

TruncatedPolynomial TruncatedPolynomial::pow(int exponent) const
{
  if (exponent < 0) {
    throw std::invalid_argument("negative power");
  }
  TruncatedPolynomial out = constant(caps_, total_cap_, 1);
  for (int i = 0; i < exponent; ++i) {
    out *= *this;
  }
  return out;
}

TruncatedPolynomial TruncatedPolynomial::operator-() const
{
  TruncatedPolynomial out(*this);
  for (auto & [e, c] : out.terms_) {
    c = -c;
  }
  return out;
}

}  // namespace cicy::oracle

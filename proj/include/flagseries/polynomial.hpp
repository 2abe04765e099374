/*
   Copyright 2026 The flagseries Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FLAGSERIES_POLYNOMIAL_HPP
#define FLAGSERIES_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "flagseries/rational.hpp"

namespace flagseries {

/// Dense univariate polynomial over Q. coeffs()[k] is the coefficient of x^k.
/// The top coefficient is nonzero; the zero polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> coeffs);
  RationalPolynomial(std::initializer_list<BigRational> coeffs);

  static RationalPolynomial constant(const BigRational& c);
  static RationalPolynomial monomial(const BigRational& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const BigRational> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^k; zero past the degree.
  BigRational coeff(std::size_t k) const;
  BigRational leading() const;

  BigRational evaluate(const BigRational& x) const;
  RationalPolynomial derivative() const;

  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator-=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const BigRational& c);

  friend RationalPolynomial operator+(RationalPolynomial lhs, const RationalPolynomial& rhs) { return lhs += rhs; }
  friend RationalPolynomial operator-(RationalPolynomial lhs, const RationalPolynomial& rhs) { return lhs -= rhs; }
  friend RationalPolynomial operator*(const RationalPolynomial& lhs, const RationalPolynomial& rhs);
  friend RationalPolynomial operator*(RationalPolynomial lhs, const BigRational& c) { return lhs *= c; }
  friend bool operator==(const RationalPolynomial& lhs, const RationalPolynomial& rhs) = default;

  /// Human-readable, e.g. "1 + 2*x + 1/2*x^2".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

}  // namespace flagseries

#endif  // FLAGSERIES_POLYNOMIAL_HPP

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

#ifndef FLAGSERIES_RATIONAL_HPP
#define FLAGSERIES_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace flagseries {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; values built from raw num/den pairs go through
// make_rational, which canonicalizes.
using BigInteger = mpz_class;
using BigRational = mpq_class;

/// Thrown for caller-supplied data that violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a cross-check between independent computations fails.
/// The message starts with the invariant name.
class InvariantViolation : public std::logic_error {
 public:
  InvariantViolation(std::string invariant, const std::string& detail)
      : std::logic_error(invariant + ": " + detail), invariant_(std::move(invariant)) {}
  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

BigRational make_rational(const BigInteger& num, const BigInteger& den);

bool is_integer(const BigRational& q);

/// Numerator of q; throws InvariantViolation(invariant) when q is not integral.
BigInteger require_integer(const BigRational& q, const std::string& invariant);

BigInteger factorial(unsigned long n);

/// "a" for integers, "a/b" otherwise, always in lowest terms.
std::string to_string(const BigRational& q);
std::string to_string(const BigInteger& z);

/// Parses "a" or "a/b" (optional leading '-'); rejects b == 0 and anything
/// that is not plain decimal digits.
BigRational parse_rational(std::string_view text);

}  // namespace flagseries

#endif  // FLAGSERIES_RATIONAL_HPP

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

#include "flagseries/rational.hpp"

#include <algorithm>
#include <cctype>

namespace flagseries {

BigRational make_rational(const BigInteger& num, const BigInteger& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

BigInteger require_integer(const BigRational& q, const std::string& invariant) {
  if (!is_integer(q)) throw InvariantViolation(invariant, "expected an integer, got " + to_string(q));
  return q.get_num();
}

BigInteger factorial(unsigned long n) {
  BigInteger f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

std::string to_string(const BigInteger& z) { return z.get_str(); }

std::string to_string(const BigRational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_decimal(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_decimal(num) || !is_decimal(den)) throw InvalidInput("malformed rational '" + std::string(text) + "'");
  BigInteger n(std::string(num), 10);
  BigInteger d(std::string(den), 10);
  if (negative) n = -n;
  return make_rational(n, d);
}

}  // namespace flagseries

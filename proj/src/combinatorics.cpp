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

#include "flagseries/combinatorics.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

namespace flagseries {

namespace {

// Triangle grown row by row. std::deque::push_back never moves existing
// elements, so references handed out under the shared lock remain valid.
class TriangleCache {
 public:
  using Recurrence = BigInteger (*)(const std::vector<BigInteger>& prev, long n, long k);

  explicit TriangleCache(Recurrence rec) : rec_(rec) { rows_.push_back({BigInteger(1)}); }

  const std::vector<BigInteger>& row(long n) {
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<long>(rows_.size())) return rows_[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<long>(rows_.size()) <= n) {
      const long m = static_cast<long>(rows_.size());
      const auto& prev = rows_.back();
      std::vector<BigInteger> next(static_cast<std::size_t>(m) + 1);
      for (long k = 0; k <= m; ++k) next[static_cast<std::size_t>(k)] = rec_(prev, m, k);
      rows_.push_back(std::move(next));
    }
    return rows_[static_cast<std::size_t>(n)];
  }

 private:
  Recurrence rec_;
  std::shared_mutex mutex_;
  std::deque<std::vector<BigInteger>> rows_;
};

BigInteger at(const std::vector<BigInteger>& row, long k) {
  return (k < 0 || k >= static_cast<long>(row.size())) ? BigInteger(0) : row[static_cast<std::size_t>(k)];
}

// S(n,k) = k S(n-1,k) + S(n-1,k-1)
BigInteger second_kind_step(const std::vector<BigInteger>& prev, long /*n*/, long k) {
  return BigInteger(k) * at(prev, k) + at(prev, k - 1);
}

// c(n,k) = (n-1) c(n-1,k) + c(n-1,k-1)
BigInteger first_kind_step(const std::vector<BigInteger>& prev, long n, long k) {
  return BigInteger(n - 1) * at(prev, k) + at(prev, k - 1);
}

TriangleCache& second_kind() {
  static TriangleCache cache(&second_kind_step);
  return cache;
}

TriangleCache& first_kind() {
  static TriangleCache cache(&first_kind_step);
  return cache;
}

}  // namespace

BigInteger binomial(long n, long k) {
  if (n < 0) throw InvalidInput("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  BigInteger r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

const std::vector<BigInteger>& stirling2_row(long n) {
  if (n < 0) throw InvalidInput("stirling2: n must be nonnegative");
  return second_kind().row(n);
}

const std::vector<BigInteger>& stirling1_row(long n) {
  if (n < 0) throw InvalidInput("stirling1: n must be nonnegative");
  return first_kind().row(n);
}

BigInteger stirling2(long n, long k) {
  if (k < 0) throw InvalidInput("stirling2: k must be nonnegative");
  return at(stirling2_row(n), k);
}

BigInteger stirling1_unsigned(long n, long k) {
  if (k < 0) throw InvalidInput("stirling1: k must be nonnegative");
  return at(stirling1_row(n), k);
}

std::vector<BigRational> elementary_symmetric(std::span<const BigRational> values) {
  std::vector<BigRational> e(values.size() + 1);
  e[0] = 1;
  std::size_t filled = 0;
  for (const auto& a : values) {
    ++filled;
    for (std::size_t j = filled; j >= 1; --j) e[j] += a * e[j - 1];
  }
  return e;
}

RationalPolynomial stirling_polynomial(long j) {
  if (j < 0) throw InvalidInput("stirling_polynomial: j must be nonnegative");
  if (j == 0) return RationalPolynomial::constant(1);
  const auto& row = stirling2_row(j);
  std::vector<BigRational> c(row.begin(), row.end());
  return RationalPolynomial(std::move(c));
}

BigInteger falling_factorial(const BigInteger& x, long k) {
  BigInteger r = 1;
  for (long i = 0; i < k; ++i) r *= x - i;
  return r;
}

}  // namespace flagseries

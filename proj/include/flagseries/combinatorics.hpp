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

#ifndef FLAGSERIES_COMBINATORICS_HPP
#define FLAGSERIES_COMBINATORICS_HPP

#include <span>
#include <vector>

#include "flagseries/polynomial.hpp"
#include "flagseries/rational.hpp"

namespace flagseries {

/// Selects the OpenMP kernel or the serial reference loop. Both produce
/// identical results; the serial path exists for testing and benchmarking.
enum class Execution { serial, parallel };

/// C(n, k); zero when k < 0 or k > n.
BigInteger binomial(long n, long k);

/// Stirling numbers of the second kind, S(0,0) = 1 and S(n,0) = 0 for n > 0.
BigInteger stirling2(long n, long k);

/// Unsigned Stirling numbers of the first kind (permutations of n with k cycles).
BigInteger stirling1_unsigned(long n, long k);

/// Row n of the second-kind triangle, entries k = 0..n.
///
/// Rows live in a process-wide table grown on demand under a lock; returned
/// references stay valid for the life of the process, so concurrent readers
/// never observe a partially built row.
const std::vector<BigInteger>& stirling2_row(long n);
const std::vector<BigInteger>& stirling1_row(long n);

/// (E_0, ..., E_d): coefficients of prod_i (1 + a_i t).
std::vector<BigRational> elementary_symmetric(std::span<const BigRational> values);

/// phi_j(x) = sum_{i=1..j} S(j,i) x^i, with phi_0 = 1 so that (x d/dx)^j e^x = phi_j(x) e^x for all j.
RationalPolynomial stirling_polynomial(long j);

/// x (x-1) ... (x-k+1).
BigInteger falling_factorial(const BigInteger& x, long k);

}  // namespace flagseries

#endif  // FLAGSERIES_COMBINATORICS_HPP

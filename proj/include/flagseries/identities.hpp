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

#ifndef FLAGSERIES_IDENTITIES_HPP
#define FLAGSERIES_IDENTITIES_HPP

#include <string>
#include <vector>

#include "flagseries/combinatorics.hpp"
#include "flagseries/rootsystem.hpp"

namespace flagseries {

struct IdentityFailure {
  std::string parameters;
  std::string lhs;
  std::string rhs;
};

/// Result of one identity sweep. `id` is the short name used on the command line.
struct IdentityReport {
  std::string id;
  std::string identity_name;
  std::string parameter_range;
  long checked_count = 0;
  std::vector<IdentityFailure> failures;

  bool verified() const noexcept { return failures.empty(); }
};

/// p_j = C(n,j)/j! for A_n with lambda = omega_1, n = 1..n_max.
IdentityReport verify_binomial_coefficients(long n_max, Execution exec = Execution::parallel);

/// sum_{j=k}^n E_j(1,1/2,...,1/n) S(j,k) = C(n,k)/k!, 0 <= k <= n <= n_max.
IdentityReport verify_harmonic_stirling(long n_max, Execution exec = Execution::parallel);

/// n! E_j(1,1/2,...,1/n) = c(n+1, j+1) and
/// sum_{j=k}^n c(n+1, j+1) S(j,k) = (n-k)! C(n,k)^2, 0 <= k <= n <= n_max.
IdentityReport verify_stirling_both_kinds(long n_max, Execution exec = Execution::parallel);

/// T(n, n-k) = sum_{j=k}^n c(n+1, j+1) S(j,k) where T(n,h) counts partial
/// bijections of height h on an n-set; T is enumerated directly for n <= 8.
IdentityReport verify_partial_bijections(long n_max, Execution exec = Execution::parallel);

/// S(n+1,k+1) = sum_{j=k}^n C(n,j) S(j,k), 0 <= k <= n <= n_max. The left side
/// uses the inclusion-exclusion formula, not the recurrence table.
IdentityReport verify_stirling_recursion(long n_max, Execution exec = Execution::parallel);

/// p_k = S(|Phi+|+1, k+1) for lambda = rho, through both computation routes.
IdentityReport verify_rho_case(const std::vector<DynkinType>& types, Execution exec = Execution::parallel);

/// Default sweep bounds and type list.
inline constexpr long kDefaultBinomialMax = 30;
inline constexpr long kDefaultHarmonicMax = 20;
inline constexpr long kDefaultBothKindsMax = 20;
inline constexpr long kDefaultPartialBijectionMax = 15;
inline constexpr long kDefaultRecursionMax = 25;
std::vector<DynkinType> default_rho_types();

/// Short command-line names: binomial, 4.3, 4.4, 4.5, stirling-recursion, rho.
const std::vector<std::string>& identity_ids();
/// Runs one identity by id; n_max <= 0 selects its default bound.
/// Throws InvalidInput for an unknown id.
IdentityReport run_identity(const std::string& id, long n_max = 0, Execution exec = Execution::parallel);

/// h! C(n,h)^2.
BigInteger partial_bijection_count(long n, long height);
/// Enumerates every partial injection of {0..n-1} into itself, bucketed by
/// domain size. Exponential; meant for n <= 8.
std::vector<BigInteger> partial_bijections_by_height(int n);

/// E_j(1, 1/2, ..., 1/n), j = 0..n.
std::vector<BigRational> harmonic_elementary_symmetric(long n);

/// S(n,k) by inclusion-exclusion.
BigInteger stirling2_explicit(long n, long k);

}  // namespace flagseries

#endif  // FLAGSERIES_IDENTITIES_HPP

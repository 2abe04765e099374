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

#include "flagseries/identities.hpp"

#include <algorithm>
#include <functional>

#include "flagseries/parallel.hpp"
#include "flagseries/series.hpp"

namespace flagseries {

namespace {

struct Partial {
  long checked = 0;
  std::vector<IdentityFailure> failures;

  void compare(const std::string& params, const BigRational& lhs, const BigRational& rhs) {
    ++checked;
    if (lhs != rhs) failures.push_back({params, to_string(lhs), to_string(rhs)});
  }
  void compare(const std::string& params, const BigInteger& lhs, const BigInteger& rhs) {
    ++checked;
    if (lhs != rhs) failures.push_back({params, to_string(lhs), to_string(rhs)});
  }
};

std::string nk(long n, long k) { return "n=" + std::to_string(n) + ",k=" + std::to_string(k); }

IdentityReport collect(std::string id, std::string name, std::string range, std::vector<Partial> parts) {
  IdentityReport report{std::move(id), std::move(name), std::move(range), 0, {}};
  for (auto& p : parts) {
    report.checked_count += p.checked;
    for (auto& f : p.failures) report.failures.push_back(std::move(f));
  }
  return report;
}

void require_positive(long n_max) {
  if (n_max < 1) throw InvalidInput("n_max must be at least 1");
}

// sum_{j=k}^n c(n+1, j+1) S(j,k)
BigInteger mixed_stirling_sum(long n, long k) {
  BigInteger acc = 0;
  for (long j = k; j <= n; ++j) acc += stirling1_unsigned(n + 1, j + 1) * stirling2(j, k);
  return acc;
}

}  // namespace

std::vector<BigRational> harmonic_elementary_symmetric(long n) {
  std::vector<BigRational> values;
  for (long i = 1; i <= n; ++i) values.push_back(make_rational(1, i));
  return elementary_symmetric(values);
}

BigInteger stirling2_explicit(long n, long k) {
  if (n < 0 || k < 0) throw InvalidInput("stirling2_explicit: arguments must be nonnegative");
  BigInteger acc = 0;
  for (long i = 0; i <= k; ++i) {
    BigInteger power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(k - i), static_cast<unsigned long>(n));
    const BigInteger term = binomial(k, i) * power;
    if (i % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc / factorial(static_cast<unsigned long>(k));
}

BigInteger partial_bijection_count(long n, long height) {
  const BigInteger c = binomial(n, height);
  if (height < 0 || height > n) return 0;
  return BigInteger(factorial(static_cast<unsigned long>(height)) * c * c);
}

std::vector<BigInteger> partial_bijections_by_height(int n) {
  if (n < 0) throw InvalidInput("partial_bijections_by_height: n must be nonnegative");
  std::vector<long> counts(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  // Element i is either left out of the domain or sent to an unused image.
  std::function<void(int, int)> extend = [&](int i, int size) {
    if (i == n) {
      ++counts[static_cast<std::size_t>(size)];
      return;
    }
    extend(i + 1, size);
    for (int y = 0; y < n; ++y) {
      if (used[static_cast<std::size_t>(y)]) continue;
      used[static_cast<std::size_t>(y)] = true;
      extend(i + 1, size + 1);
      used[static_cast<std::size_t>(y)] = false;
    }
  };
  extend(0, 0);
  return {counts.begin(), counts.end()};
}

IdentityReport verify_binomial_coefficients(long n_max, Execution exec) {
  require_positive(n_max);
  auto parts = parallel_map(n_max, exec, [](long i) {
    const long n = i + 1;
    Partial part;
    const RootSystem rs = build_root_system(DynkinType(Family::A, static_cast<int>(n)));
    const ExpPolynomial p = exp_series_operator(rs, DominantWeight::fundamental(static_cast<int>(n), 1));
    const long top = std::max<long>(n, p.degree());
    for (long j = 0; j <= top; ++j) {
      const BigRational expected = make_rational(binomial(n, j), factorial(static_cast<unsigned long>(j)));
      part.compare("n=" + std::to_string(n) + ",j=" + std::to_string(j), p.coeff(static_cast<std::size_t>(j)), expected);
    }
    return part;
  });
  return collect("binomial", "A_n first fundamental weight: p_j = C(n,j)/j!", "1 <= n <= " + std::to_string(n_max),
                 std::move(parts));
}

IdentityReport verify_harmonic_stirling(long n_max, Execution exec) {
  require_positive(n_max);
  auto parts = parallel_map(n_max, exec, [](long i) {
    const long n = i + 1;
    Partial part;
    const auto e = harmonic_elementary_symmetric(n);
    for (long k = 0; k <= n; ++k) {
      BigRational lhs = 0;
      for (long j = k; j <= n; ++j) lhs += e[static_cast<std::size_t>(j)] * BigRational(stirling2(j, k));
      part.compare(nk(n, k), lhs, make_rational(binomial(n, k), factorial(static_cast<unsigned long>(k))));
    }
    return part;
  });
  return collect("4.3", "sum_j E_j(1,1/2,...,1/n) S(j,k) = C(n,k)/k!",
                 "0 <= k <= n, 1 <= n <= " + std::to_string(n_max), std::move(parts));
}

IdentityReport verify_stirling_both_kinds(long n_max, Execution exec) {
  require_positive(n_max);
  auto parts = parallel_map(n_max, exec, [](long i) {
    const long n = i + 1;
    Partial part;
    const auto e = harmonic_elementary_symmetric(n);
    const BigInteger nfact = factorial(static_cast<unsigned long>(n));
    for (long j = 0; j <= n; ++j) {
      part.compare("n=" + std::to_string(n) + ",j=" + std::to_string(j) + " (n! E_j = c(n+1,j+1))",
                   BigRational(e[static_cast<std::size_t>(j)] * nfact), BigRational(stirling1_unsigned(n + 1, j + 1)));
    }
    for (long k = 0; k <= n; ++k) {
      const BigInteger c = binomial(n, k);
      part.compare(nk(n, k), mixed_stirling_sum(n, k), BigInteger(factorial(static_cast<unsigned long>(n - k)) * c * c));
    }
    return part;
  });
  return collect("4.4", "sum_j c(n+1,j+1) S(j,k) = (n-k)! C(n,k)^2",
                 "0 <= k <= n, 1 <= n <= " + std::to_string(n_max), std::move(parts));
}

IdentityReport verify_partial_bijections(long n_max, Execution exec) {
  require_positive(n_max);
  constexpr long kEnumerationLimit = 8;
  auto parts = parallel_map(n_max, exec, [](long i) {
    const long n = i + 1;
    Partial part;
    std::vector<BigInteger> counts;
    if (n <= kEnumerationLimit) {
      counts = partial_bijections_by_height(static_cast<int>(n));
      for (long h = 0; h <= n; ++h) {
        part.compare("n=" + std::to_string(n) + ",height=" + std::to_string(h) + " (enumeration)",
                     counts[static_cast<std::size_t>(h)], partial_bijection_count(n, h));
      }
    }
    for (long k = 0; k <= n; ++k) {
      const BigInteger t = n <= kEnumerationLimit ? counts[static_cast<std::size_t>(n - k)] : partial_bijection_count(n, n - k);
      part.compare(nk(n, k), t, mixed_stirling_sum(n, k));
    }
    return part;
  });
  return collect("4.5", "T(n,n-k) = sum_j c(n+1,j+1) S(j,k), T = partial bijections by height",
                 "0 <= k <= n, 1 <= n <= " + std::to_string(n_max) + " (enumerated for n <= 8)", std::move(parts));
}

IdentityReport verify_stirling_recursion(long n_max, Execution exec) {
  if (n_max < 0) throw InvalidInput("n_max must be nonnegative");
  auto parts = parallel_map(n_max + 1, exec, [](long n) {
    Partial part;
    for (long k = 0; k <= n; ++k) {
      BigInteger rhs = 0;
      for (long j = k; j <= n; ++j) rhs += binomial(n, j) * stirling2(j, k);
      part.compare(nk(n, k), stirling2_explicit(n + 1, k + 1), rhs);
    }
    return part;
  });
  return collect("stirling-recursion", "S(n+1,k+1) = sum_j C(n,j) S(j,k)",
                 "0 <= k <= n <= " + std::to_string(n_max), std::move(parts));
}

IdentityReport verify_rho_case(const std::vector<DynkinType>& types, Execution exec) {
  auto parts = parallel_map(static_cast<long>(types.size()), exec, [&types](long i) {
    Partial part;
    const DynkinType& type = types[static_cast<std::size_t>(i)];
    const RootSystem rs = build_root_system(type);
    const DominantWeight rho = weyl_vector(type.rank());
    const long d = static_cast<long>(rs.positive_roots.size());
    const ExpPolynomial op = exp_series_operator(rs, rho);
    const ExpPolynomial closed = exp_series_closed_form(rs, rho, Execution::serial);
    const long top = std::max<long>({d, op.degree(), closed.degree()});
    for (long k = 0; k <= top; ++k) {
      const BigRational expected(stirling2(d + 1, k + 1));
      const std::string params = type.name() + ",k=" + std::to_string(k);
      part.compare(params + " (operator)", op.coeff(static_cast<std::size_t>(k)), expected);
      part.compare(params + " (closed form)", closed.coeff(static_cast<std::size_t>(k)), expected);
    }
    return part;
  });
  std::string range;
  for (const auto& t : types) range += (range.empty() ? "" : ",") + t.name();
  return collect("rho", "lambda = rho: p_k = S(|Phi+|+1, k+1)", range, std::move(parts));
}

std::vector<DynkinType> default_rho_types() {
  std::vector<DynkinType> types;
  for (int r = 1; r <= 5; ++r) types.emplace_back(Family::A, r);
  types.emplace_back(Family::B, 2);
  types.emplace_back(Family::G, 2);
  return types;
}

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids{"binomial", "4.3", "4.4", "4.5", "stirling-recursion", "rho"};
  return ids;
}

IdentityReport run_identity(const std::string& id, long n_max, Execution exec) {
  auto bound = [n_max](long fallback) { return n_max > 0 ? n_max : fallback; };
  if (id == "binomial") return verify_binomial_coefficients(bound(kDefaultBinomialMax), exec);
  if (id == "4.3") return verify_harmonic_stirling(bound(kDefaultHarmonicMax), exec);
  if (id == "4.4") return verify_stirling_both_kinds(bound(kDefaultBothKindsMax), exec);
  if (id == "4.5") return verify_partial_bijections(bound(kDefaultPartialBijectionMax), exec);
  if (id == "stirling-recursion") return verify_stirling_recursion(bound(kDefaultRecursionMax), exec);
  if (id == "rho") return verify_rho_case(default_rho_types(), exec);
  throw InvalidInput("unknown identity '" + id + "'");
}

}  // namespace flagseries

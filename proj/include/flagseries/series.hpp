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

#ifndef FLAGSERIES_SERIES_HPP
#define FLAGSERIES_SERIES_HPP

#include <span>
#include <vector>

#include "flagseries/combinatorics.hpp"
#include "flagseries/polynomial.hpp"
#include "flagseries/rootsystem.hpp"

namespace flagseries {

/// The polynomial p(x) of a function p(x) e^x.
struct ExpPolynomial {
  RationalPolynomial poly;

  long degree() const noexcept { return poly.degree(); }
  BigRational coeff(std::size_t k) const { return poly.coeff(k); }
  friend bool operator==(const ExpPolynomial&, const ExpPolynomial&) = default;
};

/// numerator(x) / (1 - x)^pole_order.
struct OrdinarySeriesRep {
  RationalPolynomial numerator;
  long pole_order = 1;

  /// First `terms` coefficients of the power series expansion.
  std::vector<BigRational> expand(long terms) const;
};

struct HilbertData {
  long dim_variety = 0;
  BigInteger embedding_degree;
  BigInteger dim_irrep;
  RationalPolynomial hilbert_polynomial;
  ExpPolynomial exp_polynomial;
  RationalPolynomial hs_numerator;
};

/// (1 + a x d/dx) applied to p(x) e^x.
ExpPolynomial apply_operator(const ExpPolynomial& p, const BigRational& a);

/// Fold of apply_operator over the given constants starting from p = 1.
ExpPolynomial fold_operators(std::span<const BigRational> constants);

/// prod over Phi+ of (1 + c_lambda(alpha) x d/dx) applied to e^x. Zero
/// constants are identity operators and are skipped.
ExpPolynomial exp_series_operator(const RootSystem& system, const DominantWeight& lambda);

/// a_k = sum_{j=k}^{d} E_j(a_1..a_d) S(j,k) over an arbitrary constant
/// list (zeros included or not). The parallel kernel distributes k.
ExpPolynomial closed_form_from_constants(std::span<const BigRational> constants,
                                         Execution exec = Execution::parallel);

/// Same polynomial as exp_series_operator, computed from elementary symmetric
/// functions and Stirling numbers over all |Phi+| constants.
ExpPolynomial exp_series_closed_form(const RootSystem& system, const DominantWeight& lambda,
                                     Execution exec = Execution::parallel);

/// H_lambda(t) = prod (1 + t c_lambda(alpha)).
RationalPolynomial hilbert_polynomial(const RootSystem& system, const DominantWeight& lambda);

/// dim L(n lambda) = H_lambda(n); throws InvariantViolation unless a positive integer.
BigInteger dim_irrep(const RootSystem& system, const DominantWeight& lambda, long n);
BigInteger dim_irrep(const RationalPolynomial& hilbert_poly, long n);

/// Number of positive roots with c_lambda(alpha) != 0.
long dimension_of_variety(const RootSystem& system, const DominantWeight& lambda);

/// d! a_d, checked against d! prod_{c != 0} c_lambda(alpha).
BigInteger degree_of_embedding(const RootSystem& system, const DominantWeight& lambda);

/// Operator fold on 1/(1-x); pole order d+1, integer numerator with N(1) = degree.
OrdinarySeriesRep ordinary_hilbert_series(const RootSystem& system, const DominantWeight& lambda);
OrdinarySeriesRep ordinary_series_from_constants(std::span<const BigRational> constants);

/// n! [x^n] p(x) e^x = sum_{i<=min(n,deg p)} a_i n!/(n-i)!.
BigInteger taylor_dimension(const ExpPolynomial& p, long n);

/// All invariants, with every cross-check between independent routes enforced.
HilbertData analyze(const RootSystem& system, const DominantWeight& lambda, Execution exec = Execution::parallel);

}  // namespace flagseries

#endif  // FLAGSERIES_SERIES_HPP

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

#include "flagseries/series.hpp"

#include <algorithm>
#include <string>

namespace flagseries {

namespace {

std::vector<BigRational> nonzero(std::span<const BigRational> values) {
  std::vector<BigRational> out;
  for (const auto& v : values)
    if (v != 0) out.push_back(v);
  return out;
}

BigRational product_of_nonzero(std::span<const BigRational> values) {
  BigRational prod = 1;
  for (const auto& v : values)
    if (v != 0) prod *= v;
  return prod;
}

}  // namespace

ExpPolynomial apply_operator(const ExpPolynomial& p, const BigRational& a) {
  if (a == 0) return p;
  // r_k = p_k + a (k p_k + p_{k-1})
  const auto& c = p.poly.coeffs();
  std::vector<BigRational> r(c.size() + 1);
  for (std::size_t k = 0; k < r.size(); ++k) {
    const BigRational pk = k < c.size() ? c[k] : BigRational(0);
    const BigRational prev = k > 0 ? c[k - 1] : BigRational(0);
    r[k] = pk + a * (pk * static_cast<unsigned long>(k) + prev);
  }
  return {RationalPolynomial(std::move(r))};
}

ExpPolynomial fold_operators(std::span<const BigRational> constants) {
  ExpPolynomial p{RationalPolynomial::constant(1)};
  for (const auto& a : constants) p = apply_operator(p, a);
  return p;
}

ExpPolynomial exp_series_operator(const RootSystem& system, const DominantWeight& lambda) {
  return fold_operators(nonzero(c_values(system, lambda)));
}

ExpPolynomial closed_form_from_constants(std::span<const BigRational> constants, Execution exec) {
  const auto e = elementary_symmetric(constants);
  const long d = static_cast<long>(constants.size());
  // Every row up to d must exist before workers read the shared table.
  std::vector<const std::vector<BigInteger>*> rows(static_cast<std::size_t>(d) + 1);
  for (long j = 0; j <= d; ++j) rows[static_cast<std::size_t>(j)] = &stirling2_row(j);

  std::vector<BigRational> a(static_cast<std::size_t>(d) + 1);
  auto coefficient = [&](long k) {
    BigRational acc = 0;
    for (long j = k; j <= d; ++j) {
      const auto& s = (*rows[static_cast<std::size_t>(j)])[static_cast<std::size_t>(k)];
      if (s != 0 && e[static_cast<std::size_t>(j)] != 0) acc += e[static_cast<std::size_t>(j)] * s;
    }
    a[static_cast<std::size_t>(k)] = std::move(acc);
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k <= d; ++k) coefficient(k);
  } else {
    for (long k = 0; k <= d; ++k) coefficient(k);
  }
  return {RationalPolynomial(std::move(a))};
}

ExpPolynomial exp_series_closed_form(const RootSystem& system, const DominantWeight& lambda, Execution exec) {
  return closed_form_from_constants(c_values(system, lambda), exec);
}

RationalPolynomial hilbert_polynomial(const RootSystem& system, const DominantWeight& lambda) {
  RationalPolynomial h = RationalPolynomial::constant(1);
  for (const auto& c : c_values(system, lambda)) {
    if (c != 0) h *= RationalPolynomial({BigRational(1), c});
  }
  return h;
}

BigInteger dim_irrep(const RationalPolynomial& hilbert_poly, long n) {
  if (n < 0) throw InvalidInput("dim_irrep: n must be nonnegative");
  const BigInteger v = require_integer(hilbert_poly.evaluate(BigRational(n)), "dim L(n lambda) integrality");
  if (v <= 0) throw InvariantViolation("dim L(n lambda) positivity", "H(" + std::to_string(n) + ") = " + to_string(v));
  return v;
}

BigInteger dim_irrep(const RootSystem& system, const DominantWeight& lambda, long n) {
  return dim_irrep(hilbert_polynomial(system, lambda), n);
}

long dimension_of_variety(const RootSystem& system, const DominantWeight& lambda) {
  return static_cast<long>(nonzero(c_values(system, lambda)).size());
}

namespace {

BigInteger checked_degree(const ExpPolynomial& p, std::span<const BigRational> constants) {
  const long d = p.degree();
  const BigRational via_leading = BigRational(factorial(static_cast<unsigned long>(d))) * p.poly.leading();
  const BigRational via_product = BigRational(factorial(static_cast<unsigned long>(d))) * product_of_nonzero(constants);
  if (via_leading != via_product) {
    throw InvariantViolation("degree formula", "d! a_d = " + to_string(via_leading) +
                                                   " but d! prod c = " + to_string(via_product));
  }
  const BigInteger deg = require_integer(via_leading, "embedding degree integrality");
  if (deg <= 0) throw InvariantViolation("embedding degree positivity", to_string(deg));
  return deg;
}

}  // namespace

BigInteger degree_of_embedding(const RootSystem& system, const DominantWeight& lambda) {
  const auto cs = c_values(system, lambda);
  return checked_degree(fold_operators(nonzero(cs)), cs);
}

OrdinarySeriesRep ordinary_series_from_constants(std::span<const BigRational> constants) {
  // (1 + a x d/dx) N/(1-x)^m = [N (1-x) + a x N' (1-x) + a m x N] / (1-x)^{m+1}
  const RationalPolynomial one_minus_x{BigRational(1), BigRational(-1)};
  const RationalPolynomial x = RationalPolynomial::monomial(1, 1);
  OrdinarySeriesRep rep{RationalPolynomial::constant(1), 1};
  for (const auto& a : constants) {
    if (a == 0) continue;
    const RationalPolynomial& n = rep.numerator;
    RationalPolynomial next = n * one_minus_x;
    next += x * n.derivative() * one_minus_x * a;
    next += x * n * (a * rep.pole_order);
    rep.numerator = std::move(next);
    ++rep.pole_order;
  }
  return rep;
}

OrdinarySeriesRep ordinary_hilbert_series(const RootSystem& system, const DominantWeight& lambda) {
  const auto cs = c_values(system, lambda);
  OrdinarySeriesRep rep = ordinary_series_from_constants(cs);
  for (const auto& c : rep.numerator.coeffs()) require_integer(c, "Hilbert series numerator integrality");
  const long d = static_cast<long>(nonzero(cs).size());
  if (rep.pole_order != d + 1) {
    throw InvariantViolation("Hilbert series pole order",
                             "expected " + std::to_string(d + 1) + ", got " + std::to_string(rep.pole_order));
  }
  return rep;
}

std::vector<BigRational> OrdinarySeriesRep::expand(long terms) const {
  // [x^n] 1/(1-x)^m = C(n+m-1, m-1)
  std::vector<BigRational> out(static_cast<std::size_t>(std::max(terms, 0L)));
  const auto& num = numerator.coeffs();
  for (long n = 0; n < terms; ++n) {
    BigRational acc = 0;
    for (long i = 0; i <= n && i < static_cast<long>(num.size()); ++i) {
      acc += num[static_cast<std::size_t>(i)] * BigRational(binomial(n - i + pole_order - 1, pole_order - 1));
    }
    out[static_cast<std::size_t>(n)] = acc;
  }
  return out;
}

BigInteger taylor_dimension(const ExpPolynomial& p, long n) {
  if (n < 0) throw InvalidInput("taylor_dimension: n must be nonnegative");
  BigRational acc = 0;
  BigInteger falling = 1;  // n!/(n-i)!
  const auto& c = p.poly.coeffs();
  for (long i = 0; i <= n && i < static_cast<long>(c.size()); ++i) {
    if (i > 0) falling *= n - i + 1;
    acc += c[static_cast<std::size_t>(i)] * falling;
  }
  return require_integer(acc, "Taylor coefficient integrality");
}

HilbertData analyze(const RootSystem& system, const DominantWeight& lambda, Execution exec) {
  const auto cs = c_values(system, lambda);
  const auto active = nonzero(cs);
  const long d = static_cast<long>(active.size());

  HilbertData out;
  out.exp_polynomial = fold_operators(active);
  const ExpPolynomial closed = closed_form_from_constants(cs, exec);
  if (closed != out.exp_polynomial) {
    throw InvariantViolation("operator/closed-form agreement",
                             out.exp_polynomial.poly.to_string() + " vs " + closed.poly.to_string());
  }

  out.hilbert_polynomial = RationalPolynomial::constant(1);
  for (const auto& c : active) out.hilbert_polynomial *= RationalPolynomial({BigRational(1), c});

  if (out.exp_polynomial.degree() != d || out.hilbert_polynomial.degree() != d) {
    throw InvariantViolation("dimension = deg p = deg H",
                             "deg p = " + std::to_string(out.exp_polynomial.degree()) + ", deg H = " +
                                 std::to_string(out.hilbert_polynomial.degree()) + ", #nonzero c = " + std::to_string(d));
  }
  out.dim_variety = d;

  if (out.exp_polynomial.coeff(0) != 1) {
    throw InvariantViolation("constant term", "a_0 = " + to_string(out.exp_polynomial.coeff(0)));
  }
  out.dim_irrep = dim_irrep(out.hilbert_polynomial, 1);
  if (out.exp_polynomial.coeff(0) + out.exp_polynomial.coeff(1) != BigRational(out.dim_irrep)) {
    throw InvariantViolation("a_0 + a_1 = dim L(lambda)",
                             to_string(BigRational(out.exp_polynomial.coeff(0) + out.exp_polynomial.coeff(1))) +
                                 " vs " + to_string(out.dim_irrep));
  }

  out.embedding_degree = checked_degree(out.exp_polynomial, cs);

  OrdinarySeriesRep rep = ordinary_series_from_constants(active);
  for (const auto& c : rep.numerator.coeffs()) require_integer(c, "Hilbert series numerator integrality");
  if (rep.pole_order != d + 1) {
    throw InvariantViolation("Hilbert series pole order", std::to_string(rep.pole_order));
  }
  if (rep.numerator.evaluate(1) != BigRational(out.embedding_degree)) {
    throw InvariantViolation("q(1) = embedding degree",
                             to_string(rep.numerator.evaluate(1)) + " vs " + to_string(out.embedding_degree));
  }
  out.hs_numerator = std::move(rep.numerator);
  return out;
}

}  // namespace flagseries

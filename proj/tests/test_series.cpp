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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "flagseries/series.hpp"

using namespace flagseries;

namespace {

RootSystem rs_of(Family f, int rank) { return build_root_system(DynkinType(f, rank)); }

ExpPolynomial exp_of(std::initializer_list<BigRational> c) { return {RationalPolynomial(c)}; }

}  // namespace

TEST_CASE("apply_operator") {
  const ExpPolynomial one = exp_of({1});
  CHECK(apply_operator(one, 1) == exp_of({1, 1}));
  CHECK(apply_operator(exp_of({1, 1}), make_rational(1, 2)) == exp_of({1, 2, make_rational(1, 2)}));
  const ExpPolynomial p = exp_of({3, make_rational(-2, 7), 5});
  CHECK(apply_operator(p, 0) == p);
}

TEST_CASE("each nonzero operator raises the degree by one") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  ExpPolynomial p = exp_of({1});
  for (int step = 0; step < 40; ++step) {
    BigRational a = make_rational(num(rng), den(rng));
    if (a == 0) a = 1;
    const ExpPolynomial next = apply_operator(p, a);
    CHECK(next.degree() == p.degree() + 1);
    CHECK(next.poly.leading() == p.poly.leading() * a);
    p = next;
  }
}

TEST_CASE("fold order does not matter") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(0, 12), den(1, 6);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<BigRational> cs;
    for (int i = 0; i < 10; ++i) cs.push_back(make_rational(num(rng), den(rng)));
    const ExpPolynomial ref = fold_operators(cs);
    std::shuffle(cs.begin(), cs.end(), rng);
    CHECK(fold_operators(cs) == ref);
  }
}

TEST_CASE("operator fold examples") {
  CHECK(exp_series_operator(rs_of(Family::A, 1), DominantWeight({1})) == exp_of({1, 1}));
  for (int n = 1; n <= 30; ++n) {
    const ExpPolynomial p = exp_series_operator(rs_of(Family::A, n), DominantWeight::fundamental(n, 1));
    REQUIRE(p.degree() == n);
    for (int j = 0; j <= n; ++j) CHECK(p.coeff(static_cast<std::size_t>(j)) == make_rational(binomial(n, j), factorial(static_cast<unsigned long>(j))));
  }
  const RootSystem g2 = rs_of(Family::G, 2);
  const ExpPolynomial rho = exp_series_operator(g2, weyl_vector(2));
  CHECK(rho == exp_of({1, 63, 301, 350, 140, 21, 1}));
}

TEST_CASE("closed form agrees with the operator fold") {
  const RootSystem a2 = rs_of(Family::A, 2);
  CHECK(exp_series_closed_form(a2, DominantWeight({1, 0})) == exp_of({1, 2, make_rational(1, 2)}));
  CHECK(exp_series_closed_form(a2, DominantWeight({0, 0})) == exp_of({1}));
  for (const auto& type : {DynkinType(Family::B, 3), DynkinType(Family::C, 3), DynkinType(Family::G, 2), DynkinType(Family::D, 4),
                           DynkinType(Family::F, 4)}) {
    const RootSystem rs = build_root_system(type);
    const long d = static_cast<long>(rs.positive_roots.size());
    const ExpPolynomial rho = exp_series_closed_form(rs, weyl_vector(type.rank()));
    for (long k = 0; k <= d; ++k) CHECK(rho.coeff(static_cast<std::size_t>(k)) == BigRational(stirling2(d + 1, k + 1)));
    for (long w = 0; w < type.rank(); ++w) {
      std::vector<long> coords(static_cast<std::size_t>(type.rank()), 0);
      coords[static_cast<std::size_t>(w)] = 2;
      coords[0] += 1;
      const DominantWeight lambda(coords);
      const ExpPolynomial serial = exp_series_closed_form(rs, lambda, Execution::serial);
      CHECK(serial == exp_series_closed_form(rs, lambda, Execution::parallel));
      CHECK(serial == exp_series_operator(rs, lambda));
    }
  }
}

TEST_CASE("hilbert polynomial") {
  for (long m = 0; m <= 5; ++m) {
    const RationalPolynomial h = hilbert_polynomial(rs_of(Family::A, 1), DominantWeight({m}));
    CHECK(h == (m == 0 ? RationalPolynomial::constant(1) : RationalPolynomial{BigRational(1), BigRational(m)}));
  }
  CHECK(hilbert_polynomial(rs_of(Family::A, 2), DominantWeight({1, 0})) ==
        RationalPolynomial{BigRational(1), make_rational(3, 2), make_rational(1, 2)});
  const RootSystem b3 = rs_of(Family::B, 3);
  RationalPolynomial expected = RationalPolynomial::constant(1);
  for (int i = 0; i < 9; ++i) expected *= RationalPolynomial{BigRational(1), BigRational(1)};
  CHECK(hilbert_polynomial(b3, weyl_vector(3)) == expected);
}

TEST_CASE("dim_irrep") {
  const RootSystem a2 = rs_of(Family::A, 2);
  CHECK(dim_irrep(a2, DominantWeight({1, 0}), 0) == 1);
  CHECK(dim_irrep(a2, DominantWeight({1, 0}), 1) == 3);
  CHECK(dim_irrep(rs_of(Family::E, 6), DominantWeight({1, 2, 0, 1, 0, 0}), 0) == 1);
  for (long m = 0; m <= 10; ++m) CHECK(dim_irrep(rs_of(Family::A, 1), DominantWeight({1}), m) == m + 1);
  CHECK_THROWS_AS(dim_irrep(RationalPolynomial{BigRational(1), make_rational(1, 2)}, 1), InvariantViolation);
  CHECK_THROWS_AS(dim_irrep(RationalPolynomial{BigRational(1), BigRational(-3)}, 1), InvariantViolation);
  CHECK_THROWS_AS(dim_irrep(a2, DominantWeight({1, 0}), -1), InvalidInput);
}

TEST_CASE("dimension and degree of well-known embeddings") {
  for (int n = 1; n <= 8; ++n) {
    const RootSystem an = rs_of(Family::A, n);
    CHECK(dimension_of_variety(an, DominantWeight::fundamental(n, 1)) == n);
    CHECK(degree_of_embedding(an, DominantWeight::fundamental(n, 1)) == 1);
    CHECK(dimension_of_variety(an, weyl_vector(n)) == static_cast<long>(an.positive_roots.size()));
    CHECK(dimension_of_variety(an, DominantWeight::zero(n)) == 0);
    CHECK(degree_of_embedding(an, DominantWeight::zero(n)) == 1);
    // Veronese embedding of P^n of degree m has degree m^n
    for (long m = 2; m <= 4; ++m) {
      std::vector<long> w(static_cast<std::size_t>(n), 0);
      w[0] = m;
      BigInteger expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n));
      CHECK(degree_of_embedding(an, DominantWeight(w)) == expected);
    }
  }
  for (long m = 1; m <= 6; ++m) CHECK(degree_of_embedding(rs_of(Family::A, 1), DominantWeight({m})) == m);
  CHECK(degree_of_embedding(rs_of(Family::A, 2), weyl_vector(2)) == 6);
  // Grassmannians Gr(2, n+1): degree is the Catalan number C_{n-1}
  CHECK(degree_of_embedding(rs_of(Family::A, 3), DominantWeight({0, 1, 0})) == 2);
  CHECK(degree_of_embedding(rs_of(Family::A, 4), DominantWeight({0, 1, 0, 0})) == 5);
  CHECK(degree_of_embedding(rs_of(Family::A, 5), DominantWeight({0, 1, 0, 0, 0})) == 14);
  CHECK(dimension_of_variety(rs_of(Family::A, 5), DominantWeight({0, 1, 0, 0, 0})) == 8);
  // quadrics
  CHECK(degree_of_embedding(rs_of(Family::B, 3), DominantWeight({1, 0, 0})) == 2);
  CHECK(dimension_of_variety(rs_of(Family::B, 3), DominantWeight({1, 0, 0})) == 5);
  CHECK(degree_of_embedding(rs_of(Family::D, 5), DominantWeight({1, 0, 0, 0, 0})) == 2);
  CHECK(dimension_of_variety(rs_of(Family::D, 5), DominantWeight({1, 0, 0, 0, 0})) == 8);
  CHECK(degree_of_embedding(rs_of(Family::C, 2), DominantWeight({0, 1})) == 2);
  // Sp(2n) acts transitively on P^{2n-1}
  CHECK(degree_of_embedding(rs_of(Family::C, 3), DominantWeight({1, 0, 0})) == 1);
  CHECK(dimension_of_variety(rs_of(Family::C, 3), DominantWeight({1, 0, 0})) == 5);
}

TEST_CASE("ordinary Hilbert series") {
  const OrdinarySeriesRep point = ordinary_hilbert_series(rs_of(Family::A, 1), DominantWeight({0}));
  CHECK(point.numerator == RationalPolynomial::constant(1));
  CHECK(point.pole_order == 1);

  const OrdinarySeriesRep line = ordinary_hilbert_series(rs_of(Family::A, 1), DominantWeight({1}));
  CHECK(line.numerator == RationalPolynomial::constant(1));
  CHECK(line.pole_order == 2);

  const OrdinarySeriesRep plane = ordinary_hilbert_series(rs_of(Family::A, 2), DominantWeight({1, 0}));
  CHECK(plane.pole_order == 3);
  CHECK(plane.numerator.evaluate(1) == 1);
  const auto dims = plane.expand(8);
  for (long n = 0; n < 8; ++n) CHECK(dims[static_cast<std::size_t>(n)] == BigRational(binomial(n + 2, 2)));

  // full flag variety of SL3: q(1) = 6
  const OrdinarySeriesRep flag = ordinary_hilbert_series(rs_of(Family::A, 2), weyl_vector(2));
  CHECK(flag.numerator.evaluate(1) == 6);
  CHECK(flag.pole_order == 4);
}

TEST_CASE("taylor_dimension") {
  for (long n = 0; n < 10; ++n) CHECK(taylor_dimension(exp_of({1}), n) == 1);
  CHECK(taylor_dimension(exp_of({1, 1}), 3) == 4);
  const ExpPolynomial a2 = exp_series_operator(rs_of(Family::A, 2), DominantWeight({1, 0}));
  CHECK(taylor_dimension(a2, 2) == 6);
  CHECK(taylor_dimension(a2, 2) == dim_irrep(rs_of(Family::A, 2), DominantWeight({1, 0}), 2));
  CHECK_THROWS_AS(taylor_dimension(exp_of({1, make_rational(1, 2)}), 1), InvariantViolation);
}

TEST_CASE("analyze") {
  const HilbertData a2 = analyze(rs_of(Family::A, 2), DominantWeight({1, 0}));
  CHECK(a2.dim_variety == 2);
  CHECK(a2.embedding_degree == 1);
  CHECK(a2.dim_irrep == 3);
  CHECK(a2.hs_numerator.evaluate(1) == 1);

  const HilbertData a1 = analyze(rs_of(Family::A, 1), DominantWeight({2}));
  CHECK(a1.dim_variety == 1);
  CHECK(a1.embedding_degree == 2);
  CHECK(a1.dim_irrep == 3);
  CHECK(a1.exp_polynomial == exp_of({1, 2}));

  const HilbertData g2 = analyze(rs_of(Family::G, 2), weyl_vector(2));
  CHECK(g2.dim_variety == 6);
  for (long k = 0; k <= 6; ++k) CHECK(g2.exp_polynomial.coeff(static_cast<std::size_t>(k)) == BigRational(stirling2(7, k + 1)));
  CHECK(g2.dim_irrep == 64);

  const HilbertData point = analyze(rs_of(Family::E, 6), DominantWeight::zero(6));
  CHECK(point.dim_variety == 0);
  CHECK(point.embedding_degree == 1);
  CHECK(point.dim_irrep == 1);
  CHECK(point.exp_polynomial == exp_of({1}));
  CHECK(point.hilbert_polynomial == RationalPolynomial::constant(1));
}

TEST_CASE("closed form over zero and nonzero constants") {
  const RootSystem b4 = rs_of(Family::B, 4);
  const auto cs = c_values(b4, DominantWeight({0, 1, 0, 2}));
  std::vector<BigRational> active;
  for (const auto& c : cs)
    if (c != 0) active.push_back(c);
  REQUIRE(active.size() < cs.size());
  CHECK(closed_form_from_constants(cs) == closed_form_from_constants(active));
  CHECK(closed_form_from_constants(cs, Execution::serial) == fold_operators(active));
}

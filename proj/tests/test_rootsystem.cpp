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
#include <set>

#include "flagseries/rootsystem.hpp"
#include "flagseries/series.hpp"

using namespace flagseries;

namespace {

std::vector<DynkinType> all_types_up_to_rank(int max_rank) {
  std::vector<DynkinType> out;
  for (int r = 1; r <= max_rank; ++r) out.emplace_back(Family::A, r);
  for (int r = 2; r <= max_rank; ++r) out.emplace_back(Family::B, r);
  for (int r = 2; r <= max_rank; ++r) out.emplace_back(Family::C, r);
  for (int r = 4; r <= max_rank; ++r) out.emplace_back(Family::D, r);
  for (int r = 6; r <= std::min(8, max_rank); ++r) out.emplace_back(Family::E, r);
  if (max_rank >= 4) out.emplace_back(Family::F, 4);
  out.emplace_back(Family::G, 2);
  return out;
}

// Positive roots as the Weyl-group orbit of the simple roots under
// s_i(beta) = beta - <beta, alpha_i^vee> alpha_i, keeping the positive ones.
std::set<RootCoords> weyl_orbit_positive_roots(const RootSystem& rs) {
  const auto n = static_cast<std::size_t>(rs.rank());
  std::set<RootCoords> seen;
  std::vector<RootCoords> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    RootCoords e(n, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    RootCoords beta = frontier.back();
    frontier.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      int pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * rs.cartan[i][j];
      RootCoords image = beta;
      image[i] -= pairing;
      if (seen.insert(image).second) frontier.push_back(image);
    }
  }
  std::set<RootCoords> positive;
  for (const auto& r : seen)
    if (std::ranges::all_of(r, [](int k) { return k >= 0; })) positive.insert(r);
  return positive;
}

BigInteger dim_of(Family f, int rank, std::vector<long> weight) {
  const RootSystem rs = build_root_system(DynkinType(f, rank));
  return dim_irrep(rs, DominantWeight(std::move(weight)), 1);
}

}  // namespace

TEST_CASE("Dynkin type validation") {
  CHECK_NOTHROW(DynkinType(Family::A, 1));
  CHECK_THROWS_AS(DynkinType(Family::A, 0), InvalidInput);
  CHECK_THROWS_AS(DynkinType(Family::B, 1), InvalidInput);
  CHECK_THROWS_AS(DynkinType(Family::C, 1), InvalidInput);
  CHECK_THROWS_WITH_AS(DynkinType(Family::D, 3), "rank out of range for family D", InvalidInput);
  CHECK_THROWS_AS(DynkinType(Family::E, 5), InvalidInput);
  CHECK_THROWS_AS(DynkinType(Family::E, 9), InvalidInput);
  CHECK_THROWS_AS(DynkinType(Family::F, 3), InvalidInput);
  CHECK_THROWS_AS(DynkinType(Family::G, 3), InvalidInput);
  CHECK(DynkinType::parse("g", 2).family() == Family::G);
  CHECK_THROWS_AS(DynkinType::parse("H", 2), InvalidInput);
  CHECK_THROWS_AS(DynkinType::parse("AB", 2), InvalidInput);
}

TEST_CASE("small root systems") {
  const RootSystem a1 = build_root_system(DynkinType(Family::A, 1));
  CHECK(a1.positive_roots == std::vector<RootCoords>{{1}});

  const RootSystem a2 = build_root_system(DynkinType(Family::A, 2));
  CHECK(a2.positive_roots == std::vector<RootCoords>{{1, 0}, {0, 1}, {1, 1}});

  const RootSystem g2 = build_root_system(DynkinType(Family::G, 2));
  REQUIRE(g2.positive_roots.size() == 6);
  std::vector<int> heights;
  for (const auto& r : g2.positive_roots) heights.push_back(height(r));
  CHECK(heights == std::vector<int>{1, 1, 2, 3, 4, 5});
  CHECK(g2.symmetrizers == std::vector<int>{1, 3});
  CHECK(g2.cartan == std::vector<std::vector<int>>{{2, -3}, {-1, 2}});
  // highest root of G2 is 3 alpha_1 + 2 alpha_2 with alpha_1 short
  CHECK(g2.positive_roots.back() == RootCoords{3, 2});

  const RootSystem b2 = build_root_system(DynkinType(Family::B, 2));
  CHECK(b2.positive_roots.size() == 4);
  CHECK(b2.positive_roots.back() == RootCoords{1, 2});  // e_1 + e_2 = alpha_1 + 2 alpha_2
  const RootSystem c2 = build_root_system(DynkinType(Family::C, 2));
  CHECK(c2.positive_roots.back() == RootCoords{2, 1});  // 2 e_1 = 2 alpha_1 + alpha_2
}

TEST_CASE("root counts, Cartan shape and symmetrizers for every type up to rank 8") {
  for (const auto& type : all_types_up_to_rank(8)) {
    CAPTURE(type.name());
    const RootSystem rs = build_root_system(type);
    const auto n = static_cast<std::size_t>(type.rank());
    CHECK(static_cast<long>(rs.positive_roots.size()) == expected_positive_root_count(type));
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(rs.cartan[i][i] == 2);
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        CHECK(rs.cartan[i][j] <= 0);
        CHECK(rs.cartan[i][j] >= -3);
        CHECK((rs.cartan[i][j] == 0) == (rs.cartan[j][i] == 0));
        CHECK(rs.symmetrizers[i] * rs.cartan[i][j] == rs.symmetrizers[j] * rs.cartan[j][i]);
      }
    }
    CHECK(*std::min_element(rs.symmetrizers.begin(), rs.symmetrizers.end()) == 1);
    if (type.family() == Family::A || type.family() == Family::D || type.family() == Family::E) {
      CHECK(std::ranges::all_of(rs.symmetrizers, [](int d) { return d == 1; }));
    }
    // the first n roots are the simple roots in node order
    for (std::size_t i = 0; i < n; ++i) {
      RootCoords e(n, 0);
      e[i] = 1;
      CHECK(rs.positive_roots[i] == e);
    }
    CHECK(std::ranges::count_if(rs.positive_roots, [](const RootCoords& r) { return height(r) == 1; }) ==
          static_cast<long>(n));
  }
}

TEST_CASE("height closure agrees with the Weyl-group orbit") {
  for (const auto& type : all_types_up_to_rank(7)) {
    CAPTURE(type.name());
    const RootSystem rs = build_root_system(type);
    const std::set<RootCoords> closure(rs.positive_roots.begin(), rs.positive_roots.end());
    CHECK(closure.size() == rs.positive_roots.size());
    CHECK(closure == weyl_orbit_positive_roots(rs));
  }
}

TEST_CASE("weyl vector") {
  CHECK(weyl_vector(1) == DominantWeight({1}));
  CHECK(weyl_vector(3) == DominantWeight({1, 1, 1}));
  CHECK(weyl_vector(8) == DominantWeight(std::vector<long>(8, 1)));
}

TEST_CASE("dominant weight parsing") {
  CHECK(DominantWeight::parse("1,0,2") == DominantWeight({1, 0, 2}));
  CHECK(DominantWeight::parse("7") == DominantWeight({7}));
  for (const char* bad : {"", "1,", ",1", "1,-1", "a", "1.5", "1,,2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(DominantWeight::parse(bad), InvalidInput);
  }
}

TEST_CASE("c_lambda examples") {
  const RootSystem a2 = build_root_system(DynkinType(Family::A, 2));
  CHECK(c_lambda(a2, DominantWeight({2, 0}), RootCoords{1, 1}) == 1);
  CHECK(c_values(a2, DominantWeight({1, 0})) == std::vector<BigRational>{1, 0, make_rational(1, 2)});
  CHECK_THROWS_AS(c_lambda(a2, DominantWeight({1, 0}), RootCoords{2, 1}), InvalidInput);
  CHECK_THROWS_AS(c_values(a2, DominantWeight({1, 0, 0})), InvalidInput);

  const RootSystem a1 = build_root_system(DynkinType(Family::A, 1));
  for (long m = 0; m < 6; ++m) CHECK(c_values(a1, DominantWeight({m})) == std::vector<BigRational>{BigRational(m)});

  for (const auto& type : all_types_up_to_rank(8)) {
    const RootSystem rs = build_root_system(type);
    const auto cs = c_values(rs, weyl_vector(type.rank()));
    CHECK(std::ranges::all_of(cs, [](const BigRational& c) { return c == 1; }));
  }
}

TEST_CASE("first fundamental weight of A_n gives reciprocal heights") {
  for (int n = 1; n <= 8; ++n) {
    const RootSystem rs = build_root_system(DynkinType(Family::A, n));
    const auto w = DominantWeight::fundamental(n, 1);
    for (const auto& r : rs.positive_roots) {
      const BigRational expected = r[0] > 0 ? make_rational(1, height(r)) : BigRational(0);
      CHECK(c_lambda(rs, w, r) == expected);
    }
  }
}

TEST_CASE("c_lambda properties over random weights") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<long> coord(0, 4);
  for (const auto& type : all_types_up_to_rank(6)) {
    CAPTURE(type.name());
    const RootSystem rs = build_root_system(type);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<long> a(static_cast<std::size_t>(type.rank())), b(a.size()), sum(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = coord(rng) % 2 == 0 ? 0 : coord(rng);
        b[i] = coord(rng);
        sum[i] = a[i] + b[i];
      }
      const DominantWeight la(a), mu(b), both(sum);
      for (int t = 2; t <= 5; ++t) {
        std::vector<int> scaled = rs.symmetrizers;
        for (auto& d : scaled) d *= t;
        for (const auto& r : rs.positive_roots) CHECK(c_lambda_with_form(scaled, la, r) == c_lambda(rs, la, r));
      }
      for (const auto& r : rs.positive_roots) {
        BigInteger rho_pair = 0;
        for (std::size_t j = 0; j < r.size(); ++j) rho_pair += BigInteger(r[j]) * rs.symmetrizers[j];
        const BigRational rp(rho_pair);
        CHECK(c_lambda(rs, both, r) * rp == c_lambda(rs, la, r) * rp + c_lambda(rs, mu, r) * rp);
        bool support_zero = true;
        for (std::size_t j = 0; j < r.size(); ++j)
          if (r[j] > 0 && a[j] != 0) support_zero = false;
        CHECK((c_lambda(rs, la, r) == 0) == support_zero);
      }
    }
  }
}

TEST_CASE("dimensions of well-known representations") {
  // Bourbaki numbering throughout.
  CHECK(dim_of(Family::A, 2, {1, 1}) == 8);
  CHECK(dim_of(Family::B, 2, {1, 0}) == 5);
  CHECK(dim_of(Family::B, 2, {0, 1}) == 4);
  CHECK(dim_of(Family::C, 3, {1, 0, 0}) == 6);
  CHECK(dim_of(Family::C, 3, {0, 1, 0}) == 14);
  CHECK(dim_of(Family::B, 3, {0, 0, 1}) == 8);
  CHECK(dim_of(Family::D, 4, {0, 1, 0, 0}) == 28);
  CHECK(dim_of(Family::D, 4, {0, 0, 0, 1}) == 8);
  CHECK(dim_of(Family::G, 2, {1, 0}) == 7);
  CHECK(dim_of(Family::G, 2, {0, 1}) == 14);
  CHECK(dim_of(Family::F, 4, {1, 0, 0, 0}) == 52);
  CHECK(dim_of(Family::F, 4, {0, 0, 0, 1}) == 26);
  CHECK(dim_of(Family::E, 6, {1, 0, 0, 0, 0, 0}) == 27);
  CHECK(dim_of(Family::E, 6, {0, 1, 0, 0, 0, 0}) == 78);
  CHECK(dim_of(Family::E, 7, {1, 0, 0, 0, 0, 0, 0}) == 133);
  CHECK(dim_of(Family::E, 7, {0, 0, 0, 0, 0, 0, 1}) == 56);
  CHECK(dim_of(Family::E, 8, {0, 0, 0, 0, 0, 0, 0, 1}) == 248);
  CHECK(dim_of(Family::E, 8, {1, 0, 0, 0, 0, 0, 0, 0}) == 3875);
}

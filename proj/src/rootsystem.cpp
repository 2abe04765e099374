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

#include "flagseries/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <utility>

namespace flagseries {

namespace {

bool rank_valid(Family f, int r) {
  switch (f) {
    case Family::A: return r >= 1;
    case Family::B: return r >= 2;
    case Family::C: return r >= 2;
    case Family::D: return r >= 4;
    case Family::E: return r >= 6 && r <= 8;
    case Family::F: return r == 4;
    case Family::G: return r == 2;
  }
  return false;
}

struct Diagram {
  std::vector<int> symmetrizers;
  std::vector<std::pair<int, int>> edges;  // 0-based
};

// Bourbaki numbering; symmetrizer = half the squared root length, shortest = 1.
Diagram diagram(const DynkinType& t) {
  const int n = t.rank();
  Diagram g;
  g.symmetrizers.assign(static_cast<std::size_t>(n), 1);
  auto chain = [&g](int from, int to) {
    for (int i = from; i < to; ++i) g.edges.emplace_back(i, i + 1);
  };
  switch (t.family()) {
    case Family::A:
      chain(0, n - 1);
      break;
    case Family::B:
      chain(0, n - 1);
      std::fill(g.symmetrizers.begin(), g.symmetrizers.end() - 1, 2);
      break;
    case Family::C:
      chain(0, n - 1);
      g.symmetrizers.back() = 2;
      break;
    case Family::D:
      chain(0, n - 2);
      g.edges.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      // 1-3-4-5-...-n with 2 attached to 4
      g.edges.emplace_back(0, 2);
      g.edges.emplace_back(1, 3);
      chain(2, n - 1);
      break;
    case Family::F:
      chain(0, 3);
      g.symmetrizers = {2, 2, 1, 1};
      break;
    case Family::G:
      g.edges.emplace_back(0, 1);
      g.symmetrizers = {1, 3};
      break;
  }
  return g;
}

}  // namespace

DynkinType::DynkinType(Family family, int rank) : family_(family), rank_(rank) {
  if (!rank_valid(family, rank)) {
    throw InvalidInput("rank out of range for family " + std::string(1, static_cast<char>(family)));
  }
}

DynkinType DynkinType::parse(std::string_view family, int rank) {
  if (family.size() != 1) throw InvalidInput("unknown Dynkin family '" + std::string(family) + "'");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(family.front())));
  if (c < 'A' || c > 'G') throw InvalidInput("unknown Dynkin family '" + std::string(family) + "'");
  return DynkinType(static_cast<Family>(c), rank);
}

std::string DynkinType::name() const { return std::string(1, static_cast<char>(family_)) + std::to_string(rank_); }

long expected_positive_root_count(const DynkinType& type) {
  const long n = type.rank();
  switch (type.family()) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

int height(std::span<const int> root) { return std::accumulate(root.begin(), root.end(), 0); }

std::vector<RootCoords> generate_positive_roots(const std::vector<std::vector<int>>& cartan) {
  const int n = static_cast<int>(cartan.size());
  std::set<RootCoords> known;
  std::vector<RootCoords> level;
  for (int i = 0; i < n; ++i) {
    RootCoords e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    known.insert(e);
    level.push_back(std::move(e));
  }
  std::vector<RootCoords> all = level;
  while (!level.empty()) {
    std::set<RootCoords> next;
    for (const auto& beta : level) {
      for (int i = 0; i < n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        int pairing = 0;  // <beta, alpha_i^vee>
        for (int j = 0; j < n; ++j) pairing += beta[static_cast<std::size_t>(j)] * cartan[ui][static_cast<std::size_t>(j)];
        // p = largest s with beta - s alpha_i a root
        int p = 0;
        RootCoords down = beta;
        while (down[ui] > 0) {
          --down[ui];
          if (!known.contains(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          RootCoords up = beta;
          ++up[ui];
          if (!known.contains(up)) next.insert(std::move(up));
        }
      }
    }
    level.assign(next.begin(), next.end());
    for (const auto& r : level) known.insert(r);
    all.insert(all.end(), level.begin(), level.end());
  }
  std::stable_sort(all.begin(), all.end(), [](const RootCoords& a, const RootCoords& b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  return all;
}

RootSystem build_root_system(const DynkinType& type) {
  const Diagram g = diagram(type);
  const auto n = static_cast<std::size_t>(type.rank());
  std::vector<std::vector<int>> form(n, std::vector<int>(n, 0));  // (alpha_i, alpha_j) up to scale
  for (std::size_t i = 0; i < n; ++i) form[i][i] = 2 * g.symmetrizers[i];
  for (auto [i, j] : g.edges) {
    const auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(j);
    form[a][b] = form[b][a] = -std::max(g.symmetrizers[a], g.symmetrizers[b]);
  }
  RootSystem rs{type, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)), g.symmetrizers, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.cartan[i][j] = form[i][j] / g.symmetrizers[i];
  rs.positive_roots = generate_positive_roots(rs.cartan);
  return rs;
}

long RootSystem::find_root(std::span<const int> coords) const {
  const auto it = std::find_if(positive_roots.begin(), positive_roots.end(),
                               [&](const RootCoords& r) { return std::ranges::equal(r, coords); });
  return it == positive_roots.end() ? -1 : static_cast<long>(it - positive_roots.begin());
}

DominantWeight::DominantWeight(std::vector<long> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InvalidInput("weight must have at least one coordinate");
  for (long m : coords_)
    if (m < 0) throw InvalidInput("weight coordinates must be nonnegative");
}

DominantWeight DominantWeight::parse(std::string_view text) {
  std::vector<long> coords;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    long v = 0;
    const auto* first = piece.data();
    const auto* last = piece.data() + piece.size();
    if (piece.empty() || piece.front() == '-') {
      throw InvalidInput("weight coordinates must be nonnegative integers, got '" + std::string(piece) + "'");
    }
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
      throw InvalidInput("weight coordinates must be nonnegative integers, got '" + std::string(piece) + "'");
    }
    coords.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return DominantWeight(std::move(coords));
}

DominantWeight DominantWeight::fundamental(int rank, int i) {
  if (i < 1 || i > rank) throw InvalidInput("fundamental weight index out of range");
  std::vector<long> c(static_cast<std::size_t>(rank), 0);
  c[static_cast<std::size_t>(i - 1)] = 1;
  return DominantWeight(std::move(c));
}

std::string DominantWeight::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s;
}

DominantWeight weyl_vector(int rank) {
  if (rank < 1) throw InvalidInput("rank must be positive");
  return DominantWeight(std::vector<long>(static_cast<std::size_t>(rank), 1));
}

BigRational c_lambda_with_form(std::span<const int> symmetrizers, const DominantWeight& lambda, std::span<const int> root) {
  // (omega_i, alpha_j) = delta_ij d_j
  BigInteger num = 0, den = 0;
  for (std::size_t j = 0; j < root.size(); ++j) {
    const BigInteger w = BigInteger(root[j]) * symmetrizers[j];
    num += w * lambda.coords()[j];
    den += w;
  }
  return make_rational(num, den);
}

BigRational c_lambda(const RootSystem& system, const DominantWeight& lambda, std::span<const int> root) {
  if (lambda.rank() != system.rank()) throw InvalidInput("weight length does not match rank");
  if (system.find_root(root) < 0) throw InvalidInput("not a positive root of " + system.type.name());
  return c_lambda_with_form(system.symmetrizers, lambda, root);
}

std::vector<BigRational> c_values(const RootSystem& system, const DominantWeight& lambda) {
  if (lambda.rank() != system.rank()) {
    throw InvalidInput("weight has " + std::to_string(lambda.rank()) + " coordinates but rank is " +
                       std::to_string(system.rank()));
  }
  std::vector<BigRational> out;
  out.reserve(system.positive_roots.size());
  for (const auto& r : system.positive_roots) out.push_back(c_lambda_with_form(system.symmetrizers, lambda, r));
  return out;
}

}  // namespace flagseries

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

#ifndef FLAGSERIES_ROOTSYSTEM_HPP
#define FLAGSERIES_ROOTSYSTEM_HPP

#include <span>
#include <string>
#include <vector>

#include "flagseries/rational.hpp"

namespace flagseries {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Simple Dynkin type. Construction validates the rank range of the family.
class DynkinType {
 public:
  DynkinType(Family family, int rank);
  /// Accepts a single letter A..G (case-insensitive).
  static DynkinType parse(std::string_view family, int rank);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  std::string name() const;  // "A2", "E8", ...

  friend bool operator==(const DynkinType&, const DynkinType&) = default;

 private:
  Family family_;
  int rank_;
};

/// Closed-form |Phi+| for the type.
long expected_positive_root_count(const DynkinType& type);

using RootCoords = std::vector<int>;

/// Immutable root datum in Bourbaki numbering.
///
/// cartan[i][j] = <alpha_j, alpha_i^vee>, so <beta, alpha_i^vee> = sum_j k_j cartan[i][j]
/// for beta = sum_j k_j alpha_j. symmetrizers[i] = (alpha_i, alpha_i)/2 scaled so
/// the smallest is 1; symmetrizers[i] * cartan[i][j] is symmetric.
/// Positive roots are ordered by height, then lexicographically descending,
/// so the simple roots come first as alpha_1, ..., alpha_n.
struct RootSystem {
  DynkinType type;
  std::vector<std::vector<int>> cartan;
  std::vector<int> symmetrizers;
  std::vector<RootCoords> positive_roots;

  int rank() const noexcept { return type.rank(); }
  /// Index of the root in positive_roots, or -1.
  long find_root(std::span<const int> coords) const;
};

RootSystem build_root_system(const DynkinType& type);

/// Height-closure generation of Phi+ from an arbitrary Cartan matrix
/// (same convention as RootSystem::cartan).
std::vector<RootCoords> generate_positive_roots(const std::vector<std::vector<int>>& cartan);

int height(std::span<const int> root);

/// lambda = sum_i coords[i] * omega_i.
class DominantWeight {
 public:
  explicit DominantWeight(std::vector<long> coords);
  /// "1,0,2"
  static DominantWeight parse(std::string_view text);
  static DominantWeight zero(int rank) { return DominantWeight(std::vector<long>(static_cast<std::size_t>(rank), 0)); }
  static DominantWeight fundamental(int rank, int i);

  std::span<const long> coords() const noexcept { return coords_; }
  int rank() const noexcept { return static_cast<int>(coords_.size()); }
  std::string to_string() const;

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;

 private:
  std::vector<long> coords_;
};

/// rho = omega_1 + ... + omega_n.
DominantWeight weyl_vector(int rank);

/// (lambda, alpha) / (rho, alpha).
BigRational c_lambda(const RootSystem& system, const DominantWeight& lambda, std::span<const int> root);

/// c_lambda across positive_roots in enumeration order.
std::vector<BigRational> c_values(const RootSystem& system, const DominantWeight& lambda);

/// c_lambda with caller-supplied symmetrizers (used to check scale invariance).
BigRational c_lambda_with_form(std::span<const int> symmetrizers, const DominantWeight& lambda, std::span<const int> root);

}  // namespace flagseries

#endif  // FLAGSERIES_ROOTSYSTEM_HPP

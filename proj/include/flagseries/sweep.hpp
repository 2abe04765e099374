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

#ifndef FLAGSERIES_SWEEP_HPP
#define FLAGSERIES_SWEEP_HPP

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "flagseries/combinatorics.hpp"
#include "flagseries/rootsystem.hpp"

namespace flagseries {

/// The independent cross-checks run for every (type, weight) pair.
enum class SweepCheck {
  dual_path,             // operator fold == closed form, zeros skipped and kept
  hilbert_bridge,        // n! [x^n] p e^x == prod (1 + n c), n = 0..n_max
  constant_plus_linear,  // a_0 + a_1 == dim L(lambda)
  degree_dimension,      // deg p == #{c != 0} == deg H; d! a_d == d! prod c == q(1)
  integrality,           // dim L(n lambda), degree, q coefficients are integers
  ordinary_series,       // N(x)/(1-x)^m expansion reproduces dim L(n lambda)
};
inline constexpr std::size_t kSweepCheckCount = 6;
std::string to_string(SweepCheck check);

struct SweepCase {
  std::shared_ptr<const RootSystem> system;
  DominantWeight weight;
};

struct SweepFailure {
  SweepCheck check;
  std::string where;  // "A2 [1,0]"
  std::string detail;
};

struct SweepSummary {
  long cases = 0;
  std::array<long, kSweepCheckCount> checked{};
  std::vector<SweepFailure> failures;

  long failures_of(SweepCheck check) const;
};

/// Every weight with coordinates in [0, max_coord] for each type.
std::vector<SweepCase> weight_grid(const std::vector<DynkinType>& types, long max_coord);

/// Runs every SweepCheck on each case. Failures are listed in case order
/// regardless of execution mode.
SweepSummary run_sweep(const std::vector<SweepCase>& cases, long n_max, Execution exec = Execution::parallel);

/// A1..A6, B2..B6, C2..C6, D4..D6, G2, F4, E6.
std::vector<DynkinType> standard_sweep_types();

}  // namespace flagseries

#endif  // FLAGSERIES_SWEEP_HPP

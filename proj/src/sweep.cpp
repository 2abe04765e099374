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

#include "flagseries/sweep.hpp"

#include "flagseries/parallel.hpp"
#include "flagseries/series.hpp"

namespace flagseries {

std::string to_string(SweepCheck check) {
  switch (check) {
    case SweepCheck::dual_path: return "dual-path";
    case SweepCheck::hilbert_bridge: return "hilbert-bridge";
    case SweepCheck::constant_plus_linear: return "constant-plus-linear";
    case SweepCheck::degree_dimension: return "degree-dimension";
    case SweepCheck::integrality: return "integrality";
    case SweepCheck::ordinary_series: return "ordinary-series";
  }
  return "?";
}

long SweepSummary::failures_of(SweepCheck check) const {
  long n = 0;
  for (const auto& f : failures)
    if (f.check == check) ++n;
  return n;
}

std::vector<DynkinType> standard_sweep_types() {
  std::vector<DynkinType> t;
  for (int r = 1; r <= 6; ++r) t.emplace_back(Family::A, r);
  for (int r = 2; r <= 6; ++r) t.emplace_back(Family::B, r);
  for (int r = 2; r <= 6; ++r) t.emplace_back(Family::C, r);
  for (int r = 4; r <= 6; ++r) t.emplace_back(Family::D, r);
  t.emplace_back(Family::G, 2);
  t.emplace_back(Family::F, 4);
  t.emplace_back(Family::E, 6);
  return t;
}

std::vector<SweepCase> weight_grid(const std::vector<DynkinType>& types, long max_coord) {
  if (max_coord < 0) throw InvalidInput("max_coord must be nonnegative");
  std::vector<SweepCase> cases;
  for (const auto& type : types) {
    auto system = std::make_shared<const RootSystem>(build_root_system(type));
    std::vector<long> coords(static_cast<std::size_t>(type.rank()), 0);
    // odometer over [0, max_coord]^rank
    while (true) {
      cases.push_back({system, DominantWeight(coords)});
      std::size_t i = 0;
      while (i < coords.size() && coords[i] == max_coord) coords[i++] = 0;
      if (i == coords.size()) break;
      ++coords[i];
    }
  }
  return cases;
}

namespace {

struct CaseResult {
  std::array<long, kSweepCheckCount> checked{};
  std::vector<SweepFailure> failures;
};

class CaseChecker {
 public:
  CaseChecker(const SweepCase& c, CaseResult& out)
      : out_(out), where_(c.system->type.name() + " [" + c.weight.to_string() + "]") {}

  // Runs body as one check; a thrown InvariantViolation counts as a failure of
  // `on_throw` (integrality errors surface that way).
  template <class Body>
  void run(SweepCheck check, Body&& body, SweepCheck on_throw) {
    ++out_.checked[static_cast<std::size_t>(check)];
    try {
      body();
    } catch (const InvariantViolation& e) {
      fail(on_throw, e.what());
    }
  }
  void fail(SweepCheck check, std::string detail) { out_.failures.push_back({check, where_, std::move(detail)}); }

 private:
  CaseResult& out_;
  std::string where_;
};

BigRational direct_hilbert_value(std::span<const BigRational> cs, long n) {
  BigRational v = 1;
  for (const auto& c : cs) v *= 1 + c * n;
  return v;
}

CaseResult check_case(const SweepCase& c, long n_max) {
  CaseResult out;
  CaseChecker check(c, out);
  const auto cs = c_values(*c.system, c.weight);
  std::vector<BigRational> active;
  BigRational product = 1;
  for (const auto& v : cs) {
    if (v == 0) continue;
    active.push_back(v);
    product *= v;
  }
  const long d = static_cast<long>(active.size());
  const ExpPolynomial p = fold_operators(active);

  check.run(SweepCheck::dual_path, [&] {
    if (closed_form_from_constants(cs, Execution::serial) != p) check.fail(SweepCheck::dual_path, "all constants");
    if (closed_form_from_constants(active, Execution::serial) != p) check.fail(SweepCheck::dual_path, "nonzero constants");
  }, SweepCheck::dual_path);

  std::vector<BigRational> hilbert_values;
  for (long n = 0; n <= n_max; ++n) hilbert_values.push_back(direct_hilbert_value(cs, n));

  check.run(SweepCheck::hilbert_bridge, [&] {
    for (long n = 0; n <= n_max; ++n) {
      const BigInteger t = taylor_dimension(p, n);
      if (BigRational(t) != hilbert_values[static_cast<std::size_t>(n)]) {
        check.fail(SweepCheck::hilbert_bridge, "n=" + std::to_string(n) + ": " + to_string(t) + " vs " +
                                                   to_string(hilbert_values[static_cast<std::size_t>(n)]));
      }
    }
  }, SweepCheck::integrality);

  check.run(SweepCheck::constant_plus_linear, [&] {
    const BigRational lhs = p.coeff(0) + p.coeff(1);
    if (p.coeff(0) != 1 || n_max < 1 || lhs != hilbert_values[1]) {
      check.fail(SweepCheck::constant_plus_linear, to_string(lhs));
    }
  }, SweepCheck::constant_plus_linear);

  OrdinarySeriesRep rep;
  check.run(SweepCheck::integrality, [&] {
    for (const auto& v : hilbert_values) {
      if (!is_integer(v) || v <= 0) check.fail(SweepCheck::integrality, "dim L(n lambda) = " + to_string(v));
    }
    rep = ordinary_series_from_constants(active);
    for (const auto& q : rep.numerator.coeffs()) {
      if (!is_integer(q)) check.fail(SweepCheck::integrality, "q coefficient " + to_string(q));
    }
    const BigRational deg = BigRational(factorial(static_cast<unsigned long>(d))) * p.poly.leading();
    if (!is_integer(deg) || deg <= 0) check.fail(SweepCheck::integrality, "degree " + to_string(deg));
  }, SweepCheck::integrality);

  check.run(SweepCheck::degree_dimension, [&] {
    const RationalPolynomial h = hilbert_polynomial(*c.system, c.weight);
    if (p.degree() != d || h.degree() != d) check.fail(SweepCheck::degree_dimension, "degree mismatch");
    const BigRational fact(factorial(static_cast<unsigned long>(d)));
    const BigRational via_leading = fact * p.poly.leading();
    if (via_leading != fact * product) check.fail(SweepCheck::degree_dimension, "d! a_d != d! prod c");
    if (rep.pole_order != d + 1 || rep.numerator.evaluate(1) != via_leading) {
      check.fail(SweepCheck::degree_dimension, "q(1) = " + to_string(rep.numerator.evaluate(1)) + ", d! a_d = " +
                                                   to_string(via_leading));
    }
  }, SweepCheck::degree_dimension);

  check.run(SweepCheck::ordinary_series, [&] {
    const auto expansion = rep.expand(n_max + 1);
    for (long n = 0; n <= n_max; ++n) {
      if (expansion[static_cast<std::size_t>(n)] != hilbert_values[static_cast<std::size_t>(n)]) {
        check.fail(SweepCheck::ordinary_series, "n=" + std::to_string(n));
      }
    }
  }, SweepCheck::ordinary_series);
  return out;
}

}  // namespace

SweepSummary run_sweep(const std::vector<SweepCase>& cases, long n_max, Execution exec) {
  if (n_max < 1) throw InvalidInput("run_sweep: n_max must be at least 1");
  auto results = parallel_map(static_cast<long>(cases.size()), exec,
                              [&](long i) { return check_case(cases[static_cast<std::size_t>(i)], n_max); });
  SweepSummary summary;
  summary.cases = static_cast<long>(cases.size());
  for (auto& r : results) {
    for (std::size_t k = 0; k < kSweepCheckCount; ++k) summary.checked[k] += r.checked[k];
    for (auto& f : r.failures) summary.failures.push_back(std::move(f));
  }
  return summary;
}

}  // namespace flagseries

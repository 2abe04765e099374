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

#include "flagseries/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>

#include "flagseries/document.hpp"
#include "flagseries/identities.hpp"
#include "flagseries/series.hpp"

namespace flagseries {

namespace {

struct Options {
  std::string type;
  int rank = 0;
  std::string weight;
  std::string format = "text";
  long n_max = -1;
  bool allow_large = false;
  std::string identity;
};

bool is_large(const DynkinType& t) { return t.family() == Family::E && t.rank() >= 7; }

DynkinType checked_type(const Options& o) {
  DynkinType t = DynkinType::parse(o.type, o.rank);
  if (is_large(t) && !o.allow_large) throw InvalidInput(t.name() + " requires --allow-large");
  return t;
}

Request checked_request(const Options& o) {
  const DynkinType t = checked_type(o);
  DominantWeight w = DominantWeight::parse(o.weight);
  if (w.rank() != t.rank()) {
    throw InvalidInput("weight has " + std::to_string(w.rank()) + " coordinates but " + t.name() + " has rank " +
                       std::to_string(t.rank()));
  }
  return {t, std::move(w)};
}

std::string join(const RationalPolynomial& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) s += (i ? ", " : "") + to_string(p.coeffs()[i]);
  return s + "]";
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

int cmd_analyze(const Options& o, std::ostream& out) {
  const Request req = checked_request(o);
  const RootSystem rs = build_root_system(req.type);
  const HilbertData data = analyze(rs, req.weight);
  if (o.format == "json") {
    emit(out, analysis_document(req, data));
    return kExitOk;
  }
  out << "type            " << req.type.name() << '\n'
      << "weight          [" << req.weight.to_string() << "]\n"
      << "dim X           " << data.dim_variety << '\n'
      << "degree          " << to_string(data.embedding_degree) << '\n'
      << "dim L(lambda)   " << to_string(data.dim_irrep) << '\n'
      << "p(x)            " << data.exp_polynomial.poly.to_string("x") << '\n'
      << "p coefficients  " << join(data.exp_polynomial.poly) << '\n'
      << "H(t)            " << data.hilbert_polynomial.to_string("t") << '\n'
      << "q(x)            " << data.hs_numerator.to_string("x") << '\n'
      << "HS(x)           q(x)/(1-x)^" << data.dim_variety + 1 << '\n';
  return kExitOk;
}

int cmd_series(const Options& o, std::ostream& out) {
  const Request req = checked_request(o);
  if (o.n_max < 0) throw InvalidInput("--n-max must be nonnegative");
  const RootSystem rs = build_root_system(req.type);
  const ExpPolynomial p = exp_series_operator(rs, req.weight);
  const RationalPolynomial h = hilbert_polynomial(rs, req.weight);
  std::vector<SeriesRow> rows;
  for (long n = 0; n <= o.n_max; ++n) {
    const BigInteger via_taylor = taylor_dimension(p, n);
    const BigInteger via_hilbert = dim_irrep(h, n);
    if (via_taylor != via_hilbert) {
      throw InvariantViolation("Taylor coefficient = Hilbert polynomial",
                               "n=" + std::to_string(n) + ": " + to_string(via_taylor) + " vs " + to_string(via_hilbert));
    }
    rows.push_back({n, via_taylor});
  }
  if (o.format == "json") {
    emit(out, series_document(req, p, rows));
    return kExitOk;
  }
  out << "p(x) = " << p.poly.to_string("x") << '\n' << "n\tdim L(n lambda)\n";
  for (const auto& r : rows) out << r.n << '\t' << to_string(r.dimension) << '\n';
  return kExitOk;
}

int cmd_roots(const Options& o, std::ostream& out) {
  const RootSystem rs = build_root_system(checked_type(o));
  if (o.format == "json") {
    emit(out, roots_document(rs));
    return kExitOk;
  }
  out << rs.type.name() << ": " << rs.positive_roots.size() << " positive roots\n";
  out << "symmetrizers";
  for (int d : rs.symmetrizers) out << ' ' << d;
  out << "\ncartan\n";
  for (const auto& row : rs.cartan) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "  ") << row[j];
    out << '\n';
  }
  for (const auto& r : rs.positive_roots) {
    out << "  h=" << height(r) << "  (";
    for (std::size_t j = 0; j < r.size(); ++j) out << (j ? "," : "") << r[j];
    out << ")\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<std::string> ids;
  if (o.identity == "all") ids = identity_ids();
  else if (std::ranges::find(identity_ids(), o.identity) != identity_ids().end()) ids.push_back(o.identity);
  else throw InvalidInput("unknown identity '" + o.identity + "'");
  if (o.n_max == 0) throw InvalidInput("--n-max must be positive");

  std::vector<IdentityReport> reports;
  for (const auto& id : ids) reports.push_back(run_identity(id, o.n_max));
  const bool ok = std::ranges::all_of(reports, [](const IdentityReport& r) { return r.verified(); });
  if (o.format == "json") {
    emit(out, verify_document(reports));
  } else {
    for (const auto& r : reports) {
      out << (r.verified() ? "ok    " : "FAIL  ") << r.id << "  " << r.identity_name << "  [" << r.parameter_range
          << "]  checked " << r.checked_count << ", failures " << r.failures.size() << '\n';
      for (const auto& f : r.failures) out << "      " << f.parameters << ": " << f.lhs << " != " << f.rhs << '\n';
    }
  }
  return ok ? kExitOk : kExitIdentityFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exponential Hilbert series of flag variety embeddings, in exact arithmetic", "flagseries"};
  app.require_subcommand(1);
  Options o;

  auto add_type = [&o](CLI::App* sub) {
    sub->add_option("--type", o.type, "Dynkin family A..G")->required();
    sub->add_option("--rank", o.rank, "Rank")->required();
    sub->add_flag("--allow-large", o.allow_large, "Permit E7 and E8");
  };
  auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Dimension, degree and series data for a dominant weight");
  add_type(analyze_cmd);
  analyze_cmd->add_option("--weight", o.weight, "Coordinates in the fundamental weight basis, e.g. 1,0")->required();
  add_format(analyze_cmd);

  auto* series_cmd = app.add_subcommand("series", "Tabulate dim L(n lambda) for n = 0..n-max");
  add_type(series_cmd);
  series_cmd->add_option("--weight", o.weight, "Coordinates in the fundamental weight basis")->required();
  series_cmd->add_option("--n-max", o.n_max, "Largest n")->required();
  add_format(series_cmd);

  auto* roots_cmd = app.add_subcommand("roots", "Cartan matrix, symmetrizers and positive roots");
  add_type(roots_cmd);
  add_format(roots_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check the combinatorial identities");
  verify_cmd->add_option("identity", o.identity, "binomial, 4.3, 4.4, 4.5, stirling-recursion, rho or all")->required();
  verify_cmd->add_option("--n-max", o.n_max, "Override the sweep bound");
  add_format(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (series_cmd->parsed()) return cmd_series(o, out);
    if (roots_cmd->parsed()) return cmd_roots(o, out);
    return cmd_verify(o, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kExitInvariantViolation;
  }
}

}  // namespace flagseries

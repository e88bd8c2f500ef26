/**
 * @file main.cpp
 * @brief Batch command-line front end for the Lefschetz library.
 *
 * Commands load complexes, cell sets, and vertex maps from text files, run
 * one engine operation, and print a deterministic `key = value` report
 * (or the same keys as a flat JSON object with --json).
 *
 * Exit codes: 0 success, 1 precondition violation, 2 parse error,
 * 3 property/acceptance failure.
 */

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lefschetz/lefschetz.hpp"

namespace lz = lefschetz;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitPrecondition = 1;
constexpr int kExitParse = 2;
constexpr int kExitProperty = 3;

int exit_code_for(const lz::Error& error) {
  switch (error.kind()) {
    case lz::Error::Kind::Parse:
      return kExitParse;
    case lz::Error::Kind::Precondition:
      return kExitPrecondition;
    case lz::Error::Kind::Property:
      return kExitProperty;
  }
  return kExitProperty;
}

/// Ordered key/value report with plain-text and JSON renderings.
class Report {
 public:
  void add(const std::string& key, const std::string& value) {
    text_ += key + " = " + value + "\n";
    json_[key] = value;
  }
  void add(const std::string& key, long long value) {
    text_ += key + " = " + std::to_string(value) + "\n";
    json_[key] = value;
  }
  void add(const std::string& key, bool value) {
    text_ += key + " = " + std::string(value ? "true" : "false") + "\n";
    json_[key] = value;
  }
  void add_raw_line(const std::string& line) { text_ += line + "\n"; }
  void add_json(const std::string& key, ordered_json value) {
    json_[key] = std::move(value);
  }

  void print(bool as_json) const {
    if (as_json)
      std::cout << json_.dump(2) << "\n";
    else
      std::cout << text_;
  }

 private:
  std::string text_;
  ordered_json json_ = ordered_json::object();
};

lz::TorusMapMatrix parse_matrix(int p, const std::string& text) {
  if (p < 1) lz::throw_precondition("matrix dimension must be positive");
  std::vector<std::vector<lz::BigInt>> rows;
  std::stringstream row_stream(text);
  std::string row_text;
  while (std::getline(row_stream, row_text, ';')) {
    std::vector<lz::BigInt> row;
    std::stringstream entry_stream(row_text);
    std::string entry;
    while (entry_stream >> entry) {
      try {
        row.emplace_back(entry);
      } catch (const std::exception&) {
        lz::throw_parse("bad matrix entry: " + entry);
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != p)
    lz::throw_parse("matrix must have exactly " + std::to_string(p) + " rows");
  for (int i = 0; i < p; ++i)
    if (static_cast<int>(rows[i].size()) != p)
      lz::throw_parse("matrix row " + std::to_string(i) + " must have " +
                      std::to_string(p) + " entries");
  return lz::TorusMapMatrix(p, std::move(rows));
}

std::string big_to_string(const lz::BigInt& value) { return value.str(); }

void add_certificate(Report& report, const lz::Certificate& certificate) {
  report.add("verdict", std::string(lz::to_string(certificate.verdict)));
  report.add("lambda_comb", certificate.lambda_value);
  if (certificate.witness) report.add("witness", *certificate.witness);
  report.add("conjectural", certificate.conjectural);
  report.add("justification", certificate.justification);
  for (std::size_t i = 0; i < certificate.advisories.size(); ++i)
    report.add("advisory_" + std::to_string(i), certificate.advisories[i]);
  if (certificate.report && !certificate.report->compatible()) {
    const auto& violations = certificate.report->violations;
    for (std::size_t i = 0; i < violations.size() && i < 4; ++i)
      report.add("violation_" + std::to_string(i), violations[i]);
  }
}

struct SuiteOutcome {
  Report report;
  bool pass = true;
};

SuiteOutcome run_suite() {
  SuiteOutcome outcome;
  const std::vector<lz::SuiteRow> rows = lz::example_suite();
  ordered_json json_rows = ordered_json::array();
  auto pad = [](std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
  };
  for (const lz::SuiteRow& row : rows) {
    outcome.report.add_raw_line(
        pad(row.fixture, 30) + " " + pad(row.quantity, 28) + " " +
        pad("expected=" + std::to_string(row.expected), 15) + " " +
        pad("computed=" + std::to_string(row.computed), 15) + " " +
        pad(row.provenance, 8) + " " + (row.pass ? "PASS" : "FAIL"));
    json_rows.push_back({{"fixture", row.fixture},
                         {"quantity", row.quantity},
                         {"expected", row.expected},
                         {"computed", row.computed},
                         {"provenance", row.provenance},
                         {"pass", row.pass}});
    if (!row.pass) outcome.pass = false;
  }
  outcome.report.add_json("rows", std::move(json_rows));
  outcome.report.add_raw_line(std::string("suite = ") +
                              (outcome.pass ? "PASS" : "FAIL"));
  outcome.report.add_json("suite", outcome.pass ? "PASS" : "FAIL");
  return outcome;
}

struct PropOutcome {
  Report report;
  bool pass = true;
};

/// Seeded randomized property runs: Hopf-trace equivalence and
/// inclusion-exclusion over compatible cell-set pairs.
PropOutcome run_proptest(std::uint64_t seed, int cases) {
  PropOutcome outcome;
  std::mt19937_64 rng(seed);
  int hopf_failures = 0;
  for (int i = 0; i < cases; ++i) {
    lz::ComplexPtr X = lz::random_complex(rng);
    lz::VertexSelfMap phi = lz::random_self_map(rng, X);
    lz::ChainSystem S(phi);
    if (lz::hopf_lefschetz(S) != lz::homology_lefschetz(S)) ++hopf_failures;
  }
  outcome.report.add("hopf_cases", static_cast<long long>(cases));
  outcome.report.add("hopf_failures", static_cast<long long>(hopf_failures));

  int incl_cases = 0;
  int incl_failures = 0;
  for (int i = 0; i < cases; ++i) {
    lz::ComplexPtr X = lz::random_complex(rng);
    lz::SelfMapSystem S(lz::VertexSelfMap::identity(X));
    lz::CellSet A = lz::random_cellset(rng, X);
    lz::CellSet B = lz::random_cellset(rng, X);
    const auto [lhs, rhs] = lz::lambda_comb_additive_check(S, A, B);
    ++incl_cases;
    if (lhs != rhs) ++incl_failures;
  }
  outcome.report.add("incl_excl_cases", static_cast<long long>(incl_cases));
  outcome.report.add("incl_excl_failures",
                     static_cast<long long>(incl_failures));
  outcome.pass = hopf_failures == 0 && incl_failures == 0;
  outcome.report.add("result", std::string(outcome.pass ? "PASS" : "FAIL"));
  return outcome;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lefschetz numbers of simplicial self-maps"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the report as a flat JSON object");

  // Shared option storage.
  std::string complex_path, map_path, set_path, sub_path, open_path;
  std::string corona_path, class_name, chi_text, matrix_text, matrix2_text;
  bool no_enforce = false, assume_conjecture = false;
  int p = 0, rounds = 1, cases = 100;
  std::uint64_t seed = 0;

  auto add_complex = [&](CLI::App* cmd) {
    cmd->add_option("complex", complex_path, "complex file (.cx)")
        ->required();
  };
  auto add_map = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("map", map_path, "vertex map file (.map)");
    if (required) opt->required();
  };

  CLI::App* cmd_check = app.add_subcommand("check", "validate a complex and optionally a map");
  add_complex(cmd_check);
  add_map(cmd_check, false);

  CLI::App* cmd_euler = app.add_subcommand("euler", "Euler characteristic of the complex");
  add_complex(cmd_euler);

  CLI::App* cmd_euler_comb = app.add_subcommand("euler-comb", "combinatorial Euler characteristic of a cell set");
  add_complex(cmd_euler_comb);
  cmd_euler_comb->add_option("--set", set_path, "cell set file (.cells); defaults to all cells");

  CLI::App* cmd_homology = app.add_subcommand("homology", "rational Betti numbers");
  add_complex(cmd_homology);

  CLI::App* cmd_lefschetz = app.add_subcommand("lefschetz", "classical Lefschetz number of a simplicial self-map");
  add_complex(cmd_lefschetz);
  add_map(cmd_lefschetz, true);

  CLI::App* cmd_comb = app.add_subcommand("lefschetz-comb", "combinatorial Lefschetz number over a cell set");
  add_complex(cmd_comb);
  add_map(cmd_comb, true);
  cmd_comb->add_option("--set", set_path, "cell set file (.cells)")->required();
  cmd_comb->add_flag("--no-enforce", no_enforce, "skip the cell-compatibility check");

  CLI::App* cmd_relative = app.add_subcommand("relative", "relative Lefschetz number of a pair");
  add_complex(cmd_relative);
  add_map(cmd_relative, true);
  cmd_relative->add_option("--sub", sub_path, "invariant subcomplex (.cells)")->required();

  CLI::App* cmd_quotient = app.add_subcommand("quotient-lefschetz", "Lefschetz number of the induced map on the quotient");
  add_complex(cmd_quotient);
  add_map(cmd_quotient, true);
  cmd_quotient->add_option("--sub", sub_path, "collapsed subcomplex (.cells)")->required();

  CLI::App* cmd_index = app.add_subcommand("index", "fixed-point index of an open cell set");
  add_complex(cmd_index);
  add_map(cmd_index, true);
  cmd_index->add_option("--open", open_path, "open cell set (.cells)")->required();

  CLI::App* cmd_certify = app.add_subcommand("certify", "fixed-point certificate over a cell set");
  add_complex(cmd_certify);
  add_map(cmd_certify, true);
  cmd_certify->add_option("--set", set_path, "cell set file (.cells)")->required();

  CLI::App* cmd_unbounded = app.add_subcommand("certify-unbounded", "fixed-point certificate for the complement of a corona");
  add_complex(cmd_unbounded);
  add_map(cmd_unbounded, true);
  cmd_unbounded->add_option("--corona", corona_path, "corona subcomplex (.cells)")->required();
  cmd_unbounded
      ->add_option("--class", class_name,
                   "space class: graph | surface | surface-boundary | wedge")
      ->required();
  cmd_unbounded->add_option("--chi", chi_text, "comma-separated Euler characteristics of wedge summands");
  cmd_unbounded->add_flag("--assume-conjecture", assume_conjecture,
                          "accept the conjectural certificate outside the proven classes");

  CLI::App* cmd_torus = app.add_subcommand("torus-lefschetz", "Lefschetz number det(I - A) of a torus map matrix");
  cmd_torus->add_option("--p", p, "torus dimension")->required();
  cmd_torus->add_option("--matrix", matrix_text, "p x p integer matrix, rows separated by ';'")->required();

  CLI::App* cmd_nielsen = app.add_subcommand("nielsen-bound", "Nielsen number |det(I - A)| and triad lower bound");
  cmd_nielsen->add_option("--p", p, "torus dimension")->required();
  cmd_nielsen->add_option("--matrix", matrix_text, "first map matrix")->required();
  cmd_nielsen->add_option("--matrix2", matrix2_text, "second map matrix (enables the triad bound)");

  CLI::App* cmd_subdivide = app.add_subcommand("subdivide", "barycentric subdivision, printed in complex file format");
  add_complex(cmd_subdivide);
  cmd_subdivide->add_option("--rounds", rounds, "number of subdivision rounds (default 1)");

  CLI::App* cmd_suite = app.add_subcommand("paper-suite", "recompute the worked-example table");

  CLI::App* cmd_prop = app.add_subcommand("proptest", "seeded randomized property checks");
  cmd_prop->add_option("--seed", seed, "random seed")->required();
  cmd_prop->add_option("--cases", cases, "number of cases per property (default 100)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    Report report;

    if (cmd_check->parsed()) {
      lz::ComplexPtr X = lz::load_complex(complex_path);
      report.add("vertices", static_cast<long long>(X->num_vertices()));
      report.add("dim", static_cast<long long>(X->dim()));
      report.add("cells", static_cast<long long>(X->total_cells()));
      report.add("euler", static_cast<long long>(X->euler()));
      report.add("connected", X->connected());
      if (!map_path.empty()) {
        lz::VertexSelfMap phi = lz::load_map(X, map_path);
        const auto violation = phi.simpliciality_violation();
        report.add("simplicial", !violation.has_value());
        if (violation) {
          report.add("valid", false);
          report.print(as_json);
          std::cerr << "error: " << *violation << "\n";
          return kExitPrecondition;
        }
      }
      report.add("valid", true);
    } else if (cmd_euler->parsed()) {
      lz::ComplexPtr X = lz::load_complex(complex_path);
      report.add("euler", static_cast<long long>(X->euler()));
    } else if (cmd_euler_comb->parsed()) {
      lz::ComplexPtr X = lz::load_complex(complex_path);
      lz::CellSet A = set_path.empty() ? lz::CellSet::full_set(X)
                                       : lz::load_cellset(X, set_path);
      report.add("euler_comb", static_cast<long long>(lz::euler_comb(A)));
    } else if (cmd_homology->parsed()) {
      lz::ComplexPtr X = lz::load_complex(complex_path);
      lz::ChainSystem S = lz::boundary_system(X);
      const std::vector<int> b = lz::betti(S);
      for (std::size_t i = 0; i < b.size(); ++i)
        report.add("betti_" + std::to_string(i), static_cast<long long>(b[i]));
      report.add("euler", static_cast<long long>(X->euler()));
    } else if (cmd_lefschetz->parsed()) {
      lz::ComplexPtr X = lz::load_complex(complex_path);
      lz::VertexSelfMap phi = lz::load_map(X, map_path);
      lz::ChainSystem S(phi);
      report.add("lefschetz", lz::homology_lefschetz(S));
    } else if (cmd_comb->parsed()) {
      lz::ComplexPtr X = lz::load_complex(complex_path);
      lz::SelfMapSystem S(lz::load_map(X, map_path));
      lz::CellSet A = lz::load_cellset(X, set_path);
      report.add("lambda_comb", lz::lambda_comb(S, A, !no_enforce));
      if (no_enforce)
        report.add("compatible", lz::check_compatibility(S, A).compatible());
    } else if (cmd_relative->parsed()) {
      lz::ComplexPtr X = lz::load_complex(complex_path);
      lz::SelfMapSystem S(lz::load_map(X, map_path));
      lz::CellSet C = lz::load_cellset(X, sub_path);
      report.add("relative_lefschetz", lz::relative_lefschetz(S, C));
    } else if (cmd_quotient->parsed()) {
      lz::ComplexPtr X = lz::load_complex(complex_path);
      lz::SelfMapSystem S(lz::load_map(X, map_path));
      lz::CellSet A = lz::load_cellset(X, sub_path);
      report.add("quotient_lambda", lz::quotient_lambda(S, A));
    } else if (cmd_index->parsed()) {
      lz::ComplexPtr X = lz::load_complex(complex_path);
      lz::SelfMapSystem S(lz::load_map(X, map_path));
      lz::CellSet U = lz::load_cellset(X, open_path);
      const lz::IndexResult result = lz::index_via_lambda(S, U);
      report.add("index", result.value);
      report.add("certified", result.certified);
      if (result.frontier_witness)
        report.add("frontier_witness", *result.frontier_witness);
    } else if (cmd_certify->parsed()) {
      lz::ComplexPtr X = lz::load_complex(complex_path);
      lz::SelfMapSystem S(lz::load_map(X, map_path));
      lz::CellSet A = lz::load_cellset(X, set_path);
      add_certificate(report, lz::certify_fixed_point(S, A));
    } else if (cmd_unbounded->parsed()) {
      lz::ComplexPtr X = lz::load_complex(complex_path);
      lz::SelfMapSystem S(lz::load_map(X, map_path));
      lz::CellSet corona = lz::load_cellset(X, corona_path);
      lz::CompactifiedSystem C(std::move(S), std::move(corona));
      lz::SpaceClass cls;
      if (class_name == "graph") {
        cls.tag = lz::SpaceClass::Tag::GraphConnected;
      } else if (class_name == "surface") {
        cls.tag = lz::SpaceClass::Tag::SurfaceNegChi;
      } else if (class_name == "surface-boundary") {
        cls.tag = lz::SpaceClass::Tag::SurfaceWithBoundary;
      } else if (class_name == "wedge") {
        cls.tag = lz::SpaceClass::Tag::WedgeOfSurfaces;
        std::stringstream chi_stream(chi_text);
        std::string entry;
        while (std::getline(chi_stream, entry, ','))
          if (!entry.empty()) {
            try {
              cls.chi_list.push_back(std::stoll(entry));
            } catch (const std::exception&) {
              lz::throw_parse("bad --chi entry: " + entry);
            }
          }
        if (cls.chi_list.empty())
          lz::throw_parse("--class=wedge requires --chi");
      } else {
        lz::throw_parse("unknown space class: " + class_name);
      }
      add_certificate(report, lz::certify_unbounded(C, cls, assume_conjecture));
      try {
        report.add("index_at_infinity", lz::index_at_infinity(C));
      } catch (const lz::Error&) {
        // The index requires a one-vertex corona and an isolated fixed
        // point at infinity; when unavailable the key is simply omitted.
      }
    } else if (cmd_torus->parsed()) {
      const lz::TorusMapMatrix A = parse_matrix(p, matrix_text);
      report.add("lefschetz", big_to_string(lz::torus_lefschetz(A)));
      report.add("nielsen", big_to_string(lz::torus_nielsen(A)));
    } else if (cmd_nielsen->parsed()) {
      const lz::TorusMapMatrix A = parse_matrix(p, matrix_text);
      report.add("nielsen", big_to_string(lz::torus_nielsen(A)));
      if (!matrix2_text.empty()) {
        const lz::TorusMapMatrix B = parse_matrix(p, matrix2_text);
        const lz::TriadBound bound = lz::triad_lower_bound(A, B);
        report.add("nielsen_2", big_to_string(lz::torus_nielsen(B)));
        report.add("triad_bound", big_to_string(bound.bound));
        report.add("requires_p_at_least_3", bound.requires_p_at_least_3);
      }
    } else if (cmd_subdivide->parsed()) {
      if (rounds < 1) lz::throw_precondition("--rounds must be positive");
      lz::ComplexPtr X = lz::load_complex(complex_path);
      for (int i = 0; i < rounds; ++i)
        X = lz::barycentric_subdivide(X).subdivided;
      if (as_json) {
        ordered_json simplices = ordered_json::array();
        const int top = X->dim();
        for (int q = 0; q <= top; ++q)
          for (const lz::Simplex& s : X->cells(q)) {
            if (q < top && X->coface_count(s, q + 1) > 0) continue;
            ordered_json tokens = ordered_json::array();
            for (lz::Vertex v : s) tokens.push_back(X->token(v));
            simplices.push_back(std::move(tokens));
          }
        report.add_json("simplices", std::move(simplices));
        report.add_json("vertices", X->num_vertices());
        report.print(true);
        return kExitSuccess;
      }
      std::cout << lz::serialize_complex(*X);
      return kExitSuccess;
    } else if (cmd_suite->parsed()) {
      SuiteOutcome outcome = run_suite();
      outcome.report.print(as_json);
      return outcome.pass ? kExitSuccess : kExitProperty;
    } else if (cmd_prop->parsed()) {
      if (cases < 1) lz::throw_precondition("--cases must be positive");
      PropOutcome outcome = run_proptest(seed, cases);
      outcome.report.print(as_json);
      return outcome.pass ? kExitSuccess : kExitProperty;
    }

    report.print(as_json);
    return kExitSuccess;
  } catch (const lz::Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return exit_code_for(error);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitProperty;
  }
}

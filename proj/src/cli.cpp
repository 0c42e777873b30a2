#include "subnetrel/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "subnetrel/closed_forms.hpp"
#include "subnetrel/errors.hpp"
#include "subnetrel/montecarlo.hpp"
#include "subnetrel/patterns.hpp"
#include "subnetrel/reliability.hpp"
#include "subnetrel/serialization.hpp"

namespace subnetrel::cli {

namespace {

Composition parse_composition(const std::string& text) {
  int parts[3];
  std::size_t start = 0;
  for (int slot = 0; slot < 3; ++slot) {
    const std::size_t comma = text.find(',', start);
    const bool last = slot == 2;
    if (last != (comma == std::string::npos)) {
      throw std::invalid_argument("composition must look like i,j,k");
    }
    const std::string piece = text.substr(start, last ? std::string::npos : comma - start);
    try {
      parts[slot] = std::stoi(piece);
    } catch (const std::exception&) {
      throw std::invalid_argument("composition must contain integers");
    }
    start = comma + 1;
  }
  const Composition c{parts[0], parts[1], parts[2]};
  if (!is_valid_composition(c)) {
    throw std::invalid_argument("composition must be non-negative and sum to 4");
  }
  return c;
}

std::vector<double> parse_p_grid(const std::string& text) {
  const std::size_t first = text.find(':');
  const std::size_t second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw std::invalid_argument("p-grid must look like a:b:step");
  }
  double a, b, step;
  try {
    a = std::stod(text.substr(0, first));
    b = std::stod(text.substr(first + 1, second - first - 1));
    step = std::stod(text.substr(second + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("p-grid must contain numbers");
  }
  if (!(step > 0.0) || b < a) {
    throw std::invalid_argument("p-grid needs a <= b and step > 0");
  }
  if (a < 0.0 || b > 1.0) {
    throw std::invalid_argument("p-grid must stay inside [0, 1]");
  }
  std::vector<double> grid;
  const auto count = static_cast<std::int64_t>(std::floor((b - a) / step + 1e-9)) + 1;
  grid.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    grid.push_back(a + static_cast<double>(i) * step);
  }
  return grid;
}

void emit(const std::string& text, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output_path, std::ios::binary);
  if (!file) {
    throw std::invalid_argument("cannot open output file: " + output_path);
  }
  file << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subnetwork reliability toolkit for bubble-sort networks"};
  app.require_subcommand(1);

  int n = 0;
  std::string composition_text;
  std::string format = "json";
  std::string output_path;
  std::string p_grid_text;
  double p = 0.0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  bool all_compositions_flag = false;
  bool strict = false;
  bool aggregate_symmetric = false;

  const auto add_common = [&](CLI::App* cmd, bool needs_composition) {
    cmd->add_option("--n", n, "dimension of the network")->required();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", output_path, "write the result to this file");
    if (needs_composition) {
      cmd->add_option("--composition", composition_text, "family split i,j,k")->required();
    }
  };

  auto* subnets = app.add_subcommand("subnets", "subnetwork pattern catalogue");
  auto* subnets_list = subnets->add_subcommand("list", "list all 3n(n-1) patterns");
  add_common(subnets_list, false);

  auto* poly = app.add_subcommand("poly", "reliability polynomials");
  auto* poly_exact = poly->add_subcommand("exact", "brute-force polynomial for one split");
  add_common(poly_exact, true);
  auto* poly_paper = poly->add_subcommand("paper", "published closed-form polynomial");
  add_common(poly_paper, true);

  auto* verify_cmd = app.add_subcommand("verify", "closed form vs. brute force");
  verify_cmd->add_option("--n", n, "dimension of the network")->required();
  verify_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  verify_cmd->add_option("--output", output_path, "write the result to this file");
  auto* one_comp = verify_cmd->add_option("--composition", composition_text, "family split i,j,k");
  auto* all_comp = verify_cmd->add_flag("--all", all_compositions_flag,
                                        "verify every one of the 15 splits");
  one_comp->excludes(all_comp);
  verify_cmd->add_flag("--strict", strict, "exit 2 when any row mismatches");
  verify_cmd->add_flag("--aggregate-symmetric", aggregate_symmetric,
                       "sum the oracle over the published equality class");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo fault injection");
  add_common(simulate, true);
  simulate->add_option("--p", p, "per-node survival probability")->required();
  simulate->add_option("--trials", trials, "number of trials")->required();
  simulate->add_option("--seed", seed, "rng seed")->required();

  auto* table = app.add_subcommand("table", "evaluate over a p grid");
  table->add_option("--n", n, "dimension of the network")->required();
  table->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  table->add_option("--output", output_path, "write the result to this file");
  table->add_option("--composition", composition_text,
                    "family split i,j,k (defaults to all 4-subsets)");
  table->add_option("--p-grid", p_grid_text, "grid a:b:step")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const bool json = format == "json";

    if (subnets_list->parsed()) {
      const auto patterns = enumerate_patterns(n);
      emit(json ? patterns_to_json(n, patterns) : patterns_to_csv(patterns), output_path, out);
      return 0;
    }

    if (poly_exact->parsed() || poly_paper->parsed()) {
      const Composition c = parse_composition(composition_text);
      const ReliabilityPolynomial result =
          poly_exact->parsed() ? composition_polynomial(n, c) : closed_form(c, n);
      emit(json ? polynomial_to_json(result, c) : polynomial_to_csv(result), output_path, out);
      return 0;
    }

    if (verify_cmd->parsed()) {
      if (!all_compositions_flag && composition_text.empty()) {
        throw std::invalid_argument("verify needs --composition or --all");
      }
      std::vector<VerificationReport> reports;
      if (all_compositions_flag) {
        for (const auto& c : all_compositions()) {
          reports.push_back(verify(c, n, aggregate_symmetric));
        }
      } else {
        reports.push_back(verify(parse_composition(composition_text), n, aggregate_symmetric));
      }
      std::string text;
      if (reports.size() == 1) {
        text = json ? report_to_json(reports.front()) : report_to_csv(reports.front());
      } else {
        text = json ? reports_to_json(n, reports) : reports_to_csv(reports);
      }
      emit(text, output_path, out);
      bool mismatch = false;
      for (const auto& report : reports) {
        mismatch = mismatch || report.summary == RowStatus::kMismatch;
      }
      return (strict && mismatch) ? 2 : 0;
    }

    if (simulate->parsed()) {
      const Composition c = parse_composition(composition_text);
      const SimulationResult result = monte_carlo(n, p, c, trials, seed);
      const SimulationConfig config{n, c, p};
      emit(json ? simulation_to_json(config, result) : simulation_to_csv(config, result),
           output_path, out);
      return 0;
    }

    if (table->parsed()) {
      std::optional<Composition> c;
      if (!composition_text.empty()) {
        c = parse_composition(composition_text);
      }
      const ReliabilityPolynomial poly_value =
          c ? composition_polynomial(n, *c) : total_polynomial(n);
      std::vector<SweepRow> rows;
      for (double pv : parse_p_grid(p_grid_text)) {
        rows.push_back(SweepRow{pv, evaluate(poly_value, pv)});
      }
      emit(json ? sweep_to_json(n, c, rows) : sweep_to_csv(rows), output_path, out);
      return 0;
    }

    throw std::invalid_argument("no command given");
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace subnetrel::cli

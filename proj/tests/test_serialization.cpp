#include <string>

#include "doctest.h"
#include "subnetrel/reliability.hpp"
#include "subnetrel/serialization.hpp"

using namespace subnetrel;

TEST_CASE("polynomial json matches the documented schema byte for byte") {
  const auto poly = composition_polynomial(4, {4, 0, 0});
  CHECK(polynomial_to_json(poly, Composition{4, 0, 0}) ==
        "{\"n\":4,\"composition\":[4,0,0],\"terms\":"
        "[{\"key\":[4,0,0],\"exponent\":8,\"coefficient\":\"495\"}]}\n");
}

TEST_CASE("polynomial json round trips") {
  const auto poly = composition_polynomial(5, {2, 1, 1});
  const auto text = polynomial_to_json(poly, Composition{2, 1, 1});
  const auto [parsed, c] = polynomial_from_json(text);
  CHECK(parsed == poly);
  REQUIRE(c.has_value());
  CHECK(*c == Composition{2, 1, 1});

  const auto total = total_polynomial(4);
  const auto [parsed_total, no_comp] = polynomial_from_json(polynomial_to_json(total));
  CHECK(parsed_total == total);
  CHECK_FALSE(no_comp.has_value());
}

TEST_CASE("polynomial csv lists terms largest key first") {
  const auto poly = composition_polynomial(4, {3, 1, 0});
  const auto csv = polynomial_to_csv(poly);
  CHECK(csv.starts_with("c2,c3,c4,exponent,coefficient\n4,0,0,8,"));
  CHECK(csv.find("4,-2,0,6,") != std::string::npos);
}

TEST_CASE("pattern listings") {
  const auto pats = enumerate_patterns(4);
  const auto json = patterns_to_json(4, pats);
  CHECK(json.find("\"count\":36") != std::string::npos);
  CHECK(json.find("\"F:1,2\"") != std::string::npos);

  const auto csv = patterns_to_csv(pats);
  CHECK(csv.starts_with("pattern,family,s1,s2\n\"F:1,2\",F,1,2\n"));
  std::size_t lines = 0;
  for (char ch : csv) {
    lines += ch == '\n';
  }
  CHECK(lines == 37);  // header + 36 rows
}

TEST_CASE("verification report serializations") {
  const auto report = verify({4, 0, 0}, 4);
  const auto json = report_to_json(report);
  CHECK(json.find("\"paper\":\"1485\"") != std::string::npos);
  CHECK(json.find("\"oracle\":\"495\"") != std::string::npos);
  CHECK(json.find("\"ratio\":\"3\"") != std::string::npos);
  CHECK(json.find("\"status\":\"MISMATCH\"") != std::string::npos);

  const auto csv = report_to_csv(report);
  CHECK(csv == "exponent,paper,oracle,status,ratio\n8,1485,495,MISMATCH,3\n");

  const auto matching = verify({3, 1, 0}, 4);
  const auto match_csv = report_to_csv(matching);
  CHECK(match_csv.find("MATCH") != std::string::npos);
  CHECK(match_csv.find("MISMATCH") == std::string::npos);
}

TEST_CASE("simulation and sweep serializations") {
  const SimulationConfig config{4, {4, 0, 0}, 0.5};
  SimulationResult result;
  result.mean = 1.93359375;
  result.std_error = 0.0;
  result.trials = 10;
  result.seed = 7;
  const auto json = simulation_to_json(config, result);
  CHECK(json.find("\"rng\":\"splitmix64\"") != std::string::npos);
  CHECK(json.find("\"seed\":7") != std::string::npos);
  const auto csv = simulation_to_csv(config, result);
  CHECK(csv.find("1.93359375") != std::string::npos);

  const std::vector<SweepRow> rows = {{0.0, 0.0}, {0.5, 1.93359375}, {1.0, 495.0}};
  CHECK(sweep_to_csv(rows) == "p,value\n0,0\n0.5,1.93359375\n1,495\n");
  const auto sweep_json = sweep_to_json(4, Composition{4, 0, 0}, rows);
  CHECK(sweep_json.find("\"rows\":[{\"p\":0.0,\"value\":0.0}") != std::string::npos);
}

TEST_CASE("format_real keeps 12 significant digits") {
  CHECK(format_real(1.93359375) == "1.93359375");
  CHECK(format_real(213.08126895) == "213.08126895");
  CHECK(format_real(0.1234567890123) == "0.123456789012");
}

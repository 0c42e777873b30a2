#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subnetrel/closed_forms.hpp"
#include "subnetrel/montecarlo.hpp"
#include "subnetrel/patterns.hpp"
#include "subnetrel/polynomial.hpp"

namespace subnetrel {

// Coefficients travel as decimal strings so arbitrary precision survives the
// round trip; exponents are evaluated integers; keys are preserved.
std::string polynomial_to_json(const ReliabilityPolynomial& poly,
                               const std::optional<Composition>& c = std::nullopt);
std::pair<ReliabilityPolynomial, std::optional<Composition>> polynomial_from_json(
    const std::string& text);
std::string polynomial_to_csv(const ReliabilityPolynomial& poly);

std::string patterns_to_json(int n, const std::vector<SubnetworkPattern>& patterns);
std::string patterns_to_csv(const std::vector<SubnetworkPattern>& patterns);

std::string report_to_json(const VerificationReport& report);
std::string report_to_csv(const VerificationReport& report);
std::string reports_to_json(int n, const std::vector<VerificationReport>& reports);
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

struct SimulationConfig {
  int n = 0;
  Composition composition;
  double p = 0.0;
};

std::string simulation_to_json(const SimulationConfig& config, const SimulationResult& result);
std::string simulation_to_csv(const SimulationConfig& config, const SimulationResult& result);

struct SweepRow {
  double p = 0.0;
  double value = 0.0;
};

std::string sweep_to_json(int n, const std::optional<Composition>& c,
                          const std::vector<SweepRow>& rows);
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

// CSV cells for evaluated probabilities carry 12 significant digits.
std::string format_real(double value);

}  // namespace subnetrel

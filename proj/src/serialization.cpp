#include "subnetrel/serialization.hpp"

#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace subnetrel {

namespace {

using Json = nlohmann::ordered_json;

Json composition_json(const Composition& c) { return Json::array({c.i, c.j, c.k}); }

const char* status_name(RowStatus status) {
  return status == RowStatus::kMatch ? "MATCH" : "MISMATCH";
}

Json report_json(const VerificationReport& report) {
  Json doc;
  doc["n"] = report.n;
  doc["composition"] = composition_json(report.composition);
  doc["source"] = report.source;
  doc["aggregate_symmetric"] = report.aggregate_symmetric;
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r;
    r["exponent"] = row.exponent;
    r["paper"] = row.paper.str();
    r["oracle"] = row.oracle.str();
    r["status"] = status_name(row.status);
    if (row.ratio) {
      r["ratio"] = row.ratio->str();
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  doc["status"] = status_name(report.summary);
  return doc;
}

void append_report_rows(std::string& out, const VerificationReport& report,
                        bool with_composition) {
  for (const auto& row : report.rows) {
    if (with_composition) {
      out += std::to_string(report.composition.i) + ',' +
             std::to_string(report.composition.j) + ',' + std::to_string(report.composition.k) +
             ',';
    }
    out += std::to_string(row.exponent);
    out += ',';
    out += row.paper.str();
    out += ',';
    out += row.oracle.str();
    out += ',';
    out += status_name(row.status);
    out += ',';
    if (row.ratio) {
      out += row.ratio->str();
    }
    out += '\n';
  }
}

}  // namespace

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string polynomial_to_json(const ReliabilityPolynomial& poly,
                               const std::optional<Composition>& c) {
  Json doc;
  doc["n"] = poly.n();
  if (c) {
    doc["composition"] = composition_json(*c);
  }
  Json terms = Json::array();
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
    Json term;
    term["key"] = Json::array({it->first.c2, it->first.c3, it->first.c4});
    term["exponent"] = exponent_value(it->first, poly.n());
    term["coefficient"] = it->second.str();
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  return doc.dump() + "\n";
}

std::pair<ReliabilityPolynomial, std::optional<Composition>> polynomial_from_json(
    const std::string& text) {
  const Json doc = Json::parse(text);
  ReliabilityPolynomial poly(doc.at("n").get<int>());
  std::optional<Composition> c;
  if (doc.contains("composition")) {
    const auto& arr = doc.at("composition");
    c = Composition{arr.at(0).get<int>(), arr.at(1).get<int>(), arr.at(2).get<int>()};
  }
  for (const auto& term : doc.at("terms")) {
    const auto& key = term.at("key");
    poly.add(ExponentKey{key.at(0).get<int>(), key.at(1).get<int>(), key.at(2).get<int>()},
             BigInt(term.at("coefficient").get<std::string>()));
  }
  return {std::move(poly), c};
}

std::string polynomial_to_csv(const ReliabilityPolynomial& poly) {
  std::string out = "c2,c3,c4,exponent,coefficient\n";
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
    out += std::to_string(it->first.c2) + ',' + std::to_string(it->first.c3) + ',' +
           std::to_string(it->first.c4) + ',' +
           std::to_string(exponent_value(it->first, poly.n())) + ',' + it->second.str() + '\n';
  }
  return out;
}

std::string patterns_to_json(int n, const std::vector<SubnetworkPattern>& patterns) {
  Json doc;
  doc["n"] = n;
  doc["count"] = patterns.size();
  Json list = Json::array();
  for (const auto& pat : patterns) {
    list.push_back(to_string(pat));
  }
  doc["patterns"] = std::move(list);
  return doc.dump() + "\n";
}

std::string patterns_to_csv(const std::vector<SubnetworkPattern>& patterns) {
  std::string out = "pattern,family,s1,s2\n";
  for (const auto& pat : patterns) {
    out += '"' + to_string(pat) + "\"," + family_code(pat.family) + std::string(1, ',') +
           std::to_string(pat.s1) + ',' + std::to_string(pat.s2) + '\n';
  }
  return out;
}

std::string report_to_json(const VerificationReport& report) {
  return report_json(report).dump() + "\n";
}

std::string report_to_csv(const VerificationReport& report) {
  std::string out = "exponent,paper,oracle,status,ratio\n";
  append_report_rows(out, report, false);
  return out;
}

std::string reports_to_json(int n, const std::vector<VerificationReport>& reports) {
  Json doc;
  doc["n"] = n;
  bool aggregate = false;
  bool all_match = true;
  Json list = Json::array();
  for (const auto& report : reports) {
    aggregate = aggregate || report.aggregate_symmetric;
    all_match = all_match && report.summary == RowStatus::kMatch;
    list.push_back(report_json(report));
  }
  doc["aggregate_symmetric"] = aggregate;
  doc["reports"] = std::move(list);
  doc["status"] = all_match ? "MATCH" : "MISMATCH";
  return doc.dump() + "\n";
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::string out = "i,j,k,exponent,paper,oracle,status,ratio\n";
  for (const auto& report : reports) {
    append_report_rows(out, report, true);
  }
  return out;
}

std::string simulation_to_json(const SimulationConfig& config, const SimulationResult& result) {
  Json doc;
  doc["n"] = config.n;
  doc["composition"] = composition_json(config.composition);
  doc["p"] = config.p;
  doc["trials"] = result.trials;
  doc["seed"] = result.seed;
  doc["rng"] = kRngAlgorithm;
  doc["mean"] = result.mean;
  doc["stderr"] = result.std_error;
  return doc.dump() + "\n";
}

std::string simulation_to_csv(const SimulationConfig& config, const SimulationResult& result) {
  std::string out = "n,i,j,k,p,trials,seed,rng,mean,stderr\n";
  out += std::to_string(config.n) + ',' + std::to_string(config.composition.i) + ',' +
         std::to_string(config.composition.j) + ',' + std::to_string(config.composition.k) +
         ',' + format_real(config.p) + ',' + std::to_string(result.trials) + ',' +
         std::to_string(result.seed) + ',' + kRngAlgorithm + ',' + format_real(result.mean) +
         ',' + format_real(result.std_error) + '\n';
  return out;
}

std::string sweep_to_json(int n, const std::optional<Composition>& c,
                          const std::vector<SweepRow>& rows) {
  Json doc;
  doc["n"] = n;
  if (c) {
    doc["composition"] = composition_json(*c);
  }
  Json list = Json::array();
  for (const auto& row : rows) {
    Json r;
    r["p"] = row.p;
    r["value"] = row.value;
    list.push_back(std::move(r));
  }
  doc["rows"] = std::move(list);
  return doc.dump() + "\n";
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "p,value\n";
  for (const auto& row : rows) {
    out += format_real(row.p) + std::string(1, ',') + format_real(row.value) + '\n';
  }
  return out;
}

}  // namespace subnetrel

#include "subnetrel/closed_forms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "subnetrel/errors.hpp"
#include "subnetrel/limits.hpp"
#include "subnetrel/perm.hpp"
#include "subnetrel/reliability.hpp"

namespace subnetrel {

namespace {

std::vector<TheoremEntry> theorem1_entries() {
  return {
      {{4, 0, 0}, 1, 8, {1, -4, 0, 14, -6, -16, 5, 6, 0}},
  };
}

std::vector<TheoremEntry> theorem2_entries() {
  return {
      {{4, 0, 0}, 1, 6, {1, -7, 21, -35, 34, -18, 4, 0, 0}},
      {{4, -1, 0}, 1, 2, {1, -7, 21, -35, 34, -18, 4, 0}},
      {{4, -2, 0}, 1, 2, {1, -8, 25, -40, 34, -12, 0}},
      {{4, -3, 0}, 1, 6, {1, -10, 35, -50, 24, 0}},
  };
}

std::vector<TheoremEntry> theorem4_entries() {
  return {
      {{4, 0, 0}, 4, 3, {8, -50, 115, -115, 42, 0}},
      {{4, 0, -1}, 1, 1, {8, -74, 265, -460, 387, -126, 0}},
      {{4, 0, -2}, 1, 1, {2, -25, 125, -320, 443, -315, 90, 0}},
      {{4, 0, -3}, 1, 6, {1, -16, 105, -365, 724, -819, 490, -120, 0}},
  };
}

std::vector<TheoremEntry> theorem6_entries() {
  return {
      {{4, 0, 0}, 1, 4, {1, -8, 30, -69, 104, -99, 53, -12, 0}},
      {{4, -1, 0}, 1, 1, {1, -8, 29, -59, 68, -41, 10, 0}},
      {{4, -2, 0}, 1, 2, {3, -23, 67, -92, 59, -14, 0}},
      {{4, -3, 0}, 1, 1, {1, -6, 11, -6, 0}},
      {{4, -4, 0}, 1, 4, {1, -10, 35, -50, 24, 0}},
  };
}

std::vector<TheoremEntry> theorem8_entries() {
  return {
      {{4, 0, 0}, 1, 2, {8, 8, -174, 347, -189, 0}},
      {{4, 0, -1}, 16, 1, {3, -25, 75, -95, 42, 0}},
      {{4, 0, -2}, 4, 1, {6, -73, 345, -785, 849, -342, 0}},
      {{4, 0, -3}, 2, 1, {2, -33, 223, -785, 1503, -1462, 552, 0}},
      {{4, 0, -4}, 1, 4, {1, -20, 172, -822, 2340, -3916, 3499, -1254, 0}},
  };
}

std::vector<TheoremEntry> theorem9_entries() {
  return {
      {{4, 0, 0}, 1, 1, {8, -65, 229, -421, 389, -140, 0}},
      {{4, -1, 0}, 1, 2, {44, -291, 716, -771, 302, 0}},
      {{4, -2, 0}, 1, 2, {2, -5, -10, 35, -22, 0}},
      {{4, 0, -1}, 1, 1, {4, -46, 231, -647, 1043, -891, 306, 0}},
      {{4, -1, -1}, 1, 1, {12, -128, 535, -1090, 1073, -402, 0}},
      {{4, -2, -1}, 1, 1, {7, -59, 179, -229, 102, 0}},
      {{4, -3, -1}, 1, 1, {1, -6, 11, -6, 0}},
      {{4, 0, -2}, 1, 2, {1, -15, 99, -377, 892, -1288, 1024, -336, 0}},
      {{4, -1, -2}, 1, 2, {3, -45, 277, -893, 1580, -1438, 516, 0}},
      {{4, -2, -2}, 1, 2, {3, -38, 187, -442, 494, -204, 0}},
      {{4, -3, -2}, 1, 2, {1, -10, 35, -50, 24, 0}},
  };
}

std::vector<TheoremEntry> theorem11_entries() {
  return {
      {{4, 0, 0}, 1, 1, {2, -17, 65, -139, 173, -118, 34, 0}},
      {{4, -1, 0}, 1, 1, {8, -61, 199, -347, 315, -114, 0}},
      {{4, -2, 0}, 1, 1, {1, 0, -32, 112, -143, 62, 0}},
      {{4, -3, 0}, 2, 1, {1, -8, 23, -28, 12, 0}},
      {{4, 0, -1}, 1, 2, {1, -12, 65, -207, 416, -525, 382, -120, 0}},
      {{4, -1, -1}, 2, 1, {1, -12, 61, -171, 280, -249, 90, 0}},
      {{4, -2, -1}, 1, 1, {2, -25, 121, -281, 309, -126, 0}},
  };
}

std::vector<TheoremTable> build_tables() {
  std::vector<TheoremTable> tables;
  const auto add = [&tables](Composition c, std::string source,
                             std::vector<TheoremEntry> entries) {
    tables.push_back(TheoremTable{c, std::move(source), std::move(entries)});
  };
  add({4, 0, 0}, "theorem-1", theorem1_entries());
  add({0, 4, 0}, "theorem-1", theorem1_entries());
  add({0, 0, 4}, "theorem-1", theorem1_entries());
  add({3, 1, 0}, "theorem-2", theorem2_entries());
  add({1, 3, 0}, "theorem-3", theorem2_entries());
  add({0, 3, 1}, "theorem-3", theorem2_entries());
  add({0, 1, 3}, "theorem-3", theorem2_entries());
  add({3, 0, 1}, "theorem-4", theorem4_entries());
  add({1, 0, 3}, "theorem-5", theorem4_entries());
  add({2, 2, 0}, "theorem-6", theorem6_entries());
  add({0, 2, 2}, "theorem-7", theorem6_entries());
  add({2, 0, 2}, "theorem-8", theorem8_entries());
  add({2, 1, 1}, "theorem-9", theorem9_entries());
  add({1, 1, 2}, "theorem-10", theorem9_entries());
  add({1, 2, 1}, "theorem-11", theorem11_entries());
  return tables;
}

const std::vector<TheoremTable>& tables() {
  static const std::vector<TheoremTable> instance = build_tables();
  return instance;
}

// Equality classes as published: one table serves each class.
const std::vector<std::vector<Composition>>& orbits() {
  static const std::vector<std::vector<Composition>> instance = {
      {{4, 0, 0}, {0, 4, 0}, {0, 0, 4}},
      {{3, 1, 0}, {1, 3, 0}, {0, 3, 1}, {0, 1, 3}},
      {{3, 0, 1}, {1, 0, 3}},
      {{2, 2, 0}, {0, 2, 2}},
      {{2, 0, 2}},
      {{2, 1, 1}, {1, 1, 2}},
      {{1, 2, 1}},
  };
  return instance;
}

void check_composition(const Composition& c) {
  if (!is_valid_composition(c)) {
    throw std::invalid_argument("composition must be non-negative and sum to 4");
  }
}

void check_symbolic_n(int n) {
  if (n < kMinN) {
    throw std::invalid_argument("n must be at least " + std::to_string(kMinN));
  }
  if (n > kMaxSymbolicN) {
    throw CapacityError("closed forms are capped at n = " + std::to_string(kMaxSymbolicN));
  }
}

}  // namespace

const TheoremTable& theorem_table(const Composition& c) {
  check_composition(c);
  for (const auto& table : tables()) {
    if (table.composition == c) {
      return table;
    }
  }
  throw std::logic_error("no table for composition");
}

std::vector<Composition> symmetry_orbit(const Composition& c) {
  check_composition(c);
  for (const auto& orbit : orbits()) {
    if (std::find(orbit.begin(), orbit.end(), c) != orbit.end()) {
      return orbit;
    }
  }
  throw std::logic_error("no orbit for composition");
}

BigInt entry_coefficient(const TheoremEntry& entry, int n) {
  BigInt value = 0;
  for (long long coeff : entry.coeffs) {
    value = value * n + coeff;
  }
  value *= entry.prefactor_num;
  if (value % entry.prefactor_den != 0) {
    throw std::logic_error("published coefficient is not integral at n = " + std::to_string(n));
  }
  return value / entry.prefactor_den;
}

ReliabilityPolynomial closed_form(const Composition& c, int n) {
  check_symbolic_n(n);
  ReliabilityPolynomial poly(n);
  for (const auto& entry : theorem_table(c).entries) {
    poly.add(entry.key, entry_coefficient(entry, n));
  }
  return poly;
}

VerificationReport verify(const Composition& c, int n, bool aggregate_symmetric) {
  check_symbolic_n(n);
  check_composition(c);

  const auto& table = theorem_table(c);
  const auto published = closed_form(c, n).collapsed();

  ReliabilityPolynomial oracle_poly = composition_polynomial(n, c);
  if (aggregate_symmetric) {
    for (const auto& other : symmetry_orbit(c)) {
      if (other != c) {
        oracle_poly.add(composition_polynomial(n, other));
      }
    }
  }
  const auto oracle = oracle_poly.collapsed();

  VerificationReport report;
  report.n = n;
  report.composition = c;
  report.source = table.source;
  report.aggregate_symmetric = aggregate_symmetric;

  std::map<std::int64_t, std::pair<BigInt, BigInt>> rows;
  for (const auto& [exp, coeff] : published) {
    rows[exp].first = coeff;
  }
  for (const auto& [exp, coeff] : oracle) {
    rows[exp].second = coeff;
  }

  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    VerificationRow row;
    row.exponent = it->first;
    row.paper = it->second.first;
    row.oracle = it->second.second;
    row.status = (row.paper == row.oracle) ? RowStatus::kMatch : RowStatus::kMismatch;
    if (row.status == RowStatus::kMismatch && row.paper != 0 && row.oracle != 0) {
      if (row.paper % row.oracle == 0) {
        row.ratio = row.paper / row.oracle;
      } else if (row.oracle % row.paper == 0) {
        row.ratio = row.oracle / row.paper;
      }
    }
    if (row.status == RowStatus::kMismatch) {
      report.summary = RowStatus::kMismatch;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

bool cross_check_another_way(int n) {
  check_symbolic_n(n);
  const BigInt pairs_full = 2 * binomial(n, 2);              // ordered symbol pairs
  const BigInt avoiding_two = 2 * binomial(n - 2, 2);        // pairs avoiding two symbols
  const BigInt identity_class = binomial(n, 2) * binomial(avoiding_two.convert_to<int>(), 2);
  const BigInt one_shared = pairs_full * (pairs_full - avoiding_two - 2) *
                            binomial((2 * binomial(n - 3, 2)).convert_to<int>(), 2) / 2;
  const BigInt disjoint_syms = pairs_full * avoiding_two *
                               binomial((2 * binomial(n - 4, 2)).convert_to<int>(), 2) / 2;
  const BigInt tabulated = identity_class + one_shared + disjoint_syms;

  const BigInt oracle =
      composition_polynomial(n, Composition{2, 0, 2}).coefficient(ExponentKey{4, 0, -4});
  return tabulated == oracle;
}

}  // namespace subnetrel

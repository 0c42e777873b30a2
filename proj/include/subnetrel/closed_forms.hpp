#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subnetrel/polynomial.hpp"

namespace subnetrel {

// One published term: an integer-coefficient polynomial in n (descending
// powers, constant term last) scaled by an exact rational prefactor, attached
// to a factorial-basis exponent key.
struct TheoremEntry {
  ExponentKey key;
  long long prefactor_num = 1;
  long long prefactor_den = 1;
  std::vector<long long> coeffs;
};

// The published closed form for one composition. Several compositions share
// a table when the source states them equal; `source` names the theorem the
// coefficients were taken from.
struct TheoremTable {
  Composition composition;
  std::string source;
  std::vector<TheoremEntry> entries;
};

const TheoremTable& theorem_table(const Composition& c);

// All compositions covered by the same published equality class as c,
// including c itself.
std::vector<Composition> symmetry_orbit(const Composition& c);

// Exact integer value of one entry's coefficient at this n; throws
// std::logic_error if the rational does not reduce to an integer.
BigInt entry_coefficient(const TheoremEntry& entry, int n);

// The tabulated closed form evaluated at n, with keys exactly as published.
ReliabilityPolynomial closed_form(const Composition& c, int n);

enum class RowStatus { kMatch, kMismatch };

struct VerificationRow {
  std::int64_t exponent = 0;
  BigInt paper;   // published coefficient at this numeric exponent
  BigInt oracle;  // brute-force coefficient at this numeric exponent
  RowStatus status = RowStatus::kMatch;
  std::optional<BigInt> ratio;  // set when one side is an exact multiple of the other
};

struct VerificationReport {
  int n = 0;
  Composition composition;
  std::string source;
  bool aggregate_symmetric = false;
  std::vector<VerificationRow> rows;  // descending exponent
  RowStatus summary = RowStatus::kMatch;
};

// Published table vs. brute-force count, compared per numeric exponent after
// collapsing keys at this n. With aggregate_symmetric the oracle side sums
// over the whole equality class of c before comparing.
VerificationReport verify(const Composition& c, int n, bool aggregate_symmetric = false);

// The tabulated three-product binomial identity for the count of two-FRONT /
// two-BACK quads whose four cross pairs all overlap, checked against the
// oracle coefficient of key (4,0,-4) in the (2,0,2) polynomial.
bool cross_check_another_way(int n);

}  // namespace subnetrel

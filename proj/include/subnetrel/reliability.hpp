#pragma once

#include <cstdint>
#include <span>

#include "subnetrel/patterns.hpp"
#include "subnetrel/polynomial.hpp"

namespace subnetrel {

// |V1 u V2 u V3 u V4| in the factorial basis, via inclusion-exclusion over
// all 15 nonempty subsets of the four patterns: a feasible merge with f fixed
// positions contributes +-(n-f)!, an infeasible one contributes nothing.
ExponentKey union_exponent(std::span<const SubnetworkPattern> pats, int n);

// Cardinality of the same union by explicit enumeration; the independent
// check for union_exponent. Capped at kMaxExplicitN.
std::int64_t union_size_explicit(std::span<const SubnetworkPattern> pats, int n);

// Brute force over every choice of i FRONT, j ENDS and k BACK patterns: one
// p^{union_exponent} term per 4-subset, aggregated per exponent key.
ReliabilityPolynomial composition_polynomial(int n, const Composition& c);

// Same aggregation over every 4-subset of all 3n(n-1) patterns, enumerated
// directly rather than composition by composition.
ReliabilityPolynomial total_polynomial(int n);

}  // namespace subnetrel

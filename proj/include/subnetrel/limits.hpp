#pragma once

namespace subnetrel {

// Smallest dimension for which the three subnetwork families exist.
inline constexpr int kMinN = 4;

// Bound for every path that enumerates nodes explicitly (8! = 40320 nodes).
inline constexpr int kMaxExplicitN = 8;

// Bound for the symbolic path; factorial-basis exponents are evaluated in
// 64 bits and subset enumeration stays desk-scale up to here.
inline constexpr int kMaxSymbolicN = 12;

}  // namespace subnetrel

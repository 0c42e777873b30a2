#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "subnetrel/bigint.hpp"

namespace subnetrel {

using Symbol = int;  // values 1..n

// A permutation of {1..n}. Positions are 1-based, left to right, so a
// pattern that fixes "the first two symbols" constrains positions 1 and 2.
class Permutation {
 public:
  explicit Permutation(std::vector<Symbol> symbols);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(sym_.size()); }
  Symbol at(int pos) const { return sym_[pos - 1]; }  // pos in 1..n
  const std::vector<Symbol>& symbols() const { return sym_; }

  Permutation reversed() const;

  // 4 bits per symbol; unique for n <= 12.
  std::uint64_t packed() const;

  std::string to_string() const;  // "1,2,3,4"

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Symbol> sym_;
};

BigInt factorial(int k);
std::int64_t factorial_i64(int k);  // k <= 20
BigInt binomial(int n, int k);      // 0 when k < 0 or k > n

// The n-1 permutations reachable by one adjacent transposition; this is the
// bubble-sort graph adjacency.
std::vector<Permutation> neighbors(const Permutation& p);

// All n! permutations in lexicographic order. Capped at kMaxExplicitN.
std::vector<Permutation> all_permutations(int n);

}  // namespace subnetrel

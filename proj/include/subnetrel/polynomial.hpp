#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>

#include "subnetrel/bigint.hpp"

namespace subnetrel {

// A p-power exponent kept in the factorial basis:
//   e(n) = c2*(n-2)! + c3*(n-3)! + c4*(n-4)!.
// Unions of four subnetworks always have c2 = 4 and c3, c4 <= 0.
struct ExponentKey {
  int c2 = 0;
  int c3 = 0;
  int c4 = 0;

  friend bool operator==(const ExponentKey&, const ExponentKey&) = default;
  friend auto operator<=>(const ExponentKey&, const ExponentKey&) = default;
};

std::int64_t exponent_value(const ExponentKey& key, int n);

// Family split of a 4-subset: i FRONT, j ENDS, k BACK patterns.
struct Composition {
  int i = 0;
  int j = 0;
  int k = 0;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

bool is_valid_composition(const Composition& c);
Composition reversed(const Composition& c);  // (k, j, i)

// The 15 splits with i+j+k = 4, ordered by descending (i, j).
std::array<Composition, 15> all_compositions();

// Sparse polynomial in p for a fixed n: exact integer coefficients keyed by
// factorial-basis exponents. Zero coefficients are never stored.
class ReliabilityPolynomial {
 public:
  explicit ReliabilityPolynomial(int n);

  int n() const { return n_; }
  const std::map<ExponentKey, BigInt>& terms() const { return terms_; }

  void add(const ExponentKey& key, const BigInt& coeff);
  void add(const ReliabilityPolynomial& other);  // key-wise
  BigInt coefficient(const ExponentKey& key) const;
  BigInt coefficient_sum() const;  // value at p = 1

  // Terms grouped by numeric exponent at this n. Distinct keys can share an
  // exponent for small n ((n-3)! = (n-4)! at n = 4), so comparisons across
  // polynomials go through this map.
  std::map<std::int64_t, BigInt> collapsed() const;

  friend bool operator==(const ReliabilityPolynomial&, const ReliabilityPolynomial&) = default;

 private:
  int n_;
  std::map<ExponentKey, BigInt> terms_;
};

// Sum of coeff * p^{e(n)} in double precision. Exponents are exact; for
// large n the powers underflow to zero for p < 1.
double evaluate(const ReliabilityPolynomial& poly, double p);

}  // namespace subnetrel

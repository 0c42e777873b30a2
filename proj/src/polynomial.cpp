#include "subnetrel/polynomial.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "subnetrel/errors.hpp"
#include "subnetrel/limits.hpp"
#include "subnetrel/perm.hpp"

namespace subnetrel {

std::int64_t exponent_value(const ExponentKey& key, int n) {
  if (n < kMinN) {
    throw std::invalid_argument("n must be at least " + std::to_string(kMinN));
  }
  if (n > kMaxSymbolicN) {
    throw CapacityError("exponent evaluation is capped at n = " + std::to_string(kMaxSymbolicN));
  }
  return key.c2 * factorial_i64(n - 2) + key.c3 * factorial_i64(n - 3) +
         key.c4 * factorial_i64(n - 4);
}

bool is_valid_composition(const Composition& c) {
  return c.i >= 0 && c.j >= 0 && c.k >= 0 && c.i + c.j + c.k == 4;
}

Composition reversed(const Composition& c) { return Composition{c.k, c.j, c.i}; }

std::array<Composition, 15> all_compositions() {
  std::array<Composition, 15> out{};
  std::size_t idx = 0;
  for (int i = 4; i >= 0; --i) {
    for (int j = 4 - i; j >= 0; --j) {
      out[idx++] = Composition{i, j, 4 - i - j};
    }
  }
  return out;
}

ReliabilityPolynomial::ReliabilityPolynomial(int n) : n_(n) {
  if (n < kMinN) {
    throw std::invalid_argument("n must be at least " + std::to_string(kMinN));
  }
  if (n > kMaxSymbolicN) {
    throw CapacityError("polynomials are capped at n = " + std::to_string(kMaxSymbolicN));
  }
}

void ReliabilityPolynomial::add(const ExponentKey& key, const BigInt& coeff) {
  if (coeff == 0) {
    return;
  }
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) {
    terms_.erase(it);
  }
}

void ReliabilityPolynomial::add(const ReliabilityPolynomial& other) {
  if (other.n_ != n_) {
    throw std::invalid_argument("cannot add polynomials for different n");
  }
  for (const auto& [key, coeff] : other.terms_) {
    add(key, coeff);
  }
}

BigInt ReliabilityPolynomial::coefficient(const ExponentKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt ReliabilityPolynomial::coefficient_sum() const {
  BigInt total = 0;
  for (const auto& [key, coeff] : terms_) {
    total += coeff;
  }
  return total;
}

std::map<std::int64_t, BigInt> ReliabilityPolynomial::collapsed() const {
  std::map<std::int64_t, BigInt> out;
  for (const auto& [key, coeff] : terms_) {
    out[exponent_value(key, n_)] += coeff;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

double evaluate(const ReliabilityPolynomial& poly, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("p must lie in [0, 1]");
  }
  double total = 0.0;
  for (const auto& [exp, coeff] : poly.collapsed()) {
    total += coeff.convert_to<double>() * std::pow(p, static_cast<double>(exp));
  }
  return total;
}

}  // namespace subnetrel

#include "subnetrel/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "subnetrel/errors.hpp"
#include "subnetrel/limits.hpp"

namespace subnetrel {

Permutation::Permutation(std::vector<Symbol> symbols) : sym_(std::move(symbols)) {
  const int n = static_cast<int>(sym_.size());
  if (n < 1) {
    throw std::invalid_argument("permutation must not be empty");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (Symbol s : sym_) {
    if (s < 1 || s > n || seen[static_cast<std::size_t>(s)]) {
      throw std::invalid_argument("sequence is not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(s)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Symbol> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::reversed() const {
  std::vector<Symbol> v(sym_.rbegin(), sym_.rend());
  return Permutation(std::move(v));
}

std::uint64_t Permutation::packed() const {
  std::uint64_t code = 0;
  for (Symbol s : sym_) {
    code = (code << 4) | static_cast<std::uint64_t>(s);
  }
  return code;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sym_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(sym_[i]);
  }
  return out;
}

BigInt factorial(int k) {
  if (k < 0) {
    throw std::invalid_argument("factorial requires a non-negative argument");
  }
  BigInt r = 1;
  for (int i = 2; i <= k; ++i) {
    r *= i;
  }
  return r;
}

std::int64_t factorial_i64(int k) {
  if (k < 0 || k > 20) {
    throw std::invalid_argument("factorial_i64 requires 0 <= k <= 20");
  }
  std::int64_t r = 1;
  for (int i = 2; i <= k; ++i) {
    r *= i;
  }
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: r is a product of i+1 consecutive integers
  }
  return r;
}

std::vector<Permutation> neighbors(const Permutation& p) {
  const int n = p.size();
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<Symbol> v = p.symbols();
    std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i) + 1]);
    out.emplace_back(std::move(v));
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1) {
    throw std::invalid_argument("n must be positive");
  }
  if (n > kMaxExplicitN) {
    throw CapacityError("explicit enumeration is capped at n = " + std::to_string(kMaxExplicitN));
  }
  std::vector<Symbol> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial_i64(n)));
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace subnetrel

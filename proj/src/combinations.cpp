#include "subnetrel/combinations.hpp"

#include <numeric>
#include <stdexcept>

#include "subnetrel/perm.hpp"

namespace subnetrel {

CombinationCursor::CombinationCursor(int m, int k) : m_(m), k_(k) {
  if (k < 0 || m < 0 || k > m) {
    throw std::invalid_argument("combinations need 0 <= k <= m");
  }
  idx_.resize(static_cast<std::size_t>(k));
  std::iota(idx_.begin(), idx_.end(), 0);
}

std::int64_t CombinationCursor::count(int m, int k) {
  if (k < 0 || m < 0 || k > m) {
    return 0;
  }
  return binomial(m, k).convert_to<std::int64_t>();
}

void CombinationCursor::seek(std::int64_t rank) {
  // Lexicographic unranking: pick each index as the smallest value whose
  // suffix block still contains the remaining rank.
  std::int64_t remaining = rank;
  int next = 0;
  for (int slot = 0; slot < k_; ++slot) {
    int value = next;
    for (;;) {
      const std::int64_t block = count(m_ - value - 1, k_ - slot - 1);
      if (remaining < block) {
        break;
      }
      remaining -= block;
      ++value;
    }
    idx_[static_cast<std::size_t>(slot)] = value;
    next = value + 1;
  }
}

bool CombinationCursor::advance() {
  for (int slot = k_ - 1; slot >= 0; --slot) {
    if (idx_[static_cast<std::size_t>(slot)] < m_ - k_ + slot) {
      int value = ++idx_[static_cast<std::size_t>(slot)];
      for (int rest = slot + 1; rest < k_; ++rest) {
        idx_[static_cast<std::size_t>(rest)] = ++value;
      }
      return true;
    }
  }
  return false;
}

}  // namespace subnetrel

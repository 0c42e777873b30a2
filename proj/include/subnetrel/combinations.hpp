#pragma once

#include <cstdint>
#include <vector>

namespace subnetrel {

// k-subsets of {0..m-1} in lexicographic order, with random access so work
// can be split into contiguous rank ranges.
class CombinationCursor {
 public:
  CombinationCursor(int m, int k);  // positioned at rank 0

  static std::int64_t count(int m, int k);

  void seek(std::int64_t rank);
  bool advance();  // false once past the last combination

  const std::vector<int>& indices() const { return idx_; }

 private:
  int m_;
  int k_;
  std::vector<int> idx_;
};

}  // namespace subnetrel

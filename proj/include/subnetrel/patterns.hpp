#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subnetrel/perm.hpp"

namespace subnetrel {

// The three shapes of B_{n-2} subnetworks inside B_n, named by the position
// pair they fix. Every subnetwork fixes two symbols at two positions and
// leaves the other n-2 positions free.
enum class Family : int {
  kFront = 0,  // positions 1 and 2
  kEnds = 1,   // positions 1 and n
  kBack = 2,   // positions n-1 and n
};

inline constexpr std::array<Family, 3> kAllFamilies = {Family::kFront, Family::kEnds,
                                                       Family::kBack};

char family_code(Family f);  // 'F' / 'E' / 'B'
std::pair<int, int> fixed_positions(Family f, int n);

// One B_{n-2} subnetwork: s1 sits at the family's first fixed position,
// s2 at the second.
struct SubnetworkPattern {
  Family family = Family::kFront;
  Symbol s1 = 0;
  Symbol s2 = 0;

  friend bool operator==(const SubnetworkPattern&, const SubnetworkPattern&) = default;
  friend auto operator<=>(const SubnetworkPattern&, const SubnetworkPattern&) = default;
};

// Compact form used in CLI output and JSON: "F:1,2" / "E:1,3" / "B:3,4".
std::string to_string(const SubnetworkPattern& pat);
SubnetworkPattern pattern_from_string(const std::string& text);

// A single fixed position -> symbol requirement.
struct Assignment {
  int pos = 0;  // 1-based
  Symbol sym = 0;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

std::array<Assignment, 2> fixed_assignments(const SubnetworkPattern& pat, int n);

// Consistent union of the fixed assignments of several patterns, or
// infeasible when a position would need two symbols or a symbol two
// positions.
class MergedConstraint {
 public:
  static MergedConstraint infeasible();
  static MergedConstraint feasible(std::vector<Assignment> assignments);

  bool is_feasible() const { return feasible_; }
  // Sorted by position, duplicate-free; empty when infeasible.
  const std::vector<Assignment>& assignments() const { return assignments_; }
  int fixed_count() const { return static_cast<int>(assignments_.size()); }

 private:
  MergedConstraint() = default;
  bool feasible_ = false;
  std::vector<Assignment> assignments_;
};

// All 3n(n-1) patterns, ordered by (family, s1, s2).
std::vector<SubnetworkPattern> enumerate_patterns(int n);

// True iff p carries both fixed symbols of pat.
bool contains(const SubnetworkPattern& pat, const Permutation& p);

// The (n-2)! permutations matching pat, in ascending order.
// Capped at kMaxExplicitN.
std::vector<Permutation> vertex_set(const SubnetworkPattern& pat, int n);

MergedConstraint merge(std::span<const SubnetworkPattern> pats, int n);

// Number of fixed positions f of a feasible merge; the merged vertex set has
// exactly (n-f)! permutations. Empty for infeasible merges.
std::optional<int> intersection_count_exponent(const MergedConstraint& m, int n);

}  // namespace subnetrel

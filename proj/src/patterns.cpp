#include "subnetrel/patterns.hpp"

#include <algorithm>
#include <stdexcept>

#include "subnetrel/errors.hpp"
#include "subnetrel/limits.hpp"

namespace subnetrel {

namespace {

void check_n(int n) {
  if (n < kMinN) {
    throw std::invalid_argument("n must be at least " + std::to_string(kMinN));
  }
}

void check_symbols(const SubnetworkPattern& pat, int n) {
  if (pat.s1 < 1 || pat.s1 > n || pat.s2 < 1 || pat.s2 > n || pat.s1 == pat.s2) {
    throw std::invalid_argument("pattern symbols must be distinct values in 1..n");
  }
}

}  // namespace

char family_code(Family f) {
  switch (f) {
    case Family::kFront:
      return 'F';
    case Family::kEnds:
      return 'E';
    case Family::kBack:
      return 'B';
  }
  throw std::invalid_argument("unknown family");
}

std::pair<int, int> fixed_positions(Family f, int n) {
  check_n(n);
  switch (f) {
    case Family::kFront:
      return {1, 2};
    case Family::kEnds:
      return {1, n};
    case Family::kBack:
      return {n - 1, n};
  }
  throw std::invalid_argument("unknown family");
}

std::string to_string(const SubnetworkPattern& pat) {
  std::string out(1, family_code(pat.family));
  out += ':';
  out += std::to_string(pat.s1);
  out += ',';
  out += std::to_string(pat.s2);
  return out;
}

SubnetworkPattern pattern_from_string(const std::string& text) {
  const auto colon = text.find(':');
  const auto comma = text.find(',');
  if (colon != 1 || comma == std::string::npos || comma < 3) {
    throw std::invalid_argument("pattern must look like F:1,2");
  }
  Family family;
  switch (text[0]) {
    case 'F':
      family = Family::kFront;
      break;
    case 'E':
      family = Family::kEnds;
      break;
    case 'B':
      family = Family::kBack;
      break;
    default:
      throw std::invalid_argument("pattern family must be F, E or B");
  }
  const int s1 = std::stoi(text.substr(2, comma - 2));
  const int s2 = std::stoi(text.substr(comma + 1));
  if (s1 < 1 || s2 < 1 || s1 == s2) {
    throw std::invalid_argument("pattern symbols must be distinct positive integers");
  }
  return SubnetworkPattern{family, s1, s2};
}

std::array<Assignment, 2> fixed_assignments(const SubnetworkPattern& pat, int n) {
  check_symbols(pat, n);
  const auto [p1, p2] = fixed_positions(pat.family, n);
  return {Assignment{p1, pat.s1}, Assignment{p2, pat.s2}};
}

MergedConstraint MergedConstraint::infeasible() { return MergedConstraint{}; }

MergedConstraint MergedConstraint::feasible(std::vector<Assignment> assignments) {
  MergedConstraint m;
  m.feasible_ = true;
  m.assignments_ = std::move(assignments);
  return m;
}

std::vector<SubnetworkPattern> enumerate_patterns(int n) {
  check_n(n);
  std::vector<SubnetworkPattern> out;
  out.reserve(static_cast<std::size_t>(3 * n * (n - 1)));
  for (Family f : kAllFamilies) {
    for (Symbol a = 1; a <= n; ++a) {
      for (Symbol b = 1; b <= n; ++b) {
        if (a != b) {
          out.push_back(SubnetworkPattern{f, a, b});
        }
      }
    }
  }
  return out;
}

bool contains(const SubnetworkPattern& pat, const Permutation& p) {
  const int n = p.size();
  check_n(n);
  check_symbols(pat, n);
  const auto [p1, p2] = fixed_positions(pat.family, n);
  return p.at(p1) == pat.s1 && p.at(p2) == pat.s2;
}

std::vector<Permutation> vertex_set(const SubnetworkPattern& pat, int n) {
  check_n(n);
  check_symbols(pat, n);
  if (n > kMaxExplicitN) {
    throw CapacityError("vertex_set is capped at n = " + std::to_string(kMaxExplicitN));
  }
  const auto [p1, p2] = fixed_positions(pat.family, n);

  std::vector<Symbol> free_symbols;
  free_symbols.reserve(static_cast<std::size_t>(n - 2));
  for (Symbol s = 1; s <= n; ++s) {
    if (s != pat.s1 && s != pat.s2) {
      free_symbols.push_back(s);
    }
  }

  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial_i64(n - 2)));
  do {
    std::vector<Symbol> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(p1 - 1)] = pat.s1;
    v[static_cast<std::size_t>(p2 - 1)] = pat.s2;
    std::size_t next = 0;
    for (auto& slot : v) {
      if (slot == 0) {
        slot = free_symbols[next++];
      }
    }
    out.emplace_back(std::move(v));
  } while (std::next_permutation(free_symbols.begin(), free_symbols.end()));
  // Free positions are filled left to right, so the result is already in
  // ascending order.
  return out;
}

MergedConstraint merge(std::span<const SubnetworkPattern> pats, int n) {
  if (pats.empty()) {
    throw std::invalid_argument("merge needs at least one pattern");
  }
  check_n(n);
  std::vector<Assignment> all;
  all.reserve(pats.size() * 2);
  for (const auto& pat : pats) {
    const auto pair = fixed_assignments(pat, n);
    all.push_back(pair[0]);
    all.push_back(pair[1]);
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].pos == all[j].pos && all[i].sym != all[j].sym) {
        return MergedConstraint::infeasible();
      }
      if (all[i].sym == all[j].sym && all[i].pos != all[j].pos) {
        return MergedConstraint::infeasible();
      }
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return MergedConstraint::feasible(std::move(all));
}

std::optional<int> intersection_count_exponent(const MergedConstraint& m, int n) {
  check_n(n);
  if (!m.is_feasible()) {
    return std::nullopt;
  }
  return m.fixed_count();
}

}  // namespace subnetrel

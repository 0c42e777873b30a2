#include "subnetrel/reliability.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "subnetrel/combinations.hpp"
#include "subnetrel/errors.hpp"
#include "subnetrel/limits.hpp"

namespace subnetrel {

namespace {

void check_quad(std::span<const SubnetworkPattern> pats) {
  if (pats.size() != 4) {
    throw std::invalid_argument("exactly four patterns required");
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (pats[i] == pats[j]) {
        throw std::invalid_argument("patterns must be pairwise distinct");
      }
    }
  }
}

void check_composition(const Composition& c) {
  if (!is_valid_composition(c)) {
    throw std::invalid_argument("composition must be non-negative and sum to 4");
  }
}

void check_symbolic_n(int n) {
  if (n < kMinN) {
    throw std::invalid_argument("n must be at least " + std::to_string(kMinN));
  }
  if (n > kMaxSymbolicN) {
    throw CapacityError("symbolic path is capped at n = " + std::to_string(kMaxSymbolicN));
  }
}

// Allocation-free union exponent for a quad given its eight fixed
// assignments, two per pattern.
ExponentKey union_exponent_raw(const std::array<Assignment, 8>& a) {
  ExponentKey key{};
  for (unsigned mask = 1; mask < 16; ++mask) {
    int sel[8];
    int cnt = 0;
    for (int t = 0; t < 4; ++t) {
      if (mask >> t & 1u) {
        sel[cnt++] = 2 * t;
        sel[cnt++] = 2 * t + 1;
      }
    }
    bool ok = true;
    for (int x = 0; x < cnt && ok; ++x) {
      for (int y = x + 1; y < cnt; ++y) {
        const Assignment& u = a[static_cast<std::size_t>(sel[x])];
        const Assignment& v = a[static_cast<std::size_t>(sel[y])];
        if ((u.pos == v.pos) != (u.sym == v.sym)) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) {
      continue;
    }
    int positions[8];
    int f = 0;
    for (int x = 0; x < cnt; ++x) {
      const int pos = a[static_cast<std::size_t>(sel[x])].pos;
      bool fresh = true;
      for (int y = 0; y < f; ++y) {
        if (positions[y] == pos) {
          fresh = false;
          break;
        }
      }
      if (fresh) {
        positions[f++] = pos;
      }
    }
    const int sign = (std::popcount(mask) & 1) ? 1 : -1;
    switch (f) {
      case 2:
        key.c2 += sign;
        break;
      case 3:
        key.c3 += sign;
        break;
      case 4:
        key.c4 += sign;
        break;
      default:
        throw std::logic_error("merged constraint fixes an unexpected position count");
    }
  }
  return key;
}

std::array<Assignment, 8> quad_assignments(std::span<const SubnetworkPattern> pats, int n) {
  std::array<Assignment, 8> a{};
  for (std::size_t t = 0; t < 4; ++t) {
    const auto pair = fixed_assignments(pats[t], n);
    a[2 * t] = pair[0];
    a[2 * t + 1] = pair[1];
  }
  return a;
}

int env_thread_count() {
  const char* raw = std::getenv("SUBNET_THREADS");
  if (raw == nullptr) {
    return 0;
  }
  const int value = std::atoi(raw);
  return value > 0 ? value : 0;
}

int thread_budget(std::int64_t work_items) {
  // SUBNET_THREADS pins the worker count; otherwise use the hardware, but
  // never more than one thread per work chunk.
  int threads = env_thread_count();
  if (threads == 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) {
      threads = 1;
    }
    constexpr std::int64_t kMinItemsPerThread = 1 << 14;
    const std::int64_t useful = std::max<std::int64_t>(1, work_items / kMinItemsPerThread);
    threads = static_cast<int>(std::min<std::int64_t>(threads, useful));
  }
  return static_cast<int>(std::min<std::int64_t>(threads, std::max<std::int64_t>(1, work_items)));
}

// Runs fn(thread_index, lo, hi) over a contiguous split of [0, total) and
// merges the per-thread polynomials in index order, so the result does not
// depend on scheduling.
template <typename Fn>
ReliabilityPolynomial parallel_reduce(int n, std::int64_t total, Fn&& fn) {
  const int threads = thread_budget(total);
  if (threads <= 1) {
    ReliabilityPolynomial poly(n);
    fn(poly, 0, total);
    return poly;
  }
  std::vector<ReliabilityPolynomial> partial(static_cast<std::size_t>(threads),
                                             ReliabilityPolynomial(n));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    const std::int64_t lo = total * t / threads;
    const std::int64_t hi = total * (t + 1) / threads;
    pool.emplace_back([&, t, lo, hi] {
      try {
        fn(partial[static_cast<std::size_t>(t)], lo, hi);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
  for (const auto& err : errors) {
    if (err) {
      std::rethrow_exception(err);
    }
  }
  ReliabilityPolynomial poly(n);
  for (const auto& part : partial) {
    poly.add(part);
  }
  return poly;
}

}  // namespace

ExponentKey union_exponent(std::span<const SubnetworkPattern> pats, int n) {
  check_quad(pats);
  return union_exponent_raw(quad_assignments(pats, n));
}

std::int64_t union_size_explicit(std::span<const SubnetworkPattern> pats, int n) {
  check_quad(pats);
  if (n > kMaxExplicitN) {
    throw CapacityError("explicit unions are capped at n = " + std::to_string(kMaxExplicitN));
  }
  std::vector<std::uint64_t> codes;
  codes.reserve(static_cast<std::size_t>(4 * factorial_i64(n - 2)));
  for (const auto& pat : pats) {
    for (const auto& perm : vertex_set(pat, n)) {
      codes.push_back(perm.packed());
    }
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return static_cast<std::int64_t>(codes.size());
}

ReliabilityPolynomial composition_polynomial(int n, const Composition& c) {
  check_symbolic_n(n);
  check_composition(c);

  const int m = n * (n - 1);
  const auto patterns = enumerate_patterns(n);
  const SubnetworkPattern* front = patterns.data();
  const SubnetworkPattern* ends = patterns.data() + m;
  const SubnetworkPattern* back = patterns.data() + 2 * m;

  // The largest of the three combination counts becomes the outer loop so
  // the rank split sees most of the work.
  const std::array<std::int64_t, 3> counts = {CombinationCursor::count(m, c.i),
                                              CombinationCursor::count(m, c.j),
                                              CombinationCursor::count(m, c.k)};
  const std::array<const SubnetworkPattern*, 3> bases = {front, ends, back};
  const std::array<int, 3> sizes = {c.i, c.j, c.k};
  int outer = 0;
  for (int f = 1; f < 3; ++f) {
    if (counts[static_cast<std::size_t>(f)] > counts[static_cast<std::size_t>(outer)]) {
      outer = f;
    }
  }
  const int mid = (outer + 1) % 3;
  const int last = (outer + 2) % 3;

  return parallel_reduce(
      n, counts[static_cast<std::size_t>(outer)],
      [&](ReliabilityPolynomial& poly, std::int64_t lo, std::int64_t hi) {
        std::array<Assignment, 8> a{};
        CombinationCursor co(m, sizes[static_cast<std::size_t>(outer)]);
        co.seek(lo);
        for (std::int64_t rank = lo; rank < hi; ++rank, co.advance()) {
          CombinationCursor cm(m, sizes[static_cast<std::size_t>(mid)]);
          do {
            CombinationCursor cl(m, sizes[static_cast<std::size_t>(last)]);
            do {
              int slot = 0;
              const std::array<const CombinationCursor*, 3> cursors = {&co, &cm, &cl};
              const std::array<int, 3> order = {outer, mid, last};
              for (int part = 0; part < 3; ++part) {
                const auto* base = bases[static_cast<std::size_t>(order[part])];
                for (int index : cursors[static_cast<std::size_t>(part)]->indices()) {
                  const auto pair = fixed_assignments(base[index], n);
                  a[static_cast<std::size_t>(2 * slot)] = pair[0];
                  a[static_cast<std::size_t>(2 * slot + 1)] = pair[1];
                  ++slot;
                }
              }
              poly.add(union_exponent_raw(a), 1);
            } while (cl.advance());
          } while (cm.advance());
        }
      });
}

ReliabilityPolynomial total_polynomial(int n) {
  check_symbolic_n(n);
  const auto patterns = enumerate_patterns(n);
  const int total_patterns = static_cast<int>(patterns.size());
  const std::int64_t total = CombinationCursor::count(total_patterns, 4);

  return parallel_reduce(
      n, total, [&](ReliabilityPolynomial& poly, std::int64_t lo, std::int64_t hi) {
        std::array<Assignment, 8> a{};
        CombinationCursor cursor(total_patterns, 4);
        cursor.seek(lo);
        for (std::int64_t rank = lo; rank < hi; ++rank, cursor.advance()) {
          const auto& idx = cursor.indices();
          for (int t = 0; t < 4; ++t) {
            const auto pair = fixed_assignments(patterns[static_cast<std::size_t>(idx[t])], n);
            a[static_cast<std::size_t>(2 * t)] = pair[0];
            a[static_cast<std::size_t>(2 * t + 1)] = pair[1];
          }
          poly.add(union_exponent_raw(a), 1);
        }
      });
}

}  // namespace subnetrel

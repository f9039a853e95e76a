#pragma once

#include <atomic>
#include <cstdint>

namespace clustercut {

struct CounterSnapshot {
  std::uint64_t mm_scalar_mults = 0;
  std::uint64_t mm_word_ops = 0;
  std::uint64_t csp_queries = 0;
  std::uint64_t csp_decompositions = 0;
  std::uint64_t triangle_probes = 0;
};

// Operation counters threaded through the matrix kernels and the CSP solver.
// Atomic so concurrent solver workers can share one instance.
struct OpCounters {
  std::atomic<std::uint64_t> mm_scalar_mults{0};
  std::atomic<std::uint64_t> mm_word_ops{0};
  std::atomic<std::uint64_t> csp_queries{0};
  std::atomic<std::uint64_t> csp_decompositions{0};
  std::atomic<std::uint64_t> triangle_probes{0};

  void add_mults(std::uint64_t n) { mm_scalar_mults.fetch_add(n, std::memory_order_relaxed); }
  void add_words(std::uint64_t n) { mm_word_ops.fetch_add(n, std::memory_order_relaxed); }

  CounterSnapshot snapshot() const {
    CounterSnapshot s;
    s.mm_scalar_mults = mm_scalar_mults.load(std::memory_order_relaxed);
    s.mm_word_ops = mm_word_ops.load(std::memory_order_relaxed);
    s.csp_queries = csp_queries.load(std::memory_order_relaxed);
    s.csp_decompositions = csp_decompositions.load(std::memory_order_relaxed);
    s.triangle_probes = triangle_probes.load(std::memory_order_relaxed);
    return s;
  }
};

}  // namespace clustercut

#pragma once

#include <atomic>
#include <cstdint>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ag::par {

/// Resolves a requested worker count: 0 means the OpenMP default,
/// anything else is taken as-is. Without OpenMP the answer is 1.
inline int effective_jobs(int requested) {
#ifdef _OPENMP
  if (requested <= 0) return omp_get_max_threads();
  return requested;
#else
  (void)requested;
  return 1;
#endif
}

inline constexpr std::uint64_t kNotFound = ~std::uint64_t{0};

/// Smallest index i in [0, count) with pred(i), or nullopt. The parallel
/// scan returns the same index as the serial one; iterations past an
/// already-found hit are skipped. pred must be pure.
template <class Pred>
std::optional<std::uint64_t> min_satisfying(std::uint64_t count, Pred&& pred,
                                            int jobs = 1) {
  jobs = effective_jobs(jobs);
#ifdef _OPENMP
  if (jobs > 1 && count >= 128) {
    std::atomic<std::uint64_t> best{kNotFound};
#pragma omp parallel for schedule(dynamic, 64) num_threads(jobs)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      const auto u = static_cast<std::uint64_t>(i);
      if (u >= best.load(std::memory_order_relaxed)) continue;
      if (pred(u)) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (u < cur &&
               !best.compare_exchange_weak(cur, u, std::memory_order_relaxed)) {
        }
      }
    }
    const std::uint64_t found = best.load();
    if (found != kNotFound) return found;
    return std::nullopt;
  }
#endif
  for (std::uint64_t i = 0; i < count; ++i) {
    if (pred(i)) return i;
  }
  return std::nullopt;
}

/// Deterministic splittable generator for seeded sampling. The stream is
/// fully defined by the seed, independent of platform or thread count.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, bound); bound must be positive. The modulo
  /// bias is irrelevant at desk-scale bounds.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// Mixes components into a derived seed (statement x structure streams).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a,
                              std::uint64_t b) {
  SplitMix64 rng(seed ^ (a * 0xA24BAED4963EE407ULL) ^
                 (b * 0x9FB21C651E98DF25ULL));
  return rng.next();
}

}  // namespace ag::par

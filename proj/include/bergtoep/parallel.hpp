#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace bergtoep {

enum class Exec { serial, parallel };

/// Two-level fixed-chunk reduction.  Chunk partials are accumulated in index
/// order, so the result is identical for both Exec modes and any thread count.
template <class T, class F>
T chunked_sum(std::int64_t count, Exec exec, F&& term) {
  constexpr std::int64_t kChunk = 2048;
  const std::int64_t nchunks = (count + kChunk - 1) / kChunk;
  std::vector<T> partial(static_cast<std::size_t>(std::max<std::int64_t>(nchunks, 0)), T{});
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (std::int64_t c = 0; c < nchunks; ++c) {
    T acc{};
    const std::int64_t hi = std::min(count, (c + 1) * kChunk);
    for (std::int64_t i = c * kChunk; i < hi; ++i) acc += term(i);
    partial[static_cast<std::size_t>(c)] = acc;
  }
  T total{};
  for (const T& p : partial) total += p;
  return total;
}

/// Parallel loop over independent slots; body(i) must touch slot i only.
template <class F>
void par_for(std::int64_t count, Exec exec, F&& body) {
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (std::int64_t i = 0; i < count; ++i) body(i);
}

}  // namespace bergtoep

// parallel.hpp: Index-ordered worker pool used by sweeps and trajectory ensembles

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace qrayleigh::parallel {

// Worker count: QRAYLEIGH_THREADS if set and positive, else hardware concurrency.
std::size_t default_threads();

// Calls fn(i) for i in [0, n). Each index runs exactly once; callers write
// results by index so output order never depends on scheduling. The first
// exception thrown by any worker is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, std::size_t threads = 0);

// SplitMix64 finaliser; derives independent per-task seeds from a master seed.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index);

} // namespace qrayleigh::parallel

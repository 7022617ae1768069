#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace ocelf {

/// Worker count: `requested` when given and positive, else the OCELF_THREADS
/// environment variable, else the hardware concurrency (at least 1).
std::size_t resolve_thread_count(std::optional<std::size_t> requested = std::nullopt);

/// Runs body(i) for every i in [0, count) on up to `threads` workers. If any
/// call throws, every index still runs and the exception from the smallest
/// failing index is rethrown afterwards, so failures are reproducible across thread counts.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

}  // namespace ocelf

#pragma once

#include <cstddef>
#include <functional>

namespace lctjt::detail {

// Runs fn(i) for i in [0, n) across worker threads. Thread count is capped by
// the LCT_JOINT_THREADS environment variable (default: hardware concurrency).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

std::size_t thread_cap();

}  // namespace lctjt::detail

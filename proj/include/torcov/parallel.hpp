#pragma once

#include <cstddef>
#include <functional>

namespace torcov {

// 0 means "use hardware concurrency".
void set_thread_count(int n);
int thread_count();

// Runs body(i) for i in [0, n).  Callers write into per-index slots and
// reduce afterwards, so results do not depend on scheduling.
void parallel_for(size_t n, const std::function<void(size_t)>& body);

}  // namespace torcov

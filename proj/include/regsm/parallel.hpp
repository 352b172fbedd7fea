#ifndef REGSM_PARALLEL_HPP
#define REGSM_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace regsm {

/// Worker count: explicit request, else REGSUBMOD_THREADS, else hardware.
int default_threads();

/// Runs fn(i) for i in [0, count) across up to `threads` workers. fn must be
/// safe to run concurrently for distinct i.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

}  // namespace regsm

#endif

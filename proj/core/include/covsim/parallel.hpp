#ifndef COVSIM_PARALLEL_HPP
#define COVSIM_PARALLEL_HPP

#include <functional>

namespace covsim {

// Runs task(0..n_tasks-1) on up to n_threads workers. Tasks must be
// independent; callers that need deterministic results store per-task output
// in preallocated slots and reduce in index order afterwards.
void parallel_for(int n_tasks, int n_threads,
                  const std::function<void(int)> &task);

} // namespace covsim

#endif

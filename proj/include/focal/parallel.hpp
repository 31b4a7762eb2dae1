#ifndef FOCAL_PARALLEL_HPP
#define FOCAL_PARALLEL_HPP

#include <functional>

namespace focal {

// Global worker count for internally parallel operations.  0 = one thread per
// hardware core.  Results never depend on this value: parallel work is always
// merged in a deterministic order.
int thread_count();
void set_thread_count(int n);
int effective_thread_count();

// Runs fn(i) for i in [0, jobs) across the configured workers.  fn must only
// write to state owned by job i.
void parallel_for_jobs(int jobs, const std::function<void(int)>& fn);

}  // namespace focal

#endif

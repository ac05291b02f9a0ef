#ifndef QWVD_PARALLEL_HPP
#define QWVD_PARALLEL_HPP

#include <functional>

namespace qwvd {

/// Worker count used by slice-parallel evaluators. Defaults to the hardware
/// concurrency (capped); set to 1 for strictly sequential execution. Results
/// are bit-identical for any setting: work items write disjoint slots and all
/// reductions run in index order.
int max_threads();
void set_max_threads(int n);

/// Runs fn(i) for i in [0, n), possibly concurrently. fn must only touch
/// state owned by item i.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace qwvd

#endif

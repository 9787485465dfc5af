#pragma once

#include <cstddef>
#include <functional>

namespace reva {

// Worker-count knob for all internal loops. Results never depend on it:
// parallel loops only ever write to disjoint, index-addressed slots and
// all reductions happen afterwards in index order.
void set_thread_count(int n); // <= 1 means serial
int thread_count();

// Runs fn(i) for i in [0, n). fn must only touch state owned by index i.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

} // namespace reva

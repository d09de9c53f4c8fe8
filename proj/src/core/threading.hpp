#pragma once

namespace wsar {

// Worker count for parallel kernels. 0 selects the hardware default.
// Results never depend on the value: every output element is reduced in a
// fixed order by exactly one worker.
void set_threads(int n);
int thread_count();

}  // namespace wsar

#pragma once

#include "overpart/qseries.hpp"

namespace overpart::detail {

/// Runs body(i) for i in [0, count). Exec::serial is the reference path; the
/// other modes distribute indices over OpenMP threads. Bodies must only write
/// to slot i of their outputs.
template <class Body>
void for_each_index(int count, Exec exec, Body&& body) {
  if (exec == Exec::serial) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) body(i);
}

}  // namespace overpart::detail

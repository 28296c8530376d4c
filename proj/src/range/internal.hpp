#pragma once

#include "numrad/range.hpp"

namespace numrad::detail {

/// theta -> lambda_max(H_theta) swept over the circle.
SweepResult topEigenvalueSweep(const PencilFamily& family, double lipschitz,
                               const SweepOptions& options);

/// Worker count for data-parallel loops (NUMRAD_THREADS, 0/absent = hardware).
unsigned workerCount();

}  // namespace numrad::detail

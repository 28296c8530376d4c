#pragma once

#include "numrad/bounds.hpp"
#include "numrad/range.hpp"

namespace numrad::detail {

/// w(M) over complex vectors; 0 for empty, |m00| for 1x1.
double w(const CMatrix& m);

bool isBlockUpperTriangular(const CMatrix& m, const BlockPartition& p);
bool isBlockShift(const CMatrix& m, const BlockPartition& p);
double zeroCrossRadius(const CMatrix& m, const BlockPartition& p, std::size_t i);

}  // namespace numrad::detail

#include <algorithm>
#include <string>

#include "numrad/linalg.hpp"

namespace numrad {

BlockPartition::BlockPartition(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw Error(ErrorCode::PartitionMismatch, "partition has no blocks");
  offsets_.reserve(sizes_.size() + 1);
  offsets_.push_back(0);
  for (std::size_t s : sizes_) {
    if (s == 0) throw Error(ErrorCode::PartitionMismatch, "block sizes must be positive");
    offsets_.push_back(offsets_.back() + s);
  }
}

BlockPartition BlockPartition::scalar(std::size_t n) {
  return BlockPartition(std::vector<std::size_t>(n, 1));
}

bool BlockPartition::uniform() const noexcept {
  return std::all_of(sizes_.begin(), sizes_.end(), [&](std::size_t s) { return s == sizes_[0]; });
}

void BlockPartition::check(const CMatrix& m) const {
  if (!m.isSquare() || m.rows() != dimension()) {
    throw Error(ErrorCode::PartitionMismatch,
                "partition of dimension " + std::to_string(dimension()) + " does not fit a " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  }
}

namespace {

void checkIndex(const BlockPartition& p, std::size_t i) {
  if (i >= p.blocks()) {
    throw Error(ErrorCode::IndexOutOfRange, "block index " + std::to_string(i) + " with " +
                                                std::to_string(p.blocks()) + " blocks");
  }
}

}  // namespace

CMatrix blockExtract(const CMatrix& m, const BlockPartition& p, std::size_t i, std::size_t j) {
  p.check(m);
  checkIndex(p, i);
  checkIndex(p, j);
  CMatrix b(p.size(i), p.size(j), m.field());
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = m(p.offset(i) + r, p.offset(j) + c);
  }
  return b;
}

void blockAssign(CMatrix& m, const BlockPartition& p, std::size_t i, std::size_t j,
                 const CMatrix& block) {
  p.check(m);
  checkIndex(p, i);
  checkIndex(p, j);
  if (block.rows() != p.size(i) || block.cols() != p.size(j)) {
    throw Error(ErrorCode::DimensionMismatch, "block shape does not match the partition");
  }
  for (std::size_t r = 0; r < block.rows(); ++r) {
    for (std::size_t c = 0; c < block.cols(); ++c) m(p.offset(i) + r, p.offset(j) + c) = block(r, c);
  }
}

CMatrix zeroCross(const CMatrix& m, const BlockPartition& p, std::size_t i) {
  p.check(m);
  checkIndex(p, i);
  CMatrix t = m;
  const std::size_t lo = p.offset(i);
  const std::size_t hi = lo + p.size(i);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if ((r >= lo && r < hi) || (c >= lo && c < hi)) t(r, c) = 0.0;
    }
  }
  return t;
}

CMatrix blockPair(const CMatrix& m, const BlockPartition& p, std::size_t i, std::size_t j) {
  p.check(m);
  checkIndex(p, i);
  checkIndex(p, j);
  const BlockPartition sub({p.size(i), p.size(j)});
  CMatrix out(sub.dimension(), sub.dimension(), m.field());
  const std::size_t idx[2] = {i, j};
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) blockAssign(out, sub, a, b, blockExtract(m, p, idx[a], idx[b]));
  }
  return out;
}

}  // namespace numrad

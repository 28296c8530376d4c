#include <algorithm>
#include <cmath>

#include "internal.hpp"

namespace numrad {

namespace detail {

double w(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.rows() == 1) return std::abs(m(0, 0));
  return numericalRadius(m);
}

double blockScale(const CMatrix& m) { return 1e-12 * (1.0 + maxAbs(m)); }

bool isBlockUpperTriangular(const CMatrix& m, const BlockPartition& p) {
  p.check(m);
  const double tol = blockScale(m);
  for (std::size_t i = 0; i < p.blocks(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (maxAbs(blockExtract(m, p, i, j)) > tol) return false;
    }
  }
  return true;
}

bool isBlockShift(const CMatrix& m, const BlockPartition& p) {
  p.check(m);
  const double tol = blockScale(m);
  for (std::size_t i = 0; i < p.blocks(); ++i) {
    for (std::size_t j = 0; j < p.blocks(); ++j) {
      if (j == i + 1) continue;
      if (maxAbs(blockExtract(m, p, i, j)) > tol) return false;
    }
  }
  return true;
}

// w(T_i) through the principal submatrix without block i: the zeroed rows and
// columns only add the origin to the range.
double zeroCrossRadius(const CMatrix& m, const BlockPartition& p, std::size_t i) {
  const std::size_t lo = p.offset(i);
  const std::size_t hi = lo + p.size(i);
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r < lo || r >= hi) keep.push_back(r);
  }
  CMatrix sub(keep.size(), keep.size(), m.field());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    for (std::size_t c = 0; c < keep.size(); ++c) sub(r, c) = m(keep[r], keep[c]);
  }
  return w(sub);
}

}  // namespace detail

using detail::w;

double boundThm32(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& d) {
  if (!a.isSquare() || !d.isSquare()) throw Error(ErrorCode::DimensionMismatch, "diagonal blocks must be square");
  if (b.rows() != a.rows() || b.cols() != d.rows() || c.rows() != d.rows() || c.cols() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "off-diagonal blocks do not conform");
  }
  double best = std::max(w(a), w(d));
  if (a.rows() == d.rows()) {
    best = std::max({best, 0.5 * w(b + c), 0.5 * w(b - c)});
  }
  return best;
}

double boundThm33(const CMatrix& m, const BlockPartition& p) {
  p.check(m);
  double best = 0.0;
  for (std::size_t k = 0; k < p.blocks(); ++k) {
    best = std::max(best, w(blockExtract(m, p, k, k)));
    best = std::max(best, detail::zeroCrossRadius(m, p, k));
  }
  return best;
}

double boundThm34(const CMatrix& m, const BlockPartition& p) {
  p.check(m);
  double best = 0.0;
  for (std::size_t k = 0; k < p.blocks(); ++k) best = std::max(best, w(blockExtract(m, p, k, k)));
  for (std::size_t i = 0; i < p.blocks(); ++i) {
    for (std::size_t j = i + 1; j < p.blocks(); ++j) best = std::max(best, w(blockPair(m, p, i, j)));
  }
  return best;
}

double boundCor35(const CMatrix& m, const BlockPartition& p) {
  p.check(m);
  if (!p.uniform()) throw Error(ErrorCode::UnequalBlocks, "blocks must have equal sizes");
  double best = 0.0;
  for (std::size_t k = 0; k < p.blocks(); ++k) best = std::max(best, w(blockExtract(m, p, k, k)));
  for (std::size_t i = 0; i < p.blocks(); ++i) {
    for (std::size_t j = i + 1; j < p.blocks(); ++j) {
      const CMatrix aij = blockExtract(m, p, i, j);
      const CMatrix aji = blockExtract(m, p, j, i);
      best = std::max({best, 0.5 * w(aij + aji), 0.5 * w(aij - aji)});
    }
  }
  return best;
}

double boundThm36(const CMatrix& m, const BlockPartition& p) {
  if (!detail::isBlockUpperTriangular(m, p)) {
    throw Error(ErrorCode::NotUpperTriangular, "matrix is not block upper triangular");
  }
  double best = 0.0;
  for (std::size_t k = 0; k < p.blocks(); ++k) best = std::max(best, w(blockExtract(m, p, k, k)));
  for (std::size_t i = 0; i < p.blocks(); ++i) {
    for (std::size_t j = i + 1; j < p.blocks(); ++j) {
      best = std::max(best, 0.5 * opNorm(blockExtract(m, p, i, j)));
    }
  }
  return best;
}

double boundThm38Scalar(const CMatrix& m) {
  if (!m.isSquare()) throw Error(ErrorCode::NotSquare, "square matrix expected");
  return boundThm33(m, BlockPartition::scalar(m.rows()));
}

namespace {

// inf ||X v|| over unit v; zero when X has more columns than rows.
double lowerModulus(const CMatrix& x) {
  if (x.cols() > x.rows()) return 0.0;
  return std::sqrt(std::max(0.0, hermEigenvalues(gram(x)).front()));
}

}  // namespace

BlockShiftComparators gauWuBlockShift(const CMatrix& m, const BlockPartition& p) {
  if (!detail::isBlockShift(m, p)) throw Error(ErrorCode::NotBlockShift, "matrix is not a block shift");
  const std::size_t k = p.blocks();
  BlockShiftComparators out{CMatrix(k, k, Field::real), CMatrix(k, k, Field::real)};
  for (std::size_t j = 0; j + 1 < k; ++j) {
    const CMatrix aj = blockExtract(m, p, j, j + 1);
    out.b(j, j + 1) = lowerModulus(aj);
    out.c(j, j + 1) = lowerModulus(adjoint(aj));
  }
  out.wB = w(out.b);
  out.wC = w(out.c);
  return out;
}

CMatrix cyclicPart(const CMatrix& m) {
  if (!m.isSquare()) throw Error(ErrorCode::NotSquare, "square matrix expected");
  const std::size_t n = m.rows();
  CMatrix b(n, n, m.field());
  if (n == 0) return b;
  for (std::size_t i = 0; i + 1 < n; ++i) b(i, i + 1) = m(i, i + 1);
  b(n - 1, 0) = m(n - 1, 0);
  return b;
}

double gauWuCyclic(const CMatrix& m) { return w(cyclicPart(m)); }

}  // namespace numrad

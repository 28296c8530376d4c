#pragma once

#include <cstddef>
#include <vector>

#include "numrad/matrix.hpp"

namespace numrad {

/// Full eigensystem of a Hermitian matrix. values ascending; vectors(:, k) is
/// the unit eigenvector for values[k].
struct HermEigDecomp {
  std::vector<double> values;
  CMatrix vectors;

  double min() const { return values.front(); }
  double max() const { return values.back(); }
  std::vector<cplx> vector(std::size_t k) const;
};

struct EigOptions {
  /// Hermiticity check tolerance; negative selects 1e-12 * (1 + ||H||_F).
  double hermitianTol = -1.0;
  bool wantVectors = true;
  /// 0 selects sweepBudget().
  int maxSweeps = 0;
  /// Sweeps stop once the off-diagonal Frobenius mass is <= offTol * ||H||_F.
  double offTol = 1e-13;
};

/// Process-wide Jacobi sweep limit (default 64), used when EigOptions::maxSweeps is 0.
int sweepBudget();
void setSweepBudget(int sweeps);

/// Cyclic complex Jacobi. The input is symmetrized as (H + H^*)/2 before the
/// sweeps start. Throws NotSquare, NotHermitian or NoConvergence.
HermEigDecomp hermEig(const CMatrix& h, const EigOptions& options = {});

/// Eigenvalues only (same algorithm, no vector accumulation).
std::vector<double> hermEigenvalues(const CMatrix& h, const EigOptions& options = {});

CMatrix adjoint(const CMatrix& m);

/// (M + M^*)/2 with exactly Hermitian output.
CMatrix hermitianPart(const CMatrix& m);

/// M^* M, assembled so that the result is exactly Hermitian.
CMatrix gram(const CMatrix& m);

/// Largest singular value, via the top eigenvalue of M^* M.
double opNorm(const CMatrix& m);

/// Smallest singular value of a square matrix (minimum modulus).
double minModulus(const CMatrix& m);

/// Sizes of the diagonal blocks of a square block matrix.
class BlockPartition {
 public:
  explicit BlockPartition(std::vector<std::size_t> sizes);

  /// n blocks of size 1.
  static BlockPartition scalar(std::size_t n);
  static BlockPartition whole(std::size_t n) { return BlockPartition({n}); }

  std::size_t blocks() const noexcept { return sizes_.size(); }
  std::size_t dimension() const noexcept { return offsets_.back(); }
  std::size_t size(std::size_t i) const { return sizes_.at(i); }
  std::size_t offset(std::size_t i) const { return offsets_.at(i); }
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
  bool uniform() const noexcept;

  /// Throws PartitionMismatch unless m is square with this dimension.
  void check(const CMatrix& m) const;

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> offsets_;
};

/// Block (i, j), zero-based. Throws IndexOutOfRange / PartitionMismatch.
CMatrix blockExtract(const CMatrix& m, const BlockPartition& p, std::size_t i, std::size_t j);

/// Writes `block` into position (i, j) of m.
void blockAssign(CMatrix& m, const BlockPartition& p, std::size_t i, std::size_t j,
                 const CMatrix& block);

/// Copy of m with block row i and block column i zeroed.
CMatrix zeroCross(const CMatrix& m, const BlockPartition& p, std::size_t i);

/// Principal submatrix [[A_ii, A_ij], [A_ji, A_jj]].
CMatrix blockPair(const CMatrix& m, const BlockPartition& p, std::size_t i, std::size_t j);

/// Columns of `basis` orthonormalized (modified Gram-Schmidt, two passes);
/// columns that become numerically dependent are dropped.
CMatrix orthonormalizeColumns(const CMatrix& basis, double dropTol = 1e-10);

/// basis^* M basis
CMatrix compress(const CMatrix& m, const CMatrix& basis);

}  // namespace numrad

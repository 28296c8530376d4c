#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <string>

#include "numrad/kernels.hpp"
#include "numrad/linalg.hpp"

namespace numrad {

namespace {

std::atomic<int> gSweepBudget{64};

double offDiagonalMass(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// Cyclic Jacobi on a Hermitian matrix. Each rotation J (unitary, acting on
// coordinates p, q) annihilates a(p, q):
//   J = [[c, s e], [-s conj(e), c]],  e = a(p,q) / |a(p,q)|,
// with (c, s) the real symmetric Jacobi rotation of [[a_pp, |a_pq|], [|a_pq|, a_qq]].
// `a` is overwritten with J^* a J; when `vt` is given its rows are the
// eigenvectors (vt holds V^T so both updates run on contiguous rows).
void jacobi(CMatrix& a, CMatrix* vt, const EigOptions& options) {
  const std::size_t n = a.rows();
  const auto& k = kernels::active();
  const double scale = frobeniusNorm(a);
  const double target = options.offTol * scale;
  const int maxSweeps = options.maxSweeps > 0 ? options.maxSweeps : sweepBudget();

  for (int sweep = 0;; ++sweep) {
    if (offDiagonalMass(a) <= target) return;
    if (sweep >= maxSweeps) {
      throw Error(ErrorCode::NoConvergence,
                  "Jacobi did not converge in " + std::to_string(maxSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx g = a(p, q);
        const double mag = std::abs(g);
        if (mag == 0.0) continue;
        const cplx e = g / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        double t;
        if (std::abs(tau) > 1e150) {
          t = 0.5 / tau;
        } else {
          t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        k.rot2(a.row(p).data(), a.row(q).data(), n, c, -s * e, s * std::conj(e), c);
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          a(r, p) = std::conj(a(p, r));
          a(r, q) = std::conj(a(q, r));
        }
        if (vt) k.rot2(vt->row(p).data(), vt->row(q).data(), n, c, -s * std::conj(e), s * e, c);
      }
    }
  }
}

CMatrix prepare(const CMatrix& h, const EigOptions& options) {
  if (!h.isSquare()) throw Error(ErrorCode::NotSquare, "hermEig needs a square matrix");
  if (h.rows() == 0) throw Error(ErrorCode::InvalidArgument, "hermEig on an empty matrix");
  const double tol =
      options.hermitianTol >= 0.0 ? options.hermitianTol : 1e-12 * (1.0 + frobeniusNorm(h));
  const double defect = hermitianDefect(h);
  if (defect > tol) {
    throw Error(ErrorCode::NotHermitian,
                "max |H(i,j) - conj(H(j,i))| = " + std::to_string(defect));
  }
  return hermitianPart(h);
}

std::vector<std::size_t> ascendingOrder(const CMatrix& a) {
  std::vector<std::size_t> order(a.rows());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });
  return order;
}

}  // namespace

int sweepBudget() { return gSweepBudget.load(std::memory_order_relaxed); }

void setSweepBudget(int sweeps) { gSweepBudget.store(std::max(sweeps, 0), std::memory_order_relaxed); }

std::vector<cplx> HermEigDecomp::vector(std::size_t k) const {
  std::vector<cplx> v(vectors.rows());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = vectors(i, k);
  return v;
}

HermEigDecomp hermEig(const CMatrix& h, const EigOptions& options) {
  CMatrix a = prepare(h, options);
  const std::size_t n = a.rows();
  CMatrix vt = CMatrix::identity(n, h.field());
  jacobi(a, options.wantVectors ? &vt : nullptr, options);

  const auto order = ascendingOrder(a);
  HermEigDecomp out;
  out.values.resize(n);
  out.vectors = CMatrix(n, options.wantVectors ? n : 0, h.field());
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    if (options.wantVectors) {
      for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = vt(order[k], i);
    }
  }
  return out;
}

std::vector<double> hermEigenvalues(const CMatrix& h, const EigOptions& options) {
  CMatrix a = prepare(h, options);
  if (a.rows() == 1) return {a(0, 0).real()};
  if (a.rows() == 2) {
    const double m = 0.5 * (a(0, 0).real() + a(1, 1).real());
    const double r = std::hypot(0.5 * (a(0, 0).real() - a(1, 1).real()), std::abs(a(0, 1)));
    return {m - r, m + r};
  }
  jacobi(a, nullptr, options);
  std::vector<double> values(a.rows());
  for (std::size_t k = 0; k < a.rows(); ++k) values[k] = a(k, k).real();
  std::sort(values.begin(), values.end());
  return values;
}

CMatrix adjoint(const CMatrix& m) {
  CMatrix r(m.cols(), m.rows(), m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = std::conj(m(i, j));
  }
  return r;
}

CMatrix hermitianPart(const CMatrix& m) {
  if (!m.isSquare()) throw Error(ErrorCode::NotSquare, "hermitian part");
  const std::size_t n = m.rows();
  CMatrix r(n, n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    r(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      r(i, j) = v;
      r(j, i) = std::conj(v);
    }
  }
  return r;
}

CMatrix gram(const CMatrix& m) { return hermitianPart(adjoint(m) * m); }

double opNorm(const CMatrix& m) {
  if (m.empty()) return 0.0;
  const auto values = hermEigenvalues(gram(m));
  return std::sqrt(std::max(0.0, values.back()));
}

double minModulus(const CMatrix& m) {
  if (!m.isSquare()) throw Error(ErrorCode::NotSquare, "minimum modulus needs a square matrix");
  const auto values = hermEigenvalues(gram(m));
  return std::sqrt(std::max(0.0, values.front()));
}

CMatrix orthonormalizeColumns(const CMatrix& basis, double dropTol) {
  const std::size_t n = basis.rows();
  std::vector<std::vector<cplx>> kept;
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    std::vector<cplx> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = basis(i, j);
    const double original = norm2(v);
    if (original == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : kept) {
        const cplx proj = inner(v, u);
        for (std::size_t i = 0; i < n; ++i) v[i] -= proj * u[i];
      }
    }
    const double len = norm2(v);
    if (len <= dropTol * original) continue;
    for (auto& z : v) z /= len;
    kept.push_back(std::move(v));
  }
  CMatrix out(n, kept.size(), basis.field());
  for (std::size_t j = 0; j < kept.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) out(i, j) = kept[j][i];
  }
  return out;
}

CMatrix compress(const CMatrix& m, const CMatrix& basis) {
  return adjoint(basis) * (m * basis);
}

}  // namespace numrad

// Real Hilbert space: M_{w(T)} = unit vectors of E+ (<Tx,x> = w) and of E-
// (<Tx,x> = -w), the extreme eigenspaces of the symmetric part of T. The sign
// of <Tx,x><Ax,x> on M then reduces to the range of A_s compressed to E+/E-.

#include <cmath>

#include "numrad/ortho.hpp"

namespace numrad {

namespace {

void checkRealPair(const CMatrix& t, const CMatrix& a) {
  if (!t.isSquare() || !a.isSquare()) throw Error(ErrorCode::NotSquare, "square matrices expected");
  if (t.rows() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "T and A differ in size");
  if (!t.hasRealEntries() || !a.hasRealEntries()) {
    throw Error(ErrorCode::NotReal, "the real-field decision needs real matrices");
  }
}

struct Side {
  bool present = false;
  HermEigDecomp eig;
  const CMatrix* basis = nullptr;
};

Side compressTo(const CMatrix& as, const CMatrix& basis) {
  Side s;
  if (basis.cols() == 0) return s;
  s.present = true;
  s.eig = hermEig(compress(as, basis));
  s.basis = &basis;
  return s;
}

std::vector<cplx> lift(const CMatrix& basis, const std::vector<cplx>& y) {
  std::vector<cplx> x(basis.rows());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    for (std::size_t k = 0; k < basis.cols(); ++k) x[i] += basis(i, k) * y[k];
  }
  return x;
}

}  // namespace

OrthoVerdict orthoWReal(const CMatrix& t, const CMatrix& a, double orthoTol) {
  checkRealPair(t, a);
  const RealRadius rr = realRadius(t);
  OrthoVerdict v;
  v.method = OrthoMethod::characterization;
  const double tol = orthoTol >= 0.0 ? orthoTol : defaultOrthoTol(rr.w);
  if (rr.w <= tol || (rr.eplus.cols() == 0 && rr.eminus.cols() == 0)) {
    v.orthogonal = true;
    v.note = "w(T) = 0";
    return v;
  }

  const CMatrix as = hermitianPart(a.withField(Field::real));
  const Side plus = compressTo(as, rr.eplus);
  const Side minus = compressTo(as, rr.eminus);

  // <Tx,x><Ax,x> >= 0 somewhere on M: largest value of the product over M.
  double best2 = -INFINITY;
  double best3 = -INFINITY;  // largest value of -<Tx,x><Ax,x>
  OrthoWitness w2;
  OrthoWitness w3;
  auto consider = [&](const Side& s, double sign, std::size_t idx, double value, double& best,
                      OrthoWitness& out, double theta) {
    if (value <= best) return;
    best = value;
    out.theta = theta;
    out.phi = sign > 0 ? 0.0 : 0.5 * kTwoPi;
    out.vector = lift(*s.basis, s.eig.vector(idx));
    out.tx = quadraticForm(t, out.vector);
    out.ax = quadraticForm(a, out.vector);
  };
  if (plus.present) {
    const std::size_t top = plus.eig.values.size() - 1;
    consider(plus, 1.0, top, plus.eig.max(), best2, w2, 0.0);
    consider(plus, 1.0, 0, -plus.eig.min(), best3, w3, 0.5 * kTwoPi);
  }
  if (minus.present) {
    const std::size_t top = minus.eig.values.size() - 1;
    consider(minus, -1.0, 0, -minus.eig.min(), best2, w2, 0.0);
    consider(minus, -1.0, top, minus.eig.max(), best3, w3, 0.5 * kTwoPi);
  }

  const bool ii = best2 >= -tol;
  const bool iii = best3 >= -tol;
  v.orthogonal = ii && iii;
  v.margin = rr.w * std::min(best2, best3);
  if (v.orthogonal) {
    v.witnesses = {w2, w3};
  } else {
    const double theta = ii ? 0.5 * kTwoPi : 0.0;
    v.counterexample = OrthoCounterexample{theta, std::nullopt, -v.margin};
    v.note = ii ? "condition (iii) fails" : "condition (ii) fails";
  }
  return v;
}

std::optional<std::vector<cplx>> zeroWitness(const CMatrix& t, const CMatrix& a, double tol) {
  checkRealPair(t, a);
  const RealRadius rr = realRadius(t);
  if (rr.w <= 1e-14 * (1.0 + frobeniusNorm(t))) {
    throw Error(ErrorCode::ZeroRadius, "zeroWitness needs w(T) > 0");
  }
  const CMatrix as = hermitianPart(a.withField(Field::real));
  for (const CMatrix* basis : {&rr.eplus, &rr.eminus}) {
    const Side s = compressTo(as, *basis);
    if (!s.present) continue;
    const double lo = s.eig.min();
    const double hi = s.eig.max();
    const std::size_t top = s.eig.values.size() - 1;
    if (std::abs(lo) <= tol) return lift(*basis, s.eig.vector(0));
    if (std::abs(hi) <= tol) return lift(*basis, s.eig.vector(top));
    if (lo < 0.0 && hi > 0.0) {
      // lo |z_hi|^2 + hi |z_lo|^2 = 0 for z = sqrt(hi) v_lo + sqrt(-lo) v_hi.
      const std::vector<cplx> vlo = s.eig.vector(0);
      const std::vector<cplx> vhi = s.eig.vector(top);
      std::vector<cplx> y(vlo.size());
      for (std::size_t k = 0; k < y.size(); ++k) y[k] = std::sqrt(hi) * vlo[k] + std::sqrt(-lo) * vhi[k];
      const double nrm = norm2(y);
      for (cplx& c : y) c /= nrm;
      return lift(*basis, y);
    }
  }
  return std::nullopt;
}

}  // namespace numrad

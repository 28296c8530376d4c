#include <algorithm>
#include <cmath>

#include "internal.hpp"

namespace numrad {

namespace detail {

SweepResult topEigenvalueSweep(const PencilFamily& family, double lipschitz,
                               const SweepOptions& options) {
  const EigOptions eig{.wantVectors = false};
  return sweepMaximize(
      [&](double theta) { return hermEigenvalues(family.at(theta), eig).back(); }, lipschitz,
      options);
}

}  // namespace detail

double defaultRadiusTol(const CMatrix& t) { return 1e-9 * (1.0 + frobeniusNorm(t)); }

namespace {

std::vector<cplx> unitVector(std::size_t n) {
  std::vector<cplx> e(n);
  e[0] = 1.0;
  return e;
}

}  // namespace

RadiusCertificate radius(const CMatrix& t, double radiusTol, const SweepOptions& options) {
  if (!t.isSquare()) throw Error(ErrorCode::NotSquare, "radius needs a square matrix");
  if (t.isReal()) {
    throw Error(ErrorCode::InvalidArgument,
                "radius works over complex vectors; use realRadius or retag the matrix");
  }
  const double tol = radiusTol >= 0.0 ? radiusTol : defaultRadiusTol(t);

  RadiusCertificate cert;
  cert.lipschitz = opNorm(t);
  if (cert.lipschitz == 0.0) {
    cert.witness = unitVector(t.rows());
    return cert;
  }
  const PencilFamily family(t);
  const SweepResult sweep = detail::topEigenvalueSweep(family, cert.lipschitz, options);
  cert.value = std::max(0.0, sweep.best);
  cert.thetaStar = sweep.bestTheta;

  const HermEigDecomp top = hermEig(family.at(cert.thetaStar));
  cert.witness = top.vector(top.values.size() - 1);
  const double attained = std::abs(quadraticForm(t, cert.witness));
  cert.residual = std::abs(attained - cert.value);
  // The witness is itself a lower bound for w; keep the certificate consistent.
  if (attained > cert.value + tol) {
    cert.value = attained;
    cert.residual = 0.0;
  }
  return cert;
}

double numericalRadius(const CMatrix& t, const SweepOptions& options) {
  return radius(t.isReal() ? t.withField(Field::complex) : t, -1.0, options).value;
}

double crawford(const CMatrix& t, double tol, const SweepOptions& options) {
  (void)tol;  // accuracy is governed by the sweep options
  if (!t.isSquare()) throw Error(ErrorCode::NotSquare, "crawford needs a square matrix");
  const double lipschitz = opNorm(t);
  if (lipschitz == 0.0) return 0.0;
  if (hermitianDefect(t) <= 1e-14 * (1.0 + lipschitz)) {
    // W(T) is the segment [lambda_min, lambda_max].
    const auto values = hermEigenvalues(t);
    return std::max({0.0, values.front(), -values.back()});
  }
  const PencilFamily family(t);
  const EigOptions eig{.wantVectors = false};
  const SweepResult sweep = sweepMaximize(
      [&](double theta) { return hermEigenvalues(family.at(theta), eig).front(); }, lipschitz,
      options);
  return std::max(0.0, sweep.best);
}

std::vector<BoundaryPoint> rangeBoundary(const CMatrix& t, std::size_t samples) {
  if (samples < 3) throw Error(ErrorCode::InvalidArgument, "boundary needs at least 3 samples");
  const PencilFamily family(t);
  std::vector<BoundaryPoint> out;
  out.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(samples);
    const HermEigDecomp eig = hermEig(family.at(theta));
    const std::vector<cplx> x = eig.vector(eig.values.size() - 1);
    out.push_back({theta, quadraticForm(t, x)});
  }
  return out;
}

}  // namespace numrad

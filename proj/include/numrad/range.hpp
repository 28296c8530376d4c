#pragma once

// Numerical range machinery built on the Hermitian pencil
//   H_theta = (e^{-i theta} T + e^{i theta} T^*) / 2,   <H_theta x, x> = Re(e^{-i theta} <Tx, x>).
//
// theta -> lambda_max(H_theta) is the support function of W(T) (an imported,
// standard fact), so w(T) = max_theta lambda_max(H_theta), and because W(T)
// is convex and compact, dist(0, W(T)) = max(0, max_theta lambda_min(H_theta)).
// Both are obtained from one sweep: a uniform angle grid followed by
// golden-section refinement around the grid's local maxima.

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "numrad/linalg.hpp"
#include "numrad/matrix.hpp"

namespace numrad {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Angle reduced to [0, 2*pi).
double wrapAngle(double theta);

/// Smallest distance between two angles on the circle.
double angleDistance(double a, double b);

/// Precomputed real and imaginary parts so H_theta = cos(theta) H + sin(theta) K.
class PencilFamily {
 public:
  explicit PencilFamily(const CMatrix& t);

  CMatrix at(double theta) const;
  const CMatrix& realPart() const noexcept { return h_; }
  const CMatrix& imagPart() const noexcept { return k_; }
  std::size_t dimension() const noexcept { return h_.rows(); }

 private:
  CMatrix h_;
  CMatrix k_;
};

/// Throws NotSquare.
CMatrix hermPencil(const CMatrix& t, double theta);

struct SweepOptions {
  std::size_t grid = 1024;
  /// Golden-section stops when the bracket is narrower than this.
  double angleWidth = 1e-12;
  /// At most this many grid local maxima are refined.
  std::size_t maxPeaks = 16;
};

struct SweepPeak {
  double theta;
  double value;
};

/// Result of maximizing a 2*pi-periodic function with a Lipschitz bound.
struct SweepResult {
  std::vector<double> gridAngles;
  std::vector<double> gridValues;
  std::vector<SweepPeak> peaks;  // refined local maxima, best first
  double best = 0.0;
  double bestTheta = 0.0;
};

/// Grid + golden-section maximization of a periodic function. Grid points
/// whose value cannot reach the grid maximum within lipschitz * h / 2 are not
/// refined. Ties are broken by the smallest angle. Grid evaluation may run on
/// several threads (NUMRAD_THREADS), the result does not depend on it.
SweepResult sweepMaximize(const std::function<double(double)>& f, double lipschitz,
                          const SweepOptions& options = {});

struct RadiusCertificate {
  double value = 0.0;
  double thetaStar = 0.0;
  std::vector<cplx> witness;
  double residual = 0.0;
  /// Lipschitz constant ||T|| of theta -> lambda_max(H_theta).
  double lipschitz = 0.0;
};

/// 1e-9 * (1 + ||T||_F)
double defaultRadiusTol(const CMatrix& t);

/// Numerical radius over complex unit vectors. Throws NotSquare, and
/// InvalidArgument for real-tagged input (use realRadius or retag).
RadiusCertificate radius(const CMatrix& t, double radiusTol = -1.0,
                         const SweepOptions& options = {});

/// w(T) only; accepts either tag and works over complex vectors.
double numericalRadius(const CMatrix& t, const SweepOptions& options = {});

/// Crawford number c(T) = dist(0, W(T)).
double crawford(const CMatrix& t, double tol = -1.0, const SweepOptions& options = {});

struct BoundaryPoint {
  double theta;
  cplx point;
};

/// <T x_theta, x_theta> for top eigenvectors x_theta of H_theta on a uniform
/// grid of `samples` angles. Throws InvalidArgument when samples < 3.
std::vector<BoundaryPoint> rangeBoundary(const CMatrix& t, std::size_t samples);

struct AttainingComponent {
  double phi;
  /// Orthonormal columns spanning the top eigenspace of H_phi.
  CMatrix basis;
};

/// M_{w(T)} as maximizing angles with their top eigenspaces.
struct AttainingSet {
  double w = 0.0;
  std::vector<AttainingComponent> components;
  /// Every grid angle maximizes (disc-like range).
  bool allAngles = false;
};

/// 1e-7 * (1 + w)
inline double defaultAttainTol(double w) { return 1e-7 * (1.0 + w); }

/// Throws ZeroRadius when w(T) <= attainTol. attainTol < 0 selects the default.
AttainingSet attainingSet(const CMatrix& t, double attainTol = -1.0,
                          const SweepOptions& options = {});

struct RealRadius {
  double w = 0.0;
  CMatrix eplus;   // basis of the +w eigenspace of (T + T^t)/2, possibly 0 columns
  CMatrix eminus;  // basis of the -w eigenspace
};

/// Numerical radius over real unit vectors of a real matrix.
/// Throws NotReal, NotSquare.
RealRadius realRadius(const CMatrix& t);

}  // namespace numrad

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "numrad/matrix.hpp"
#include "numrad/range.hpp"

namespace numrad {

enum class OrthoMethod { characterization, definitional };

struct OrthoWitness {
  double theta = 0.0;
  double phi = 0.0;
  std::vector<cplx> vector;
  cplx tx;  // <Tx, x>
  cplx ax;  // <Ax, x>
};

struct OrthoCounterexample {
  /// Angle (characterization) where the witness condition fails.
  std::optional<double> theta;
  /// Scalar (definitional) with w(T + lambda A) < w(T) - tol, or ||.|| for B-J.
  std::optional<cplx> lambda;
  double margin = 0.0;
};

struct OrthoVerdict {
  bool orthogonal = false;
  OrthoMethod method = OrthoMethod::characterization;
  std::vector<OrthoWitness> witnesses;
  std::optional<OrthoCounterexample> counterexample;
  /// Signed distance from the decision boundary as seen by the method:
  /// characterization: w(T) times the minimum of the witness function g;
  /// definitional: f(best lambda) - f(0) (negative when not orthogonal).
  double margin = 0.0;
  /// The decision could not be certified on either side before the
  /// refinement floor; reported as orthogonal.
  bool marginal = false;
  std::string note;
};

/// 1e-7 * (1 + w)
inline double defaultOrthoTol(double w) { return 1e-7 * (1.0 + w); }

/// T _|_w A over C via the attaining-vector characterization.
/// Throws DimensionMismatch, NotSquare.
OrthoVerdict orthoW(const CMatrix& t, const CMatrix& a, double orthoTol = -1.0);

/// T _|_w A by convex minimization of lambda -> w(T + lambda A); lambda is
/// restricted to R when both inputs are real-tagged.
OrthoVerdict orthoWDefinitional(const CMatrix& t, const CMatrix& a, double orthoTol = -1.0);

/// T _|_w A for real matrices over real Hilbert space (lambda real).
/// Throws NotReal, DimensionMismatch.
OrthoVerdict orthoWReal(const CMatrix& t, const CMatrix& a, double orthoTol = -1.0);

/// Birkhoff-James orthogonality for the operator norm, decided definitionally.
OrthoVerdict orthoB(const CMatrix& t, const CMatrix& a, double tol = -1.0);

/// Unit z in M_{w(T)} (real case) with |<Az, z>| <= tol, if one exists.
/// Throws ZeroRadius, NotReal, DimensionMismatch.
std::optional<std::vector<cplx>> zeroWitness(const CMatrix& t, const CMatrix& a, double tol = 1e-9);

/// Engine shared by the definitional deciders: minimizes a convex function of
/// lambda over C (or R) starting from lambda = 0.
struct ConvexProbeOptions {
  int directions = 16;
  double startRadius = 1.0;
  double minRadius = 1e-8;
  double tol = 1e-7;
  bool realOnly = false;
  /// Global Lipschitz bound of f (lets tiny steps be skipped); <= 0 disables.
  double lipschitz = 0.0;
};

struct ConvexProbeResult {
  double f0 = 0.0;
  double best = 0.0;
  cplx bestLambda{0.0, 0.0};
  int evaluations = 0;
};

ConvexProbeResult minimizeFromOrigin(const std::function<double(cplx)>& f,
                                     const ConvexProbeOptions& options);

}  // namespace numrad

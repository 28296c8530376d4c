#pragma once

// Test-side generators and reference computations. The oracles here avoid the
// library's pencil/sweep machinery: they work from <Tx, x> directly.

#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "numrad/linalg.hpp"
#include "numrad/matrix.hpp"

namespace oracle {

using numrad::CMatrix;
using numrad::cplx;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  double normal() { return n_(eng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  cplx cnormal() { return {normal(), normal()}; }
  cplx unitScalar() { return std::polar(1.0, uniform(0.0, 6.283185307179586)); }

  CMatrix complexMatrix(std::size_t r, std::size_t c);
  CMatrix realMatrix(std::size_t r, std::size_t c);
  CMatrix hermitian(std::size_t n);
  CMatrix unitary(std::size_t n);
  std::vector<cplx> unitVector(std::size_t n);
  std::vector<double> realUnitVector(std::size_t n);
  /// x y^* with <x, y> = 0 (so T^2 = 0).
  CMatrix squareZero(std::size_t n);
  /// Mixed-sign eigenvalues in a random unitary frame.
  CMatrix normal(std::size_t n);
  CMatrix upperTriangular(std::size_t n);

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> n_{0.0, 1.0};
};

/// |<Tx, x>| for unit x.
double modulus(const CMatrix& t, const std::vector<cplx>& x);

/// Random unit vectors followed by a shrinking random-perturbation hill climb.
double bruteRadius(const CMatrix& t, Gen& g, int samples = 100000);

/// w of [[a, b], [0, c]] from its elliptical range: foci a, c and minor axis |b|.
double ellipseRadius(cplx a, cplx b, cplx c);

/// min over a square lambda-grid of f, centred at 0 with half-width `span`.
struct GridMin {
  double value;
  cplx lambda;
};
GridMin gridMinimum(const std::function<double(cplx)>& f, double span, int steps, bool realOnly = false);

/// Distance from 0 to the convex hull of the points (a polygon here).
double hullDistance(const std::vector<cplx>& points);

CMatrix adjointOf(const CMatrix& m);

}  // namespace oracle

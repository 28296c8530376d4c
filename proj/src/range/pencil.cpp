#include <algorithm>
#include <cmath>

#include "numrad/kernels.hpp"
#include "numrad/range.hpp"

namespace numrad {

double wrapAngle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double angleDistance(double a, double b) {
  const double d = wrapAngle(a - b);
  return std::min(d, kTwoPi - d);
}

PencilFamily::PencilFamily(const CMatrix& t) {
  if (!t.isSquare()) throw Error(ErrorCode::NotSquare, "pencil needs a square matrix");
  const std::size_t n = t.rows();
  h_ = hermitianPart(t);
  k_ = CMatrix(n, n, Field::complex);
  // K = (T - T^*) / 2i
  for (std::size_t i = 0; i < n; ++i) {
    k_(i, i) = t(i, i).imag();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v = (t(i, j) - std::conj(t(j, i))) / cplx(0.0, 2.0);
      k_(i, j) = v;
      k_(j, i) = std::conj(v);
    }
  }
}

CMatrix PencilFamily::at(double theta) const {
  const std::size_t n = h_.rows();
  CMatrix out(n, n, Field::complex);
  kernels::active().axpby(reinterpret_cast<double*>(out.data().data()), std::cos(theta),
                          reinterpret_cast<const double*>(h_.data().data()), std::sin(theta),
                          reinterpret_cast<const double*>(k_.data().data()), 2 * out.size());
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = out(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) out(j, i) = std::conj(out(i, j));
  }
  return out;
}

CMatrix hermPencil(const CMatrix& t, double theta) { return PencilFamily(t).at(theta); }

}  // namespace numrad

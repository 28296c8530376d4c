#include "kernels_impl.hpp"

namespace numrad::kernels::detail {

void rot2Scalar(cplx* x, cplx* y, std::size_t n, cplx a, cplx b, cplx c, cplx d) {
  for (std::size_t k = 0; k < n; ++k) {
    const cplx xk = x[k];
    const cplx yk = y[k];
    x[k] = a * xk + b * yk;
    y[k] = c * xk + d * yk;
  }
}

void axpyScalar(cplx* y, cplx alpha, const cplx* x, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) y[k] += alpha * x[k];
}

cplx dotcScalar(const cplx* x, const cplx* y, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    re += x[k].real() * y[k].real() + x[k].imag() * y[k].imag();
    im += x[k].real() * y[k].imag() - x[k].imag() * y[k].real();
  }
  return {re, im};
}

cplx dotuScalar(const cplx* x, const cplx* y, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    re += x[k].real() * y[k].real() - x[k].imag() * y[k].imag();
    im += x[k].real() * y[k].imag() + x[k].imag() * y[k].real();
  }
  return {re, im};
}

void axpbyScalar(double* out, double a, const double* x, double b, const double* y,
                 std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = a * x[k] + b * y[k];
}

double sumsqScalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) s += x[k] * x[k];
  return s;
}

}  // namespace numrad::kernels::detail

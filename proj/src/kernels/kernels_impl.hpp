#pragma once

#include "numrad/kernels.hpp"

namespace numrad::kernels::detail {

void rot2Scalar(cplx* x, cplx* y, std::size_t n, cplx a, cplx b, cplx c, cplx d);
void axpyScalar(cplx* y, cplx alpha, const cplx* x, std::size_t n);
cplx dotcScalar(const cplx* x, const cplx* y, std::size_t n);
cplx dotuScalar(const cplx* x, const cplx* y, std::size_t n);
void axpbyScalar(double* out, double a, const double* x, double b, const double* y,
                 std::size_t n);
double sumsqScalar(const double* x, std::size_t n);

#if defined(NUMRAD_HAVE_AVX2)
void rot2Avx2(cplx* x, cplx* y, std::size_t n, cplx a, cplx b, cplx c, cplx d);
void axpyAvx2(cplx* y, cplx alpha, const cplx* x, std::size_t n);
cplx dotcAvx2(const cplx* x, const cplx* y, std::size_t n);
cplx dotuAvx2(const cplx* x, const cplx* y, std::size_t n);
void axpbyAvx2(double* out, double a, const double* x, double b, const double* y,
               std::size_t n);
double sumsqAvx2(const double* x, std::size_t n);
#endif

}  // namespace numrad::kernels::detail

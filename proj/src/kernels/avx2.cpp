// AVX2/FMA variants. This translation unit is compiled with -mavx2 -mfma and
// is only entered after the dispatcher has checked the CPU.

#include "kernels_impl.hpp"

#include <immintrin.h>

namespace numrad::kernels::detail {

namespace {

// Two complex numbers per register: [r0 i0 r1 i1].
inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

// v * s for a broadcast complex scalar s.
inline __m256d mulScalar(__m256d v, __m256d sre, __m256d sim) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(v, sre, _mm256_mul_pd(swapped, sim));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Sum of even lanes minus sum of odd lanes.
inline double hdiff(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_sub_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void rot2Avx2(cplx* x, cplx* y, std::size_t n, cplx a, cplx b, cplx c, cplx d) {
  const __m256d are = _mm256_set1_pd(a.real()), aim = _mm256_set1_pd(a.imag());
  const __m256d bre = _mm256_set1_pd(b.real()), bim = _mm256_set1_pd(b.imag());
  const __m256d cre = _mm256_set1_pd(c.real()), cim = _mm256_set1_pd(c.imag());
  const __m256d dre = _mm256_set1_pd(d.real()), dim = _mm256_set1_pd(d.imag());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = load2(x + k);
    const __m256d yv = load2(y + k);
    store2(x + k, _mm256_add_pd(mulScalar(xv, are, aim), mulScalar(yv, bre, bim)));
    store2(y + k, _mm256_add_pd(mulScalar(xv, cre, cim), mulScalar(yv, dre, dim)));
  }
  if (k < n) rot2Scalar(x + k, y + k, n - k, a, b, c, d);
}

void axpyAvx2(cplx* y, cplx alpha, const cplx* x, std::size_t n) {
  const __m256d are = _mm256_set1_pd(alpha.real()), aim = _mm256_set1_pd(alpha.imag());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    store2(y + k, _mm256_add_pd(load2(y + k), mulScalar(load2(x + k), are, aim)));
  }
  if (k < n) axpyScalar(y + k, alpha, x + k, n - k);
}

cplx dotcAvx2(const cplx* x, const cplx* y, std::size_t n) {
  // direct: [xr*yr, xi*yi, ...]   cross: [xr*yi, xi*yr, ...]
  __m256d direct = _mm256_setzero_pd();
  __m256d cross = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = load2(x + k);
    const __m256d yv = load2(y + k);
    direct = _mm256_fmadd_pd(xv, yv, direct);
    cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), cross);
  }
  cplx s{hsum(direct), hdiff(cross)};
  if (k < n) s += dotcScalar(x + k, y + k, n - k);
  return s;
}

cplx dotuAvx2(const cplx* x, const cplx* y, std::size_t n) {
  __m256d direct = _mm256_setzero_pd();
  __m256d cross = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = load2(x + k);
    const __m256d yv = load2(y + k);
    direct = _mm256_fmadd_pd(xv, yv, direct);
    cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), cross);
  }
  cplx s{hdiff(direct), hsum(cross)};
  if (k < n) s += dotuScalar(x + k, y + k, n - k);
  return s;
}

void axpbyAvx2(double* out, double a, const double* x, double b, const double* y,
               std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  const __m256d bv = _mm256_set1_pd(b);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d by = _mm256_mul_pd(bv, _mm256_loadu_pd(y + k));
    _mm256_storeu_pd(out + k, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + k), by));
  }
  if (k < n) axpbyScalar(out + k, a, x + k, b, y + k, n - k);
}

double sumsqAvx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d v = _mm256_loadu_pd(x + k);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  if (k < n) s += sumsqScalar(x + k, n - k);
  return s;
}

}  // namespace numrad::kernels::detail

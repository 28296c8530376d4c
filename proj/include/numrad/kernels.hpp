#pragma once

// Inner-loop kernels used by the dense linear algebra. Each kernel has a
// scalar reference implementation and, on x86-64, an AVX2/FMA variant chosen
// at runtime. The variants must agree with the reference to rounding.

#include <complex>
#include <cstddef>
#include <string_view>

namespace numrad::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  const char* name;
  // x <- a x + b y,  y <- c x + d y  (old x, y on the right-hand side)
  void (*rot2)(cplx* x, cplx* y, std::size_t n, cplx a, cplx b, cplx c, cplx d);
  // y <- y + alpha x
  void (*axpy)(cplx* y, cplx alpha, const cplx* x, std::size_t n);
  // sum conj(x_i) y_i
  cplx (*dotc)(const cplx* x, const cplx* y, std::size_t n);
  // sum x_i y_i
  cplx (*dotu)(const cplx* x, const cplx* y, std::size_t n);
  // out <- a x + b y over plain doubles
  void (*axpby)(double* out, double a, const double* x, double b, const double* y, std::size_t n);
  // sum x_i^2 over plain doubles
  double (*sumsq)(const double* x, std::size_t n);
};

const KernelTable& scalarTable() noexcept;

/// nullptr when the AVX2 variants were not compiled in.
const KernelTable* avx2Table() noexcept;

bool cpuHasAvx2() noexcept;

/// The table in use. First call honours NUMRAD_SIMD=scalar|avx2|auto
/// (default auto: AVX2 when both compiled and supported by the CPU).
const KernelTable& active() noexcept;

/// Force a variant (tests, benchmarks). Returns false if unavailable.
bool select(Isa isa) noexcept;

std::string_view isaName(Isa isa) noexcept;

}  // namespace numrad::kernels

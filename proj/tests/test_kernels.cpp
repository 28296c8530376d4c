#include <gtest/gtest.h>

#include <vector>

#include "numrad/kernels.hpp"
#include "numrad/linalg.hpp"
#include "numrad/range.hpp"
#include "oracles.hpp"

using namespace numrad;
namespace k = numrad::kernels;

namespace {

const k::KernelTable* vectorTable() {
  const k::KernelTable* t = k::avx2Table();
  return (t && k::cpuHasAvx2()) ? t : nullptr;
}

std::vector<cplx> randomVector(oracle::Gen& g, std::size_t n) {
  std::vector<cplx> v(n);
  for (cplx& z : v) z = g.cnormal();
  return v;
}

double gap(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Lengths that cover empty input, odd tails and several full vectors.
const std::size_t kLengths[] = {0, 1, 2, 3, 4, 5, 7, 8, 16, 33};

}  // namespace

TEST(Kernels, ScalarTableIsComplete) {
  const k::KernelTable& s = k::scalarTable();
  EXPECT_EQ(s.isa, k::Isa::scalar);
  EXPECT_NE(s.rot2, nullptr);
  EXPECT_NE(s.sumsq, nullptr);
  EXPECT_EQ(k::isaName(k::Isa::avx2), "avx2");
}

TEST(Kernels, Rot2MatchesScalar) {
  const k::KernelTable* v = vectorTable();
  if (!v) GTEST_SKIP() << "no AVX2 variant on this machine";
  oracle::Gen g(11);
  for (std::size_t n : kLengths) {
    auto x = randomVector(g, n), y = randomVector(g, n);
    auto x2 = x, y2 = y;
    const cplx a = g.cnormal(), b = g.cnormal(), c = g.cnormal(), d = g.cnormal();
    k::scalarTable().rot2(x.data(), y.data(), n, a, b, c, d);
    v->rot2(x2.data(), y2.data(), n, a, b, c, d);
    EXPECT_LE(gap(x, x2), 1e-14) << n;
    EXPECT_LE(gap(y, y2), 1e-14) << n;
  }
}

TEST(Kernels, AxpyAndDotsMatchScalar) {
  const k::KernelTable* v = vectorTable();
  if (!v) GTEST_SKIP() << "no AVX2 variant on this machine";
  oracle::Gen g(12);
  for (std::size_t n : kLengths) {
    auto x = randomVector(g, n), y = randomVector(g, n);
    auto y2 = y;
    const cplx alpha = g.cnormal();
    k::scalarTable().axpy(y.data(), alpha, x.data(), n);
    v->axpy(y2.data(), alpha, x.data(), n);
    EXPECT_LE(gap(y, y2), 1e-14);
    EXPECT_LE(std::abs(k::scalarTable().dotc(x.data(), y.data(), n) - v->dotc(x.data(), y.data(), n)), 1e-12);
    EXPECT_LE(std::abs(k::scalarTable().dotu(x.data(), y.data(), n) - v->dotu(x.data(), y.data(), n)), 1e-12);
  }
}

TEST(Kernels, RealKernelsMatchScalar) {
  const k::KernelTable* v = vectorTable();
  if (!v) GTEST_SKIP() << "no AVX2 variant on this machine";
  oracle::Gen g(13);
  for (std::size_t n : kLengths) {
    std::vector<double> x(n), y(n), o1(n), o2(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = g.normal(), y[i] = g.normal();
    k::scalarTable().axpby(o1.data(), 0.3, x.data(), -1.7, y.data(), n);
    v->axpby(o2.data(), 0.3, x.data(), -1.7, y.data(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(o1[i], o2[i], 1e-14);
    EXPECT_NEAR(k::scalarTable().sumsq(x.data(), n), v->sumsq(x.data(), n), 1e-12);
  }
}

TEST(Kernels, DotcConjugatesFirstArgument) {
  const std::vector<cplx> x = {{0, 1}};
  const std::vector<cplx> y = {{0, 1}};
  EXPECT_EQ(k::scalarTable().dotc(x.data(), y.data(), 1), cplx(1, 0));
  EXPECT_EQ(k::scalarTable().dotu(x.data(), y.data(), 1), cplx(-1, 0));
}

// Whole-pipeline equivalence: the eigensolver and the radius sweep give the
// same answers whichever table is active.
TEST(Kernels, PipelineAgreesAcrossVariants) {
  if (!vectorTable()) GTEST_SKIP() << "no AVX2 variant on this machine";
  oracle::Gen g(14);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix t = g.complexMatrix(5, 5);
    ASSERT_TRUE(k::select(k::Isa::scalar));
    const auto e1 = hermEigenvalues(hermitianPart(t));
    const double w1 = numericalRadius(t);
    ASSERT_TRUE(k::select(k::Isa::avx2));
    const auto e2 = hermEigenvalues(hermitianPart(t));
    const double w2 = numericalRadius(t);
    for (std::size_t i = 0; i < e1.size(); ++i) EXPECT_NEAR(e1[i], e2[i], 1e-12);
    EXPECT_NEAR(w1, w2, 1e-10);
  }
}

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "numrad/range.hpp"
#include "oracles.hpp"

using namespace numrad;

namespace {

constexpr cplx I{0.0, 1.0};
constexpr double kPi = 3.14159265358979323846;

CMatrix example310() { return CMatrix::fromRows({{2.6 * I, 4.0 * I, 0}, {0, 2.5 * I, 0}, {0, 0, cplx(1, 1)}}); }

double argDistance(cplx z, double phi) { return angleDistance(std::arg(z), phi); }

}  // namespace

TEST(Pencil, Examples) {
  const CMatrix t = example310();
  EXPECT_LE(maxAbs(hermPencil(t, 0.0) - CMatrix::fromRows({{0, 2.0 * I, 0}, {-2.0 * I, 0, 0}, {0, 0, 1}})), 1e-15);
  EXPECT_LE(maxAbs(hermPencil(t, kPi / 2) - CMatrix::fromRows({{2.6, 2, 0}, {2, 2.5, 0}, {0, 0, 1}})), 1e-15);
  oracle::Gen g(1);
  const CMatrix h = g.hermitian(4);
  EXPECT_LE(maxAbs(hermPencil(h, 0.0) - h), 1e-15);
  EXPECT_THROW((void)hermPencil(CMatrix(2, 3), 0.0), Error);
}

TEST(Pencil, QuadraticFormIdentity) {
  oracle::Gen g(2);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix t = g.complexMatrix(4, 4);
    const auto x = g.unitVector(4);
    const double theta = g.uniform(0, 2 * kPi);
    const cplx tx = quadraticForm(t, x);
    EXPECT_NEAR(quadraticForm(hermPencil(t, theta), x).real(), (std::polar(1.0, -theta) * tx).real(), 1e-12);
    // Maximizing over a theta grid recovers |<Tx, x>| to grid resolution.
    const PencilFamily fam(t);
    double best = -1e300;
    for (int k = 0; k < 4096; ++k) best = std::max(best, quadraticForm(fam.at(2 * kPi * k / 4096), x).real());
    EXPECT_NEAR(best, std::abs(tx), std::abs(tx) * (1 - std::cos(kPi / 4096)) + 1e-12);
  }
}

TEST(Radius, Examples) {
  EXPECT_NEAR(radius(CMatrix::fromRows({{0, 1}, {0, 0}})).value, 0.5, 1e-12);
  EXPECT_NEAR(radius(CMatrix::fromRows({{2, 0}, {0, -3}})).value, 3.0, 1e-12);
  const double ellipse = oracle::ellipseRadius(2.6 * I, 4.0 * I, 2.5 * I);
  EXPECT_NEAR(ellipse, 2.55 + std::sqrt(4.0025), 1e-10);
  EXPECT_NEAR(radius(example310()).value, ellipse, 1e-9);
  EXPECT_EQ(radius(CMatrix(3, 3)).value, 0.0);
}

TEST(Radius, RejectsRealTagAndNonSquare) {
  const CMatrix r = CMatrix::fromRows({{1, 2}, {3, 4}}, Field::real);
  try {
    (void)radius(r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
  EXPECT_NEAR(numericalRadius(r), numericalRadius(r.withField(Field::complex)), 0.0);
  EXPECT_THROW((void)radius(CMatrix(2, 3)), Error);
}

TEST(Radius, CertificateInvariants) {
  oracle::Gen g(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(2, 6));
    const CMatrix t = g.complexMatrix(n, n);
    const RadiusCertificate c = radius(t);
    const double tol = defaultRadiusTol(t);
    EXPECT_NEAR(norm2(c.witness), 1.0, 1e-12);
    EXPECT_LE(c.residual, tol);
    EXPECT_GE(c.value, std::abs(quadraticForm(t, c.witness)) - tol);
    EXPECT_GE(c.thetaStar, 0.0);
    EXPECT_LT(c.thetaStar, 2 * kPi);
    EXPECT_NEAR(c.lipschitz, opNorm(t), 1e-12);
  }
}

TEST(Radius, NormSandwichAndSymmetries) {
  oracle::Gen g(4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(2, 6));
    const CMatrix t = g.complexMatrix(n, n);
    const double w = radius(t).value;
    const double nt = opNorm(t);
    EXPECT_GE(w, 0.5 * nt - 1e-9);
    EXPECT_LE(w, nt + 1e-9);
    const CMatrix u = g.unitary(n);
    EXPECT_NEAR(radius(adjoint(u) * t * u).value, w, 1e-8);
    EXPECT_NEAR(radius(g.unitScalar() * t).value, w, 1e-9);
    const double c = g.uniform(0.1, 5.0);
    EXPECT_NEAR(radius(c * t).value, c * w, 1e-9 * (1 + c * w));
  }
}

TEST(Radius, BlockPhaseInvariance) {
  oracle::Gen g(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = static_cast<std::size_t>(g.integer(1, 3));
    const std::size_t k = static_cast<std::size_t>(g.integer(1, 3));
    const BlockPartition p({m, k});
    const CMatrix t = g.complexMatrix(m + k, m + k);
    CMatrix s = t;
    blockAssign(s, p, 0, 1, I * blockExtract(t, p, 0, 1));
    blockAssign(s, p, 1, 0, -I * blockExtract(t, p, 1, 0));
    EXPECT_NEAR(radius(t).value, radius(s).value, 1e-8);
  }
}

TEST(Radius, AgreesWithBruteForceOracle) {
  oracle::Gen g(6);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(2, 4));
    const CMatrix t = g.complexMatrix(n, n);
    const double w = radius(t).value;
    const double brute = oracle::bruteRadius(t, g, 20000);
    EXPECT_LE(brute, w + 1e-6);
    EXPECT_LE(w - brute, 1e-3);
  }
}

TEST(Radius, ThreadCountDoesNotChangeResult) {
  oracle::Gen g(7);
  const CMatrix t = g.complexMatrix(5, 5);
  setenv("NUMRAD_THREADS", "1", 1);
  const RadiusCertificate a = radius(t);
  setenv("NUMRAD_THREADS", "4", 1);
  const RadiusCertificate b = radius(t);
  unsetenv("NUMRAD_THREADS");
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.thetaStar, b.thetaStar);
}

TEST(Crawford, Examples) {
  EXPECT_NEAR(crawford(CMatrix::identity(3)), 1.0, 1e-12);
  EXPECT_NEAR(crawford(CMatrix::fromRows({{0, 1}, {0, 0}})), 0.0, 1e-12);
  EXPECT_NEAR(crawford(CMatrix::fromRows({{1, 0}, {0, -1}})), 0.0, 1e-12);
  // Segment [1 + i, 3 + i] at distance sqrt(2).
  EXPECT_NEAR(crawford(CMatrix::fromRows({{cplx(1, 1), 0}, {0, cplx(3, 1)}})), std::sqrt(2.0), 1e-10);
}

TEST(Crawford, HullAndSampleBounds) {
  oracle::Gen g(8);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(2, 5));
    CMatrix t = g.complexMatrix(n, n);
    if (trial % 2) t = t + cplx(g.uniform(2, 6), g.uniform(-2, 2)) * CMatrix::identity(n);
    const double c = crawford(t);
    std::vector<cplx> pts;
    for (const BoundaryPoint& b : rangeBoundary(t, 720)) pts.push_back(b.point);
    const double hull = oracle::hullDistance(pts);
    if (hull == 0.0) {
      EXPECT_NEAR(c, 0.0, 1e-12);
    }
    // The sampled hull sits inside W(T), so its distance can only be larger.
    EXPECT_LE(c, hull + 1e-9);
    EXPECT_NEAR(c, hull, 1e-3 * (1 + opNorm(t)));
    for (int s = 0; s < 20; ++s) EXPECT_LE(c, oracle::modulus(t, g.unitVector(n)) + 1e-9);
  }
}

TEST(Boundary, Examples) {
  for (const BoundaryPoint& b : rangeBoundary(CMatrix::fromRows({{0, 0}, {0, 1}}), 16)) {
    EXPECT_NEAR(b.point.imag(), 0.0, 1e-12);
    EXPECT_GE(b.point.real(), -1e-12);
    EXPECT_LE(b.point.real(), 1.0 + 1e-12);
  }
  for (const BoundaryPoint& b : rangeBoundary(CMatrix::fromRows({{0, 1}, {0, 0}}), 360)) {
    EXPECT_NEAR(std::abs(b.point), 0.5, 1e-8);
  }
  const auto tri = rangeBoundary(CMatrix::fromRows({{1, 0, 0}, {0, I, 0}, {0, 0, -1}}), 360);
  for (cplx v : {cplx(1, 0), I, cplx(-1, 0)}) {
    double d = 1e300;
    for (const BoundaryPoint& b : tri) d = std::min(d, std::abs(b.point - v));
    EXPECT_LE(d, 1e-8);
  }
  EXPECT_THROW((void)rangeBoundary(CMatrix::identity(2), 2), Error);
}

TEST(Boundary, PointsStayInsideTheRadius) {
  oracle::Gen g(9);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix t = g.complexMatrix(4, 4);
    const double w = radius(t).value;
    const auto pts = rangeBoundary(t, 100);
    for (std::size_t k = 1; k < pts.size(); ++k) EXPECT_GT(pts[k].theta, pts[k - 1].theta);
    for (const BoundaryPoint& b : pts) EXPECT_LE(std::abs(b.point), w + 1e-9);
  }
}

TEST(Attaining, NilpotentIsDiscLike) {
  const AttainingSet s = attainingSet(CMatrix::fromRows({{0, 1}, {0, 0}}));
  EXPECT_TRUE(s.allAngles);
  EXPECT_NEAR(s.w, 0.5, 1e-12);
  ASSERT_FALSE(s.components.empty());
  for (const AttainingComponent& c : s.components) {
    ASSERT_EQ(c.basis.cols(), 1u);
    // (1, e^{i phi}) / sqrt(2) up to phase
    const cplx ratio = c.basis(1, 0) / c.basis(0, 0);
    EXPECT_LE(std::abs(ratio - std::polar(1.0, c.phi)), 1e-9);
  }
}

TEST(Attaining, HermitianHasOneComponent) {
  const AttainingSet s = attainingSet(CMatrix::fromRows({{3, 0}, {0, 1}}));
  ASSERT_EQ(s.components.size(), 1u);
  EXPECT_NEAR(s.components[0].phi, 0.0, 1e-9);
  ASSERT_EQ(s.components[0].basis.cols(), 1u);
  EXPECT_NEAR(std::abs(s.components[0].basis(0, 0)), 1.0, 1e-12);
}

TEST(Attaining, NormalPairOfEqualModulus) {
  const AttainingSet s = attainingSet(CMatrix::fromRows({{2, 0}, {0, std::polar(2.0, kPi / 3)}}));
  ASSERT_EQ(s.components.size(), 2u);
  // Both peaks are smooth maxima, so the angle is only located to ~sqrt(eps).
  EXPECT_NEAR(angleDistance(s.components[0].phi, 0.0), 0.0, 1e-7);
  EXPECT_NEAR(angleDistance(s.components[1].phi, kPi / 3), 0.0, 1e-7);
  EXPECT_NEAR(std::abs(s.components[0].basis(0, 0)), 1.0, 1e-9);
  EXPECT_NEAR(std::abs(s.components[1].basis(1, 0)), 1.0, 1e-9);
}

TEST(Attaining, MultiDimensionalEigenspace) {
  oracle::Gen g(10);
  const CMatrix u = g.unitary(4);
  const std::vector<cplx> d = {3, 3, 1, -2};
  const CMatrix t = u * CMatrix::diagonal(d) * adjoint(u);
  const AttainingSet s = attainingSet(t);
  ASSERT_EQ(s.components.size(), 1u);
  EXPECT_EQ(s.components[0].basis.cols(), 2u);
}

TEST(Attaining, InvariantsOnRandomMatrices) {
  oracle::Gen g(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(2, 5));
    const CMatrix t = g.complexMatrix(n, n);
    const AttainingSet s = attainingSet(t);
    const double tol = defaultAttainTol(s.w);
    ASSERT_FALSE(s.components.empty());
    for (const AttainingComponent& c : s.components) {
      EXPECT_LE(maxAbs(adjoint(c.basis) * c.basis - CMatrix::identity(c.basis.cols())), 1e-10);
      for (int k = 0; k < 5; ++k) {
        const auto y = g.unitVector(c.basis.cols());
        const auto x = numrad::apply(c.basis, y);
        const cplx tx = quadraticForm(t, x);
        EXPECT_GE(std::abs(tx), s.w - tol);
        EXPECT_LE(argDistance(tx, c.phi), 1e-6);
      }
    }
  }
}

TEST(Attaining, CompletenessOnConstructedCases) {
  // Normal matrix with three eigenvalues of modulus 2 at 120 degrees: every
  // attaining unit vector is an eigenvector of one of them.
  oracle::Gen g(12);
  const CMatrix u = g.unitary(4);
  const std::vector<cplx> d = {2, std::polar(2.0, 2 * kPi / 3), std::polar(2.0, 4 * kPi / 3), 0.5};
  const CMatrix t = u * CMatrix::diagonal(d) * adjoint(u);
  const AttainingSet s = attainingSet(t);
  ASSERT_EQ(s.components.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    std::vector<cplx> x(4);
    for (std::size_t i = 0; i < 4; ++i) x[i] = u(i, k);
    const double phi = std::arg(d[k]);
    const auto it = std::find_if(s.components.begin(), s.components.end(),
                                 [&](const AttainingComponent& c) { return angleDistance(c.phi, phi) < 1e-6; });
    ASSERT_NE(it, s.components.end());
    // x lies in the span of the basis: projection keeps its norm.
    const auto coeffs = numrad::apply(adjoint(it->basis), x);
    EXPECT_NEAR(norm2(coeffs), 1.0, 1e-9);
  }
}

TEST(Attaining, ZeroRadiusThrows) {
  try {
    (void)attainingSet(CMatrix(2, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroRadius);
  }
}

TEST(RealRadius, Examples) {
  const RealRadius skew = realRadius(CMatrix::fromRows({{0, 1}, {-1, 0}}, Field::real));
  EXPECT_EQ(skew.w, 0.0);
  EXPECT_EQ(skew.eplus.cols(), 0u);
  EXPECT_EQ(skew.eminus.cols(), 0u);

  const RealRadius d = realRadius(CMatrix::fromRows({{2, 0}, {0, -2}}, Field::real));
  EXPECT_NEAR(d.w, 2.0, 1e-14);
  ASSERT_EQ(d.eplus.cols(), 1u);
  ASSERT_EQ(d.eminus.cols(), 1u);
  EXPECT_NEAR(std::abs(d.eplus(0, 0)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(d.eminus(1, 0)), 1.0, 1e-14);

  const RealRadius n = realRadius(CMatrix::fromRows({{0, 2}, {0, 0}}, Field::real));
  EXPECT_NEAR(n.w, 1.0, 1e-14);
  ASSERT_EQ(n.eplus.cols(), 1u);
  ASSERT_EQ(n.eminus.cols(), 1u);
  EXPECT_NEAR(std::abs(n.eplus(0, 0) + n.eplus(1, 0)), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(std::abs(n.eminus(0, 0) - n.eminus(1, 0)), std::sqrt(2.0), 1e-12);

  EXPECT_THROW((void)realRadius(CMatrix::fromRows({{I}})), Error);
}

TEST(RealRadius, MatchesRealSphereSearch) {
  oracle::Gen g(13);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(2, 5));
    const CMatrix t = g.realMatrix(n, n);
    const double w = realRadius(t).w;
    double best = 0.0;
    for (int s = 0; s < 20000; ++s) {
      const auto x = g.realUnitVector(n);
      std::vector<cplx> xc(x.begin(), x.end());
      best = std::max(best, oracle::modulus(t, xc));
    }
    EXPECT_LE(best, w + 1e-9);
    EXPECT_LE(w - best, 0.05 * (1 + w));
    // Over complex vectors the radius can only grow.
    EXPECT_GE(numericalRadius(t) + 1e-9, w);
  }
}

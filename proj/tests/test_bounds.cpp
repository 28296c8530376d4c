#include <gtest/gtest.h>

#include <cmath>

#include "numrad/bounds.hpp"
#include "numrad/range.hpp"
#include "oracles.hpp"

using namespace numrad;

namespace {

constexpr cplx I{0.0, 1.0};

CMatrix example310() { return CMatrix::fromRows({{2.6 * I, 4.0 * I, 0}, {0, 2.5 * I, 0}, {0, 0, cplx(1, 1)}}); }

double ellipse310() { return 2.55 + std::sqrt(4.0025); }

double value(const std::vector<NamedValue>& v, const std::string& name) {
  for (const auto& x : v) {
    if (x.name == name) return x.value;
  }
  ADD_FAILURE() << name;
  return NAN;
}

CMatrix blockShift(oracle::Gen& g, const BlockPartition& p) {
  CMatrix m(p.dimension(), p.dimension());
  for (std::size_t j = 0; j + 1 < p.blocks(); ++j) {
    blockAssign(m, p, j, j + 1, g.complexMatrix(p.size(j), p.size(j + 1)));
  }
  return m;
}

CMatrix blockUpper(oracle::Gen& g, const BlockPartition& p) {
  CMatrix m = g.complexMatrix(p.dimension(), p.dimension());
  for (std::size_t i = 0; i < p.blocks(); ++i) {
    for (std::size_t j = 0; j < i; ++j) blockAssign(m, p, i, j, CMatrix(p.size(i), p.size(j)));
  }
  return m;
}

BlockPartition randomPartition(oracle::Gen& g, int maxBlocks = 3, int maxSize = 2) {
  std::vector<std::size_t> s(static_cast<std::size_t>(g.integer(2, maxBlocks)));
  for (auto& x : s) x = static_cast<std::size_t>(g.integer(1, maxSize));
  return BlockPartition(s);
}

}  // namespace

TEST(BoundThm32, Examples) {
  const CMatrix t = example310();
  const BlockPartition p({2, 1});
  const double v = boundThm32(blockExtract(t, p, 0, 0), blockExtract(t, p, 0, 1), blockExtract(t, p, 1, 0),
                              blockExtract(t, p, 1, 1));
  EXPECT_NEAR(v, ellipse310(), 1e-9);
  const CMatrix one = CMatrix::fromRows({{1}});
  const CMatrix zero = CMatrix::fromRows({{0}});
  // [[0,1],[1,0]]: B + C = 2, so the bound is w(B + C)/2 = 1
  EXPECT_NEAR(boundThm32(zero, one, one, zero), 1.0, 1e-12);
}

TEST(BoundThm32, PhaseInvariance) {
  oracle::Gen g(1);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = static_cast<std::size_t>(g.integer(1, 3));
    const std::size_t k = trial % 2 ? m : static_cast<std::size_t>(g.integer(1, 3));
    const CMatrix a = g.complexMatrix(m, m), b = g.complexMatrix(m, k), c = g.complexMatrix(k, m),
                  d = g.complexMatrix(k, k);
    EXPECT_NEAR(boundThm32(a, b, c, d), boundThm32(a, I * b, -I * c, d), 1e-9);
  }
}

TEST(BoundThm33, Examples) {
  EXPECT_NEAR(boundThm33(example310(), BlockPartition::scalar(3)), ellipse310(), 1e-9);
  EXPECT_NEAR(boundThm33(CMatrix::fromRows({{0, 1}, {1, 0}}), BlockPartition::scalar(2)), 0.0, 1e-15);
  EXPECT_NEAR(boundThm38Scalar(example310()), ellipse310(), 1e-9);
  EXPECT_GE(boundThm38Scalar(example310()), 4.55);
}

TEST(BoundThm34, Examples) {
  EXPECT_NEAR(boundThm34(example310(), BlockPartition::scalar(3)), ellipse310(), 1e-9);
}

TEST(BoundCor35, ExamplesAndErrors) {
  EXPECT_NEAR(boundCor35(CMatrix::fromRows({{0, 1}, {1, 0}}), BlockPartition::scalar(2)), 1.0, 1e-12);
  try {
    (void)boundCor35(example310(), BlockPartition({2, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnequalBlocks);
  }
}

TEST(BoundThm36, ExamplesAndErrors) {
  EXPECT_NEAR(boundThm36(example310(), BlockPartition::scalar(3)), 2.6, 1e-12);
  for (double c : {0.5, 1.0, 3.0}) {
    const CMatrix n = CMatrix::fromRows({{0, c}, {0, 0}});
    EXPECT_NEAR(boundThm36(n, BlockPartition::scalar(2)), radius(n).value, 1e-12);
  }
  try {
    (void)boundThm36(CMatrix::fromRows({{0, 0}, {1, 0}}), BlockPartition::scalar(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotUpperTriangular);
  }
}

TEST(GauWu, RemarkBlockShift) {
  const BlockPartition p({2, 2, 2});
  CMatrix m(6, 6);
  blockAssign(m, p, 0, 1, CMatrix::fromRows({{4, 0}, {0, 1}}));
  blockAssign(m, p, 1, 2, CMatrix::fromRows({{6, 0}, {0, 2}}));
  const BlockShiftComparators c = gauWuBlockShift(m, p);
  const CMatrix expected = CMatrix::fromRows({{0, 1, 0}, {0, 0, 2}, {0, 0, 0}});
  EXPECT_LE(maxAbs(c.b - expected), 1e-12);
  EXPECT_LE(maxAbs(c.c - expected), 1e-12);
  EXPECT_NEAR(c.wB, std::sqrt(5.0) / 2, 1e-8);
  EXPECT_NEAR(c.wC, std::sqrt(5.0) / 2, 1e-8);
  EXPECT_LT(c.wB, 3.0);
  EXPECT_NEAR(upperKittaneh(c.b), std::sqrt(2.5), 1e-8);
}

TEST(GauWu, SingularBlocksGiveZero) {
  const BlockPartition p({2, 2, 2});
  CMatrix m(6, 6);
  blockAssign(m, p, 0, 1, CMatrix::fromRows({{1, 0}, {0, 0}}));
  blockAssign(m, p, 1, 2, CMatrix::fromRows({{0, 3}, {0, 0}}));
  const BlockShiftComparators c = gauWuBlockShift(m, p);
  EXPECT_NEAR(c.wB, 0.0, 1e-7);
  EXPECT_NEAR(c.wC, 0.0, 1e-7);
  try {
    (void)gauWuBlockShift(example310(), BlockPartition::scalar(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotBlockShift);
  }
}

TEST(GauWu, Cyclic) {
  EXPECT_NEAR(gauWuCyclic(CMatrix::fromRows({{1, 0}, {0, 2}})), 0.0, 1e-15);
  EXPECT_NEAR(gauWuCyclic(CMatrix::fromRows({{0, 1}, {1, 0}})), 1.0, 1e-12);
  const CMatrix b = cyclicPart(example310());
  EXPECT_LE(maxAbs(b - CMatrix::fromRows({{0, 4.0 * I, 0}, {0, 0, 0}, {0, 0, 0}})), 1e-15);
  EXPECT_NEAR(gauWuCyclic(example310()), 2.0, 1e-9);
}

TEST(Literature, Example310) {
  const LiteratureInputs in = literatureInputs(example310());
  EXPECT_NEAR(in.normH, 2.0, 1e-12);
  EXPECT_NEAR(in.normK, ellipse310(), 1e-9);
  EXPECT_NEAR(in.normT, 5.2414, 1e-4);
  EXPECT_NEAR(in.crawfordH, 0.0, 1e-12);
  EXPECT_NEAR(in.crawfordT2, 0.0, 1e-9);
  const auto v = litBounds(example310());
  ASSERT_EQ(v.size(), 6u);
  const char* names[] = {"kmy", "aok", "bbp1", "bbp2", "hks1", "hks2"};
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(v[i].name, names[i]);
  // Recomputed from the formulas with the ingredients above.
  const double k = ellipse310();
  const double t = in.normT;
  EXPECT_NEAR(value(v, "kmy"), std::sqrt((4.0 + k * k) / 2.0), 1e-9);
  EXPECT_NEAR(value(v, "kmy"), 3.515, 1e-3);
  EXPECT_NEAR(value(v, "bbp2"), k, 1e-9);
  EXPECT_NEAR(value(v, "hks1"), t / 2 + std::abs(2.0 - k) / 2, 1e-9);
  EXPECT_NEAR(value(v, "hks1"), 3.896, 1e-3);
  EXPECT_NEAR(value(v, "hks2"), t / 2 + std::abs(2.0 - t / 2) / 4 + std::abs(k - t / 2) / 4, 1e-9);
  EXPECT_NEAR(value(v, "aok"), 0.5 * std::sqrt(in.normGramSum + 2 * in.crawfordT2), 1e-12);
}

TEST(Literature, TightCases) {
  const auto n = litBounds(CMatrix::fromRows({{0, 1}, {0, 0}}));
  EXPECT_NEAR(value(n, "kmy"), 0.5, 1e-9);
  EXPECT_NEAR(value(n, "aok"), 0.5, 1e-9);
  EXPECT_NEAR(value(n, "hks1"), 0.5, 1e-9);
  oracle::Gen g(2);
  const CMatrix h = g.hermitian(4);
  const auto hv = litBounds(h);
  EXPECT_NEAR(value(hv, "hks1"), opNorm(h), 1e-9);
  EXPECT_NEAR(value(hv, "kmy"), opNorm(h) / std::sqrt(2.0), 1e-9);
}

TEST(Kittaneh, Examples) {
  oracle::Gen g(3);
  const CMatrix h = g.hermitian(3);
  EXPECT_NEAR(upperKittaneh(h), opNorm(h), 1e-9);
  EXPECT_NEAR(upperKittaneh(CMatrix::fromRows({{0, 1}, {0, 0}})), std::sqrt(0.5), 1e-12);
}

TEST(Report, Example310) {
  const BoundsReport r = report(example310());
  EXPECT_NEAR(r.referenceW, ellipse310(), 1e-9);
  const BoundEntry* thm38 = r.find("thm38");
  ASSERT_NE(thm38, nullptr);
  EXPECT_NEAR(thm38->value, ellipse310(), 1e-9);
  for (const BoundEntry& e : r.entries) EXPECT_TRUE(e.valid) << e.name;
  const BoundEntry* best = r.find(r.bestLower);
  ASSERT_NE(best, nullptr);
  EXPECT_NEAR(best->value, ellipse310(), 1e-6);
  EXPECT_NE(r.find("cor35"), nullptr);
  EXPECT_EQ(r.find("thm32"), nullptr);  // three blocks
}

TEST(Report, HermitianAndZero) {
  oracle::Gen g(4);
  const CMatrix h = g.hermitian(4);
  const BoundsReport r = report(h);
  EXPECT_NEAR(r.find(r.bestLower)->value, r.referenceW, 1e-8);
  EXPECT_NEAR(r.find("hks1")->value, r.referenceW, 1e-8);
  const BoundsReport z = report(CMatrix(3, 3));
  EXPECT_EQ(z.referenceW, 0.0);
  for (const BoundEntry& e : z.entries) EXPECT_NEAR(e.value, 0.0, 1e-12) << e.name;
}

TEST(Report, CatalogOrderAndValidity) {
  oracle::Gen g(5);
  const auto& catalog = boundCatalog();
  ASSERT_EQ(catalog.size(), 15u);
  for (int trial = 0; trial < 10; ++trial) {
    const BlockPartition p = randomPartition(g);
    const CMatrix t = g.complexMatrix(p.dimension(), p.dimension());
    const BoundsReport r = report(t, p);
    std::size_t pos = 0;
    double bestValue = -1.0;
    for (const BoundEntry& e : r.entries) {
      const auto it = std::find(catalog.begin() + static_cast<long>(pos), catalog.end(), e.name);
      ASSERT_NE(it, catalog.end()) << e.name;
      pos = static_cast<std::size_t>(it - catalog.begin()) + 1;
      if (e.kind == BoundKind::lower) {
        EXPECT_EQ(e.valid, e.value <= r.referenceW + r.tolerance);
        if (e.valid) bestValue = std::max(bestValue, e.value);
      } else {
        EXPECT_EQ(e.valid, e.value >= r.referenceW - r.tolerance);
      }
    }
    EXPECT_NEAR(r.find(r.bestLower)->value, bestValue, 1e-12 * (1 + r.referenceW));
  }
}

TEST(Properties, Soundness) {
  oracle::Gen g(6);
  for (int trial = 0; trial < 80; ++trial) {
    const BlockPartition p = randomPartition(g);
    const std::size_t n = p.dimension();
    CMatrix t;
    switch (trial % 4) {
      case 0: t = g.complexMatrix(n, n); break;
      case 1: t = g.squareZero(n); break;
      case 2: t = g.upperTriangular(n); break;
      default: t = blockShift(g, p); break;
    }
    const BoundsReport r = report(t, p);
    for (const BoundEntry& e : r.entries) {
      if (e.kind == BoundKind::lower) {
        EXPECT_LE(e.value, r.referenceW + 1e-7) << e.name << " trial " << trial;
      } else {
        EXPECT_GE(e.value, r.referenceW - 1e-7) << e.name << " trial " << trial;
      }
    }
  }
}

TEST(Properties, TermSetMonotonicity) {
  oracle::Gen g(7);
  for (int trial = 0; trial < 30; ++trial) {
    const BlockPartition p = trial % 2 ? randomPartition(g) : BlockPartition(std::vector<std::size_t>(3, 2));
    const CMatrix t = g.complexMatrix(p.dimension(), p.dimension());
    double diag = 0.0;
    for (std::size_t k = 0; k < p.blocks(); ++k) diag = std::max(diag, radius(blockExtract(t, p, k, k)).value);
    const double t34 = boundThm34(t, p);
    EXPECT_GE(t34, diag - 1e-9);
    EXPECT_GE(boundThm33(t, p), diag - 1e-9);
    if (p.uniform()) {
      EXPECT_LE(boundCor35(t, p), t34 + 1e-9);
    }
  }
}

TEST(Properties, BoundThm36Dominance) {
  oracle::Gen g(8);
  for (int trial = 0; trial < 30; ++trial) {
    const BlockPartition p = randomPartition(g);
    const CMatrix t = blockUpper(g, p);
    double rhs = 0.0;
    for (std::size_t i = 0; i < p.blocks(); ++i) {
      rhs = std::max(rhs, radius(blockExtract(t, p, i, i)).value);
      for (std::size_t j = i + 1; j < p.blocks(); ++j) {
        const CMatrix b = blockExtract(t, p, i, j);
        if (b.rows() == b.cols()) rhs = std::max(rhs, 0.5 * radius(b).value);
      }
    }
    EXPECT_GE(boundThm36(t, p), rhs - 1e-9);
    EXPECT_LE(boundThm36(t, p), radius(t).value + 1e-7);
  }
}

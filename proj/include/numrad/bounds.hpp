#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "numrad/linalg.hpp"
#include "numrad/matrix.hpp"

namespace numrad {

/// max{w(A), w(D), w(B+C)/2, w(B-C)/2}; the B, C terms need square B, C of
/// equal shape and are skipped otherwise.
double boundThm32(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& d);

/// max over diagonal blocks w(A_kk) and zero-cross matrices w(T_i).
double boundThm33(const CMatrix& m, const BlockPartition& p);

/// max over diagonal blocks and all 2x2 block principal submatrices.
double boundThm34(const CMatrix& m, const BlockPartition& p);

/// max{w(A_kk), w(A_ij + A_ji)/2, w(A_ij - A_ji)/2}; equal block sizes only.
double boundCor35(const CMatrix& m, const BlockPartition& p);

/// Block upper-triangular input: max{w(A_kk), ||A_ij||/2 : i < j}.
double boundThm36(const CMatrix& m, const BlockPartition& p);

/// boundThm33 with the all-ones partition.
double boundThm38Scalar(const CMatrix& m);

struct BlockShiftComparators {
  CMatrix b;  // superdiagonal m(A_j)
  CMatrix c;  // superdiagonal m(A_j^*)
  double wB = 0.0;
  double wC = 0.0;
};

/// Block shift comparator matrices of the block-shift lower bound.
/// Throws NotBlockShift.
BlockShiftComparators gauWuBlockShift(const CMatrix& m, const BlockPartition& p);

/// w of the matrix keeping only entries (1,2), (2,3), ..., (n-1,n), (n,1).
double gauWuCyclic(const CMatrix& m);
CMatrix cyclicPart(const CMatrix& m);

struct NamedValue {
  std::string name;
  double value;
};

/// Ingredients of the literature bounds, exposed for reporting.
struct LiteratureInputs {
  double normT = 0.0;
  double normH = 0.0;
  double normK = 0.0;
  double normGramSum = 0.0;  // || |T|^2 + |T^*|^2 ||
  double crawfordH = 0.0;
  double crawfordK = 0.0;
  double crawfordT2 = 0.0;
};

LiteratureInputs literatureInputs(const CMatrix& t);

/// kmy, aok, bbp1, bbp2, hks1, hks2 in that order.
std::vector<NamedValue> litBounds(const CMatrix& t);
std::vector<NamedValue> litBounds(const LiteratureInputs& in);

/// sqrt(||T T^* + T^* T|| / 2), an upper bound for w(T).
double upperKittaneh(const CMatrix& t);

enum class BoundKind { lower, upper };

struct BoundEntry {
  std::string name;
  double value = 0.0;
  BoundKind kind = BoundKind::lower;
  bool valid = true;
  std::string source;
};

struct BoundsReport {
  double referenceW = 0.0;
  double tolerance = 0.0;
  std::vector<BoundEntry> entries;
  std::string bestLower;
  std::optional<BlockPartition> partition;

  const BoundEntry* find(std::string_view name) const;
};

/// Stable identifiers, catalog order.
const std::vector<std::string>& boundCatalog();

/// Evaluates every applicable bound. Block bounds use `p` when given and the
/// scalar partition otherwise. reportTol < 0 selects 1e-6 * (1 + w).
BoundsReport report(const CMatrix& t, const std::optional<BlockPartition>& p = std::nullopt,
                    double reportTol = -1.0);

}  // namespace numrad

#include <algorithm>
#include <cmath>
#include <functional>

#include "internal.hpp"

namespace numrad {

const std::vector<std::string>& boundCatalog() {
  static const std::vector<std::string> names = {
      "thm32", "thm33", "thm34", "cor35", "thm36", "thm38",  "gw_shift",      "gw_cyclic",
      "kmy",   "aok",   "bbp1",  "bbp2",  "hks1",  "hks2",   "kittaneh_upper"};
  return names;
}

const BoundEntry* BoundsReport::find(std::string_view name) const {
  const auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const BoundEntry& e) { return e.name == name; });
  return it == entries.end() ? nullptr : &*it;
}

BoundsReport report(const CMatrix& t, const std::optional<BlockPartition>& p, double reportTol) {
  if (!t.isSquare()) throw Error(ErrorCode::NotSquare, "bounds need a square matrix");
  const CMatrix tc = t.isReal() ? t.withField(Field::complex) : t;
  const std::size_t n = t.rows();
  const BlockPartition part = p ? *p : BlockPartition::scalar(n);
  part.check(t);

  BoundsReport out;
  out.partition = part;
  out.referenceW = radius(tc).value;
  out.tolerance = reportTol >= 0.0 ? reportTol : 1e-6 * (1.0 + out.referenceW);

  auto add = [&](std::string name, double value, BoundKind kind, std::string source) {
    out.entries.push_back({std::move(name), value, kind, true, std::move(source)});
  };

  if (part.blocks() == 2) {
    add("thm32",
        boundThm32(blockExtract(t, part, 0, 0), blockExtract(t, part, 0, 1), blockExtract(t, part, 1, 0),
                   blockExtract(t, part, 1, 1)),
        BoundKind::lower, "2x2 blocks: w(A), w(D), w(B+C)/2, w(B-C)/2");
  }
  const double thm33 = boundThm33(t, part);
  add("thm33", thm33, BoundKind::lower, "diagonal blocks and zero-cross matrices");
  add("thm34", boundThm34(t, part), BoundKind::lower, "diagonal blocks and 2x2 block principal submatrices");
  if (part.uniform()) {
    add("cor35", boundCor35(t, part), BoundKind::lower, "equal blocks: w(A_ij + A_ji)/2, w(A_ij - A_ji)/2");
  }
  if (detail::isBlockUpperTriangular(t, part)) {
    add("thm36", boundThm36(t, part), BoundKind::lower, "block upper triangular: ||A_ij||/2");
  }
  const bool scalarPart = part == BlockPartition::scalar(n);
  add("thm38", scalarPart ? thm33 : boundThm38Scalar(t), BoundKind::lower, "scalar zero-cross matrices");
  if (detail::isBlockShift(t, part)) {
    const BlockShiftComparators g = gauWuBlockShift(t, part);
    add("gw_shift", std::max(g.wB, g.wC), BoundKind::lower, "block shift comparators of minimum moduli");
  }
  add("gw_cyclic", gauWuCyclic(t), BoundKind::lower, "cyclic superdiagonal entries");

  const LiteratureInputs in = literatureInputs(t);
  const char* sources[] = {
      "sqrt((||H||^2 + ||K||^2)/2)",
      "sqrt(|| |T|^2 + |T*|^2 || + 2c(T^2))/2",
      "sqrt(||H||^2 + c(K)^2)",
      "sqrt(||K||^2 + c(H)^2)",
      "||T||/2 + | ||H|| - ||K|| |/2",
      "||T||/2 + | ||H|| - ||T||/2 |/4 + | ||K|| - ||T||/2 |/4",
  };
  std::size_t s = 0;
  for (const NamedValue& v : litBounds(in)) add(v.name, v.value, BoundKind::lower, sources[s++]);
  add("kittaneh_upper", upperKittaneh(t), BoundKind::upper, "sqrt(||TT* + T*T||/2)");

  const double tieTol = 1e-12 * (1.0 + out.referenceW);
  const BoundEntry* best = nullptr;
  for (BoundEntry& e : out.entries) {
    e.valid = e.kind == BoundKind::lower ? e.value <= out.referenceW + out.tolerance
                                         : e.value >= out.referenceW - out.tolerance;
    if (e.kind == BoundKind::lower && e.valid && (!best || e.value > best->value + tieTol)) best = &e;
  }
  if (best) out.bestLower = best->name;
  return out;
}

}  // namespace numrad

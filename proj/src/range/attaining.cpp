#include <algorithm>
#include <cmath>

#include "internal.hpp"

namespace numrad {

namespace {

// Relative eigenvalue gap below which two eigenvalues count as one.
constexpr double kMultiplicityGap = 1e-8;

CMatrix topEigenspace(const HermEigDecomp& eig) {
  const double top = eig.max();
  const double gap = kMultiplicityGap * (1.0 + std::abs(top));
  const std::size_t n = eig.values.size();
  std::size_t first = n - 1;
  while (first > 0 && top - eig.values[first - 1] <= gap) --first;
  CMatrix basis(n, n - first, Field::complex);
  for (std::size_t k = first; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) basis(i, k - first) = eig.vectors(i, k);
  }
  return basis;
}

struct Candidate {
  double theta;
  double value;
};

}  // namespace

AttainingSet attainingSet(const CMatrix& t, double attainTol, const SweepOptions& options) {
  if (!t.isSquare()) throw Error(ErrorCode::NotSquare, "attaining set needs a square matrix");
  const PencilFamily family(t);
  const double lipschitz = opNorm(t);
  const SweepResult sweep = detail::topEigenvalueSweep(family, lipschitz, options);

  AttainingSet out;
  out.w = std::max(0.0, sweep.best);
  const double tol = attainTol >= 0.0 ? attainTol : defaultAttainTol(out.w);
  if (out.w <= tol) throw Error(ErrorCode::ZeroRadius, "w(T) is zero within tolerance");

  const std::size_t grid = sweep.gridAngles.size();
  const double h = kTwoPi / static_cast<double>(grid);
  std::vector<Candidate> maximizing;
  for (std::size_t k = 0; k < grid; ++k) {
    if (sweep.gridValues[k] >= out.w - tol) maximizing.push_back({sweep.gridAngles[k], sweep.gridValues[k]});
  }

  if (static_cast<double>(maximizing.size()) >= 0.95 * static_cast<double>(grid)) {
    out.allAngles = true;
    for (std::size_t k = 0; k < grid; ++k) {
      const double phi = sweep.gridAngles[k];
      out.components.push_back({phi, topEigenspace(hermEig(family.at(phi)))});
    }
    return out;
  }

  for (const SweepPeak& p : sweep.peaks) {
    if (p.value >= out.w - tol) maximizing.push_back({p.theta, p.value});
  }
  std::sort(maximizing.begin(), maximizing.end(),
            [](const Candidate& a, const Candidate& b) { return a.theta < b.theta; });

  // Group angles that sit within three grid steps of their neighbour.
  std::vector<std::vector<Candidate>> clusters;
  for (const Candidate& c : maximizing) {
    if (clusters.empty() || c.theta - clusters.back().back().theta > 3.0 * h) {
      clusters.push_back({c});
    } else {
      clusters.back().push_back(c);
    }
  }
  if (clusters.size() > 1 &&
      angleDistance(clusters.back().back().theta, clusters.front().front().theta) <= 3.0 * h) {
    clusters.front().insert(clusters.front().end(), clusters.back().begin(), clusters.back().end());
    clusters.pop_back();
  }

  for (const auto& cluster : clusters) {
    const Candidate* rep = &cluster.front();
    for (const Candidate& c : cluster) {
      if (c.value > rep->value || (c.value == rep->value && c.theta < rep->theta)) rep = &c;
    }
    out.components.push_back({rep->theta, topEigenspace(hermEig(family.at(rep->theta)))});
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const AttainingComponent& a, const AttainingComponent& b) { return a.phi < b.phi; });
  return out;
}

RealRadius realRadius(const CMatrix& t) {
  if (!t.isSquare()) throw Error(ErrorCode::NotSquare, "realRadius needs a square matrix");
  if (!t.hasRealEntries()) throw Error(ErrorCode::NotReal, "realRadius needs a real matrix");
  const CMatrix s = hermitianPart(t.withField(Field::real));
  const HermEigDecomp eig = hermEig(s);
  const std::size_t n = eig.values.size();

  RealRadius out;
  out.w = std::max(std::abs(eig.max()), std::abs(eig.min()));
  out.eplus = CMatrix(n, 0, Field::real);
  out.eminus = CMatrix(n, 0, Field::real);
  if (out.w <= 1e-14 * (1.0 + frobeniusNorm(t))) return out;

  const double gap = kMultiplicityGap * (1.0 + out.w);
  auto collect = [&](double target) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k) {
      if (std::abs(eig.values[k] - target) <= gap) idx.push_back(k);
    }
    CMatrix basis(n, idx.size(), Field::real);
    for (std::size_t c = 0; c < idx.size(); ++c) {
      for (std::size_t i = 0; i < n; ++i) basis(i, c) = eig.vectors(i, idx[c]);
    }
    return basis;
  };
  out.eplus = collect(out.w);
  out.eminus = collect(-out.w);
  return out;
}

}  // namespace numrad

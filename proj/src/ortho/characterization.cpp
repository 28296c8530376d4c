// T _|_w A over C for matrices. With M_{w(T)} described by maximizing angles
// phi and top eigenspaces E_phi (so <Tx, x> = w e^{i phi} on E_phi), the
// witness condition at angle theta,
//   exists x in M_{w(T)}:  Re{ e^{-i theta} <Tx,x> conj(<Ax,x>) } >= 0,
// becomes  g(theta) = max_phi lambda_max(pencil(A_phi, phi - theta)) >= 0  with
// A_phi the compression of A to E_phi. g is certified on the whole circle by
// grid evaluation plus local bisection.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "numrad/ortho.hpp"

namespace numrad {

namespace {

constexpr std::size_t kInitialGrid = 720;
constexpr double kAngleFloor = 1e-12;
constexpr std::size_t kEvaluationBudget = 200000;

struct Compressed {
  double phi;
  const CMatrix* basis;
  CMatrix a;        // basis^* A basis
  PencilFamily family;
  bool scalar;
};

// Best witness at one angle: g(theta) and the vector realizing it.
struct Probe {
  double theta = 0.0;
  double g = -std::numeric_limits<double>::infinity();
  std::size_t component = 0;
  std::vector<cplx> local;  // coordinates in the component basis
  cplx ax;                  // <A x, x> = <A_phi y, y>
};

class WitnessFunction {
 public:
  WitnessFunction(const AttainingSet& set, const CMatrix& a) {
    parts_.reserve(set.components.size());
    for (const AttainingComponent& c : set.components) {
      CMatrix ac = compress(a, c.basis);
      const bool scalar = ac.rows() == 1;
      parts_.push_back({c.phi, &c.basis, ac, PencilFamily(ac), scalar});
    }
  }

  Probe operator()(double theta) {
    ++evaluations_;
    Probe best;
    best.theta = theta;
    for (std::size_t c = 0; c < parts_.size(); ++c) {
      const Compressed& part = parts_[c];
      const double psi = part.phi - theta;
      if (part.scalar) {
        const cplx a = part.a(0, 0);
        const double v = (std::polar(1.0, -psi) * a).real();
        if (v > best.g) {
          best.g = v;
          best.component = c;
          best.local = {1.0};
          best.ax = a;
        }
        continue;
      }
      const HermEigDecomp eig = hermEig(part.family.at(psi));
      if (eig.max() > best.g) {
        best.g = eig.max();
        best.component = c;
        best.local = eig.vector(eig.values.size() - 1);
        best.ax = quadraticForm(part.a, best.local);
      }
    }
    return best;
  }

  std::vector<cplx> lift(const Probe& p) const {
    const CMatrix& basis = *parts_[p.component].basis;
    std::vector<cplx> x(basis.rows());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      for (std::size_t k = 0; k < basis.cols(); ++k) x[i] += basis(i, k) * p.local[k];
    }
    return x;
  }

  double phi(const Probe& p) const { return parts_[p.component].phi; }
  std::size_t evaluations() const { return evaluations_; }

 private:
  std::vector<Compressed> parts_;
  std::size_t evaluations_ = 0;
};

// The fixed witness x of a probe gives the lower bound
//   g(t) >= Re(e^{i(t - phi)} a) = |a| cos(t - phi + arg a)
// for every t. reach() is how far that bound stays >= -tol to one side.
double reach(const Probe& p, double phi, double tol, bool rightward) {
  const double r = std::abs(p.ax);
  if (r <= tol) return std::numeric_limits<double>::infinity();
  const double alpha = std::acos(std::clamp(-tol / r, -1.0, 1.0));
  double u = wrapAngle(p.theta - phi + std::arg(p.ax));
  if (u > 0.5 * kTwoPi) u -= kTwoPi;
  if (std::abs(u) > alpha) return 0.0;
  return rightward ? alpha - u : u + alpha;
}

}  // namespace

OrthoVerdict orthoW(const CMatrix& t, const CMatrix& a, double orthoTol) {
  if (!t.isSquare() || !a.isSquare()) throw Error(ErrorCode::NotSquare, "orthoW needs square matrices");
  if (t.rows() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "T and A differ in size");

  OrthoVerdict verdict;
  verdict.method = OrthoMethod::characterization;

  AttainingSet set;
  try {
    set = attainingSet(t);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ZeroRadius) throw;
    verdict.orthogonal = true;
    verdict.note = "w(T) = 0, so w(T + lambda A) >= w(T) trivially";
    return verdict;
  }
  const double w = set.w;
  const double tol = orthoTol >= 0.0 ? orthoTol : defaultOrthoTol(w);
  if (w <= tol) {
    verdict.orthogonal = true;
    verdict.note = "w(T) = 0 within tolerance";
    return verdict;
  }
  if (maxAbs(a) == 0.0) {
    verdict.orthogonal = true;
    verdict.note = "A = 0";
    return verdict;
  }

  // q(theta) = w g(theta) is the quantity in the witness condition.
  const double gTol = tol / w;
  WitnessFunction g(set, a);
  double lipschitz = 0.0;
  for (const AttainingComponent& c : set.components) {
    lipschitz = std::max(lipschitz, opNorm(compress(a, c.basis)));
  }

  auto witnessOf = [&](const Probe& p) {
    OrthoWitness wt;
    wt.theta = p.theta;
    wt.phi = g.phi(p);
    wt.vector = g.lift(p);
    wt.tx = quadraticForm(t, wt.vector);
    wt.ax = quadraticForm(a, wt.vector);
    return wt;
  };
  auto refuted = [&](const Probe& p) {
    verdict.orthogonal = false;
    verdict.margin = w * p.g;
    verdict.counterexample = OrthoCounterexample{p.theta, std::nullopt, -w * p.g};
    verdict.witnesses.clear();
    return verdict;
  };

  std::vector<Probe> grid;
  grid.reserve(kInitialGrid);
  for (std::size_t k = 0; k < kInitialGrid; ++k) {
    grid.push_back(g(kTwoPi * static_cast<double>(k) / kInitialGrid));
  }
  const auto worst = std::min_element(grid.begin(), grid.end(),
                                      [](const Probe& x, const Probe& y) { return x.g < y.g; });
  if (worst->g <= -gTol) return refuted(*worst);

  double lowest = worst->g;
  struct Interval {
    Probe lo;
    Probe hi;
    double width;
  };
  std::vector<Interval> stack;
  const double h = kTwoPi / kInitialGrid;
  for (std::size_t k = 0; k < kInitialGrid; ++k) {
    Probe hi = grid[(k + 1) % kInitialGrid];
    if (k + 1 == kInitialGrid) hi.theta = kTwoPi;
    stack.push_back({grid[k], hi, h});
  }

  bool marginal = false;
  while (!stack.empty()) {
    Interval iv = std::move(stack.back());
    stack.pop_back();
    const double covered = reach(iv.lo, g.phi(iv.lo), gTol, true) + reach(iv.hi, g.phi(iv.hi), gTol, false);
    if (covered >= iv.width) continue;
    if (0.5 * (iv.lo.g + iv.hi.g) - 0.5 * lipschitz * iv.width >= -gTol) continue;
    if (iv.width < kAngleFloor || g.evaluations() > kEvaluationBudget) {
      marginal = true;
      continue;
    }
    Probe mid = g(0.5 * (iv.lo.theta + iv.hi.theta));
    lowest = std::min(lowest, mid.g);
    if (mid.g <= -gTol) return refuted(mid);
    stack.push_back({mid, iv.hi, 0.5 * iv.width});
    stack.push_back({std::move(iv.lo), std::move(mid), 0.5 * iv.width});
  }

  // Sharpen the reported margin around the lowest grid value.
  {
    double lo = worst->theta - h;
    double hi = worst->theta + h;
    constexpr double invPhi = 0.61803398874989484820;
    double x1 = hi - invPhi * (hi - lo);
    double x2 = lo + invPhi * (hi - lo);
    double f1 = g(x1).g;
    double f2 = g(x2).g;
    for (int it = 0; it < 40; ++it) {
      if (f1 <= f2) {
        hi = x2, x2 = x1, f2 = f1, x1 = hi - invPhi * (hi - lo), f1 = g(x1).g;
      } else {
        lo = x1, x1 = x2, f1 = f2, x2 = lo + invPhi * (hi - lo), f2 = g(x2).g;
      }
    }
    lowest = std::min({lowest, f1, f2});
  }

  verdict.orthogonal = true;
  verdict.marginal = marginal;
  verdict.margin = w * lowest;
  if (marginal) verdict.note = "marginal: witness function grazes zero";
  verdict.witnesses.reserve(grid.size());
  for (const Probe& p : grid) verdict.witnesses.push_back(witnessOf(p));
  return verdict;
}

}  // namespace numrad

#include <algorithm>
#include <cmath>
#include <vector>

#include "numrad/ortho.hpp"

namespace numrad {

namespace {

constexpr double kInvPhi = 0.61803398874989484820;

class Probe {
 public:
  Probe(const std::function<double(cplx)>& f, const ConvexProbeOptions& o) : f_(f), o_(o) {
    result_.f0 = eval(0.0);
    result_.best = result_.f0;
  }

  double eval(cplx lambda) {
    ++result_.evaluations;
    const double v = f_(lambda);
    if (v < result_.best) {
      result_.best = v;
      result_.bestLambda = lambda;
    }
    return v;
  }

  bool decided() const { return result_.best < result_.f0 - o_.tol; }

  // Smallest value of f found along the ray r e^{i alpha}, r in (0, inf).
  double ray(double alpha) {
    const cplx dir = std::polar(1.0, alpha);
    double r = o_.startRadius;
    double fr = eval(r * dir);
    double bestR = r;
    double bestF = fr;

    if (fr < result_.f0) {
      // Descent already at the start radius: grow while it keeps improving.
      for (int k = 0; k < 60; ++k) {
        const double f2 = eval(2.0 * r * dir);
        if (f2 >= fr) break;
        r *= 2.0;
        fr = f2;
      }
      bestR = r;
      bestF = fr;
    } else {
      double prevR = r;
      double prevF = fr;
      while (r > o_.minRadius) {
        r *= 0.5;
        fr = eval(r * dir);
        if (fr < bestF) bestF = fr, bestR = r;
        if (decided()) return bestF;
        // Convexity: on [0, r] f lies above the chord line through the last two samples.
        const double slope = (prevF - fr) / (prevR - r);
        const double floor = std::min(fr, fr - r * slope);
        if (floor >= result_.f0 - o_.tol) break;
        if (o_.lipschitz > 0.0 && r * o_.lipschitz < o_.tol) break;
        prevR = r;
        prevF = fr;
      }
    }
    if (bestF < result_.f0 && !decided()) {
      // A shallow dip: the minimum along the ray is bracketed by [r/2, 2r].
      double lo = 0.5 * bestR;
      double hi = 2.0 * bestR;
      double x1 = hi - kInvPhi * (hi - lo);
      double x2 = lo + kInvPhi * (hi - lo);
      double f1 = eval(x1 * dir);
      double f2 = eval(x2 * dir);
      for (int it = 0; it < 40 && !decided(); ++it) {
        if (f1 <= f2) {
          hi = x2, x2 = x1, f2 = f1, x1 = hi - kInvPhi * (hi - lo), f1 = eval(x1 * dir);
        } else {
          lo = x1, x1 = x2, f1 = f2, x2 = lo + kInvPhi * (hi - lo), f2 = eval(x2 * dir);
        }
      }
      bestF = std::min({bestF, f1, f2});
    }
    return bestF;
  }

  // Coordinate-free compass search from the best point found so far.
  void polish(int iterations) {
    double step = std::max(std::abs(result_.bestLambda), o_.startRadius) * 0.25;
    const int dirs = o_.realOnly ? 2 : 8;
    for (int it = 0; it < iterations && step > o_.minRadius; ++it) {
      bool moved = false;
      const cplx centre = result_.bestLambda;
      for (int d = 0; d < dirs; ++d) {
        const double a = kTwoPi * d / dirs;
        const double before = result_.best;
        eval(centre + step * std::polar(1.0, a));
        if (result_.best < before) moved = true;
      }
      if (!moved) step *= 0.5;
    }
  }

  ConvexProbeResult result() const { return result_; }

 private:
  const std::function<double(cplx)>& f_;
  const ConvexProbeOptions& o_;
  ConvexProbeResult result_;
};

}  // namespace

ConvexProbeResult minimizeFromOrigin(const std::function<double(cplx)>& f,
                                     const ConvexProbeOptions& options) {
  Probe probe(f, options);
  const int dirs = options.realOnly ? 2 : std::max(options.directions, 1);
  std::vector<double> rayMin(dirs);
  for (int d = 0; d < dirs; ++d) {
    rayMin[d] = probe.ray(kTwoPi * d / dirs);
    if (probe.decided()) break;
  }

  if (!probe.decided() && !options.realOnly) {
    // Golden search over the direction around the most promising ray.
    const int k = static_cast<int>(std::min_element(rayMin.begin(), rayMin.end()) - rayMin.begin());
    const double step = kTwoPi / dirs;
    double lo = kTwoPi * k / dirs - step;
    double hi = kTwoPi * k / dirs + step;
    double a1 = hi - kInvPhi * (hi - lo);
    double a2 = lo + kInvPhi * (hi - lo);
    double f1 = probe.ray(a1);
    double f2 = probe.ray(a2);
    for (int it = 0; it < 12 && !probe.decided(); ++it) {
      if (f1 <= f2) {
        hi = a2, a2 = a1, f2 = f1, a1 = hi - kInvPhi * (hi - lo), f1 = probe.ray(a1);
      } else {
        lo = a1, a1 = a2, f1 = f2, a2 = lo + kInvPhi * (hi - lo), f2 = probe.ray(a2);
      }
    }
  }
  if (!probe.decided()) probe.polish(30);
  if (probe.decided()) probe.polish(10);  // sharpen the counterexample only
  return probe.result();
}

namespace {

void checkPair(const CMatrix& t, const CMatrix& a) {
  if (!t.isSquare() || !a.isSquare()) throw Error(ErrorCode::NotSquare, "square matrices expected");
  if (t.rows() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "T and A differ in size");
}

OrthoVerdict fromProbe(const ConvexProbeResult& r, double tol) {
  OrthoVerdict v;
  v.method = OrthoMethod::definitional;
  v.margin = r.best - r.f0;
  v.orthogonal = !(r.best < r.f0 - tol);
  if (!v.orthogonal) v.counterexample = OrthoCounterexample{std::nullopt, r.bestLambda, r.f0 - r.best};
  return v;
}

// Sweep settings for repeated radius evaluation inside the minimizer.
const SweepOptions kProbeSweep{.grid = 128, .angleWidth = 1e-9, .maxPeaks = 4};

}  // namespace

OrthoVerdict orthoWDefinitional(const CMatrix& t, const CMatrix& a, double orthoTol) {
  checkPair(t, a);
  const bool realField = t.isReal() && a.isReal();
  std::function<double(cplx)> f;
  if (realField) {
    f = [&](cplx lambda) { return realRadius(t + lambda.real() * a).w; };
  } else {
    f = [&](cplx lambda) { return numericalRadius(t + lambda * a, kProbeSweep); };
  }
  const double w0 = f(0.0);
  const double tol = orthoTol >= 0.0 ? orthoTol : defaultOrthoTol(w0);
  if (maxAbs(a) == 0.0) {
    OrthoVerdict v;
    v.method = OrthoMethod::definitional;
    v.orthogonal = true;
    v.note = "A = 0";
    return v;
  }
  ConvexProbeOptions o;
  o.tol = tol;
  o.realOnly = realField;
  o.lipschitz = opNorm(a);
  o.startRadius = (1.0 + w0) / (1.0 + o.lipschitz);
  return fromProbe(minimizeFromOrigin(f, o), tol);
}

OrthoVerdict orthoB(const CMatrix& t, const CMatrix& a, double tol) {
  checkPair(t, a);
  const double n0 = opNorm(t);
  const double eps = tol >= 0.0 ? tol : 1e-7 * (1.0 + n0);
  if (maxAbs(a) == 0.0) {
    OrthoVerdict v;
    v.method = OrthoMethod::definitional;
    v.orthogonal = true;
    v.note = "A = 0";
    return v;
  }
  const bool realField = t.isReal() && a.isReal();
  const std::function<double(cplx)> f = [&](cplx lambda) {
    return realField ? opNorm(t + lambda.real() * a) : opNorm(t + lambda * a);
  };
  ConvexProbeOptions o;
  o.tol = eps;
  o.realOnly = realField;
  o.lipschitz = opNorm(a);
  o.startRadius = (1.0 + n0) / (1.0 + o.lipschitz);
  return fromProbe(minimizeFromOrigin(f, o), eps);
}

}  // namespace numrad

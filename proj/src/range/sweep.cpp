#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>
#include <vector>

#include "internal.hpp"

namespace numrad {

namespace detail {

unsigned workerCount() {
  if (const char* env = std::getenv("NUMRAD_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace detail

namespace {

void evaluateGrid(const std::function<double(double)>& f, const std::vector<double>& angles,
                  std::vector<double>& values) {
  const std::size_t n = angles.size();
  values.assign(n, 0.0);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(detail::workerCount(), n / 128));
  if (workers <= 1) {
    for (std::size_t k = 0; k < n; ++k) values[k] = f(angles[k]);
    return;
  }
  // Strided split; each slot is written by exactly one thread.
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < n; k += workers) values[k] = f(angles[k]);
    });
  }
}

SweepPeak goldenMaximize(const std::function<double(double)>& f, double lo, double hi,
                         SweepPeak seed, double width) {
  constexpr double invPhi = 0.61803398874989484820;
  SweepPeak best = seed;
  double x1 = hi - invPhi * (hi - lo);
  double x2 = lo + invPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  auto note = [&](double x, double v) {
    if (v > best.value) best = {x, v};
  };
  note(x1, f1);
  note(x2, f2);
  while (hi - lo > width) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invPhi * (hi - lo);
      f1 = f(x1);
      note(x1, f1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invPhi * (hi - lo);
      f2 = f(x2);
      note(x2, f2);
    }
  }
  best.theta = wrapAngle(best.theta);
  return best;
}

}  // namespace

SweepResult sweepMaximize(const std::function<double(double)>& f, double lipschitz,
                          const SweepOptions& options) {
  const std::size_t n = std::max<std::size_t>(options.grid, 3);
  const double h = kTwoPi / static_cast<double>(n);

  SweepResult out;
  out.gridAngles.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.gridAngles[k] = h * static_cast<double>(k);
  evaluateGrid(f, out.gridAngles, out.gridValues);

  const auto& v = out.gridValues;
  const auto top = std::max_element(v.begin(), v.end());  // first max: smallest angle
  const double gridMax = *top;
  const double gridMin = *std::min_element(v.begin(), v.end());
  out.best = gridMax;
  out.bestTheta = out.gridAngles[static_cast<std::size_t>(top - v.begin())];

  const double flatness = 8.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(gridMax));
  if (gridMax - gridMin <= flatness) {
    out.peaks.push_back({out.bestTheta, gridMax});
    return out;
  }

  // A grid point can hide a higher value only within lipschitz * h / 2 of itself.
  const double reach = gridMax - 0.5 * lipschitz * h;
  std::vector<std::size_t> candidates;
  for (std::size_t k = 0; k < n; ++k) {
    const double prev = v[(k + n - 1) % n];
    const double next = v[(k + 1) % n];
    if (v[k] >= prev && v[k] >= next && v[k] >= reach) candidates.push_back(k);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });

  std::vector<std::size_t> chosen;
  for (std::size_t k : candidates) {
    if (chosen.size() >= options.maxPeaks) break;
    const bool crowded = std::any_of(chosen.begin(), chosen.end(), [&](std::size_t c) {
      const std::size_t d = k > c ? k - c : c - k;
      return std::min(d, n - d) <= 2;
    });
    if (!crowded) chosen.push_back(k);
  }

  for (std::size_t k : chosen) {
    const double centre = out.gridAngles[k];
    const SweepPeak peak =
        goldenMaximize(f, centre - h, centre + h, {centre, v[k]}, options.angleWidth);
    out.peaks.push_back(peak);
  }
  std::stable_sort(out.peaks.begin(), out.peaks.end(), [](const SweepPeak& a, const SweepPeak& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.theta < b.theta;
  });
  if (!out.peaks.empty() && out.peaks.front().value > out.best) {
    out.best = out.peaks.front().value;
    out.bestTheta = out.peaks.front().theta;
  }
  return out;
}

}  // namespace numrad

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>

namespace bohrlab::numeric {

/// Sum_{n > N} y^n for 0 <= y < 1.
[[nodiscard]] inline double geometric_tail(double y, std::size_t N) {
  if (y <= 0.0) return 0.0;
  if (y >= 1.0) return std::numeric_limits<double>::infinity();
  return std::pow(y, static_cast<double>(N + 1)) / (1.0 - y);
}

/// Sum_{n > N} n y^n for 0 <= y < 1.
[[nodiscard]] inline double weighted_geometric_tail(double y, std::size_t N) {
  if (y <= 0.0) return 0.0;
  if (y >= 1.0) return std::numeric_limits<double>::infinity();
  const double n = static_cast<double>(N);
  return std::pow(y, n + 1.0) * ((n + 1.0) - n * y) / ((1.0 - y) * (1.0 - y));
}

struct Extremum {
  double x;
  double value;
};

/// Golden-section search for a maximum of a unimodal f on [lo, hi].
template <class F>
[[nodiscard]] Extremum golden_max(F&& f, double lo, double hi, double xtol = 1e-12) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > xtol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 >= f2 ? Extremum{x1, f1} : Extremum{x2, f2};
}

/// Maximum over [lo, hi]: uniform grid scan, then golden-section refinement
/// in the cell pair around the best grid point. Endpoints are always sampled.
template <class F>
[[nodiscard]] Extremum grid_golden_max(F&& f, double lo, double hi, std::size_t grid,
                                       double xtol = 1e-12) {
  if (grid < 3) grid = 3;
  const double step = (hi - lo) / static_cast<double>(grid - 1);
  Extremum best{lo, -std::numeric_limits<double>::infinity()};
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < grid; ++i) {
    const double x = (i + 1 == grid) ? hi : lo + step * static_cast<double>(i);
    const double v = f(x);
    if (v > best.value || (std::isnan(best.value) && !std::isnan(v))) {
      best = {x, v};
      best_i = i;
    }
  }
  if (!std::isfinite(best.value)) return best;
  const double a = best_i == 0 ? lo : lo + step * static_cast<double>(best_i - 1);
  const double b = best_i + 1 >= grid ? hi : std::min(hi, lo + step * static_cast<double>(best_i + 1));
  const Extremum refined = golden_max(f, a, b, xtol);
  return refined.value > best.value ? refined : best;
}

}  // namespace bohrlab::numeric

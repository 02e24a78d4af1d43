#pragma once

#include <array>
#include <cstddef>

namespace vines {

// Composite 8-point Gauss-Legendre rule on [a, b] split into `intervals`
// panels. 250 panels = 2000 Gauss points, plenty for products of beam modes.
template <class Fn>
double gauss_legendre(Fn&& fn, double a, double b, int intervals) {
  // Nodes/weights for the 8-point rule on [-1, 1].
  static constexpr std::array<double, 4> x = {
      0.1834346424956498, 0.5255324099163290,
      0.7966664774136267, 0.9602898564975363};
  static constexpr std::array<double, 4> w = {
      0.3626837833783620, 0.3137066458778873,
      0.2223810344533745, 0.1012285362903763};
  const double h = (b - a) / intervals;
  double sum = 0.0;
  for (int p = 0; p < intervals; ++p) {
    const double mid = a + (p + 0.5) * h;
    const double half = 0.5 * h;
    double panel = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
      panel += w[j] * (fn(mid - half * x[j]) + fn(mid + half * x[j]));
    }
    sum += panel * half;
  }
  return sum;
}

}  // namespace vines

#pragma once

#include <cmath>
#include <utility>

#include "promax/error.hpp"

namespace promax {

// Golden-section search for the maximum of a unimodal objective on [lo, hi].
// Shrinks the bracket until it is narrower than tol and returns the best
// probed point together with its objective value. With tol = 1e-8 on a unit
// interval this takes under 40 iterations.
template <typename F>
std::pair<double, double> golden_section_max(F&& objective, double lo,
                                             double hi, double tol = 1e-8) {
  if (!(lo < hi)) throw InputError("golden_section_max: requires lo < hi");
  if (!(tol > 0.0)) throw InputError("golden_section_max: requires tol > 0");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - (b - a) * inv_phi;
  double d = a + (b - a) * inv_phi;
  double fc = objective(c);
  double fd = objective(d);
  while (b - a >= tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = objective(d);
    }
  }
  // c < d, so ties resolve to the smaller point.
  return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace promax

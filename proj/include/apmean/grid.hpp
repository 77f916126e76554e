#ifndef APMEAN_GRID_HPP
#define APMEAN_GRID_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>

namespace apmean {

using Complex = std::complex<double>;

/// Uniform sampling description: origin, step, count.
struct Grid {
  double t0 = 0.0;
  double dt = 1.0;
  std::size_t n = 1;

  Grid() = default;
  Grid(double t0_, double dt_, std::size_t n_) : t0(t0_), dt(dt_), n(n_) {
    if (dt <= 0.0) throw std::invalid_argument("grid step must be positive");
    if (n < 1) throw std::invalid_argument("grid needs at least one sample");
  }

  double point(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
  double end() const { return point(n - 1); }
};

/// Closed evaluation window [a, b].
struct Window {
  double a = 0.0;
  double b = 0.0;

  Window() = default;
  Window(double a_, double b_) : a(a_), b(b_) {
    if (!(a <= b)) throw std::invalid_argument("window must satisfy a <= b");
  }

  double length() const { return b - a; }
};

}  // namespace apmean

#endif

#include "apmean/distributions.hpp"

#include <array>
#include <cmath>
#include <map>
#include <sstream>

#include "apmean/ergodic.hpp"
#include "apmean/mean_ops.hpp"

namespace apmean {

namespace {

// R_k as a polynomial in u and v = 1/(1-u²): map (i, j) -> coefficient of u^i v^j.
using RPoly = std::map<std::pair<int, int>, double>;

// d/du (u^i v^j) = i u^{i-1} v^j + 2j u^{i+1} v^{j+1} (since v' = 2u v²), and
// the chain-rule term from exp(-v) contributes -v' R = -2u v² R.
RPoly next_rpoly(const RPoly& r) {
  RPoly out;
  auto add = [&out](int i, int j, double c) {
    if (c != 0.0) out[{i, j}] += c;
  };
  for (const auto& [key, c] : r) {
    auto [i, j] = key;
    if (i > 0) add(i - 1, j, c * i);
    if (j > 0) add(i + 1, j + 1, c * 2.0 * j);
    add(i + 1, j + 2, -2.0 * c);
  }
  return out;
}

const std::array<RPoly, kMaxDistroOrder + 1>& rpolys() {
  static const auto table = [] {
    std::array<RPoly, kMaxDistroOrder + 1> t;
    t[0] = {{{0, 0}, 1.0}};
    for (int k = 1; k <= kMaxDistroOrder; ++k) t[k] = next_rpoly(t[k - 1]);
    return t;
  }();
  return table;
}

double eval_rpoly(const RPoly& r, double u, double v) {
  double acc = 0.0;
  for (const auto& [key, c] : r) {
    auto [i, j] = key;
    acc += c * std::pow(u, i) * std::pow(v, j);
  }
  return acc;
}

const Complex kI(0.0, 1.0);

}  // namespace

TestFunction::TestFunction(double center, double radius, Complex amplitude)
    : center_(center), radius_(radius), amplitude_(amplitude) {
  if (!(radius > 0.0)) throw std::invalid_argument("test function radius must be positive");
}

Complex TestFunction::eval(double x, int order) const {
  if (order < 0 || order > kMaxDistroOrder) throw OrderTooHigh(order, kMaxDistroOrder);
  double u = (x - center_) / radius_;
  if (std::abs(u) >= 1.0) return Complex(0.0, 0.0);
  double v = 1.0 / (1.0 - u * u);
  double f = std::exp(-v);
  double rk = eval_rpoly(rpolys()[static_cast<std::size_t>(order)], u, v);
  return amplitude_ * (rk * f / std::pow(radius_, order));
}

Complex TestFunction::fourier(double omega, int order, int panels) const {
  double a = support_lo(), b = support_hi();
  double h = (b - a) / panels;
  Complex acc(0.0, 0.0);  // endpoints vanish identically (bump flatness)
  for (int i = 1; i < panels; ++i) {
    double x = a + i * h;
    acc += eval(x, order) * Complex(std::cos(omega * x), -std::sin(omega * x));
  }
  return acc * h;
}

Complex TestFunction::integral(int panels) const { return fourier(0.0, 0, panels); }

Signal convolve(const DistroRep& T, const TestFunction& phi, int max_order, int panels) {
  if (max_order > kMaxDistroOrder) max_order = kMaxDistroOrder;
  std::vector<Signal> parts;
  for (const auto& term : T.terms) {
    if (term.order < 0 || term.order > max_order) throw OrderTooHigh(term.order, max_order);
    if (auto poly = term.base.as_trig_poly()) {
      // (γ_ω * g)(t) = γ_ω(t)·ĝ(ω) holds exactly, panel sum included, because
      // γ_ω(t−u) = γ_ω(t)γ_ω(−u) factors out of the quadrature.
      TrigPolyData out;
      for (const auto& tp : poly->terms)
        out.add_term(tp.omega, tp.coeff * phi.fourier(tp.omega, term.order, panels));
      out.normalize();
      parts.push_back(Signal::trig_poly(std::move(out)));
    } else {
      Signal base = term.base;
      int order = term.order;
      double lo = phi.support_lo(), hi = phi.support_hi();
      double h = (hi - lo) / panels;
      parts.push_back(Signal::from_function([base, phi, order, lo, h, panels](double t) {
        Complex acc(0.0, 0.0);
        for (int i = 1; i < panels; ++i) {
          double u = lo + i * h;
          acc += base.eval(t - u) * phi.eval(u, order);
        }
        return acc * h;
      }));
    }
  }
  return Signal::sum(std::move(parts));
}

DistroRep distro_mean(const DistroRep& T, double h, const QuadratureConfig& q) {
  if (!(h > 0.0)) throw NonPositiveH(h);
  DistroRep out;
  for (const auto& term : T.terms) out.terms.push_back({mean_M(term.base, h, q), term.order});
  return out;
}

DistroRep distro_derivative(const DistroRep& T, int max_order) {
  if (max_order > kMaxDistroOrder) max_order = kMaxDistroOrder;
  DistroRep out;
  for (const auto& term : T.terms) {
    if (term.order + 1 > max_order) throw OrderTooHigh(term.order + 1, max_order);
    out.terms.push_back({term.base, term.order + 1});
  }
  return out;
}

Complex distro_fourier_coeff(const DistroRep& T, double omega, const TestFunction& phi,
                             double T_horizon, const QuadratureConfig& q) {
  Complex phat = phi.fourier(omega);
  if (std::abs(phat) < 1e-6) throw KernelZeroAtOmega(omega);
  Complex c = bohr_coefficient(convolve(T, phi), omega, T_horizon, 0.0, q);
  return c / phat;
}

std::string distro_rep_json(const DistroRep& T) {
  std::ostringstream out;
  out << '[';
  for (std::size_t j = 0; j < T.terms.size(); ++j) {
    if (j) out << ',';
    std::string desc = "signal";
    if (auto poly = T.terms[j].base.as_trig_poly()) {
      std::ostringstream d;
      d.precision(15);
      d << "trigpoly(";
      for (std::size_t k = 0; k < poly->terms.size(); ++k) {
        if (k) d << ';';
        d << poly->terms[k].omega << ':' << poly->terms[k].coeff.real() << '+'
          << poly->terms[k].coeff.imag() << 'i';
      }
      d << ')';
      desc = d.str();
    }
    out << "{\"base\":\"" << desc << "\",\"order\":" << T.terms[j].order << '}';
  }
  out << ']';
  return out.str();
}

}  // namespace apmean

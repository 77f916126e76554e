#include "apmean/mean_ops.hpp"

#include <cmath>
#include <memory>

namespace apmean {

namespace {

const Complex kI(0.0, 1.0);

class MeanNode final : public SignalNode {
 public:
  MeanNode(Signal base, double h, QuadratureConfig q)
      : base_(base), h_(h), cache_(std::make_shared<IntegralCache>(base, q)) {}

  Complex eval(double t) const override { return cache_->between(t, t + h_) / h_; }

 private:
  Signal base_;
  double h_;
  IntegralCachePtr cache_;
};

class IntegralNode final : public SignalNode {
 public:
  IntegralNode(Signal base, double base_point, QuadratureConfig q)
      : base_(base),
        base_point_(base_point),
        cache_(std::make_shared<IntegralCache>(base, q, base_point)) {}

  Complex eval(double t) const override { return cache_->integral(t); }

  // ∫_0^t of P s is not provided; iterated integrals stack numerically.
  std::optional<TrigPolyData> flatten() const override {
    auto poly = base_.as_trig_poly();
    if (!poly) return std::nullopt;
    TrigPolyData out;
    Complex constant(0.0, 0.0);
    for (const auto& term : poly->terms) {
      if (term.omega == 0.0) {
        if (term.coeff == Complex(0.0, 0.0)) continue;
        return std::nullopt;  // produces a linear ramp, not a trig polynomial
      }
      Complex a = term.coeff / (kI * term.omega);
      out.add_term(term.omega, a);
      constant -= a * Complex(std::cos(term.omega * base_point_),
                              std::sin(term.omega * base_point_));
    }
    out.add_term(0.0, constant);
    out.normalize();
    return out;
  }

 private:
  Signal base_;
  double base_point_;
  IntegralCachePtr cache_;
};

}  // namespace

Complex mean_factor(double omega, double h) {
  if (omega == 0.0) return Complex(1.0, 0.0);
  double x = omega * h;
  return (Complex(std::cos(x), std::sin(x)) - 1.0) / (kI * x);
}

Signal mean_M(const Signal& s, double h, const QuadratureConfig& q) {
  if (!(h > 0.0)) throw NonPositiveH(h);
  if (auto poly = s.as_trig_poly()) {
    TrigPolyData out = *poly;
    for (auto& term : out.terms) term.coeff *= mean_factor(term.omega, h);
    out.normalize();
    return Signal::trig_poly(std::move(out));
  }
  return Signal(std::make_shared<MeanNode>(s, h, q));
}

Signal iterated_mean(const Signal& s, const std::vector<double>& hs,
                     const QuadratureConfig& q) {
  Signal acc = s;
  for (double h : hs) acc = mean_M(acc, h, q);
  return acc;
}

Signal difference(const Signal& s, double h) { return s.shifted(h) - s; }

Signal indefinite_integral(const Signal& s, double base, const QuadratureConfig& q) {
  return Signal(std::make_shared<IntegralNode>(s, base, q));
}

}  // namespace apmean

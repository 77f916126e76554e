#include "apmean/signal.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace apmean {

namespace {

const Complex kI(0.0, 1.0);

Complex cis(double x) { return Complex(std::cos(x), std::sin(x)); }

}  // namespace

// ---------------------------------------------------------------------------
// TrigPolyData

Complex TrigPolyData::eval(double t) const {
  Complex acc(0.0, 0.0);
  for (const auto& term : terms) acc += term.coeff * cis(term.omega * t);
  return acc;
}

Complex TrigPolyData::coeff_at(double omega, double tol) const {
  for (const auto& term : terms)
    if (std::abs(term.omega - omega) <= tol) return term.coeff;
  return Complex(0.0, 0.0);
}

void TrigPolyData::add_term(double omega, Complex a) { terms.push_back({omega, a}); }

void TrigPolyData::normalize() {
  std::sort(terms.begin(), terms.end(),
            [](const TrigTerm& x, const TrigTerm& y) { return x.omega < y.omega; });
  std::vector<TrigTerm> merged;
  for (const auto& term : terms) {
    if (!merged.empty() && merged.back().omega == term.omega)
      merged.back().coeff += term.coeff;
    else
      merged.push_back(term);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const TrigTerm& x) { return x.coeff == Complex(0.0, 0.0); }),
               merged.end());
  terms = std::move(merged);
}

// ---------------------------------------------------------------------------
// Concrete nodes

namespace {

class TrigPolyNode final : public SignalNode {
 public:
  explicit TrigPolyNode(TrigPolyData data) : data_(std::move(data)) { data_.normalize(); }

  Complex eval(double t) const override { return data_.eval(t); }

  std::optional<TrigPolyData> flatten() const override { return data_; }

  std::optional<Complex> antiderivative(double t) const override {
    Complex acc(0.0, 0.0);
    for (const auto& term : data_.terms) {
      if (term.omega == 0.0)
        acc += term.coeff * t;
      else
        acc += term.coeff * (cis(term.omega * t) - 1.0) / (kI * term.omega);
    }
    return acc;
  }
  bool has_antiderivative() const override { return true; }

 private:
  TrigPolyData data_;
};

class ChirpNode final : public SignalNode {
 public:
  explicit ChirpNode(Complex c) : c_(c) {}
  Complex eval(double t) const override { return c_ * cis(t * t); }

 private:
  Complex c_;
};

class LogOscNode final : public SignalNode {
 public:
  Complex eval(double t) const override {
    if (t < 0.0) return Complex(0.0, 0.0);
    return Complex(std::sin(std::log1p(t)) / (1.0 + t), 0.0);
  }
};

class BlockTenNode final : public SignalNode {
 public:
  explicit BlockTenNode(double ramp) : ramp_(ramp) {
    if (!(ramp > 0.0 && ramp <= 2.0))
      throw std::invalid_argument("BlockTen ramp width must lie in (0, 2]");
  }

  // Blocks I_n = [10^n + 1, 10^{n+1} - 1]; value 1 on even n, 0 on odd n,
  // joined by linear ramps of width `ramp` centered on the length-2 gaps at
  // 10^m (m >= 1).  Extended left of I_0 by its value 1 on [0, 2]; 0 for t<0.
  Complex eval(double t) const override {
    if (t < 0.0) return Complex(0.0, 0.0);
    const double half = ramp_ / 2.0;
    double boundary = 10.0;  // gap center between block m-1 and block m
    for (int m = 1; m <= 400; ++m) {
      if (t < boundary - half) return Complex(value(m - 1), 0.0);
      if (t <= boundary + half) {
        double lo = value(m - 1), hi = value(m);
        double frac = (t - (boundary - half)) / ramp_;
        return Complex(lo + (hi - lo) * frac, 0.0);
      }
      boundary *= 10.0;
    }
    throw OutOfDomain("BlockTen evaluated beyond representable block range");
  }

 private:
  static double value(int m) { return (m % 2 == 0) ? 1.0 : 0.0; }
  double ramp_;
};

class TabulatedNode final : public SignalNode {
 public:
  TabulatedNode(Grid g, std::vector<Complex> values) : grid_(g), values_(std::move(values)) {
    if (values_.size() != grid_.n)
      throw std::invalid_argument("tabulated value count does not match grid");
    if (grid_.n < 1) throw std::invalid_argument("tabulated grid must be nonempty");
    // exact prefix integral of the linear interpolant (trapezoid is exact here)
    prefix_.resize(grid_.n, Complex(0.0, 0.0));
    for (std::size_t i = 1; i < grid_.n; ++i)
      prefix_[i] = prefix_[i - 1] + 0.5 * grid_.dt * (values_[i - 1] + values_[i]);
  }

  Complex eval(double t) const override {
    const double eps = 1e-9 * grid_.dt;
    if (t < grid_.t0 - eps || t > grid_.end() + eps)
      throw OutOfDomain("tabulated evaluation outside grid span");
    double pos = (t - grid_.t0) / grid_.dt;
    if (pos <= 0.0) return values_.front();
    std::size_t i = static_cast<std::size_t>(pos);
    if (i >= grid_.n - 1) return values_.back();
    double frac = pos - static_cast<double>(i);
    return values_[i] + (values_[i + 1] - values_[i]) * frac;
  }

  // ∫_0^t of the interpolant; requires 0 and t inside the grid span.
  std::optional<Complex> antiderivative(double t) const override {
    return integral_from_origin(t) - integral_from_origin(0.0);
  }
  bool has_antiderivative() const override {
    return grid_.t0 <= 0.0 && grid_.end() >= 0.0;
  }

  const Grid& grid() const { return grid_; }
  const std::vector<Complex>& values() const { return values_; }

 private:
  Complex integral_from_origin(double t) const {
    const double eps = 1e-9 * grid_.dt;
    if (t < grid_.t0 - eps || t > grid_.end() + eps)
      throw OutOfDomain("tabulated integration outside grid span");
    double pos = std::clamp((t - grid_.t0) / grid_.dt, 0.0, double(grid_.n - 1));
    std::size_t i = static_cast<std::size_t>(pos);
    if (i >= grid_.n - 1) return prefix_.back();
    double frac = pos - static_cast<double>(i);
    Complex vt = values_[i] + (values_[i + 1] - values_[i]) * frac;
    return prefix_[i] + 0.5 * (frac * grid_.dt) * (values_[i] + vt);
  }

  Grid grid_;
  std::vector<Complex> values_;
  std::vector<Complex> prefix_;
};

class ShiftedNode final : public SignalNode {
 public:
  ShiftedNode(NodePtr inner, double s) : inner_(std::move(inner)), s_(s) {}

  Complex eval(double t) const override { return inner_->eval(t + s_); }

  std::optional<TrigPolyData> flatten() const override {
    auto base = inner_->flatten();
    if (!base) return std::nullopt;
    for (auto& term : base->terms) term.coeff *= cis(term.omega * s_);
    return base;
  }

  std::optional<Complex> antiderivative(double t) const override {
    auto a = inner_->antiderivative(t + s_);
    auto b = inner_->antiderivative(s_);
    if (!a || !b) return std::nullopt;
    return *a - *b;
  }
  bool has_antiderivative() const override { return inner_->has_antiderivative(); }

  const NodePtr& inner() const { return inner_; }
  double shift() const { return s_; }

 private:
  NodePtr inner_;
  double s_;
};

class ModulatedNode final : public SignalNode {
 public:
  ModulatedNode(NodePtr inner, double omega) : inner_(std::move(inner)), omega_(omega) {}

  Complex eval(double t) const override { return cis(omega_ * t) * inner_->eval(t); }

  std::optional<TrigPolyData> flatten() const override {
    auto base = inner_->flatten();
    if (!base) return std::nullopt;
    for (auto& term : base->terms) term.omega += omega_;
    base->normalize();
    return base;
  }

 private:
  NodePtr inner_;
  double omega_;
};

class ScaledNode final : public SignalNode {
 public:
  ScaledNode(NodePtr inner, Complex c) : inner_(std::move(inner)), c_(c) {}

  Complex eval(double t) const override { return c_ * inner_->eval(t); }

  std::optional<TrigPolyData> flatten() const override {
    auto base = inner_->flatten();
    if (!base) return std::nullopt;
    for (auto& term : base->terms) term.coeff *= c_;
    base->normalize();
    return base;
  }

  std::optional<Complex> antiderivative(double t) const override {
    auto a = inner_->antiderivative(t);
    if (!a) return std::nullopt;
    return c_ * *a;
  }
  bool has_antiderivative() const override { return inner_->has_antiderivative(); }

 private:
  NodePtr inner_;
  Complex c_;
};

class SumNode final : public SignalNode {
 public:
  explicit SumNode(std::vector<NodePtr> parts) : parts_(std::move(parts)) {}

  Complex eval(double t) const override {
    Complex acc(0.0, 0.0);
    for (const auto& p : parts_) acc += p->eval(t);
    return acc;
  }

  std::optional<TrigPolyData> flatten() const override {
    TrigPolyData out;
    for (const auto& p : parts_) {
      auto part = p->flatten();
      if (!part) return std::nullopt;
      for (auto& term : part->terms) out.terms.push_back(term);
    }
    out.normalize();
    return out;
  }

  std::optional<Complex> antiderivative(double t) const override {
    Complex acc(0.0, 0.0);
    for (const auto& p : parts_) {
      auto a = p->antiderivative(t);
      if (!a) return std::nullopt;
      acc += *a;
    }
    return acc;
  }
  bool has_antiderivative() const override {
    for (const auto& p : parts_)
      if (!p->has_antiderivative()) return false;
    return true;
  }

 private:
  std::vector<NodePtr> parts_;
};

class OpaqueNode final : public SignalNode {
 public:
  explicit OpaqueNode(NodePtr inner) : inner_(std::move(inner)) {}
  Complex eval(double t) const override { return inner_->eval(t); }

 private:
  NodePtr inner_;
};

class FunctionNode final : public SignalNode {
 public:
  FunctionNode(std::function<Complex(double)> f, std::function<Complex(double)> anti)
      : f_(std::move(f)), anti_(std::move(anti)) {}

  Complex eval(double t) const override { return f_(t); }

  std::optional<Complex> antiderivative(double t) const override {
    if (!anti_) return std::nullopt;
    return anti_(t);
  }
  bool has_antiderivative() const override { return static_cast<bool>(anti_); }

 private:
  std::function<Complex(double)> f_;
  std::function<Complex(double)> anti_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Signal

Complex Signal::eval(double t) const {
  if (!node_) return Complex(0.0, 0.0);
  return node_->eval(t);
}

Signal Signal::shifted(double s) const {
  if (!node_ || s == 0.0) return *this;
  return Signal(std::make_shared<ShiftedNode>(node_, s));
}

Signal Signal::modulated(double omega) const {
  if (!node_ || omega == 0.0) return *this;
  return Signal(std::make_shared<ModulatedNode>(node_, omega));
}

Signal Signal::scaled(Complex c) const {
  if (!node_) return *this;
  if (c == Complex(0.0, 0.0)) return Signal::zero();
  return Signal(std::make_shared<ScaledNode>(node_, c));
}

Signal Signal::opaque() const {
  if (!node_) return *this;
  return Signal(std::make_shared<OpaqueNode>(node_));
}

std::optional<TrigPolyData> Signal::as_trig_poly() const {
  if (!node_) return TrigPolyData{};
  return node_->flatten();
}

std::optional<Complex> Signal::exact_integral(double t) const {
  if (!node_) return Complex(0.0, 0.0);
  return node_->antiderivative(t);
}

bool Signal::has_exact_integral() const {
  if (!node_) return true;
  return node_->has_antiderivative();
}

std::vector<Complex> Signal::sample(const Grid& g) const {
  std::vector<Complex> out(g.n);
  for (std::size_t i = 0; i < g.n; ++i) out[i] = eval(g.point(i));
  return out;
}

Signal Signal::tabulate(const Grid& g) const { return Signal::tabulated(g, sample(g)); }

Signal Signal::zero() { return Signal(); }

Signal Signal::constant(Complex c) {
  TrigPolyData d;
  d.add_term(0.0, c);
  return trig_poly(std::move(d));
}

Signal Signal::trig_poly(const std::vector<std::pair<double, Complex>>& terms) {
  TrigPolyData d;
  for (const auto& [omega, a] : terms) d.add_term(omega, a);
  return trig_poly(std::move(d));
}

Signal Signal::trig_poly(TrigPolyData data) {
  return Signal(std::make_shared<TrigPolyNode>(std::move(data)));
}

Signal Signal::character(double omega) {
  TrigPolyData d;
  d.add_term(omega, Complex(1.0, 0.0));
  return trig_poly(std::move(d));
}

Signal Signal::chirp(Complex c) { return Signal(std::make_shared<ChirpNode>(c)); }

Signal Signal::log_osc() { return Signal(std::make_shared<LogOscNode>()); }

Signal Signal::block_ten(double ramp) { return Signal(std::make_shared<BlockTenNode>(ramp)); }

Signal Signal::tabulated(Grid g, std::vector<Complex> values) {
  return Signal(std::make_shared<TabulatedNode>(g, std::move(values)));
}

Signal Signal::sum(std::vector<Signal> parts) {
  std::vector<NodePtr> nodes;
  nodes.reserve(parts.size());
  for (auto& p : parts)
    if (p.node()) nodes.push_back(p.node());
  if (nodes.empty()) return Signal::zero();
  if (nodes.size() == 1) return Signal(nodes.front());
  return Signal(std::make_shared<SumNode>(std::move(nodes)));
}

Signal Signal::from_function(std::function<Complex(double)> f,
                             std::function<Complex(double)> antiderivative) {
  return Signal(std::make_shared<FunctionNode>(std::move(f), std::move(antiderivative)));
}

// ---------------------------------------------------------------------------
// CSV

void write_csv(std::ostream& out, const Grid& g, const std::vector<Complex>& values) {
  if (values.size() != g.n) throw std::invalid_argument("value count does not match grid");
  out << "t,re,im\n";
  out << std::setprecision(17);
  for (std::size_t i = 0; i < g.n; ++i) {
    out << g.point(i) << ',' << values[i].real() << ',' << values[i].imag() << '\n';
  }
}

void write_csv(const std::string& path, const Grid& g, const std::vector<Complex>& values) {
  std::ofstream out(path);
  if (!out) throw IOError("cannot open for writing: " + path);
  write_csv(out, g, values);
  if (!out) throw IOError("write failed: " + path);
}

Signal read_csv(std::istream& in) {
  std::string line;
  long lineno = 0;
  if (!std::getline(in, line)) throw ParseError("empty CSV", 1);
  ++lineno;
  // tolerate a UTF-8 BOM and trailing CR
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,re,im") throw ParseError("expected header 't,re,im'", 1);

  std::vector<double> ts;
  std::vector<Complex> values;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    double t, re, im;
    char c1, c2;
    if (!(row >> t >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',')
      throw ParseError("malformed CSV row", lineno);
    std::string rest;
    if (row >> rest) throw ParseError("trailing junk in CSV row", lineno);
    ts.push_back(t);
    values.push_back(Complex(re, im));
  }
  if (ts.size() < 2) throw ParseError("need at least two samples", lineno);
  double dt = ts[1] - ts[0];
  if (!(dt > 0.0)) throw ParseError("time column must be strictly increasing", 3);
  for (std::size_t i = 1; i < ts.size(); ++i) {
    double expected = ts[0] + static_cast<double>(i) * dt;
    if (std::abs(ts[i] - expected) > 1e-6 * std::max(1.0, std::abs(expected)))
      throw ParseError("time column is not a uniform grid", static_cast<long>(i + 2));
  }
  return Signal::tabulated(Grid(ts[0], dt, ts.size()), std::move(values));
}

Signal read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open for reading: " + path);
  return read_csv(in);
}

}  // namespace apmean

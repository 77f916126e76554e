#ifndef APMEAN_SIGNAL_HPP
#define APMEAN_SIGNAL_HPP

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "apmean/errors.hpp"
#include "apmean/grid.hpp"

namespace apmean {

/// One term a·e^{iωt} of a trigonometric polynomial.
struct TrigTerm {
  double omega = 0.0;
  Complex coeff;
};

/// Frequency-sorted, merged trig polynomial data.
struct TrigPolyData {
  std::vector<TrigTerm> terms;

  Complex eval(double t) const;
  Complex coeff_at(double omega, double tol = 1e-12) const;
  void add_term(double omega, Complex a);
  void normalize();  // sort by omega, merge equal frequencies, drop exact zeros
};

class SignalNode;
using NodePtr = std::shared_ptr<const SignalNode>;

/// Immutable complex-valued function of real time.  Value semantics over a
/// shared expression tree; cheap to copy.
class Signal {
 public:
  Signal() = default;  // zero signal
  explicit Signal(NodePtr node) : node_(std::move(node)) {}

  Complex eval(double t) const;

  Signal shifted(double s) const;      // t -> eval(t + s)
  Signal modulated(double omega) const;  // t -> e^{iωt}·eval(t)
  Signal scaled(Complex c) const;
  /// Blocks closed-form shortcuts; evaluation only.  Used to force the
  /// quadrature path in tests and verification suites.
  Signal opaque() const;

  /// Flatten the tree into trig-polynomial data if every node permits it.
  std::optional<TrigPolyData> as_trig_poly() const;

  /// Exact ∫_0^t eval(u) du if a closed form is available through the tree.
  std::optional<Complex> exact_integral(double t) const;
  bool has_exact_integral() const;

  std::vector<Complex> sample(const Grid& g) const;
  Signal tabulate(const Grid& g) const;

  const NodePtr& node() const { return node_; }

  // --- constructors ---
  static Signal zero();
  static Signal constant(Complex c);
  static Signal trig_poly(const std::vector<std::pair<double, Complex>>& terms);
  static Signal trig_poly(TrigPolyData data);
  static Signal character(double omega);  // γ_ω
  static Signal chirp(Complex c);         // c·e^{it²}
  static Signal log_osc();                // sin(log(1+t))/(1+t) for t ≥ 0, else 0
  static Signal block_ten(double ramp = 1.0);
  static Signal tabulated(Grid g, std::vector<Complex> values);
  static Signal sum(std::vector<Signal> parts);
  /// Arbitrary analytic definition, optionally with a closed-form
  /// antiderivative F(t) = ∫_0^t f (used by generators with oscillation far
  /// above any practical quadrature lattice).
  static Signal from_function(std::function<Complex(double)> f,
                              std::function<Complex(double)> antiderivative = nullptr);

 private:
  NodePtr node_;
};

inline Signal operator+(const Signal& a, const Signal& b) { return Signal::sum({a, b}); }
inline Signal operator-(const Signal& a, const Signal& b) {
  return Signal::sum({a, b.scaled(Complex(-1.0, 0.0))});
}
inline Signal operator*(Complex c, const Signal& s) { return s.scaled(c); }

/// Node interface.  Subclasses outside signal.cpp are allowed (the mean
/// operator and convolution nodes live in their own modules).
class SignalNode {
 public:
  virtual ~SignalNode() = default;

  virtual Complex eval(double t) const = 0;

  /// Closed trig-poly form of this subtree, if exact.
  virtual std::optional<TrigPolyData> flatten() const { return std::nullopt; }

  /// Closed-form ∫_0^t of this subtree, if available without flattening.
  virtual std::optional<Complex> antiderivative(double /*t*/) const { return std::nullopt; }
  virtual bool has_antiderivative() const { return false; }
};

/// CSV I/O for tabulated signals; header exactly `t,re,im`.
void write_csv(const std::string& path, const Grid& g, const std::vector<Complex>& values);
void write_csv(std::ostream& out, const Grid& g, const std::vector<Complex>& values);
/// Parses a uniform-grid CSV; throws ParseError (with line number) on
/// malformed rows and IOError on unreadable files.
Signal read_csv(const std::string& path);
Signal read_csv(std::istream& in);

}  // namespace apmean

#endif

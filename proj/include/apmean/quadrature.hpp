#ifndef APMEAN_QUADRATURE_HPP
#define APMEAN_QUADRATURE_HPP

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "apmean/signal.hpp"

namespace apmean {

/// Composite-trapezoid quadrature parameters.
struct QuadratureConfig {
  int panels_per_unit = 64;

  QuadratureConfig() = default;
  explicit QuadratureConfig(int ppu) : panels_per_unit(ppu) {
    if (ppu < 2) throw std::invalid_argument("panels_per_unit must be >= 2");
  }
};

/// Shared prefix-integral of a signal from an anchor point.  Uses the exact
/// antiderivative when the signal tree provides one; otherwise accumulates
/// composite-trapezoid sums over a global lattice of `panels_per_unit` panels
/// per unit, cached in unit-length chunks in both directions.
///
/// integral(t) returns ∫_anchor^t s.  Lazily grown; growth is serialized with
/// a mutex so cached signals remain safe to share between workers.
class IntegralCache {
 public:
  IntegralCache(Signal s, QuadratureConfig q, double anchor = 0.0);

  Complex integral(double t) const;
  /// ∫_a^b s via the shared lattice.
  Complex between(double a, double b) const { return integral(b) - integral(a); }

  bool exact() const { return exact_; }
  const QuadratureConfig& config() const { return config_; }
  double anchor() const { return anchor_; }

 private:
  Complex lattice_integral(double t) const;  // numeric path, t relative to anchor
  void ensure_forward(std::size_t chunks) const;
  void ensure_backward(std::size_t chunks) const;
  Complex chunk_part(double lo, double hi) const;  // trapezoid inside one chunk
  // node-resolution prefix sums of one chunk, kept in a small LRU so dense
  // in-order queries (nested means sweeping t upward) stay O(1) amortized
  using FinePrefix = std::shared_ptr<const std::vector<Complex>>;
  FinePrefix fine_prefix(long chunk) const;

  Signal signal_;
  QuadratureConfig config_;
  double anchor_;
  bool exact_;
  mutable std::mutex mutex_;
  mutable std::vector<Complex> forward_;   // forward_[k] = ∫_anchor^{anchor+k+1}
  mutable std::vector<Complex> backward_;  // backward_[k] = ∫_{anchor-k-1}^anchor
  mutable std::map<long, FinePrefix> fine_;
  mutable std::deque<long> fine_order_;
};

using IntegralCachePtr = std::shared_ptr<IntegralCache>;

/// One-off trapezoid integral ∫_a^b f with a fixed panel count.
Complex trapezoid(const std::function<Complex(double)>& f, double a, double b, int panels);

}  // namespace apmean

#endif

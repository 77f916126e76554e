#include "apmean/spectrum.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace apmean {

namespace {

double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

Complex cis(double x) { return Complex(std::cos(x), std::sin(x)); }

}  // namespace

BandKernel::BandKernel(double center, double bandwidth, double length, int panels_per_unit)
    : center_(center), bandwidth_(bandwidth), length_(length), panels_(panels_per_unit) {
  if (!(bandwidth > 0.0) || !(length > 0.0))
    throw std::invalid_argument("BandKernel needs positive bandwidth and length");
  // construction invariant: the passband response at the center is near 1
  double at_center = std::abs(transform(center_));
  if (std::abs(at_center - 1.0) > 0.10)
    throw std::invalid_argument("BandKernel response at center off by more than 10%");
}

Complex BandKernel::eval(double t) const {
  if (std::abs(t) > length_ / 2.0) return Complex(0.0, 0.0);
  double w = std::cos(M_PI * t / length_);
  w *= w;
  return w * (bandwidth_ / M_PI) * sinc(bandwidth_ * t) * cis(center_ * t);
}

Complex BandKernel::transform(double omega) const {
  // trapezoid over the support; the integrand oscillates at |ω−ω0|+b, and the
  // panel density is chosen to resolve the worst case on the scan grids
  int panels = static_cast<int>(length_ * panels_);
  double a = -length_ / 2.0, b = length_ / 2.0;
  double h = (b - a) / panels;
  Complex acc = 0.5 * (eval(a) * cis(-omega * a) + eval(b) * cis(-omega * b));
  Complex rot = cis(-omega * a);
  Complex step = cis(-omega * h);
  // midpoints via incremental rotation (endpoint terms above are zero anyway)
  acc = Complex(0.0, 0.0);
  for (int i = 1; i < panels; ++i) {
    rot *= step;
    acc += eval(a + i * h) * rot;
  }
  return acc * h;
}

Signal BandKernel::convolve(const Signal& s) const {
  if (auto poly = s.as_trig_poly()) {
    TrigPolyData out;
    for (const auto& term : poly->terms) out.add_term(term.omega, term.coeff * transform(term.omega));
    out.normalize();
    return Signal::trig_poly(std::move(out));
  }
  double a = -length_ / 2.0, b = length_ / 2.0;
  int panels = static_cast<int>(length_ * panels_);
  double h = (b - a) / panels;
  // snapshot the kernel samples once; s is evaluated per target point
  auto samples = std::make_shared<std::vector<Complex>>();
  samples->reserve(panels - 1);
  for (int i = 1; i < panels; ++i) samples->push_back(eval(a + i * h));
  Signal base = s;
  return Signal::from_function([base, samples, a, h](double t) {
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < samples->size(); ++i)
      acc += base.eval(t - (a + static_cast<double>(i + 1) * h)) * (*samples)[i];
    return acc * h;
  });
}

std::vector<double> sp_estimate(const Signal& s, const ClassTag& tag, double omega_min,
                                double omega_max, double omega_step, const SpBankParams& bank,
                                const ClassifyParams& params) {
  if (!(omega_step > 0.0) || !(omega_max >= omega_min))
    throw EmptyRange("sp_estimate: bad omega grid");
  std::size_t n = static_cast<std::size_t>(std::floor((omega_max - omega_min) / omega_step + 1e-9)) + 1;

  // kernel bank centered on grid points; kernels and their convolutions are
  // built lazily and cached, since neighbouring ω probes reuse them
  struct Probe {
    std::unique_ptr<BandKernel> kernel;
    std::optional<bool> member;  // classify(s*k) == member, cached
  };
  std::map<std::pair<long, int>, Probe> probes;  // (center index, bandwidth index)

  auto member_at = [&](long ci, int bi) -> std::optional<bool> {
    auto key = std::make_pair(ci, bi);
    auto it = probes.find(key);
    if (it == probes.end()) {
      Probe p;
      p.kernel = std::make_unique<BandKernel>(omega_min + static_cast<double>(ci) * omega_step,
                                              bank.bandwidths[static_cast<std::size_t>(bi)],
                                              bank.length);
      it = probes.emplace(key, std::move(p)).first;
    }
    return it->second.member;
  };

  std::vector<double> result;
  for (std::size_t g = 0; g < n; ++g) {
    double omega = omega_min + static_cast<double>(g) * omega_step;
    bool excluded = false;
    bool any_pass = false;
    for (int bi = 0; bi < static_cast<int>(bank.bandwidths.size()) && !excluded; ++bi) {
      double bw = bank.bandwidths[static_cast<std::size_t>(bi)];
      // candidate centers whose passband can reach ω
      long lo = static_cast<long>(std::ceil((omega - 1.2 * bw - omega_min) / omega_step));
      long hi = static_cast<long>(std::floor((omega + 1.2 * bw - omega_min) / omega_step));
      lo = std::max(lo, 0L);
      hi = std::min(hi, static_cast<long>(n) - 1);
      for (long ci = lo; ci <= hi && !excluded; ++ci) {
        auto key = std::make_pair(ci, bi);
        member_at(ci, bi);  // ensure kernel exists
        Probe& p = probes.at(key);
        if (std::abs(p.kernel->transform(omega)) < bank.pass_level) continue;
        any_pass = true;
        if (!p.member.has_value())
          p.member = classify(p.kernel->convolve(s), tag, params).verdict == Verdict::member;
        if (*p.member) excluded = true;
      }
    }
    if (any_pass && !excluded) result.push_back(omega);
  }
  return result;
}

std::vector<BeurlingPoint> beurling_support(const Signal& s, double omega_min, double omega_max,
                                            double omega_step, const Window& window,
                                            double sample_step) {
  if (!(omega_step > 0.0) || !(omega_max >= omega_min))
    throw EmptyRange("beurling_support: bad omega grid");
  if (!(window.length() > 0.0)) throw EmptyWindow("beurling_support: empty window");

  std::size_t m = static_cast<std::size_t>(std::floor(window.length() / sample_step + 1e-9));
  std::vector<Complex> weighted(m + 1);
  double taper_mass = 0.0;
  for (std::size_t i = 0; i <= m; ++i) {
    double t = window.a + static_cast<double>(i) * sample_step;
    double u = (t - window.a) / window.length();
    double w = 0.5 * (1.0 - std::cos(2.0 * M_PI * u));  // raised cosine on the window
    weighted[i] = w * s.eval(t);
    taper_mass += w;
  }
  taper_mass *= sample_step;

  std::vector<BeurlingPoint> out;
  std::size_t n = static_cast<std::size_t>(std::floor((omega_max - omega_min) / omega_step + 1e-9)) + 1;
  out.reserve(n);
  for (std::size_t g = 0; g < n; ++g) {
    double omega = omega_min + static_cast<double>(g) * omega_step;
    Complex rot = cis(-omega * window.a);
    Complex step = cis(-omega * sample_step);
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i <= m; ++i) {
      acc += weighted[i] * rot;
      rot *= step;
    }
    out.push_back({omega, std::abs(acc) * sample_step / taper_mass});
  }
  return out;
}

}  // namespace apmean

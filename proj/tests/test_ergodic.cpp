#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "apmean/ergodic.hpp"
#include "apmean/signal.hpp"

using namespace apmean;

namespace {
const Signal kTwoTone =
    Signal::trig_poly({{1.0, Complex(3.0, 0.0)}, {1.4142135623730951, Complex(2.0, 0.0)}});
}

TEST_CASE("ergodic mean of a constant is exact and converged") {
  MeanReport rep = ergodic_mean(Signal::constant(Complex(0.5, -0.25)), {10.0, 100.0});
  CHECK(std::abs(rep.value - Complex(0.5, -0.25)) < 1e-12);
  CHECK(rep.converged);
  for (double d : rep.sup_dev) CHECK(d < 1e-12);
}

TEST_CASE("ergodic mean of a character decays like 1/T") {
  Signal g = Signal::character(1.0);
  MeanReport rep = ergodic_mean(g, {1e2, 1e3, 1e4});
  REQUIRE(rep.sup_dev.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(rep.sup_dev[i] * rep.T_values[i] <= 2.25);
  CHECK(std::abs(rep.value) < 3e-4);
  CHECK(rep.converged);
}

TEST_CASE("converged flag needs the last two horizons inside tolerance") {
  // amplitude-3 character at T = 100 deviates ~3*2/100 = 0.06 > rtol
  Signal g = Complex(3.0, 0.0) * Signal::character(1.0);
  MeanReport bad = ergodic_mean(g, {10.0, 100.0}, {0.0, 1.0, 2.718281828459045}, 1e-2);
  CHECK(!bad.converged);
  MeanReport good = ergodic_mean(g, {1e3, 1e4, 1e5}, {0.0, 1.0, 2.718281828459045}, 1e-2);
  CHECK(good.converged);
}

TEST_CASE("bohr coefficient picks out the matching line") {
  Complex c1 = bohr_coefficient(kTwoTone, 1.0, 1e4);
  Complex coff = bohr_coefficient(kTwoTone, 0.5, 1e4);
  CHECK(std::abs(c1 - Complex(3.0, 0.0)) < 5e-3);
  CHECK(std::abs(coff) < 5e-3);
}

TEST_CASE("spectrum scan recovers a three-line polynomial") {
  Signal s = Signal::constant(Complex(0.5, 0.0)) + kTwoTone;
  SpectrumEstimate spec = bohr_spectrum_scan(s, -3.0, 3.0, 0.01, 1e4, 0.3);
  REQUIRE(spec.entries.size() == 3);
  double want_omega[3] = {0.0, 1.0, 1.4142135623730951};
  double want_mag[3] = {0.5, 3.0, 2.0};
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(spec.entries[i].omega - want_omega[i]) < 1e-3);
    CHECK(std::abs(std::abs(spec.entries[i].c) - want_mag[i]) < 0.05);
  }
}

TEST_CASE("scan stays empty below threshold") {
  Signal s = Complex(0.1, 0.0) * Signal::character(1.0);
  SpectrumEstimate spec = bohr_spectrum_scan(s, -2.0, 2.0, 0.01, 1e3, 0.3);
  CHECK(spec.entries.empty());
}

TEST_CASE("reconstruction from a recovered spectrum is uniformly close") {
  SpectrumEstimate spec = bohr_spectrum_scan(kTwoTone, -3.0, 3.0, 0.01, 1e4, 0.3);
  Reconstruction rec = reconstruct(kTwoTone, spec, Window{0.0, 100.0}, 0.05);
  CHECK(rec.sup_err < 0.1);
}

TEST_CASE("totally ergodic probe converges on an incommensurate set") {
  auto reports = totally_ergodic_probe(kTwoTone, {0.3, 2.5}, {1e3, 1e4, 1e5});
  REQUIRE(reports.size() == 2);
  for (const auto& [omega, rep] : reports) {
    CHECK(std::abs(rep.value) < 0.05);
    CHECK(rep.converged);
  }
}

TEST_CASE("bohl-bohr check certifies the bounded integral") {
  BohlBohrReport rep = bohl_bohr_check(kTwoTone, 1e4);
  CHECK(rep.bounded);
  CHECK(rep.coeff_ratio_err <= 1e-2);
  CHECK(rep.sup_full <= 1.05 * rep.sup_half + 1e-12);
}

TEST_CASE("bohl-bohr rejects a zero frequency") {
  Signal s = Signal::constant(Complex(1.0, 0.0)) + Signal::character(1.0);
  CHECK_THROWS_AS(bohl_bohr_check(s, 1e3), ZeroFrequencyPresent);
}

TEST_CASE("report json emitters are deterministic") {
  MeanReport rep = ergodic_mean(Signal::character(1.0), {10.0, 100.0});
  CHECK(mean_report_json(rep) == mean_report_json(rep));
  SpectrumEstimate spec = bohr_spectrum_scan(kTwoTone, -2.0, 2.0, 0.02, 1e3, 0.3);
  CHECK(spectrum_json(spec) == spectrum_json(spec));
}

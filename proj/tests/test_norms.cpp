#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "apmean/norms.hpp"
#include "apmean/signal.hpp"

using namespace apmean;

TEST_CASE("sup norm of a unit character") {
  CHECK(sup_norm(Signal::character(1.3), Window{0.0, 20.0}) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("stepanoff of a constant equals its magnitude") {
  Signal c = Signal::constant(Complex(0.6, 0.8));
  for (double l : {0.5, 1.0, 5.0})
    CHECK(stepanoff(c, 1.0, l, Window{0.0, 30.0}) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(stepanoff(c, 2.0, 1.0, Window{0.0, 30.0}) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("stepanoff is bounded by the sup norm") {
  Signal s = Signal::trig_poly({{1.0, Complex(1.0, 0.0)}, {2.7, Complex(0.4, -0.2)}});
  Window w{0.0, 40.0};
  double sup = sup_norm(s, w);
  for (double l : {0.5, 2.0, 10.0}) CHECK(stepanoff(s, 1.0, l, w) <= sup + 1e-9);
}

TEST_CASE("stepanoff exponent monotonicity (Hoelder)") {
  Signal s = Signal::trig_poly({{1.0, Complex(0.7, 0.0)}, {-0.6, Complex(0.2, 0.5)}});
  Window w{0.0, 40.0};
  double s1 = stepanoff(s, 1.0, 2.0, w);
  double s2 = stepanoff(s, 2.0, 2.0, w);
  CHECK(s1 <= s2 + 1e-9);
}

TEST_CASE("stepanoff argument validation") {
  Signal s = Signal::character(1.0);
  CHECK_THROWS_AS(stepanoff(s, 1.0, 0.0, Window{0.0, 10.0}), NonPositiveL);
  CHECK_THROWS_AS(stepanoff(s, 0.5, 1.0, Window{0.0, 10.0}), BadP);
}

TEST_CASE("weyl schedule on the block signal decays with window length") {
  // the 0/1 block signal sits on short windows at level ~1 but long windows
  // average it down toward the block density; the finite schedule must not
  // certify convergence
  Signal f = Signal::block_ten();
  SeminormSchedule sched{Window{0.0, 100.0}, {1.0, 10.0, 100.0}, 1.0, 1e-2};
  LimitReport rep = weyl(f, 1.0, sched);
  REQUIRE(rep.per_l.size() == 3);
  CHECK(rep.per_l[0] == doctest::Approx(1.0).epsilon(0.05));
  CHECK(rep.per_l[2] == doctest::Approx(0.1).epsilon(0.2));
  CHECK(rep.per_l[0] > rep.per_l[1]);
  CHECK(rep.per_l[1] > rep.per_l[2]);
  CHECK(!rep.converged);
}

TEST_CASE("weyl of the sine tends to its mean modulus") {
  Signal s = Signal::trig_poly({{1.0, Complex(0.0, -0.5)}, {-1.0, Complex(0.0, 0.5)}});
  SeminormSchedule sched{Window{0.0, 60.0}, {1.0, 4.0, 16.0}, 0.25, 1e-2};
  LimitReport rep = weyl(s, 1.0, sched);
  REQUIRE(rep.per_l.size() == 3);
  CHECK(rep.per_l[0] > rep.per_l[2]);  // long windows kill the favourable offset
  CHECK(rep.per_l[2] == doctest::Approx(2.0 / 3.141592653589793).epsilon(0.05));
}

TEST_CASE("besicovitch of a mean-zero character decays with T") {
  Signal g = Signal::character(1.0);
  SeminormSchedule sched{Window{0.0, 0.0}, {10.0, 100.0, 1000.0}, 0.0, 1e-2};
  LimitReport rep = besicovitch(g, 1.0, sched);
  REQUIRE(rep.per_l.size() == 3);
  // (1/2T)∫_{-T}^{T} |e^{it}| dt = 1 exactly: magnitude, not oscillation
  for (double v : rep.per_l) CHECK(v == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("u norm dominates the weighted sup") {
  Signal s = Signal::trig_poly({{1.0, Complex(1.0, 0.0)}});
  Window w{-10.0, 10.0};
  double un = u_norm(s, w, 0.05, 0.1);
  double weighted = 0.0;
  for (double t = -10.0; t <= 10.0; t += 0.05)
    weighted = std::max(weighted, std::abs(s.eval(t)) / (1.0 + std::abs(t)));
  CHECK(un >= weighted - 1e-12);
  CHECK(un <= 1.0 + 2.0 + 1e-6);  // |s| <= 1 and shift oscillation <= h sup|s'| <= 1... coarse cap
}

TEST_CASE("envelope check finds a small m for a bounded signal") {
  Signal s = Signal::trig_poly({{1.0, Complex(2.0, 0.0)}});
  EnvelopeReport rep = envelope_check(s, Signal::constant(Complex(1.0, 0.0)),
                                      Window{-50.0, 50.0}, 0.1);
  CHECK(rep.holds);
  CHECK(rep.m <= 3);
}

TEST_CASE("norm report json shape is stable") {
  std::string a = norm_report_json("stepanoff", "{\"p\":1}", 0.5, {0.5});
  std::string b = norm_report_json("stepanoff", "{\"p\":1}", 0.5, {0.5});
  CHECK(a == b);
  CHECK(a.find("\"norm\"") != std::string::npos);
  CHECK(a.find("\"value\"") != std::string::npos);
}

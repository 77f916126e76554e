#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "apmean/quadrature.hpp"
#include "apmean/signal.hpp"
#include "apmean/verification.hpp"

using namespace apmean;

TEST_CASE("trig poly eval and coefficient lookup") {
  Signal s = Signal::trig_poly({{1.0, Complex(2.0, 0.0)}, {-1.0, Complex(0.0, 1.0)}});
  for (double t : {0.0, 0.7, 3.1, -2.0}) {
    Complex want = 2.0 * std::exp(Complex(0.0, t)) + Complex(0.0, 1.0) * std::exp(Complex(0.0, -t));
    CHECK(std::abs(s.eval(t) - want) < 1e-14);
  }
  auto tp = s.as_trig_poly();
  REQUIRE(tp.has_value());
  CHECK(std::abs(tp->coeff_at(1.0) - Complex(2.0, 0.0)) < 1e-14);
  CHECK(std::abs(tp->coeff_at(0.5)) == 0.0);
}

TEST_CASE("equal frequencies merge and zeros drop") {
  Signal s = Signal::trig_poly({{2.0, Complex(1.0, 0.0)},
                                {2.0, Complex(-1.0, 0.0)},
                                {3.0, Complex(0.5, 0.5)}});
  auto tp = s.as_trig_poly();
  REQUIRE(tp.has_value());
  CHECK(tp->terms.size() == 1);
  CHECK(tp->terms[0].omega == 3.0);
}

TEST_CASE("signal algebra: shift, modulate, scale, sum") {
  Signal s = Signal::character(1.3);
  Signal m = Complex(2.0, 0.0) * s.shifted(0.5).modulated(-0.3);
  double t = 1.7;
  Complex want = 2.0 * std::exp(Complex(0.0, -0.3 * t)) * std::exp(Complex(0.0, 1.3 * (t + 0.5)));
  CHECK(std::abs(m.eval(t) - want) < 1e-14);
  Signal d = s - s;
  CHECK(std::abs(d.eval(2.0)) < 1e-15);
}

TEST_CASE("opaque blocks the closed forms but not evaluation") {
  Signal s = Signal::trig_poly({{1.0, Complex(1.0, 0.0)}});
  Signal o = s.opaque();
  CHECK(!o.as_trig_poly().has_value());
  CHECK(!o.has_exact_integral());
  CHECK(std::abs(o.eval(0.9) - s.eval(0.9)) == 0.0);
}

TEST_CASE("block signal point values") {
  Signal f = Signal::block_ten();
  CHECK(f.eval(11.0).real() == doctest::Approx(0.0));
  CHECK(f.eval(10.5).real() == doctest::Approx(0.0));
  CHECK(f.eval(2.0).real() == doctest::Approx(1.0));
  CHECK(std::abs(f.eval(-3.0)) == doctest::Approx(0.0));
  CHECK(f.eval(50.0).real() == doctest::Approx(0.0));   // inside the odd block
  CHECK(f.eval(150.0).real() == doctest::Approx(1.0));  // inside the even block

}

TEST_CASE("log-oscillation value at zero and envelope") {
  Signal psi = Signal::log_osc();
  CHECK(std::abs(psi.eval(0.0)) == 0.0);
  for (double t : {1.0, 10.0, 1000.0})
    CHECK(std::abs(psi.eval(t)) <= 1.0 / (1.0 + t) + 1e-15);
}

TEST_CASE("chirp magnitude and phase") {
  Signal c = Signal::chirp(Complex(1.0, 0.0));
  CHECK(std::abs(c.eval(1.0) - std::exp(Complex(0.0, 1.0))) < 1e-15);
  CHECK(std::abs(std::abs(c.eval(123.456)) - 1.0) < 1e-12);
}

TEST_CASE("csv round trip preserves samples and grid") {
  Grid g(-1.0, 0.25, 17);
  Signal s = Signal::trig_poly({{0.7, Complex(1.0, -0.5)}});
  std::ostringstream out;
  write_csv(out, g, s.sample(g));
  std::string text = out.str();
  CHECK(text.rfind("t,re,im\n", 0) == 0);
  std::istringstream in(text);
  Signal back = read_csv(in);
  for (std::size_t i = 0; i < g.n; ++i)
    CHECK(std::abs(back.eval(g.point(i)) - s.eval(g.point(i))) < 1e-12);
}

TEST_CASE("csv parser reports the offending line") {
  std::istringstream in("t,re,im\n0,1,0\n1,oops,0\n");
  try {
    read_csv(in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("csv parser rejects a wrong header") {
  std::istringstream in("time,real,imag\n0,1,0\n");
  CHECK_THROWS_AS(read_csv(in), ParseError);
}

TEST_CASE("csv parser tolerates BOM and CR line endings") {
  std::istringstream in("\xEF\xBB\xBFt,re,im\r\n0,1,0\r\n0.5,0,1\r\n");
  Signal s = read_csv(in);
  CHECK(std::abs(s.eval(0.0) - Complex(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(s.eval(0.5) - Complex(0.0, 1.0)) < 1e-12);
}

TEST_CASE("tabulated interpolation is linear between nodes") {
  Grid g(0.0, 1.0, 3);
  Signal s = Signal::tabulated(g, {Complex(0.0, 0.0), Complex(2.0, 0.0), Complex(2.0, 2.0)});
  CHECK(std::abs(s.eval(0.5) - Complex(1.0, 0.0)) < 1e-14);
  CHECK(std::abs(s.eval(1.5) - Complex(2.0, 1.0)) < 1e-14);
}

TEST_CASE("series generator antiderivatives match brute-force quadrature") {
  std::mt19937 rng(7u);
  std::uniform_real_distribution<double> pick(0.0, 40.0);
  for (const char* name : {"ex3_5", "prop3_8", "prop3_8_deriv"}) {
    Signal s = gen(name, GenParams{8, 1.0});
    REQUIRE(s.has_exact_integral());
    for (int i = 0; i < 6; ++i) {
      double t = pick(rng);
      Complex closed = *s.exact_integral(t);
      Complex brute = trapezoid([&s](double u) { return s.eval(u); }, 0.0, t,
                                static_cast<int>(std::ceil(t)) * 4096);
      CHECK(std::abs(closed - brute) < 5e-5);
    }
  }
}

TEST_CASE("generators are deterministic") {
  for (const char* name : {"chirp", "ex3_5", "prop3_8", "prop3_8_deriv", "block10", "logosc"}) {
    Signal a = gen(name);
    Signal b = gen(name);
    for (double t : {0.0, 1.25, 17.5, 39.0}) {
      Complex va = a.eval(t), vb = b.eval(t);
      CHECK(va.real() == vb.real());
      CHECK(va.imag() == vb.imag());
    }
  }
}

TEST_CASE("unknown generator name throws") {
  CHECK_THROWS_AS(gen("nope"), UnknownName);
}

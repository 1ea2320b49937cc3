#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "kop/pvquad.hpp"
#include "kop/registry.hpp"
#include "kop/rng.hpp"

using namespace kop;
using cplx = std::complex<double>;

namespace {
constexpr double kPi = std::numbers::pi;

// Independent oracle for the line Hilbert transform: plain symmetric-excision
// quadrature of g(y)/(x-y) on dense panels, nothing shared with
// pv_line_hilbert's difference-quotient path.
double hilbert_excision_oracle(const std::function<double(double)>& g, double x, double lo,
                               double hi, double eps) {
  auto f = [&](double y) { return g(y) / (x - y); };
  const double left = integrate_panels(f, edges_uniform(lo, x - eps, 4000), 8);
  const double right = integrate_panels(f, edges_uniform(x + eps, hi, 4000), 8);
  return (left + right) / kPi;
}
}  // namespace

TEST_CASE("pv_circle: odd integrands cancel exactly") {
  CHECK(pv_circle([](double t) { return 1.0 / std::sin(t); }, 64) == 0.0);
  CHECK(pv_circle([](double t) { return std::sin(3 * t) + 1.0 / std::sin(t) +
                                        std::sin(t) * std::cos(4 * t); },
                  256) == 0.0);
  // cos(2t)/sin(t) is odd as well
  CHECK(pv_circle([](double t) { return std::cos(2 * t) / std::sin(t); }, 128) == 0.0);
  CHECK_THROWS_AS(pv_circle([](double t) { return t; }, 63), std::invalid_argument);
  CHECK_THROWS_AS(pv_circle([](double t) { return t; }, 4), std::invalid_argument);
}

TEST_CASE("pv_circle: e^{-it}/sin t -> -2 pi i, stable under refinement") {
  auto f = [](double t) { return std::polar(1.0, -t) / std::sin(t); };
  const cplx v512 = pv_circle(f, 512);
  const cplx v1024 = pv_circle(f, 1024);
  const cplx v4096 = pv_circle(f, 4096);
  const cplx want{0.0, -2.0 * kPi};
  CHECK(std::abs(v512 - want) < 1e-10);
  CHECK(std::abs(v1024 - want) < 1e-11);
  CHECK(std::abs(v4096 - want) < 1e-12);
}

TEST_CASE("pv_circle: linearity and spectral refinement on trig integrands") {
  auto f = [](double t) { return std::polar(1.0, -4.0 * t) / std::sin(t); };
  auto g = [](double t) { return std::polar(1.0, 3.0 * t) / std::sin(t); };
  const cplx lin =
      pv_circle([&](double t) { return 2.0 * f(t) - 0.5 * g(t); }, 512) -
      (2.0 * pv_circle(f, 512) - 0.5 * pv_circle(g, 512));
  CHECK(std::abs(lin) < 1e-13);

  const cplx a = pv_circle(g, 64);
  const cplx b = pv_circle(g, 128);
  CHECK(std::abs(a - b) < 1e-10);
}

TEST_CASE("pv_line_hilbert: Lorentzian closed form and excision oracle") {
  const Function1D g([](double y) { return 1.0 / (1.0 + y * y); },
                     DecaySupport{2.0, 0.0, 50.0});
  PVQuadratureConfig cfg;
  cfg.tail = TailPolicy::power_extrapolate;
  const double got = pv_line_hilbert(g, 1.0, cfg).value;
  CHECK(got == doctest::Approx(0.5).epsilon(1e-6));

  const double oracle = hilbert_excision_oracle([](double y) { return 1.0 / (1.0 + y * y); },
                                                1.0, -4000.0, 4000.0, 1e-5);
  CHECK(got == doctest::Approx(oracle).epsilon(1e-4));

  // second point, closed form x/(1+x^2)
  CHECK(pv_line_hilbert(g, 2.0, cfg).value == doctest::Approx(0.4).epsilon(1e-6));
}

TEST_CASE("pv_line_hilbert: power function closed form") {
  const Function1D g = make_function1d("power:0.5");
  const double got = pv_line_hilbert(g, 4.0, power_type_config()).value;
  CHECK(got == doctest::Approx(-0.5).epsilon(1e-5));
  // tail truncation without extrapolation is flagged
  PVQuadratureConfig trunc = power_type_config();
  trunc.tail = TailPolicy::ignore;
  const IntegralResult res = pv_line_hilbert(g, 4.0, trunc);
  CHECK((res.flags & kTailWarning) != 0);
}

TEST_CASE("pv_line_hilbert: zero input, even input, pole at the point") {
  PVQuadratureConfig cfg;
  CHECK(pv_line_hilbert(Function1D::zero(), 0.7, cfg).value == 0.0);

  // g even about x = 0: the difference quotient vanishes identically
  const Function1D g([](double y) { return std::exp(-y * y); },
                     DecaySupport{std::numeric_limits<double>::infinity(), 0.0, 16.0});
  CHECK(pv_line_hilbert(g, 0.0, cfg).value == 0.0);

  // power-type g evaluated at its own pole: excluded neighborhood + flag
  const IntegralResult at_pole = pv_line_hilbert(make_function1d("power:0.5"), 0.0,
                                                 power_type_config());
  CHECK((at_pole.flags & kSingularityExcluded) != 0);
}

TEST_CASE("pv_line_hilbert: translation covariance and reflection anticovariance") {
  PVQuadratureConfig cfg;
  const Function1D g = make_function1d("gaussian:0.4,0.9");
  const Function1D shifted = g.translated(0.7);
  const double lhs = pv_line_hilbert(shifted, 1.3, cfg).value;
  const double rhs = pv_line_hilbert(g, 1.3 - 0.7, cfg).value;
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));

  const Function1D mirrored = g.reflected();
  const double a = pv_line_hilbert(mirrored, 0.8, cfg).value;
  const double b = -pv_line_hilbert(g, -0.8, cfg).value;
  CHECK(a == doctest::Approx(b).epsilon(1e-6));
}

TEST_CASE("integrate_halfline: exact families") {
  PVQuadratureConfig cfg;
  cfg.r = 40.0;
  CHECK(integrate_halfline(make_function1d("indicator:0,1"), cfg).value == 1.0);

  // exp family carries its integral; an ad-hoc copy exercises the quadrature
  const Function1D decay([](double t) { return std::exp(-t); },
                         DecaySupport{std::numeric_limits<double>::infinity(), 0.0, 60.0},
                         Domain::half_line);
  CHECK(integrate_halfline(decay, cfg).value == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(integrate_halfline(make_function1d("exp:1"), cfg).value == 1.0);  // verbatim

  const Function1D rg([](double t) { return t * std::exp(-t * t); },
                      DecaySupport{std::numeric_limits<double>::infinity(), 0.0, 12.0},
                      Domain::half_line);
  CHECK(integrate_halfline(rg, cfg).value == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("integrate_halfline: declared integrals returned verbatim") {
  PVQuadratureConfig cfg;
  const Function1D f = Function1D([](double) { return 12345.0; }, CompactSupport{0.0, 1.0})
                           .with_known_integral(42.0);
  CHECK(integrate_halfline(f, cfg).value == 42.0);
  // a full-line gaussian's declared integral must NOT be returned for the
  // half-line integral
  const Function1D g = make_function1d("gaussian:0,1");
  CHECK(integrate_halfline(g, cfg).value ==
        doctest::Approx(0.5 * *g.known_integral()).epsilon(1e-10));
}

TEST_CASE("integrate_halfline: slow tails are flagged") {
  PVQuadratureConfig cfg;
  const Function1D slow([](double t) { return 1.0 / std::sqrt(1.0 + t); },
                        DecaySupport{0.5, 0.0, 10.0}, Domain::half_line);
  CHECK((integrate_halfline(slow, cfg).flags & kTailWarning) != 0);
  CHECK((integrate_halfline(make_function1d("power:0.5"), cfg).flags & kTailWarning) != 0);
}

TEST_CASE("integrate_line: decaying tails extrapolate") {
  PVQuadratureConfig cfg;
  cfg.r = 100.0;
  cfg.tail = TailPolicy::power_extrapolate;
  // f = 1/(1+t^2): integral pi
  const Function1D f([](double t) { return 1.0 / (1.0 + t * t); }, DecaySupport{2.0, 0.0, 20.0});
  CHECK(integrate_line(f, cfg).value == doctest::Approx(kPi).epsilon(1e-4));
}

TEST_CASE("lp_norm: power type refuses, known norms win") {
  PVQuadratureConfig cfg;
  CHECK_THROWS_AS(lp_norm(make_function1d("power:0.5"), 2.0, cfg), std::invalid_argument);
  const Function1D f = Function1D([](double) { return 0.0; }, CompactSupport{0.0, 1.0})
                           .with_known_lp_norm(2.0, 7.5);
  CHECK(lp_norm(f, 2.0, cfg) == 7.5);
  CHECK_THROWS_AS(lp_norm(f, 0.5, cfg), std::invalid_argument);
}

TEST_CASE("projective bound: computed and supplied") {
  PVQuadratureConfig cfg;
  TensorSum2D f({TensorTerm2D{make_function1d("gaussian:0,1"), make_function1d("indicator:0,4")}},
                2.0, 2.0);
  CHECK(projective_bound(f, cfg) ==
        doctest::Approx(*make_function1d("gaussian:0,1").known_lp_norm(2.0) * 2.0)
            .epsilon(1e-12));
  f.with_projective_bound(9.25);
  CHECK(projective_bound(f, cfg) == 9.25);
}

TEST_CASE("quadrature config serializes to flat key-value form") {
  PVQuadratureConfig cfg;
  cfg.n = 512;
  cfg.r = 250.0;
  cfg.tail = TailPolicy::power_extrapolate;
  cfg.log_spacing = true;
  const PVQuadratureConfig back = PVQuadratureConfig::from_kv(cfg.to_kv());
  CHECK(back.n == cfg.n);
  CHECK(back.r == doctest::Approx(cfg.r));
  CHECK(back.tail == cfg.tail);
  CHECK(back.log_spacing == cfg.log_spacing);
  CHECK_THROWS_AS(PVQuadratureConfig::from_kv({{"tail", "bogus"}}), std::invalid_argument);
  PVQuadratureConfig bad;
  bad.n = 4;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("gauss rules integrate polynomials exactly") {
  // order-n Gauss is exact through degree 2n-1
  auto poly = [](double x) { return ((3.0 * x - 1.0) * x + 2.0) * x * x * x - x + 0.25; };
  const double got = gauss_panel(poly, -1.0, 2.0, 8);
  const double exact = [] {
    auto antider = [](double x) {
      // 3x^5 - x^4 + 2x^3 - x + 1/4 integrated
      return 0.5 * x * x * x * x * x * x - 0.2 * x * x * x * x * x + 0.5 * x * x * x * x -
             0.5 * x * x + 0.25 * x;
    };
    return antider(2.0) - antider(-1.0);
  }();
  CHECK(got == doctest::Approx(exact).epsilon(1e-14));
  CHECK_THROWS_AS(gauss_rule(1), std::invalid_argument);
}

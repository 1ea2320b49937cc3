#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "kop/registry.hpp"

using namespace kop;
using cplx = std::complex<double>;

TEST_CASE("trig coefficient grammar") {
  const FourierSpectrum single = parse_trig_coeffs("k=1:1");
  CHECK(single.k_max() == 1);
  CHECK(single.coeff(1) == cplx{1.0, 0.0});

  const FourierSpectrum multi = parse_trig_coeffs("k=2:1,k=-5:0.5");
  CHECK(multi.coeff(2) == cplx{1.0, 0.0});
  CHECK(multi.coeff(-5) == cplx{0.5, 0.0});
  CHECK(multi.k_max() == 5);

  // imaginary part and bare entries without the k= prefix
  const FourierSpectrum im = parse_trig_coeffs("3:0:-1; -3:0:1");
  CHECK(im.coeff(3) == cplx{0.0, -1.0});
  CHECK(im.coeff(-3) == cplx{0.0, 1.0});

  CHECK_THROWS_AS(parse_trig_coeffs(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_trig_coeffs("k=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_trig_coeffs("k=x:1"), std::invalid_argument);
}

TEST_CASE("periodic registry families") {
  const PeriodicFunction c = make_periodic("const:2");
  CHECK(c(0.3) == cplx{2.0, 0.0});
  CHECK(*c.known_l2_norm() == doctest::Approx(2.0 * std::sqrt(2.0 * std::numbers::pi)));

  const PeriodicFunction cusp = make_periodic("holder-cusp:0.25");
  REQUIRE(cusp.holder_witness().has_value());
  CHECK(cusp.holder_witness()->gamma == doctest::Approx(0.25));
  CHECK(cusp.holder_witness()->seminorm == doctest::Approx(std::pow(2.0, -0.25)));
  CHECK(cusp.kink_points() == std::vector<double>{0.0});

  CHECK_THROWS_AS(make_periodic("holder-cusp:1.25"), std::invalid_argument);
  CHECK_THROWS_AS(make_periodic("trigpoly"), std::invalid_argument);
  CHECK_THROWS_AS(make_periodic("waves"), std::invalid_argument);
}

TEST_CASE("line registry families carry exact metadata") {
  const Function1D e = make_function1d("exp:2,3");
  CHECK(e(1.0) == doctest::Approx(3.0 * std::exp(-2.0)));
  CHECK(e(-0.5) == 0.0);  // half-line domain
  CHECK(*e.known_integral() == doctest::Approx(1.5));
  CHECK(*e.known_lp_norm(1.0) == doctest::Approx(1.5));
  CHECK(*e.known_lp_norm(2.0) == doctest::Approx(3.0 / 2.0));

  const Function1D p = make_function1d("power:0.5,2");
  CHECK(p(4.0) == doctest::Approx(1.0));
  CHECK(p(-4.0) == doctest::Approx(-1.0));
  CHECK(p.is_power_type());
}

TEST_CASE("radial specs reuse the line registry") {
  const Function1D r = make_radial("exp");
  CHECK(r.domain() == Domain::half_line);
  CHECK(*r.known_integral() == doctest::Approx(1.0));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "kop/plane_ops.hpp"
#include "kop/registry.hpp"
#include "kop/rng.hpp"

using namespace kop;

namespace {
constexpr double kPi = std::numbers::pi;

TensorSum2D asym_gaussians() {
  return TensorSum2D({TensorTerm2D{make_function1d("gaussian:0.7,1.0"),
                                   make_function1d("gaussian:-0.4,0.8")}},
                     2.0, 2.0);
}
}  // namespace

TEST_CASE("kernel evaluation: plug-in values, antisymmetry, homogeneity") {
  CHECK(kernel_eval({1, 0}, {0, 1}) == doctest::Approx(1.0 / kPi).epsilon(1e-15));
  CHECK(kernel_eval({2, 0}, {0, 2}) == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-15));

  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    const PlanePoint x{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    const PlanePoint y{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    if (std::abs(cross(x, y)) < 1e-6) continue;
    CHECK(kernel_eval(x, y) == -kernel_eval(y, x));  // machine-exact
  }

  // dilation by 2 Id: det = 4 scales the kernel by exactly 1/4
  CHECK(4.0 * kernel_eval({2, 0}, {0, 2}) == kernel_eval({1, 0}, {0, 1}));

  CHECK_THROWS_AS(kernel_eval({1, 1}, {2, 2}), std::domain_error);
}

TEST_CASE("kernel homogeneity under random GL+(2), reflection flips the sign") {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const GL2Plus g = GL2Plus::rotation(rng.uniform(0, 2 * kPi)) *
                      GL2Plus::scale(std::exp(rng.uniform(-1, 1)), std::exp(rng.uniform(-1, 1))) *
                      GL2Plus::rotation(rng.uniform(0, 2 * kPi));
    PlanePoint x{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    PlanePoint y{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    if (std::abs(cross(x, y)) < 1e-3) continue;
    const double lhs = g.det() * kernel_eval(g.apply(x), g.apply(y));
    const double rhs = kernel_eval(x, y);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
  }

  // orientation reversal m = diag(1,-1): K(mx,my) = -(1/|det m|) K(x,y), exactly
  const PlanePoint x{0.3, -1.2}, y{2.0, 0.7};
  CHECK(kernel_eval({x.x1, -x.x2}, {y.x1, -y.x2}) == -kernel_eval(x, y));
}

TEST_CASE("GL2Plus rejects orientation-reversing matrices") {
  CHECK_THROWS_AS(GL2Plus(1, 0, 0, -1), std::invalid_argument);
  CHECK_THROWS_AS(GL2Plus::scale(1.0, -2.0), std::invalid_argument);
  CHECK(GL2Plus::rotation(0.7).det() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("est1: sharpness closed form and off-axis domain") {
  const TensorSum2D f(
      {TensorTerm2D{make_function1d("indicator:0,1"), make_function1d("power:0.5")}}, 2.0, 2.0);
  const PVQuadratureConfig cfg = power_type_config();
  CHECK(k_apply_est1(f, {1.0, 4.0}, cfg) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(k_apply_est1(f, {1.0, 1.0}, cfg) == doctest::Approx(2.0).epsilon(1e-6));

  CHECK_THROWS_AS(k_apply_est1(f, {0.0, 1.0}, cfg), std::domain_error);
  CHECK_THROWS_AS(k_apply_est1(f, {1.0, 0.0}, cfg), std::domain_error);
}

TEST_CASE("est1: even second factor makes the value odd in x2") {
  // f2 even => H f2 odd => flipping the sign of x2/x1 negates the value
  const TensorSum2D f(
      {TensorTerm2D{make_function1d("gaussian:0.5,1.0"), make_function1d("gaussian:0,1")}}, 2.0,
      2.0);
  PVQuadratureConfig cfg;
  const double plus = k_apply_est1(f, {1.0, 0.8}, cfg);
  const double minus = k_apply_est1(f, {1.0, -0.8}, cfg);
  CHECK(plus != 0.0);
  CHECK(minus == doctest::Approx(-plus).epsilon(1e-6));
}

TEST_CASE("stepanov: cross-check with est1, symmetry null, zero input") {
  PVQuadratureConfig cfg;
  const TensorSum2D f = asym_gaussians();
  const double a = k_apply_est1(f, {1.0, 1.0}, cfg);
  const double b = k_apply_stepanov(f, {1.0, 1.0}, cfg);
  CHECK(b == doctest::Approx(a).epsilon(1e-4));

  // symmetric f under y1 <-> y2 at a diagonal point: the t1 <-> t2
  // antisymmetry of the kernel cancels everything
  const TensorSum2D sym(
      {TensorTerm2D{make_function1d("gaussian:0,1"), make_function1d("gaussian:0,1")}}, 2.0, 2.0);
  CHECK(std::abs(k_apply_stepanov(sym, {1.3, 1.3}, cfg)) < 1e-8);

  const TensorSum2D zero({TensorTerm2D{Function1D::zero(), Function1D::zero()}}, 2.0, 2.0);
  CHECK(k_apply_stepanov(zero, {1.0, 2.0}, cfg) == 0.0);

  CHECK_THROWS_AS(k_apply_stepanov(f, {1.0, 0.0}, cfg), std::domain_error);
}

TEST_CASE("stepanov agrees with est1 in every quadrant") {
  PVQuadratureConfig cfg;
  const TensorSum2D f = asym_gaussians();
  for (const PlanePoint x : {PlanePoint{1.0, 1.0}, PlanePoint{-1.0, 1.0}, PlanePoint{1.0, -1.0},
                             PlanePoint{-1.0, -1.0}}) {
    const double a = k_apply_est1(f, x, cfg);
    const double b = k_apply_stepanov(f, x, cfg);
    CHECK(b == doctest::Approx(a).epsilon(1e-4));
  }
}

TEST_CASE("radon slices: gaussian closed form, axis slice, odd slice") {
  PVQuadratureConfig cfg;
  const Evaluable2D radial = [](double y1, double y2) { return std::exp(-y1 * y1 - y2 * y2); };
  for (double xi : {0.0, 0.5, -2.0, 7.0}) {
    // parameter form sqrt(pi/(1+xi^2)); length form sqrt(pi), xi-independent
    CHECK(radon_slice(radial, xi, 10.0, cfg) ==
          doctest::Approx(std::sqrt(kPi / (1.0 + xi * xi))).epsilon(1e-10));
    CHECK(radon_slice_length(radial, xi, 10.0, cfg) ==
          doctest::Approx(std::sqrt(kPi)).epsilon(1e-10));
  }

  // compactly supported f at xi = 0 equals the axis integral
  const TensorSum2D bumps(
      {TensorTerm2D{make_function1d("bump:0,1"), make_function1d("bump:0,1")}}, 2.0, 2.0);
  const auto f2d = bumps.as_evaluable();
  const double slice0 = radon_slice(f2d, 0.0, 1.0, cfg);
  const double oracle =
      integrate_panels([&](double e) { return f2d(e, 0.0); }, edges_uniform(-1.0, 1.0, 64), 12);
  CHECK(slice0 == doctest::Approx(oracle).epsilon(1e-10));

  // odd integrand: mirrored panels cancel exactly
  const Evaluable2D odd = [](double y1, double y2) {
    return y1 * std::exp(-y1 * y1 - y2 * y2);
  };
  CHECK(radon_slice(odd, 0.7, 10.0, cfg) == 0.0);
}

TEST_CASE("signed slices vanish on centrally even inputs") {
  PVQuadratureConfig cfg;
  const Evaluable2D radial = [](double y1, double y2) { return std::exp(-y1 * y1 - y2 * y2); };
  for (double xi : {0.0, 1.5, -4.0}) CHECK(radon_slice_signed(radial, xi, 10.0, cfg) == 0.0);
}

TEST_CASE("radon representation: cross-check with est1, radial null, zero input") {
  PVQuadratureConfig cfg;
  const TensorSum2D f = asym_gaussians();
  const RadonSliceCache cache(f.as_evaluable(), tensor_box(f), cfg);
  for (const PlanePoint x : {PlanePoint{1.0, 1.0}, PlanePoint{0.5, 2.0}}) {
    const double a = k_apply_est1(f, x, cfg);
    const double r = k_apply_radon(cache, x, cfg);
    CHECK(r == doctest::Approx(a).epsilon(1e-3));
  }

  // centrally even f: every signed slice is exactly zero, and so is the value
  const Evaluable2D radial = [](double y1, double y2) { return std::exp(-y1 * y1 - y2 * y2); };
  const RadonSliceCache rc(radial, Box2D{0, 10, 0, 10}, cfg);
  CHECK(k_apply_radon(rc, {1.0, 0.7}, cfg) == 0.0);

  CHECK_THROWS_AS(k_apply_radon(rc, {0.0, 1.0}, cfg), std::domain_error);
}

TEST_CASE("polar lift is pointwise composition") {
  const Evaluable2D f = [](double y1, double y2) { return y1 + 3.0 * y2 * y2; };
  const auto lift = polar_lift(f);
  CHECK(lift(2.0, 0.0) == 2.0);

  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const double rho = rng.uniform(0.0, 3.0), theta = rng.uniform(-kPi, kPi);
    CHECK(lift(rho, theta) == f(rho * std::cos(theta), rho * std::sin(theta)));
  }

  // radial input: the lift does not depend on theta
  const auto rl = polar_lift([](double y1, double y2) { return std::exp(-y1 * y1 - y2 * y2); });
  CHECK(rl(1.3, 0.4) == doctest::Approx(rl(1.3, -2.0)).epsilon(1e-15));
}

TEST_CASE("intertwining: polar and Cartesian routes agree") {
  PVQuadratureConfig cfg;
  const TensorSum2D f = asym_gaussians();
  std::vector<PolarSample> samples{{0.8, 0.4}, {1.2, 2.0}, {1.7, -1.0}, {0.6, -2.6}};
  CHECK(intertwining_residual(f, samples, cfg) < 1e-3);
}

TEST_CASE("intertwining: zero and radial inputs sit at the absolute floor") {
  PVQuadratureConfig cfg;
  const TensorSum2D zero({TensorTerm2D{Function1D::zero(), Function1D::zero()}}, 2.0, 2.0);
  std::vector<PolarSample> samples{{1.0, 0.5}};
  CHECK(intertwining_residual(zero, samples, cfg) == 0.0);

  // radial non-tensor input: both routes give ~0 (stepanov side and raw polar)
  const Evaluable2D radial = [](double y1, double y2) { return std::exp(-y1 * y1 - y2 * y2); };
  const double plane_side = k_apply_stepanov(radial, Box2D{0, 14, 0, 14}, {1.0, 1.3}, cfg);
  const double polar_side = polar_apply_raw(radial, 14.0, std::hypot(1.0, 1.3),
                                            std::atan2(1.3, 1.0), cfg);
  CHECK(std::abs(plane_side) < 1e-8);
  CHECK(std::abs(polar_side) < 1e-8);
}

TEST_CASE("image of the operator is homogeneous of order -1") {
  PVQuadratureConfig cfg;
  const TensorSum2D f = asym_gaussians();
  const PlanePoint x{1.0, 0.7};
  const double base = k_apply_est1(f, x, cfg);
  for (double lambda : {0.5, 2.0, 3.0}) {
    const double scaled = k_apply_est1(f, {lambda * x.x1, lambda * x.x2}, cfg);
    CHECK(scaled == doctest::Approx(base / lambda).epsilon(1e-6));
  }
}

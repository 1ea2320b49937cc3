#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "kop/pvquad.hpp"
#include "kop/spline.hpp"
#include "kop/tensor.hpp"

namespace kop {

struct PlanePoint {
  double x1 = 0.0;
  double x2 = 0.0;
};

/// Orientation-preserving linear map of the plane (det > 0 enforced).
class GL2Plus {
 public:
  GL2Plus(double a, double b, double c, double d);

  double det() const { return a_ * d_ - b_ * c_; }
  PlanePoint apply(PlanePoint p) const { return {a_ * p.x1 + b_ * p.x2, c_ * p.x1 + d_ * p.x2}; }
  GL2Plus operator*(const GL2Plus& o) const;

  static GL2Plus rotation(double theta);
  static GL2Plus scale(double d1, double d2);  // requires d1*d2 > 0

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

 private:
  double a_, b_, c_, d_;
};

/// x1 y2 - x2 y1 (the 2x2 determinant of the pair).
double cross(PlanePoint x, PlanePoint y);

/// Antisymmetric kernel 1/(pi (x1 y2 - x2 y1)). Throws std::domain_error on
/// collinear arguments.
double kernel_eval(PlanePoint x, PlanePoint y);

using Evaluable2D = std::function<double(double, double)>;

/// Box |y1-c1| <= r1, |y2-c2| <= r2 outside which a 2D function is
/// numerically zero; drives truncation of the double quadratures.
struct Box2D {
  double c1 = 0.0, r1 = 40.0;
  double c2 = 0.0, r2 = 40.0;
};
Box2D tensor_box(const TensorSum2D& f);

/// Tensor representation: sum_i -(1/x1) int f_i(y1) (H g_i)(x2 y1 / x1) dy1.
/// Power-type second factors use the closed-form Hilbert transform
/// H[A sgn(.)|.|^{-s}](u) = -A cot(pi s/2) |u|^{-s}; everything else goes
/// through pv_line_hilbert. Requires x1 != 0 and x2 != 0.
double k_apply_est1(const TensorSum2D& f, PlanePoint x, const PVQuadratureConfig& cfg);

/// Double-PV representation (1/pi) int int f(x1 t1, x2 t2)/(t2 - t1) dt1 dt2:
/// inner PV via pv_line_hilbert of t1 -> f(x1 t1, x2 t2) at t2, then a plain
/// outer integral. Carries the orientation factor sgn(x1 x2) of the
/// substitution y = (x1 t1, x2 t2), so it equals the operator in every
/// quadrant. Requires x1 != 0 and x2 != 0.
double k_apply_stepanov(const Evaluable2D& f, const Box2D& box, PlanePoint x,
                        const PVQuadratureConfig& cfg);
double k_apply_stepanov(const TensorSum2D& f, PlanePoint x, const PVQuadratureConfig& cfg);

/// Line integrals over L_xi = {(eta, xi eta)}: parameter form, length-element
/// form, and the orientation-weighted form int sgn(eta) f(eta, xi eta) d eta
/// that the kernel route requires. eta_radius truncates the eta axis.
double radon_slice(const Evaluable2D& f, double xi, double eta_radius,
                   const PVQuadratureConfig& cfg);
double radon_slice_length(const Evaluable2D& f, double xi, double eta_radius,
                          const PVQuadratureConfig& cfg);
double radon_slice_signed(const Evaluable2D& f, double xi, double eta_radius,
                          const PVQuadratureConfig& cfg);

/// Signed slice profile sampled once on a fixed grid (uniform core plus
/// log-spaced wings), interpolated by a cubic spline, with a c/|xi| decay
/// model beyond the grid. Shared read-only between target points.
class RadonSliceCache {
 public:
  RadonSliceCache(const Evaluable2D& f, const Box2D& box, const PVQuadratureConfig& cfg);

  double operator()(double xi) const;
  double grid_radius() const { return xi_max_; }
  Function1D as_function() const;

 private:
  std::shared_ptr<const CubicSpline> spline_;
  double xi_max_;
  double left_val_, right_val_;
};

/// Hilbert-of-Radon representation: -(1/x1) H[slice](x2/x1) with the signed
/// slice profile. Requires x1 != 0.
double k_apply_radon(const RadonSliceCache& cache, PlanePoint x, const PVQuadratureConfig& cfg);
double k_apply_radon(const TensorSum2D& f, PlanePoint x, const PVQuadratureConfig& cfg);

/// (S f)(rho, theta) = f(rho cos theta, rho sin theta).
std::function<double(double, double)> polar_lift(Evaluable2D f);

/// Polar-side double integral (1/(pi r)) int_0^inf d rho pv int (S f)(rho,
/// theta)/sin(theta - alpha) d theta, evaluated directly from the definition
/// (angular coupled-PV rule per radius, then the radial integral).
double polar_apply_raw(const Evaluable2D& f, double radial_radius, double r, double alpha,
                       const PVQuadratureConfig& cfg);

struct PolarSample {
  double rho;
  double theta;
};

/// max over samples of |S(Kf) - K_polar(Sf)| / (|K_polar(Sf)| + 1e-12); the
/// Cartesian side uses est1, the polar side polar_apply_raw.
double intertwining_residual(const TensorSum2D& f, std::span<const PolarSample> samples,
                             const PVQuadratureConfig& cfg);

}  // namespace kop

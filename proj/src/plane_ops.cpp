#include "kop/plane_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kop {

namespace {
constexpr double kPi = std::numbers::pi;
}

GL2Plus::GL2Plus(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
  if (!(det() > 0.0)) throw std::invalid_argument("GL2Plus: determinant must be positive");
}

GL2Plus GL2Plus::operator*(const GL2Plus& o) const {
  return GL2Plus(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_,
                 c_ * o.b_ + d_ * o.d_);
}

GL2Plus GL2Plus::rotation(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return GL2Plus(c, -s, s, c);
}

GL2Plus GL2Plus::scale(double d1, double d2) {
  if (!(d1 * d2 > 0.0)) throw std::invalid_argument("GL2Plus::scale: need d1*d2 > 0");
  return GL2Plus(d1, 0.0, 0.0, d2);
}

double cross(PlanePoint x, PlanePoint y) { return x.x1 * y.x2 - x.x2 * y.x1; }

double kernel_eval(PlanePoint x, PlanePoint y) {
  const double d = cross(x, y);
  if (d == 0.0) throw std::domain_error("kernel_eval: collinear arguments, kernel is singular");
  return 1.0 / (kPi * d);
}

Box2D tensor_box(const TensorSum2D& f) {
  Box2D b;
  b.c1 = f.center1();
  b.r1 = std::max(f.radius1(), 1e-3);  // degenerate supports still need a window
  b.c2 = f.center2();
  b.r2 = std::max(f.radius2(), 1e-3);
  return b;
}

namespace {

// Outer-integral edges over the support of the first tensor factor; when the
// integrand carries an |y|^{-s} weight, panels are refined toward 0.
std::vector<double> outer_edges(const Function1D& f, const PVQuadratureConfig& cfg,
                                bool singular_at_zero) {
  double lo, hi;
  std::vector<double> edges;
  if (const auto* c = std::get_if<CompactSupport>(&f.support())) {
    lo = c->a;
    hi = c->b;
    auto u = edges_uniform(lo, hi, 16);
    edges.insert(edges.end(), u.begin(), u.end());
  } else if (const auto* d = std::get_if<DecaySupport>(&f.support())) {
    if (std::isfinite(d->beta)) {
      lo = -cfg.r;
      hi = cfg.r;
    } else {
      lo = d->center - d->radius;
      hi = d->center + d->radius;
    }
    for (int i = 0; i <= 24; ++i)
      edges.push_back(d->center - d->radius + 2.0 * d->radius * i / 24.0);
    if (std::isfinite(d->beta)) {
      // log-spaced coverage of the polynomially decaying region outside the
      // mass window
      const double wlo = d->center - d->radius, whi = d->center + d->radius;
      for (double step : edges_geometric(1e-3, std::max(hi - whi, 1e-2), 1.6))
        edges.push_back(whi + step);
      for (double step : edges_geometric(1e-3, std::max(wlo - lo, 1e-2), 1.6))
        edges.push_back(wlo - step);
    }
  } else {
    throw std::invalid_argument("k_apply_est1: power-type first factor is not integrable");
  }
  if (singular_at_zero || cfg.log_spacing) {
    if (lo < 0.0 && hi > 0.0) {
      auto l = edges_refined_toward_b(std::max(lo, -1.0), 0.0, 44);
      auto r = edges_refined_toward_a(0.0, std::min(hi, 1.0), 44);
      edges.insert(edges.end(), l.begin(), l.end());
      edges.insert(edges.end(), r.begin(), r.end());
    } else if (lo >= 0.0 && lo < 1e-12) {
      auto r = edges_refined_toward_a(0.0, std::min(hi, 1.0), 44);
      edges.insert(edges.end(), r.begin(), r.end());
    } else if (hi <= 0.0 && hi > -1e-12) {
      auto l = edges_refined_toward_b(std::max(lo, -1.0), 0.0, 44);
      edges.insert(edges.end(), l.begin(), l.end());
    }
  }
  return normalize_edges(edges, lo, hi);
}

}  // namespace

double k_apply_est1(const TensorSum2D& f, PlanePoint x, const PVQuadratureConfig& cfg) {
  cfg.validate();
  if (x.x1 == 0.0 || x.x2 == 0.0)
    throw std::domain_error(
        "k_apply_est1: the representation divides by x1 and weights by x2/x1; both "
        "coordinates must be nonzero");
  const double ratio = x.x2 / x.x1;

  double acc = 0.0;
  for (const auto& term : f.terms()) {
    std::function<double(double)> hilbert_g;
    bool singular = false;
    if (const auto* pw = std::get_if<PowerSupport>(&term.g.support())) {
      // closed form: H[A sgn(.)|.|^{-s}](u) = -A cot(pi s / 2) |u|^{-s}
      const double s = pw->s;
      const double coef = -term.g(1.0) / std::tan(kPi * s / 2.0);
      hilbert_g = [coef, s](double u) { return coef * std::pow(std::abs(u), -s); };
      singular = true;
    } else {
      const Function1D g = term.g;
      const PVQuadratureConfig icfg = cfg;
      hilbert_g = [g, icfg](double u) { return pv_line_hilbert(g, u, icfg).value; };
    }
    const Function1D& f1 = term.f;
    auto integrand = [&f1, &hilbert_g, ratio](double y) { return f1(y) * hilbert_g(ratio * y); };
    acc += integrate_panels(integrand, outer_edges(f1, cfg, singular), 16);
  }
  return -acc / x.x1;
}

double k_apply_stepanov(const Evaluable2D& f, const Box2D& box, PlanePoint x,
                        const PVQuadratureConfig& cfg) {
  cfg.validate();
  if (x.x1 == 0.0 || x.x2 == 0.0)
    throw std::domain_error("k_apply_stepanov: requires x1 != 0 and x2 != 0");

  const double inner_center = box.c1 / x.x1;
  const double inner_radius = box.r1 / std::abs(x.x1);
  double t2lo = (box.c2 - box.r2) / x.x2;
  double t2hi = (box.c2 + box.r2) / x.x2;
  if (t2lo > t2hi) std::swap(t2lo, t2hi);

  auto outer = [&](double t2) {
    Function1D slice([&f, x, t2](double t) { return f(x.x1 * t, x.x2 * t2); },
                     DecaySupport{std::numeric_limits<double>::infinity(), inner_center,
                                  inner_radius});
    return pv_line_hilbert(slice, t2, cfg).value;
  };
  const double val = integrate_panels(outer, edges_uniform(t2lo, t2hi, 32), 16);
  // orientation of the substitution y = (x1 t1, x2 t2)
  return (x.x1 * x.x2 > 0.0) ? val : -val;
}

double k_apply_stepanov(const TensorSum2D& f, PlanePoint x, const PVQuadratureConfig& cfg) {
  return k_apply_stepanov(f.as_evaluable(), tensor_box(f), x, cfg);
}

namespace {

double slice_core(const Evaluable2D& f, double xi, double eta_radius, bool orientation_weight,
                  const PVQuadratureConfig& cfg) {
  cfg.validate();
  const double m = eta_radius;
  if (!(m > 0.0)) return 0.0;
  // panels refined toward 0: the sgn weight kinks there and the mass
  // concentrates there as |xi| grows
  std::vector<double> pos = edges_refined_toward_a(0.0, m, 40);
  auto u = edges_uniform(0.0, m, 12);
  pos.insert(pos.end(), u.begin(), u.end());
  pos = normalize_edges(pos, 0.0, m);

  // each positive node is paired with its mirror image, so odd integrands
  // cancel exactly instead of leaving accumulation residue
  auto pair_sum = [&f, xi, orientation_weight](double eta) {
    const double plus = f(eta, xi * eta);
    double minus = f(-eta, xi * -eta);
    if (orientation_weight) minus = -minus;
    return plus + minus;
  };
  return integrate_panels(pair_sum, pos, 16);
}

}  // namespace

double radon_slice(const Evaluable2D& f, double xi, double eta_radius,
                   const PVQuadratureConfig& cfg) {
  return slice_core(f, xi, eta_radius, false, cfg);
}

double radon_slice_length(const Evaluable2D& f, double xi, double eta_radius,
                          const PVQuadratureConfig& cfg) {
  return std::sqrt(1.0 + xi * xi) * slice_core(f, xi, eta_radius, false, cfg);
}

double radon_slice_signed(const Evaluable2D& f, double xi, double eta_radius,
                          const PVQuadratureConfig& cfg) {
  return slice_core(f, xi, eta_radius, true, cfg);
}

RadonSliceCache::RadonSliceCache(const Evaluable2D& f, const Box2D& box,
                                 const PVQuadratureConfig& cfg) {
  const double xi_lin = 16.0;
  xi_max_ = std::max(1e4, cfg.r);
  std::vector<double> grid;
  for (int i = 0; i <= 1024; ++i) grid.push_back(-xi_lin + 2.0 * xi_lin * i / 1024.0);
  for (double w : edges_geometric(xi_lin, xi_max_, 1.1)) {
    if (w > xi_lin) {
      grid.push_back(w);
      grid.push_back(-w);
    }
  }
  std::sort(grid.begin(), grid.end());

  const double eta_max = std::abs(box.c1) + box.r1;
  const double y2_max = std::abs(box.c2) + box.r2;
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double xi = grid[i];
    const double m = std::min(eta_max, y2_max / std::max(std::abs(xi), 1e-300));
    vals[i] = radon_slice_signed(f, xi, m, cfg);
  }
  left_val_ = vals.front();
  right_val_ = vals.back();
  spline_ = std::make_shared<const CubicSpline>(std::move(grid), std::move(vals));
}

double RadonSliceCache::operator()(double xi) const {
  if (xi > xi_max_) return right_val_ * (xi_max_ / xi);
  if (xi < -xi_max_) return left_val_ * (xi_max_ / -xi);
  return (*spline_)(xi);
}

Function1D RadonSliceCache::as_function() const {
  RadonSliceCache copy = *this;
  return Function1D([copy](double xi) { return copy(xi); },
                    DecaySupport{1.0, 0.0, xi_max_});
}

double k_apply_radon(const RadonSliceCache& cache, PlanePoint x, const PVQuadratureConfig& cfg) {
  if (x.x1 == 0.0)
    throw std::domain_error("k_apply_radon: the representation divides by x1");
  PVQuadratureConfig hcfg = cfg;
  hcfg.r = cache.grid_radius();
  hcfg.tail = TailPolicy::power_extrapolate;
  const double h = pv_line_hilbert(cache.as_function(), x.x2 / x.x1, hcfg).value;
  return -h / x.x1;
}

double k_apply_radon(const TensorSum2D& f, PlanePoint x, const PVQuadratureConfig& cfg) {
  RadonSliceCache cache(f.as_evaluable(), tensor_box(f), cfg);
  return k_apply_radon(cache, x, cfg);
}

std::function<double(double, double)> polar_lift(Evaluable2D f) {
  return [f = std::move(f)](double rho, double theta) {
    return f(rho * std::cos(theta), rho * std::sin(theta));
  };
}

double polar_apply_raw(const Evaluable2D& f, double radial_radius, double r, double alpha,
                       const PVQuadratureConfig& cfg) {
  cfg.validate();
  if (!(r > 0.0)) throw std::domain_error("polar_apply_raw: r must be positive");
  int n_circ = std::clamp(cfg.n, 256, 2048);
  if (n_circ % 2 != 0) ++n_circ;

  auto angular = [&f, alpha, n_circ](double rho) {
    return pv_circle(
        [&f, alpha, rho](double t) {
          return f(rho * std::cos(alpha + t), rho * std::sin(alpha + t)) / std::sin(t);
        },
        n_circ);
  };
  std::vector<double> edges = edges_refined_toward_a(0.0, radial_radius, 36);
  auto u = edges_uniform(0.0, radial_radius, 12);
  edges.insert(edges.end(), u.begin(), u.end());
  const double radial = integrate_panels(angular, normalize_edges(edges, 0.0, radial_radius), 16);
  return radial / (kPi * r);
}

double intertwining_residual(const TensorSum2D& f, std::span<const PolarSample> samples,
                             const PVQuadratureConfig& cfg) {
  const Box2D box = tensor_box(f);
  const double rad = std::hypot(std::abs(box.c1) + box.r1, std::abs(box.c2) + box.r2);
  const auto f2d = f.as_evaluable();
  double worst = 0.0;
  for (const auto& s : samples) {
    const PlanePoint x{s.rho * std::cos(s.theta), s.rho * std::sin(s.theta)};
    const double lhs = k_apply_est1(f, x, cfg);
    const double rhs = polar_apply_raw(f2d, rad, s.rho, s.theta, cfg);
    worst = std::max(worst, std::abs(lhs - rhs) / (std::abs(rhs) + 1e-12));
  }
  return worst;
}

}  // namespace kop

#include "kop/circle_ops.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kop/parallel.hpp"
#include "kop/quadrature.hpp"

namespace kop {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_quad_nodes(int n_quad) {
  if (n_quad < 8 || n_quad % 2 != 0)
    throw std::invalid_argument("circle operators: quadrature node count must be even and >= 8");
}
}  // namespace

std::complex<double> k1_multiplier(int k) {
  if (k % 2 == 0) return {0.0, 0.0};
  return {0.0, k > 0 ? -2.0 : 2.0};
}

std::complex<double> hilbert_multiplier(int k) {
  if (k == 0) return {0.0, 0.0};
  return {0.0, k > 0 ? -1.0 : 1.0};
}

std::complex<double> j_multiplier(int k) { return k1_multiplier(k) - hilbert_multiplier(k); }

std::complex<double> k1_point(const PeriodicFunction& phi, double alpha, int n_quad) {
  return pv_circle([&phi, alpha](double t) { return phi(alpha - t) / std::sin(t); }, n_quad) /
         kPi;
}

CircleFunction k1_apply(const PeriodicFunction& phi, int n_out, int n_quad) {
  check_quad_nodes(n_quad);
  std::vector<std::complex<double>> v(n_out);
  const auto nodes = circle_nodes(n_out);
  parallel_for(n_out, [&](int j) { v[j] = k1_point(phi, nodes[j], n_quad); });
  return CircleFunction(n_out, std::move(v));
}

CircleFunction k1_apply(const CircleFunction& phi, int n_quad) {
  const int k_max = phi.size() / 2 - 1;
  return k1_apply(to_periodic(analyze(phi, k_max)), phi.size(), n_quad);
}

FourierSpectrum k1_apply(const FourierSpectrum& spec) {
  FourierSpectrum out(spec.k_max());
  for (int k = -spec.k_max(); k <= spec.k_max(); ++k)
    out.coeff(k) = k1_multiplier(k) * spec.coeff(k);
  return out;
}

std::complex<double> hilbert_circle_point(const PeriodicFunction& phi, double alpha, int n_quad) {
  return pv_circle(
             [&phi, alpha](double t) { return phi(alpha - t) / std::tan(0.5 * t); }, n_quad) /
         kTwoPi;
}

CircleFunction hilbert_circle(const PeriodicFunction& phi, int n_out, int n_quad) {
  check_quad_nodes(n_quad);
  std::vector<std::complex<double>> v(n_out);
  const auto nodes = circle_nodes(n_out);
  parallel_for(n_out, [&](int j) { v[j] = hilbert_circle_point(phi, nodes[j], n_quad); });
  return CircleFunction(n_out, std::move(v));
}

FourierSpectrum hilbert_circle(const FourierSpectrum& spec) {
  FourierSpectrum out(spec.k_max());
  for (int k = -spec.k_max(); k <= spec.k_max(); ++k)
    out.coeff(k) = hilbert_multiplier(k) * spec.coeff(k);
  return out;
}

namespace {

// Edges for one half-period [0,pi] of the regularized J integrand: refined
// toward the (pi - t)^{gamma-1} singularity at pi, with extra refinement
// around any cusp of phi crossing the window.
std::vector<double> j_edges(const PeriodicFunction& phi, double alpha, bool positive_half) {
  std::vector<double> edges = edges_refined_toward_b(0.0, kPi, 48);
  auto coarse = edges_uniform(0.0, kPi, 24);
  edges.insert(edges.end(), coarse.begin(), coarse.end());
  for (double kink : phi.kink_points()) {
    // integrand kink where alpha -+ t hits the cusp
    double t = positive_half ? wrap_angle(alpha - kink) : -wrap_angle(alpha - kink);
    if (t > 0.0 && t < kPi) {
      edges.push_back(t);
      for (int j = 1; j <= 20; ++j) {
        const double d = std::min(t, kPi - t) * std::pow(0.5, j);
        edges.push_back(t - d);
        edges.push_back(t + d);
      }
    }
  }
  return normalize_edges(edges, 0.0, kPi);
}

}  // namespace

std::complex<double> j_point(const PeriodicFunction& phi, double alpha) {
  if (!phi.holder_witness())
    throw std::invalid_argument(
        "j_apply: a Holder witness is required; the regularized integral converges "
        "only under a Lambda_gamma bound");

  const std::complex<double> phi_pi = phi(alpha - kPi);  // == phi(alpha + pi)

  // t in [0,pi): (phi(alpha-t) - phi(alpha-pi)) tan(t/2)
  auto pos = [&phi, alpha, phi_pi](double t) {
    return (phi(alpha - t) - phi_pi) * std::tan(0.5 * t);
  };
  // t in (-pi,0], substituted u = -t: -(phi(alpha+u) - phi(alpha+pi)) tan(u/2)
  auto neg = [&phi, alpha, phi_pi](double u) {
    return -(phi(alpha + u) - phi_pi) * std::tan(0.5 * u);
  };

  const int order = 12;
  const std::complex<double> ipos = integrate_panels(pos, j_edges(phi, alpha, true), order);
  const std::complex<double> ineg = integrate_panels(neg, j_edges(phi, alpha, false), order);
  return (ipos + ineg) / kTwoPi;
}

CircleFunction j_apply(const PeriodicFunction& phi, int n_out) {
  if (!phi.holder_witness())
    throw std::invalid_argument(
        "j_apply: a Holder witness is required; the regularized integral converges "
        "only under a Lambda_gamma bound");
  std::vector<std::complex<double>> v(n_out);
  const auto nodes = circle_nodes(n_out);
  parallel_for(n_out, [&](int j) { v[j] = j_point(phi, nodes[j]); });
  return CircleFunction(n_out, std::move(v));
}

double k1_decomposition_residual(const PeriodicFunction& phi, int n_out, int n_quad) {
  const auto nodes = circle_nodes(n_out);
  double worst = 0.0;
  for (double a : nodes) {
    const std::complex<double> lhs = k1_point(phi, a, n_quad);
    const std::complex<double> rhs = hilbert_circle_point(phi, a, n_quad) + j_point(phi, a);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

std::complex<double> k2_point(const PolarTensorSum& phi, double alpha,
                              const PVQuadratureConfig& cfg) {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& term : phi.terms()) {
    const IntegralResult radial = integrate_halfline(term.radial, cfg);
    acc += radial.value * k1_point(term.angular, alpha, cfg.n);
  }
  return acc;
}

CircleFunction k2_apply(const PolarTensorSum& phi, int n_out, const PVQuadratureConfig& cfg) {
  // factor the radial integrals out of the alpha loop
  std::vector<double> radial(phi.terms().size());
  for (std::size_t i = 0; i < phi.terms().size(); ++i)
    radial[i] = integrate_halfline(phi.terms()[i].radial, cfg).value;

  const auto nodes = circle_nodes(n_out);
  std::vector<std::complex<double>> v(n_out);
  parallel_for(n_out, [&](int j) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < phi.terms().size(); ++i)
      acc += radial[i] * k1_point(phi.terms()[i].angular, nodes[j], cfg.n);
    v[j] = acc;
  });
  return CircleFunction(n_out, std::move(v));
}

std::complex<double> calK_point(const PolarTensorSum& phi, double r, double alpha,
                                const PVQuadratureConfig& cfg) {
  if (!(r > 0.0)) throw std::domain_error("calK: r must be positive (punctured plane)");
  return k2_point(phi, alpha, cfg) / r;
}

CircleFunction calK_apply(const PolarTensorSum& phi, double r, int n_out,
                          const PVQuadratureConfig& cfg) {
  if (!(r > 0.0)) throw std::domain_error("calK: r must be positive (punctured plane)");
  CircleFunction out = k2_apply(phi, n_out, cfg);
  for (int j = 0; j < n_out; ++j) out[j] /= r;
  return out;
}

}  // namespace kop

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "kop/circle_ops.hpp"
#include "kop/plane_ops.hpp"

namespace kop {

/// Sharp Lp norm of the Hilbert transform: tan(pi/2p) for 1 < p <= 2,
/// cot(pi/2p) for p > 2. Continuous at p = 2 with value 1; equal for
/// conjugate exponent pairs.
double riesz_constant(double p);

/// v_p(x) = |x1|^{-1/q} |x2|^{-1/p}, 1/p + 1/q = 1; both coordinates nonzero.
double v_p_weight(PlanePoint x, double p);

/// c_gamma = gamma^{-1} pi^{gamma-1} + H_norm (2pi)^gamma. The Holder norm of
/// the circle Hilbert transform is a caller-supplied parameter: the classical
/// boundedness theorem is qualitative and carries no usable constant.
double c_gamma(double gamma, double hilbert_holder_norm);

/// One inequality check: pass iff lhs <= rhs * slack_factor.
struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack_factor = 1.0;
  bool pass = false;
  std::map<std::string, std::string> context;

  nlohmann::ordered_json to_json() const;
  static std::string csv_header();
  std::string csv_row() const;
};

BoundReport make_report(std::string name, double lhs, double rhs, double slack,
                        std::map<std::string, std::string> context = {});

/// |K f(x)| <= C_p v_p(x) * (projective bound) at each point, slack 1.01.
std::vector<BoundReport> check_est3(const TensorSum2D& f, std::span<const PlanePoint> points,
                                    double p, const PVQuadratureConfig& cfg);

/// max_alpha |K2 phi| <= 2 sum_i ||phi1_i||_L1 ||phi2_i||_L2, slack 1.01
/// (sup-norm lattice instance, ||1|| = 1).
BoundReport check_k2_bound(const PolarTensorSum& phi, int n_alpha, const PVQuadratureConfig& cfg);

/// max_alpha |J phi| <= gamma^{-1} pi^{gamma-1} ||phi||_Lambda_gamma; slack
/// 1.05 when the seminorm is grid-estimated (it is a lower bound), 1.01 when
/// analytic.
BoundReport check_j_bound(const PeriodicFunction& phi, int n_alpha);

/// |K1 phi| <= c_gamma ||phi||_Lambda_gamma for even phi. Without a supplied
/// Hilbert Holder norm the report is informational (pass not asserted): only
/// the J part of c_gamma is certified unconditionally.
BoundReport check_k1_even_holder(const PeriodicFunction& phi, int n_alpha, int n_quad,
                                 std::optional<double> hilbert_holder_norm);

}  // namespace kop

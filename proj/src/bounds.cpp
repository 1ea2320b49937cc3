#include "kop/bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace kop {

namespace {
constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}
}  // namespace

double riesz_constant(double p) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("riesz_constant: p must lie in (1, inf)");
  if (p == 2.0) return 1.0;  // tan(pi/4) exactly; fp tan loses the last ulp
  if (p < 2.0) return std::tan(kPi / (2.0 * p));
  return 1.0 / std::tan(kPi / (2.0 * p));
}

double v_p_weight(PlanePoint x, double p) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("v_p_weight: p must lie in (1, inf)");
  if (x.x1 == 0.0 || x.x2 == 0.0)
    throw std::domain_error("v_p_weight: undefined on the coordinate axes");
  const double q = p / (p - 1.0);
  return std::pow(std::abs(x.x1), -1.0 / q) * std::pow(std::abs(x.x2), -1.0 / p);
}

double c_gamma(double gamma, double hilbert_holder_norm) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("c_gamma: gamma must lie in (0,1)");
  if (hilbert_holder_norm < 0.0)
    throw std::invalid_argument("c_gamma: the Hilbert Holder norm parameter must be >= 0");
  return std::pow(kPi, gamma - 1.0) / gamma +
         hilbert_holder_norm * std::pow(2.0 * kPi, gamma);
}

nlohmann::ordered_json BoundReport::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["slack_factor"] = slack_factor;
  j["verdict"] = pass ? "pass" : "fail";
  j["context"] = context;
  return j;
}

std::string BoundReport::csv_header() { return "name,lhs,rhs,slack_factor,verdict,context"; }

std::string BoundReport::csv_row() const {
  std::string ctx;
  for (const auto& [k, v] : context) {
    if (!ctx.empty()) ctx += ";";
    ctx += k + "=" + v;
  }
  std::ostringstream os;
  os.precision(17);
  os << csv_escape(name) << ',' << lhs << ',' << rhs << ',' << slack_factor << ','
     << (pass ? "pass" : "fail") << ',' << csv_escape(ctx);
  return os.str();
}

BoundReport make_report(std::string name, double lhs, double rhs, double slack,
                        std::map<std::string, std::string> context) {
  BoundReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack_factor = slack;
  r.pass = lhs <= rhs * slack;
  r.context = std::move(context);
  return r;
}

std::vector<BoundReport> check_est3(const TensorSum2D& f, std::span<const PlanePoint> points,
                                    double p, const PVQuadratureConfig& cfg) {
  const double cp = riesz_constant(p);
  const double bound = projective_bound(f, cfg);
  std::vector<BoundReport> out;
  out.reserve(points.size());
  for (const auto& x : points) {
    const double lhs = std::abs(k_apply_est1(f, x, cfg));
    const double rhs = cp * v_p_weight(x, p) * bound;
    out.push_back(make_report("est3", lhs, rhs, 1.0 + 1e-2,
                              {{"p", fmt(p)},
                               {"x1", fmt(x.x1)},
                               {"x2", fmt(x.x2)},
                               {"projective_bound", fmt(bound)}}));
  }
  return out;
}

BoundReport check_k2_bound(const PolarTensorSum& phi, int n_alpha,
                           const PVQuadratureConfig& cfg) {
  double rhs = 0.0;
  for (const auto& term : phi.terms()) {
    const double l1 = lp_norm(term.radial, 1.0, cfg);
    double l2;
    if (term.angular.known_l2_norm()) {
      l2 = *term.angular.known_l2_norm();
    } else {
      // grid L2 of the samples; the slack absorbs the quadrature error
      l2 = CircleFunction::sample(term.angular, 512).l2_grid_norm();
    }
    rhs += 2.0 * l1 * l2;
  }
  const double lhs = k2_apply(phi, n_alpha, cfg).max_abs();
  return make_report("k2-tensor", lhs, rhs, 1.0 + 1e-2,
                     {{"terms", std::to_string(phi.terms().size())},
                      {"n_alpha", std::to_string(n_alpha)}});
}

BoundReport check_j_bound(const PeriodicFunction& phi, int n_alpha) {
  if (!phi.holder_witness())
    throw std::invalid_argument("check_j_bound: phi must carry a Holder witness");
  const HolderWitness& w = *phi.holder_witness();
  const double rhs = std::pow(kPi, w.gamma - 1.0) / w.gamma * w.seminorm;
  const double slack =
      w.provenance == HolderWitness::Provenance::grid_estimated ? 1.05 : 1.0 + 1e-2;
  const double lhs = j_apply(phi, n_alpha).max_abs();
  return make_report("j-holder", lhs, rhs, slack,
                     {{"gamma", fmt(w.gamma)},
                      {"seminorm", fmt(w.seminorm)},
                      {"seminorm_provenance",
                       w.provenance == HolderWitness::Provenance::analytic ? "analytic"
                                                                           : "grid-estimated"}});
}

BoundReport check_k1_even_holder(const PeriodicFunction& phi, int n_alpha, int n_quad,
                                 std::optional<double> hilbert_holder_norm) {
  if (!phi.holder_witness())
    throw std::invalid_argument("check_k1_even_holder: phi must carry a Holder witness");
  // evenness gate
  double asym = 0.0;
  for (int i = 0; i < 256; ++i) {
    const double t = (i + 0.5) * kPi / 256.0;
    asym = std::max(asym, std::abs(phi(t) - phi(-t)));
  }
  if (asym > 1e-10)
    throw std::invalid_argument("check_k1_even_holder: phi is not even (the bound needs "
                                "H phi(0) = 0)");

  const HolderWitness& w = *phi.holder_witness();
  const double lhs = k1_apply(phi, n_alpha, n_quad).max_abs();
  const double norm_param = hilbert_holder_norm.value_or(0.0);
  const double rhs = c_gamma(w.gamma, norm_param) * w.seminorm;
  BoundReport r = make_report("k1-even-holder", lhs, rhs, 1.05,
                              {{"gamma", fmt(w.gamma)},
                               {"seminorm", fmt(w.seminorm)},
                               {"hilbert_holder_norm", fmt(norm_param)},
                               {"asserted", hilbert_holder_norm ? "true" : "false"}});
  if (!hilbert_holder_norm) r.pass = true;  // informational: no certified Hilbert part
  return r;
}

}  // namespace kop

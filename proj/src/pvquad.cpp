#include "kop/pvquad.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace kop {

namespace {

constexpr double kPi = std::numbers::pi;

// Append a uniformly subdivided window [wlo,whi] clipped to (lo,hi).
void append_window(std::vector<double>& edges, double wlo, double whi, double lo, double hi,
                   int panels) {
  wlo = std::max(wlo, lo);
  whi = std::min(whi, hi);
  if (!(whi > wlo)) return;
  for (int i = 0; i <= panels; ++i) edges.push_back(wlo + (whi - wlo) * i / panels);
}

// Log-spaced edges marching away from a window edge toward far_end; used for
// the polynomially decaying region outside the mass window.
void append_geometric_from_edge(std::vector<double>& edges, double edge, double far_end) {
  const bool leftward = far_end < edge;
  const double dist = std::abs(far_end - edge);
  if (dist <= 1e-9) return;
  const double d0 = std::max(1e-3, dist * 1e-4);
  if (d0 >= dist) {
    edges.push_back(far_end);
    return;
  }
  for (double step : edges_geometric(d0, dist, 1.5))
    edges.push_back(leftward ? edge - step : edge + step);
}

int line_order(const PVQuadratureConfig& cfg) { return std::clamp(cfg.n / 128, 8, 24); }

}  // namespace

std::map<std::string, std::string> PVQuadratureConfig::to_kv() const {
  return {{"n", std::to_string(n)},
          {"r", std::to_string(r)},
          {"tail", tail == TailPolicy::ignore ? "ignore" : "power-extrapolate"},
          {"log_spacing", log_spacing ? "true" : "false"}};
}

PVQuadratureConfig PVQuadratureConfig::from_kv(const std::map<std::string, std::string>& kv) {
  PVQuadratureConfig cfg;
  if (auto it = kv.find("n"); it != kv.end()) cfg.n = std::stoi(it->second);
  if (auto it = kv.find("r"); it != kv.end()) cfg.r = std::stod(it->second);
  if (auto it = kv.find("tail"); it != kv.end()) {
    if (it->second == "ignore")
      cfg.tail = TailPolicy::ignore;
    else if (it->second == "power-extrapolate")
      cfg.tail = TailPolicy::power_extrapolate;
    else
      throw std::invalid_argument("PVQuadratureConfig: unknown tail policy '" + it->second + "'");
  }
  if (auto it = kv.find("log_spacing"); it != kv.end()) cfg.log_spacing = it->second == "true";
  cfg.validate();
  return cfg;
}

PVQuadratureConfig power_type_config(int n) {
  PVQuadratureConfig cfg;
  cfg.n = n;
  cfg.r = 1e4;
  cfg.tail = TailPolicy::power_extrapolate;
  cfg.log_spacing = true;
  return cfg;
}

IntegralResult pv_line_hilbert(const Function1D& g, double x, const PVQuadratureConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(x)) throw std::invalid_argument("pv_line_hilbert: x must be finite");

  IntegralResult res;
  const auto* pw = std::get_if<PowerSupport>(&g.support());

  double lo = 0.0;
  if (pw && x == 0.0) {
    // g has its pole at the evaluation point; the transform diverges there.
    // Integrate outside a symmetric neighborhood and say so.
    res.flags |= kSingularityExcluded;
    lo = 1e-8;
  }

  double radius = cfg.r;
  if (!pw && std::isfinite(g.radius()))
    radius = std::min(cfg.r, std::abs(x) + std::abs(g.center()) + g.radius() + 2.0);
  radius = std::max(radius, 4.0);

  // Difference-quotient panel on (0,1] refined toward 0, geometric panels on
  // (1,R]. The split point 1 is fixed for reproducibility.
  std::vector<double> edges = edges_refined_toward_a(lo, 1.0, 48);
  {
    auto far = edges_geometric(1.0, radius, 2.0);
    edges.insert(edges.end(), far.begin(), far.end());
  }
  if (!pw) {
    if (std::isfinite(g.radius())) {
      const double c = g.center(), r = g.radius();
      append_window(edges, x - c - r, x - c + r, lo, radius, 16);  // image of g(x-t)
      append_window(edges, c - x - r, c - x + r, lo, radius, 16);  // image of g(x+t)
    }
  } else {
    // integrable |t-|x||^{-s} spike where the shifted argument crosses the pole
    const double ax = std::abs(x);
    if (ax > lo && ax < radius) {
      edges.push_back(ax);
      for (int j = 1; j <= 16; ++j) {
        const double d = ax * std::pow(0.5, j);
        edges.push_back(ax - d);
        edges.push_back(ax + d);
      }
    }
  }
  edges = normalize_edges(edges, lo, radius);

  auto diff = [&g, x](double t) { return (g(x - t) - g(x + t)) / t; };
  double sum = integrate_panels(diff, edges, line_order(cfg));

  if (cfg.tail == TailPolicy::power_extrapolate) {
    // model: diff(t) ~ diff(R) (R/t)^mu beyond R
    double mu = 0.0;
    if (pw) {
      mu = pw->s + 1.0;
    } else if (const auto* d = std::get_if<DecaySupport>(&g.support());
               d != nullptr && std::isfinite(d->beta)) {
      mu = d->beta + 2.0;
    }
    if (mu > 1.0) sum += diff(radius) * radius / (mu - 1.0);
  } else if (pw) {
    res.flags |= kTailWarning;  // truncated |t|^{-s-1} tail is not negligible
  }

  res.value = sum / kPi;
  return res;
}

IntegralResult integrate_halfline(const Function1D& f, const PVQuadratureConfig& cfg) {
  cfg.validate();
  IntegralResult res;

  if (f.known_integral()) {
    bool covers_halfline_only = f.domain() == Domain::half_line;
    if (const auto* c = std::get_if<CompactSupport>(&f.support()))
      covers_halfline_only = covers_halfline_only || c->a >= 0.0;
    if (covers_halfline_only) {
      res.value = *f.known_integral();
      return res;
    }
  }

  const int order = 16;
  auto eval = [&f](double t) { return f(t); };

  if (const auto* c = std::get_if<CompactSupport>(&f.support())) {
    const double a = std::max(c->a, 0.0);
    if (!(c->b > a)) return res;
    std::vector<double> edges = edges_uniform(a, c->b, 16);
    if (cfg.log_spacing && a < 1e-12) {
      auto fine = edges_refined_toward_a(a, c->b, 40);
      edges.insert(edges.end(), fine.begin(), fine.end());
    }
    res.value = integrate_panels(eval, normalize_edges(edges, a, c->b), order);
    return res;
  }

  if (f.is_power_type()) {
    const double hi = cfg.r;
    std::vector<double> edges = edges_refined_toward_a(0.0, 1.0, 48);
    auto far = edges_geometric(1.0, hi, 2.0);
    edges.insert(edges.end(), far.begin(), far.end());
    res.value = integrate_panels(eval, normalize_edges(edges, 0.0, hi), order);
    res.flags |= kTailWarning;  // |t|^{-s} tail diverges; truncation is essential
    return res;
  }

  const auto& d = std::get<DecaySupport>(f.support());
  const double wlo = std::max(0.0, d.center - d.radius);
  const double whi = std::max(d.center + d.radius, wlo + 1e-6);
  const double hi = std::isfinite(d.beta) ? cfg.r : std::min(whi, cfg.r);

  std::vector<double> edges;
  if (wlo > 0.0) append_geometric_from_edge(edges, wlo, 0.0);
  append_window(edges, wlo, whi, 0.0, hi, 24);
  if (hi > whi) append_geometric_from_edge(edges, whi, hi);
  if (cfg.log_spacing) {
    auto fine = edges_refined_toward_a(0.0, std::min(1.0, hi), 40);
    edges.insert(edges.end(), fine.begin(), fine.end());
  }
  res.value = integrate_panels(eval, normalize_edges(edges, 0.0, hi), order);

  if (std::isfinite(d.beta)) {
    if (d.beta > 1.0) {
      if (cfg.tail == TailPolicy::power_extrapolate) res.value += f(hi) * hi / (d.beta - 1.0);
    } else {
      res.flags |= kTailWarning;  // beta <= 1: convergence not certified by the metadata
    }
  }
  return res;
}

IntegralResult integrate_line(const Function1D& f, const PVQuadratureConfig& cfg) {
  cfg.validate();
  IntegralResult res;
  if (f.known_integral()) {
    res.value = *f.known_integral();
    return res;
  }

  const int order = 16;
  auto eval = [&f](double t) { return f(t); };

  if (const auto* c = std::get_if<CompactSupport>(&f.support())) {
    if (!(c->b > c->a)) return res;
    std::vector<double> edges = edges_uniform(c->a, c->b, 24);
    if (cfg.log_spacing && c->a < 0.0 && c->b > 0.0) {
      auto left = edges_refined_toward_b(c->a, 0.0, 40);
      auto right = edges_refined_toward_a(0.0, c->b, 40);
      edges.insert(edges.end(), left.begin(), left.end());
      edges.insert(edges.end(), right.begin(), right.end());
    }
    res.value = integrate_panels(eval, normalize_edges(edges, c->a, c->b), order);
    return res;
  }

  if (f.is_power_type()) {
    // Mirrored edges: for the odd sgn(t)|t|^{-s} family the two half-axes
    // cancel exactly at the panel level.
    const double hi = cfg.r;
    std::vector<double> pos = edges_refined_toward_a(0.0, 1.0, 48);
    auto far = edges_geometric(1.0, hi, 2.0);
    pos.insert(pos.end(), far.begin(), far.end());
    pos = normalize_edges(pos, 0.0, hi);
    std::vector<double> edges(pos.rbegin(), pos.rend());
    for (double& e : edges) e = -e;
    edges.insert(edges.end(), pos.begin() + 1, pos.end());
    res.value = integrate_panels(eval, edges, order);
    res.flags |= kTailWarning;
    return res;
  }

  const auto& d = std::get<DecaySupport>(f.support());
  const double wlo = d.center - d.radius;
  const double whi = d.center + d.radius;
  const double lo = std::isfinite(d.beta) ? -cfg.r : std::max(wlo, -cfg.r);
  const double hi = std::isfinite(d.beta) ? cfg.r : std::min(whi, cfg.r);

  std::vector<double> edges;
  append_window(edges, wlo, whi, lo, hi, 32);
  if (wlo > lo) append_geometric_from_edge(edges, wlo, lo);
  if (whi < hi) append_geometric_from_edge(edges, whi, hi);
  if (cfg.log_spacing) {
    auto left = edges_refined_toward_b(std::max(lo, -1.0), 0.0, 40);
    auto right = edges_refined_toward_a(0.0, std::min(hi, 1.0), 40);
    edges.insert(edges.end(), left.begin(), left.end());
    edges.insert(edges.end(), right.begin(), right.end());
  }
  res.value = integrate_panels(eval, normalize_edges(edges, lo, hi), order);

  if (std::isfinite(d.beta)) {
    if (d.beta > 1.0) {
      if (cfg.tail == TailPolicy::power_extrapolate)
        res.value += (f(hi) * hi + f(lo) * -lo) / (d.beta - 1.0);
    } else {
      res.flags |= kTailWarning;
    }
  }
  return res;
}

double lp_norm(const Function1D& f, double p, const PVQuadratureConfig& cfg) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  if (auto v = f.known_lp_norm(p)) return *v;
  if (f.is_power_type())
    throw std::invalid_argument("lp_norm: power-type descriptor has no finite global Lp norm");

  Support s = f.support();
  if (auto* d = std::get_if<DecaySupport>(&s))
    if (std::isfinite(d->beta)) d->beta *= p;
  Function1D fp([f, p](double t) { return std::pow(std::abs(f(t)), p); }, s, f.domain());
  const IntegralResult r =
      f.domain() == Domain::half_line ? integrate_halfline(fp, cfg) : integrate_line(fp, cfg);
  return std::pow(std::max(r.value, 0.0), 1.0 / p);
}

double projective_bound(const TensorSum2D& f, const PVQuadratureConfig& cfg) {
  if (f.supplied_projective_bound()) return *f.supplied_projective_bound();
  double acc = 0.0;
  for (const auto& t : f.terms()) acc += lp_norm(t.f, f.q(), cfg) * lp_norm(t.g, f.p(), cfg);
  return acc;
}

}  // namespace kop

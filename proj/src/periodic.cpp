#include "kop/periodic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace kop {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

PeriodicFunction::PeriodicFunction(Eval eval) : eval_(std::move(eval)) {
  if (!eval_) throw std::invalid_argument("PeriodicFunction: empty evaluation contract");
}

PeriodicFunction& PeriodicFunction::with_holder_witness(HolderWitness w) {
  if (!(w.gamma > 0.0 && w.gamma < 1.0))
    throw std::invalid_argument("HolderWitness: gamma must lie in (0,1)");
  if (w.seminorm < 0.0) throw std::invalid_argument("HolderWitness: seminorm must be >= 0");
  witness_ = w;
  return *this;
}

PeriodicFunction& PeriodicFunction::with_known_l2_norm(double v) {
  l2_norm_ = v;
  return *this;
}

PeriodicFunction& PeriodicFunction::with_kink_points(std::vector<double> pts) {
  kinks_ = std::move(pts);
  return *this;
}

double wrap_angle(double t) {
  double x = std::fmod(t + kPi, kTwoPi);
  if (x < 0.0) x += kTwoPi;
  return x - kPi;
}

double periodic_distance(double s, double t) {
  double d = std::abs(std::fmod(s - t, kTwoPi));
  if (d > kPi) d = kTwoPi - d;
  return d;
}

HolderWitness holder_seminorm_estimate(const PeriodicFunction& phi, double gamma, int n_points) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("holder_seminorm_estimate: gamma must lie in (0,1)");
  if (n_points < 2) throw std::invalid_argument("holder_seminorm_estimate: need n_points >= 2");

  // Samples at 2 pi i / n are nested under n -> 2n, so the estimate can only
  // grow when the grid is refined.
  std::vector<std::complex<double>> values(n_points);
  std::vector<double> ts(n_points);
  for (int i = 0; i < n_points; ++i) {
    ts[i] = -kPi + kTwoPi * i / n_points;
    values[i] = phi(ts[i]);
  }
  double best = 0.0;
  for (int i = 0; i < n_points; ++i) {
    for (int j = i + 1; j < n_points; ++j) {
      const double d = periodic_distance(ts[i], ts[j]);
      if (d <= 0.0) continue;
      const double q = std::abs(values[i] - values[j]) / std::pow(d, gamma);
      if (q > best) best = q;
    }
  }
  HolderWitness w;
  w.gamma = gamma;
  w.seminorm = best;
  w.provenance = HolderWitness::Provenance::grid_estimated;
  w.n_pairs = n_points;
  return w;
}

}  // namespace kop

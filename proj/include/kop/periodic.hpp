#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace kop {

/// Certificate that a 2pi-periodic function lies in the Holder class
/// Lambda_gamma. Grid-estimated seminorms are lower bounds of the true
/// seminorm and grow monotonically under grid refinement.
struct HolderWitness {
  enum class Provenance { analytic, grid_estimated };
  double gamma = 0.5;
  double seminorm = 0.0;
  Provenance provenance = Provenance::grid_estimated;
  int n_pairs = 0;  // grid points used when grid-estimated
};

/// A 2pi-periodic function given by its evaluation contract (complex-valued;
/// real functions simply return zero imaginary parts). Optional metadata:
/// a Holder witness, an exact L2[-pi,pi] norm, and cusp locations used by
/// panel-based quadratures.
class PeriodicFunction {
 public:
  using Eval = std::function<std::complex<double>(double)>;

  explicit PeriodicFunction(Eval eval);

  std::complex<double> operator()(double t) const { return eval_(t); }

  const std::optional<HolderWitness>& holder_witness() const { return witness_; }
  PeriodicFunction& with_holder_witness(HolderWitness w);

  std::optional<double> known_l2_norm() const { return l2_norm_; }
  PeriodicFunction& with_known_l2_norm(double v);

  const std::vector<double>& kink_points() const { return kinks_; }
  PeriodicFunction& with_kink_points(std::vector<double> pts);

 private:
  Eval eval_;
  std::optional<HolderWitness> witness_;
  std::optional<double> l2_norm_;
  std::vector<double> kinks_;
};

/// Distance on the circle: min_k |s - t + 2 pi k|.
double periodic_distance(double s, double t);

/// Lower bound of the Lambda_gamma seminorm from all pairs of n_points
/// equally spaced samples (nested under doubling, hence monotone).
HolderWitness holder_seminorm_estimate(const PeriodicFunction& phi, double gamma, int n_points);

/// Wrap t into [-pi, pi).
double wrap_angle(double t);

}  // namespace kop

#include "kop/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace kop {

TensorSum2D::TensorSum2D(std::vector<TensorTerm2D> terms, double q, double p)
    : terms_(std::move(terms)), q_(q), p_(p) {
  if (!(q_ >= 1.0 && p_ >= 1.0))
    throw std::invalid_argument("TensorSum2D: exponents must satisfy q,p >= 1");
}

double TensorSum2D::operator()(double x1, double x2) const {
  double acc = 0.0;
  for (const auto& t : terms_) acc += t.f(x1) * t.g(x2);
  return acc;
}

std::function<double(double, double)> TensorSum2D::as_evaluable() const {
  TensorSum2D copy = *this;
  return [copy](double x1, double x2) { return copy(x1, x2); };
}

TensorSum2D& TensorSum2D::with_projective_bound(double b) {
  if (b < 0.0) throw std::invalid_argument("TensorSum2D: projective bound must be >= 0");
  bound_ = b;
  return *this;
}

namespace {
double box_center(const std::vector<TensorTerm2D>& terms, bool first) {
  if (terms.empty()) return 0.0;
  double lo = 1e300, hi = -1e300;
  for (const auto& t : terms) {
    const Function1D& f = first ? t.f : t.g;
    lo = std::min(lo, f.center() - f.radius());
    hi = std::max(hi, f.center() + f.radius());
  }
  return 0.5 * (lo + hi);
}
double box_radius(const std::vector<TensorTerm2D>& terms, bool first) {
  if (terms.empty()) return 1.0;
  double lo = 1e300, hi = -1e300;
  for (const auto& t : terms) {
    const Function1D& f = first ? t.f : t.g;
    lo = std::min(lo, f.center() - f.radius());
    hi = std::max(hi, f.center() + f.radius());
  }
  return 0.5 * (hi - lo);
}
}  // namespace

double TensorSum2D::center1() const { return box_center(terms_, true); }
double TensorSum2D::radius1() const { return box_radius(terms_, true); }
double TensorSum2D::center2() const { return box_center(terms_, false); }
double TensorSum2D::radius2() const { return box_radius(terms_, false); }

PolarTensorSum::PolarTensorSum(std::vector<PolarTerm> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.radial.is_power_type())
      throw std::invalid_argument(
          "PolarTensorSum: power-type radial factor is not integrable on (0,inf)");
    if (const auto* d = std::get_if<DecaySupport>(&t.radial.support())) {
      if (std::isfinite(d->beta) && d->beta <= 1.0 && !t.radial.known_integral())
        throw std::invalid_argument(
            "PolarTensorSum: radial factor with tail exponent <= 1 has no finite integral");
    }
  }
}

}  // namespace kop

#include "kop/circle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace kop {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kInvSqrt2Pi = 1.0 / std::sqrt(kTwoPi);

void check_grid(int n) {
  if (n < 8 || n % 2 != 0)
    throw std::invalid_argument("circle grid: n must be even and >= 8");
}
}  // namespace

std::vector<double> circle_nodes(int n) {
  check_grid(n);
  const double h = kTwoPi / n;
  std::vector<double> nodes(n);
  for (int j = 0; j < n; ++j) nodes[j] = -kPi + (j + 0.5) * h;
  return nodes;
}

CircleFunction::CircleFunction(int n, std::vector<std::complex<double>> values)
    : n_(n), values_(std::move(values)) {
  check_grid(n_);
  if (static_cast<int>(values_.size()) != n_)
    throw std::invalid_argument("CircleFunction: values length must equal n");
}

CircleFunction CircleFunction::sample(const PeriodicFunction& f, int n) {
  check_grid(n);
  const double h = kTwoPi / n;
  std::vector<std::complex<double>> v(n);
  for (int j = 0; j < n; ++j) v[j] = f(-kPi + (j + 0.5) * h);
  return CircleFunction(n, std::move(v));
}

double CircleFunction::node(int j) const { return -kPi + (j + 0.5) * kTwoPi / n_; }

std::complex<double> CircleFunction::value(int j) const {
  int m = j % n_;
  if (m < 0) m += n_;
  return values_[m];
}

double CircleFunction::max_abs() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

double CircleFunction::l2_grid_norm() const {
  double s = 0.0;
  for (const auto& v : values_) s += std::norm(v);
  return std::sqrt(s * kTwoPi / n_);
}

FourierSpectrum::FourierSpectrum(int k_max) : k_max_(k_max), coeffs_(2 * k_max + 1) {
  if (k_max < 0) throw std::invalid_argument("FourierSpectrum: k_max must be >= 0");
}

FourierSpectrum::FourierSpectrum(int k_max, std::vector<std::complex<double>> coeffs)
    : k_max_(k_max), coeffs_(std::move(coeffs)) {
  if (k_max < 0) throw std::invalid_argument("FourierSpectrum: k_max must be >= 0");
  if (static_cast<int>(coeffs_.size()) != 2 * k_max_ + 1)
    throw std::invalid_argument("FourierSpectrum: coeffs length must equal 2*k_max+1");
}

std::complex<double> FourierSpectrum::coeff(int k) const {
  if (std::abs(k) > k_max_) return {0.0, 0.0};
  return coeffs_[k + k_max_];
}

std::complex<double>& FourierSpectrum::coeff(int k) {
  if (std::abs(k) > k_max_) throw std::out_of_range("FourierSpectrum: |k| > k_max");
  return coeffs_[k + k_max_];
}

double FourierSpectrum::l2_norm() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

FourierSpectrum analyze(const CircleFunction& phi, int k_max) {
  const int n = phi.size();
  if (n < 2 * k_max + 2)
    throw std::invalid_argument("analyze: k_max too large for the grid (aliasing); need n >= 2*k_max+2");
  FourierSpectrum spec(k_max);
  const double h = kTwoPi / n;
  for (int k = -k_max; k <= k_max; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (int j = 0; j < n; ++j) {
      const double a = -kPi + (j + 0.5) * h;
      acc += phi[j] * std::polar(1.0, -k * a);
    }
    spec.coeff(k) = acc * (std::sqrt(kTwoPi) / n);
  }
  return spec;
}

CircleFunction synthesize(const FourierSpectrum& spec, int n) {
  if (n < 2 * spec.k_max() + 2)
    throw std::invalid_argument("synthesize: grid too coarse for k_max; need n >= 2*k_max+2");
  const double h = kTwoPi / n;
  std::vector<std::complex<double>> v(n);
  for (int j = 0; j < n; ++j) {
    const double a = -kPi + (j + 0.5) * h;
    std::complex<double> acc{0.0, 0.0};
    for (int k = -spec.k_max(); k <= spec.k_max(); ++k)
      acc += spec.coeff(k) * std::polar(kInvSqrt2Pi, k * a);
    v[j] = acc;
  }
  return CircleFunction(n, std::move(v));
}

PeriodicFunction to_periodic(const FourierSpectrum& spec) {
  PeriodicFunction f([spec](double t) {
    std::complex<double> acc{0.0, 0.0};
    for (int k = -spec.k_max(); k <= spec.k_max(); ++k)
      acc += spec.coeff(k) * std::polar(kInvSqrt2Pi, k * t);
    return acc;
  });
  f.with_known_l2_norm(spec.l2_norm());
  return f;
}

PeriodicFunction basis_e(int k) {
  PeriodicFunction f([k](double t) { return std::polar(kInvSqrt2Pi, k * t); });
  f.with_known_l2_norm(1.0);
  return f;
}

}  // namespace kop

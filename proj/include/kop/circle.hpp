#pragma once

#include <complex>
#include <vector>

#include "kop/periodic.hpp"

namespace kop {

/// Nodes of the half-offset grid alpha_j = -pi + (j + 1/2) * 2pi/n. No node
/// ever lands on 0 or +-pi, which the PV rules rely on.
std::vector<double> circle_nodes(int n);

/// A 2pi-periodic function as samples on the half-offset grid. n must be
/// even and >= 8; index arithmetic is modulo n.
class CircleFunction {
 public:
  CircleFunction(int n, std::vector<std::complex<double>> values);

  static CircleFunction sample(const PeriodicFunction& f, int n);

  int size() const { return n_; }
  double node(int j) const;
  std::complex<double> value(int j) const;  // modular index
  std::complex<double>& operator[](int j) { return values_[j]; }
  const std::complex<double>& operator[](int j) const { return values_[j]; }
  const std::vector<std::complex<double>>& values() const { return values_; }

  double max_abs() const;
  /// Discrete L2[-pi,pi] norm: sqrt(h * sum |v_j|^2).
  double l2_grid_norm() const;

 private:
  int n_;
  std::vector<std::complex<double>> values_;
};

/// Fourier coefficients c_k, |k| <= k_max, with respect to the orthonormal
/// basis e_k(t) = (2pi)^{-1/2} e^{ikt}.
class FourierSpectrum {
 public:
  explicit FourierSpectrum(int k_max);
  FourierSpectrum(int k_max, std::vector<std::complex<double>> coeffs);

  int k_max() const { return k_max_; }
  std::complex<double> coeff(int k) const;
  std::complex<double>& coeff(int k);

  /// L2[-pi,pi] norm: sqrt(sum |c_k|^2).
  double l2_norm() const;

 private:
  int k_max_;
  std::vector<std::complex<double>> coeffs_;  // index k + k_max
};

/// c_k = sqrt(2pi)/n * sum_j values[j] e^{-ik alpha_j}; exact on trig
/// polynomials of degree <= k_max when n >= 2 k_max + 2.
FourierSpectrum analyze(const CircleFunction& phi, int k_max);

/// values[j] = sum_k c_k e_k(alpha_j); requires n >= 2 k_max + 2.
CircleFunction synthesize(const FourierSpectrum& spec, int n);

/// The trigonometric polynomial sum_k c_k e_k as an evaluable function.
PeriodicFunction to_periodic(const FourierSpectrum& spec);

/// Basis function e_k as an evaluable (carries its exact L2 norm 1).
PeriodicFunction basis_e(int k);

}  // namespace kop

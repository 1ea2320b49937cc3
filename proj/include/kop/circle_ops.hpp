#pragma once

#include <complex>

#include "kop/circle.hpp"
#include "kop/pvquad.hpp"
#include "kop/tensor.hpp"

namespace kop {

// Fourier multipliers on the orthonormal basis e_k = (2pi)^{-1/2} e^{ikt}.
// All three kernels are real and odd, which forces m(-k) = -m(k).
std::complex<double> k1_multiplier(int k);       // -2i sgn(k) on odd k, 0 on even k
std::complex<double> hilbert_multiplier(int k);  // -i sgn(k)
std::complex<double> j_multiplier(int k);        // k1 - hilbert

/// K1 phi(alpha) = (1/pi) pv int phi(alpha - t)/sin(t) dt, by the coupled-PV
/// midpoint rule with n_quad nodes.
std::complex<double> k1_point(const PeriodicFunction& phi, double alpha, int n_quad);
CircleFunction k1_apply(const PeriodicFunction& phi, int n_out, int n_quad);
/// Sampled input goes through trigonometric interpolation (exact for
/// band-limited data on the half-offset grid).
CircleFunction k1_apply(const CircleFunction& phi, int n_quad);
/// Spectral backend: c_k -> m(k) c_k.
FourierSpectrum k1_apply(const FourierSpectrum& spec);

/// Circle Hilbert transform (1/2pi) pv int phi(alpha - t)/tan(t/2) dt.
std::complex<double> hilbert_circle_point(const PeriodicFunction& phi, double alpha, int n_quad);
CircleFunction hilbert_circle(const PeriodicFunction& phi, int n_out, int n_quad);
FourierSpectrum hilbert_circle(const FourierSpectrum& spec);

/// J phi(alpha) = (1/2pi) int phi(alpha - t) tan(t/2) dt, computed from the
/// regularized split (phi(alpha-t) - phi(alpha-+pi)) tan(t/2) on the two
/// half-periods, with panels refined toward the +-pi singularities. Requires
/// a Holder witness on phi: the witness exponent is the convergence
/// certificate of the regularization. Throws std::invalid_argument without it.
std::complex<double> j_point(const PeriodicFunction& phi, double alpha);
CircleFunction j_apply(const PeriodicFunction& phi, int n_out);

/// max_alpha | K1 phi - (H phi + J phi) | over the n_out output grid.
double k1_decomposition_residual(const PeriodicFunction& phi, int n_out, int n_quad);

/// K2 phi(alpha) = sum_i (int_0^inf phi1_i) * (K1 phi2_i)(alpha).
std::complex<double> k2_point(const PolarTensorSum& phi, double alpha,
                              const PVQuadratureConfig& cfg);
CircleFunction k2_apply(const PolarTensorSum& phi, int n_out, const PVQuadratureConfig& cfg);

/// Polar operator on tensor sums: (1/r) * K2. r must be positive (the
/// operator lives on the punctured plane).
std::complex<double> calK_point(const PolarTensorSum& phi, double r, double alpha,
                                const PVQuadratureConfig& cfg);
CircleFunction calK_apply(const PolarTensorSum& phi, double r, int n_out,
                          const PVQuadratureConfig& cfg);

}  // namespace kop

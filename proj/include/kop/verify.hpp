#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "kop/pvquad.hpp"

namespace kop {

/// Outcome of one deterministic property suite: pass iff
/// max_deviation <= tolerance.
struct SuiteResult {
  std::string suite;
  int cases = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<std::string> notes;

  nlohmann::ordered_json to_json() const;
};

/// |det g| K(gx, gy) = K(x,y) over random GL+(2) cases (rotation * positive
/// diagonal * rotation with bounded parameters), relative tolerance 1e-12.
/// Also injects orientation-reversing maps as a negative control: the
/// antisymmetric kernel must violate the identity for them, and the suite
/// asserts that it does.
SuiteResult suite_kernel_homogeneity(int n_cases, std::uint64_t seed);

/// kernel_eval(x,y) == -kernel_eval(y,x), machine-exact.
SuiteResult suite_antisymmetry(int n_cases, std::uint64_t seed);

/// |K phi| <= 1e-8 (scaled) on radial inputs over an n_r x n_alpha polar
/// grid; includes even-frequency angular perturbations, which the operator
/// also annihilates, and a non-tensor radial check through the raw polar
/// double integral.
SuiteResult suite_radial_null(int n_r, int n_alpha, const PVQuadratureConfig& cfg);

/// Quadrature K1 e_k against the multiplier -2i sgn(k) [k odd] for |k| <=
/// k_max, plus the oracle table int_0^pi sin(kt)/sin(t) dt = pi sgn(k) [k
/// odd], 0 [k even].
SuiteResult suite_spectral(int k_max, int n);

/// max |K1 phi - (H phi + J phi)| on random trig polynomials (tolerance
/// 1e-8) and on the Holder cusp family at n = 2^14 (tolerance 1e-4).
SuiteResult suite_decomposition(int n_polys, int max_degree, std::uint64_t seed);

/// Pairwise est1/Stepanov/Radon agreement within 1e-3 (relative, hybrid
/// floor) at the 9 grid points {0.5,1,2}^2, plus the intertwining residual
/// through the polar lift at 20 samples.
SuiteResult suite_representations(const PVQuadratureConfig& cfg);

/// (Kf)(lambda x) = lambda^{-1} (Kf)(x) within 1e-6 relative for lambda in
/// {0.5, 2, 3}; near-zero values are skipped and counted.
SuiteResult suite_image_homogeneity(const PVQuadratureConfig& cfg);

std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

}  // namespace kop

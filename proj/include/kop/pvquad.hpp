#pragma once

#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

#include "kop/function1d.hpp"
#include "kop/quadrature.hpp"
#include "kop/tensor.hpp"

namespace kop {

enum class TailPolicy { ignore, power_extrapolate };

/// Knobs shared by every quadrature in the library. `n` is the node count of
/// the circle rules and the refinement budget of the line engines; `r` caps
/// the truncation radius of unbounded integrals; `log_spacing` forces
/// log-spaced panels toward 0 (power-type integrands get them automatically).
struct PVQuadratureConfig {
  int n = 2048;
  double r = 1000.0;
  TailPolicy tail = TailPolicy::ignore;
  bool log_spacing = false;

  std::map<std::string, std::string> to_kv() const;
  static PVQuadratureConfig from_kv(const std::map<std::string, std::string>& kv);

  void validate() const {
    if (n < 8) throw std::invalid_argument("PVQuadratureConfig: n must be >= 8");
    if (!(r > 0.0)) throw std::invalid_argument("PVQuadratureConfig: r must be > 0");
  }
};

/// Defaults for power-type integrands: wider truncation, tail extrapolation,
/// log-spaced nodes near the singularity.
PVQuadratureConfig power_type_config(int n = 2048);

enum QuadFlag : unsigned {
  kQuadOk = 0,
  kTailWarning = 1u << 0,          // truncated a tail that is not negligible
  kSingularityExcluded = 1u << 1,  // integrated outside a neighborhood of a pole
};

struct IntegralResult {
  double value = 0.0;
  unsigned flags = kQuadOk;
};

/// PV integral over [-pi,pi] with the two singular sites t=0 and t=+-pi
/// excised by one coupled limit, discretized by the half-offset midpoint
/// rule: h * sum_j F(t_j), t_j = -pi + (j+1/2) h. Nodes come in exact +-
/// pairs (and pi-u / -(pi-u) pairs), so odd pole parts cancel at machine
/// precision; what remains is the midpoint rule on the even part, which is
/// spectrally accurate for smooth periodic integrands.
template <class F>
auto pv_circle(F&& f, int n) {
  if (n < 8 || n % 2 != 0)
    throw std::invalid_argument("pv_circle: n must be even and >= 8");
  const double h = 2.0 * std::numbers::pi / n;
  using R = decltype(f(0.0));
  R acc{};
  for (int m = 0; m < n / 2; ++m) {
    const double u = (m + 0.5) * h;
    acc += f(-u) + f(u);
  }
  return acc * h;
}

/// Line Hilbert transform (1/pi) pv int g(y)/(x-y) dy in the odd-reflection
/// form (1/pi) int_0^inf (g(x-t) - g(x+t))/t dt. The t-integral is split at
/// t=1: panels refined toward 0 carry the difference quotient, geometric
/// panels cover (1,R], and the tail beyond R follows cfg.tail.
IntegralResult pv_line_hilbert(const Function1D& g, double x, const PVQuadratureConfig& cfg);

/// Plain quadrature of f over (0,inf). Returns the descriptor's known
/// integral verbatim when one is declared on a half-line (or nonnegative
/// compact) domain.
IntegralResult integrate_halfline(const Function1D& f, const PVQuadratureConfig& cfg);

/// Plain quadrature of f over the whole line.
IntegralResult integrate_line(const Function1D& f, const PVQuadratureConfig& cfg);

/// ||f||_p over the descriptor's natural domain; returns the declared norm
/// when present. Power-type descriptors have no finite global norm.
double lp_norm(const Function1D& f, double p, const PVQuadratureConfig& cfg);

/// Sum_i ||f_i||_q ||g_i||_p for the tensor's declared (q,p); uses the
/// supplied bound when present.
double projective_bound(const TensorSum2D& f, const PVQuadratureConfig& cfg);

}  // namespace kop

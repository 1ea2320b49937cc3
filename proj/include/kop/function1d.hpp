#pragma once

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <variant>

namespace kop {

/// f == 0 outside [a,b]; enforced by the evaluation wrapper.
struct CompactSupport {
  double a;
  double b;
};

/// |f(t)| <= C|t - center|^{-beta} once |t - center| >= radius. Functions
/// that decay faster than any power (gaussians, exponentials) use
/// beta = infinity; `radius` is then the window outside which f is
/// numerically zero.
struct DecaySupport {
  double beta = std::numeric_limits<double>::infinity();
  double center = 0.0;
  double radius = 40.0;
};

/// sgn(t)|t|^{-s}-type behaviour with exponent s in (0,1): integrable
/// singularity at 0, heavy tails. Quadratures switch to log-spaced panels.
struct PowerSupport {
  double s;
};

using Support = std::variant<CompactSupport, DecaySupport, PowerSupport>;

/// Natural domain of the descriptor. Half-line descriptors evaluate to 0 for
/// t < 0 and their known integral/norms refer to (0,inf).
enum class Domain { real_line, half_line };

/// A real-valued function of one real variable: a deterministic evaluation
/// contract plus the metadata quadrature engines need (support window, tail
/// exponent) and optional exact values (integral, Lp norms).
class Function1D {
 public:
  using Eval = std::function<double(double)>;

  Function1D(Eval eval, Support support, Domain domain = Domain::real_line);

  double operator()(double t) const;

  const Support& support() const { return support_; }
  Domain domain() const { return domain_; }
  bool is_power_type() const { return std::holds_alternative<PowerSupport>(support_); }
  bool is_compact() const { return std::holds_alternative<CompactSupport>(support_); }

  /// Center/half-width of the window holding the mass (power-type: 0 / none).
  double center() const;
  double radius() const;

  std::optional<double> known_integral() const { return integral_; }
  std::optional<double> known_lp_norm(double p) const;

  Function1D& with_known_integral(double v);
  Function1D& with_known_lp_norm(double p, double v);

  Function1D scaled(double c) const;      // c * f
  Function1D translated(double a) const;  // f(. - a); not defined for power type
  Function1D reflected() const;           // f(-.)

  static Function1D zero();

 private:
  Eval eval_;
  Support support_;
  Domain domain_;
  std::optional<double> integral_;
  std::map<double, double> lp_norms_;
};

}  // namespace kop

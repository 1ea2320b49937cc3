#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "kop/function1d.hpp"
#include "kop/periodic.hpp"

namespace kop {

/// Finite sum of simple tensors (x1,x2) -> sum_i f_i(x1) g_i(x2), together
/// with the exponent pair (q,p) its projective bound refers to. The bound
/// sum_i ||f_i||_q ||g_i||_p may be supplied; otherwise pvquad computes it
/// from the factor descriptors.
struct TensorTerm2D {
  Function1D f;
  Function1D g;
};

class TensorSum2D {
 public:
  TensorSum2D(std::vector<TensorTerm2D> terms, double q, double p);

  double operator()(double x1, double x2) const;
  std::function<double(double, double)> as_evaluable() const;

  const std::vector<TensorTerm2D>& terms() const { return terms_; }
  double q() const { return q_; }
  double p() const { return p_; }

  std::optional<double> supplied_projective_bound() const { return bound_; }
  TensorSum2D& with_projective_bound(double b);

  /// Box outside which every term is numerically zero: center/half-width per
  /// axis, derived from the factor windows.
  double center1() const;
  double radius1() const;
  double center2() const;
  double radius2() const;

 private:
  std::vector<TensorTerm2D> terms_;
  double q_, p_;
  std::optional<double> bound_;
};

/// Finite sum of polar simple tensors (rho,theta) -> sum_i phi1_i(rho)
/// phi2_i(theta); each radial factor must be integrable on (0,inf) under its
/// declared metadata.
struct PolarTerm {
  Function1D radial;
  PeriodicFunction angular;
};

class PolarTensorSum {
 public:
  explicit PolarTensorSum(std::vector<PolarTerm> terms);

  const std::vector<PolarTerm>& terms() const { return terms_; }

 private:
  std::vector<PolarTerm> terms_;
};

}  // namespace kop

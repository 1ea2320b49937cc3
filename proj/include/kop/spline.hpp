#pragma once

#include <vector>

namespace kop {

/// Natural cubic spline through (x_i, y_i), x ascending. Evaluation outside
/// [x_front, x_back] clamps to the boundary value; callers that need a decay
/// model beyond the grid wrap the spline themselves.
class CubicSpline {
 public:
  CubicSpline(std::vector<double> x, std::vector<double> y);

  double operator()(double t) const;

  double front_x() const { return x_.front(); }
  double back_x() const { return x_.back(); }
  double front_y() const { return y_.front(); }
  double back_y() const { return y_.back(); }

 private:
  std::vector<double> x_, y_, m_;  // m_: second derivatives at the nodes
};

}  // namespace kop

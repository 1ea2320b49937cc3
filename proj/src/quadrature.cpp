#include "kop/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace kop {

namespace {

GaussRule compute_gauss(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton iteration from the Chebyshev estimate of the i-th root of P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 64; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * x * p1 - j * p2) / (j + 1);
      }
      dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussRule& gauss_rule(int order) {
  if (order < 2 || order > 64) throw std::invalid_argument("gauss_rule: order out of [2,64]");
  static std::mutex mtx;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gauss(order)).first;
  return it->second;
}

std::vector<double> edges_uniform(double a, double b, int n) {
  if (n < 1) throw std::invalid_argument("edges_uniform: n >= 1");
  std::vector<double> e(n + 1);
  for (int i = 0; i <= n; ++i) e[i] = a + (b - a) * i / n;
  e.front() = a;
  e.back() = b;
  return e;
}

std::vector<double> edges_refined_toward_a(double a, double b, int levels) {
  std::vector<double> e;
  e.reserve(levels + 2);
  e.push_back(b);
  double w = b - a;
  for (int i = 0; i < levels; ++i) {
    w *= 0.5;
    e.push_back(a + w);
  }
  e.push_back(a);
  std::reverse(e.begin(), e.end());
  return e;
}

std::vector<double> edges_refined_toward_b(double a, double b, int levels) {
  std::vector<double> e = edges_refined_toward_a(0.0, b - a, levels);
  for (double& x : e) x = b - x;
  std::reverse(e.begin(), e.end());
  e.front() = a;
  e.back() = b;
  return e;
}

std::vector<double> edges_geometric(double a, double b, double ratio) {
  if (!(a > 0.0 && b > a && ratio > 1.0))
    throw std::invalid_argument("edges_geometric: need 0 < a < b, ratio > 1");
  std::vector<double> e{a};
  double x = a;
  while (x * ratio < b) {
    x *= ratio;
    e.push_back(x);
  }
  e.push_back(b);
  return e;
}

std::vector<double> normalize_edges(std::vector<double> edges, double lo, double hi) {
  std::vector<double> clipped;
  clipped.reserve(edges.size() + 2);
  clipped.push_back(lo);
  clipped.push_back(hi);
  for (double x : edges)
    if (x > lo && x < hi) clipped.push_back(x);
  std::sort(clipped.begin(), clipped.end());
  const double scale = std::max(std::abs(lo), std::abs(hi)) + 1.0;
  std::vector<double> out;
  out.reserve(clipped.size());
  for (double x : clipped)
    if (out.empty() || x - out.back() > 1e-13 * scale) out.push_back(x);
  if (out.size() < 2) out = {lo, hi};
  out.back() = hi;
  return out;
}

}  // namespace kop

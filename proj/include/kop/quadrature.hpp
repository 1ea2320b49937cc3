#pragma once

#include <cstddef>
#include <vector>

namespace kop {

/// Gauss-Legendre rule on [-1,1]. Nodes are stored symmetrically
/// (nodes[i] == -nodes[n-1-i] bit for bit), so symmetric panel pairs cancel
/// odd integrands exactly.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule of the given order (2 <= order <= 64).
const GaussRule& gauss_rule(int order);

/// One Gauss panel over [a,b].
template <class F>
auto gauss_panel(F&& f, double a, double b, int order) {
  const GaussRule& rule = gauss_rule(order);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  using R = decltype(f(0.0));
  R acc{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

/// Composite Gauss quadrature over consecutive panels (ascending edges).
/// Panels are summed left to right; the reduction order is fixed so repeated
/// runs are bit-identical.
template <class F>
auto integrate_panels(F&& f, const std::vector<double>& edges, int order) {
  using R = decltype(f(0.0));
  R acc{};
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    acc += gauss_panel(f, edges[i], edges[i + 1], order);
  return acc;
}

/// n equal panels on [a,b] (n+1 edges).
std::vector<double> edges_uniform(double a, double b, int n);

/// Panels on [a,b] whose widths halve toward `a` (levels panels plus the
/// innermost sliver). Used for endpoint singularities of type (t-a)^{g-1}.
std::vector<double> edges_refined_toward_a(double a, double b, int levels);
std::vector<double> edges_refined_toward_b(double a, double b, int levels);

/// Geometric edges a, a*ratio, a*ratio^2, ..., clipped at b. Requires
/// 0 < a < b, ratio > 1.
std::vector<double> edges_geometric(double a, double b, double ratio);

/// Sort, clip to [lo,hi] and deduplicate an edge list; near-coincident edges
/// (within 1e-13 of the local scale) are merged.
std::vector<double> normalize_edges(std::vector<double> edges, double lo, double hi);

}  // namespace kop

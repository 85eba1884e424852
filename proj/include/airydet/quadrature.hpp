#ifndef AIRYDET_QUADRATURE_HPP
#define AIRYDET_QUADRATURE_HPP

#include <Eigen/Core>

namespace airydet {

// Gauss-Legendre rule on [lo, hi]. Nodes are strictly ascending and interior,
// weights are positive and sum to hi - lo.
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
  double lo = -1.0;
  double hi = 1.0;

  int order() const { return static_cast<int>(nodes.size()); }
};

// Order-n rule on [-1,1]. Deterministic (bitwise reproducible). 1 <= n <= 2048.
QuadratureRule gauss_legendre(int n);

// Shared cache of base rules; reference stays valid for the process lifetime.
const QuadratureRule& gauss_legendre_cached(int n);

// Affine image of a rule on [lo, hi]; both endpoints must be finite, lo < hi.
QuadratureRule map_rule(const QuadratureRule& rule, double lo, double hi);

// sum_i w_i f(x_i) over the order-n rule mapped to [lo, hi].
template <class F>
double integrate(F&& f, double lo, double hi, int n) {
  const QuadratureRule& base = gauss_legendre_cached(n);
  const double c = 0.5 * (hi - lo);
  const double m = 0.5 * (lo + hi);
  double acc = 0.0;
  for (int i = 0; i < base.order(); ++i) {
    acc += base.weights[i] * f(m + c * base.nodes[i]);
  }
  return c * acc;
}

}  // namespace airydet

#endif

#ifndef AIRYDET_DETAIL_GAUSS_LEGENDRE_IMPL_HPP
#define AIRYDET_DETAIL_GAUSS_LEGENDRE_IMPL_HPP

#include <cmath>
#include <vector>

namespace airydet::detail {

// Legendre P_n and P_n' at x via the three-term recurrence.
template <class Real>
void legendre_pair(int n, const Real& x, Real& p, Real& dp) {
  Real pm(1);
  Real pc = x;
  for (int k = 2; k <= n; ++k) {
    Real pn = ((2 * k - 1) * x * pc - (k - 1) * pm) / k;
    pm = pc;
    pc = pn;
  }
  p = pc;
  dp = n * (x * pc - pm) / (x * x - 1);
}

// Nodes/weights of the order-n Gauss-Legendre rule on [-1,1].
// Newton iteration on P_n from cosine initial guesses; symmetric halves are
// mirrored so the rule is exactly symmetric and bitwise reproducible.
// `eps` is the Newton stopping tolerance in the Real arithmetic.
template <class Real>
void gauss_legendre_nodes(int n, const Real& eps, std::vector<Real>& nodes,
                          std::vector<Real>& weights) {
  using std::abs;
  nodes.assign(n, Real(0));
  weights.assign(n, Real(0));
  const int half = n / 2;
  for (int i = 0; i < half; ++i) {
    // i-th root counted from +1 downwards
    Real x(std::cos(M_PI * (i + 0.75) / (n + 0.5)));
    Real p, dp;
    for (int it = 0; it < 100; ++it) {
      legendre_pair(n, x, p, dp);
      Real dx = p / dp;
      x -= dx;
      if (abs(dx) <= eps) break;
    }
    legendre_pair(n, x, p, dp);
    Real w = 2 / ((1 - x * x) * dp * dp);
    nodes[n - 1 - i] = x;
    nodes[i] = -x;
    weights[n - 1 - i] = w;
    weights[i] = w;
  }
  if (n % 2 == 1) {
    Real x(0), p, dp;
    legendre_pair(n, x, p, dp);
    nodes[half] = x;
    weights[half] = 2 / (dp * dp);
  }
}

}  // namespace airydet::detail

#endif

#include "airydet/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "airydet/detail/gauss_legendre_impl.hpp"
#include "airydet/errors.hpp"

namespace airydet {

QuadratureRule gauss_legendre(int n) {
  if (n < 1 || n > 2048) {
    throw invalid_argument_error("gauss_legendre: order must be in [1, 2048], got " +
                                 std::to_string(n));
  }
  std::vector<double> nodes, weights;
  detail::gauss_legendre_nodes(n, std::numeric_limits<double>::epsilon(), nodes, weights);
  QuadratureRule rule;
  rule.nodes = Eigen::Map<Eigen::VectorXd>(nodes.data(), n);
  rule.weights = Eigen::Map<Eigen::VectorXd>(weights.data(), n);
  rule.lo = -1.0;
  rule.hi = 1.0;
  return rule;
}

const QuadratureRule& gauss_legendre_cached(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<QuadratureRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<QuadratureRule>(gauss_legendre(n));
  return *slot;
}

QuadratureRule map_rule(const QuadratureRule& rule, double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw invalid_argument_error("map_rule: endpoints must be finite with lo < hi");
  }
  const double src_c = 0.5 * (rule.hi - rule.lo);
  const double src_m = 0.5 * (rule.hi + rule.lo);
  const double c = 0.5 * (hi - lo);
  const double m = 0.5 * (hi + lo);
  QuadratureRule out;
  out.nodes = (m + (c / src_c) * (rule.nodes.array() - src_m)).matrix();
  out.weights = rule.weights * (c / src_c);
  out.lo = lo;
  out.hi = hi;
  return out;
}

}  // namespace airydet

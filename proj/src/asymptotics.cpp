#include "airydet/asymptotics.hpp"

#include <cmath>

#include "airydet/errors.hpp"

namespace airydet {
namespace {

// sqrt(1+y) - 1 without cancellation at small y
inline double sqrt1pm1(double y) { return y / (std::sqrt(1.0 + y) + 1.0); }

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw invalid_argument_error(std::string(what) + " must be positive and finite");
  }
}

double scaled_y(double x, double t, const SigmaModel& m) {
  return M_PI * M_PI * x * t / (m.c_plus * m.c_plus);
}

// Tail sum_{k>=k0} c(5/2 or 3/2, k) y^k of the binomial series, for the
// cancellation-safe small-y branches of F1 and F2.
double binomial_tail(double p, int k0, double y) {
  // coefficient C(p, k0) by direct product
  double coef = 1.0;
  for (int j = 0; j < k0; ++j) coef *= (p - j) / (j + 1);
  double term = coef * std::pow(y, k0);
  double sum = 0.0;
  for (int k = k0; k < 200; ++k) {
    sum += term;
    term *= (p - k) / (k + 1) * y;
    if (std::abs(term) < 1e-20 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

double shape_a0(double y) {
  if (y < 0.0 || !std::isfinite(y)) throw invalid_argument_error("shape_a0: y must be >= 0");
  if (y == 0.0) return 0.0;
  const double s = sqrt1pm1(y);
  return s * s / y;  // equals y / (sqrt(y+1)+1)^2
}

double shape_a1(double y, double c_plus_prime) {
  if (y < 0.0 || !std::isfinite(y)) throw invalid_argument_error("shape_a1: y must be >= 0");
  return -std::log(c_plus_prime) / M_PI * std::sqrt(y / (1.0 + y));
}

double shape_a2(double y, double c_plus, double c_plus_prime, double j_sigma) {
  if (!(y > 0.0)) throw invalid_argument_error("shape_a2: y must be > 0");
  const double sp1 = std::sqrt(y + 1.0);
  const double sm1 = sqrt1pm1(y);
  const double lc = std::log(c_plus_prime);
  const double bracket = (1.0 - 2.0 * sp1) / (4.0 * M_PI * c_plus * (y + 1.0)) * lc * lc - j_sigma;
  return std::pow(y, 1.5) / (sp1 * sm1 * sm1) * bracket;
}

double F1(double y) {
  if (y < 0.0 || !std::isfinite(y)) throw invalid_argument_error("F1: y must be >= 0");
  if (y < 0.1) return (4.0 / 15.0) * binomial_tail(2.5, 3, y);
  return (4.0 / 15.0) * std::pow(1.0 + y, 2.5) - 4.0 / 15.0 - (2.0 / 3.0) * y - 0.5 * y * y;
}

double F2(double y) {
  if (y < 0.0 || !std::isfinite(y)) throw invalid_argument_error("F2: y must be >= 0");
  if (y < 0.1) return (2.0 / 3.0) * binomial_tail(1.5, 2, y);
  return (2.0 / 3.0) * std::pow(1.0 + y, 1.5) - 2.0 / 3.0 - y;
}

double F3(double y, double c_plus, double c_plus_prime, double j_sigma) {
  if (!(y > 0.0)) throw invalid_argument_error("F3: y must be > 0");
  const double lc = std::log(c_plus_prime);
  const double a = 2.0 * c_plus * j_sigma / M_PI;
  const double b = a + lc * lc / (2.0 * M_PI * M_PI) + 1.0 / 24.0;
  return a * std::sqrt(1.0 + y) - std::log1p(y) / 48.0 + b * std::log(sqrt1pm1(y));
}

double F1pp(double y) { return sqrt1pm1(y); }

double F2pp(double y) { return 0.5 / std::sqrt(1.0 + y); }

double F3pp(double y, double c_plus, double c_plus_prime, double j_sigma) {
  const double s = std::sqrt(1.0 + y);
  const double sm1 = sqrt1pm1(y);
  const double lc = std::log(c_plus_prime);
  const double a = 2.0 * c_plus * j_sigma / M_PI;
  const double b = a + lc * lc / (2.0 * M_PI * M_PI) + 1.0 / 24.0;
  // d^2/dy^2 log(sqrt(1+y)-1) = -(2s-1) / (4 s^3 (s-1)^2)
  return -0.25 * a / (s * s * s) + 1.0 / (48.0 * s * s * s * s) -
         b * (2.0 * s - 1.0) / (4.0 * s * s * s * sm1 * sm1);
}

double C_constant(double c_plus, double c_plus_prime, double j_sigma) {
  const double lc = std::log(c_plus_prime);
  return 2.0 * c_plus * j_sigma / M_PI + lc * lc / (2.0 * M_PI * M_PI);
}

double C_constant(const SigmaModel& model) {
  return C_constant(model.c_plus, model.c_plus_prime, j_sigma(model));
}

AsymptoticEval u_asymptotic(double x, double t, const SigmaModel& model) {
  require_positive(x, "u_asymptotic: x");
  require_positive(t, "u_asymptotic: t");
  const double j = j_sigma(model);
  const double y = scaled_y(x, t, model);
  AsymptoticEval ev;
  ev.y = y;
  const double lead = x / (2.0 * t) * shape_a0(y);
  const double sub = 0.5 / std::sqrt(x * t) * shape_a1(y, model.c_plus_prime);
  const double third =
      0.5 * std::sqrt(t) / std::pow(x, 1.5) * shape_a2(y, model.c_plus, model.c_plus_prime, j);
  ev.terms = {{"leading", lead}, {"subleading", sub}, {"third", third}};
  ev.total = lead + sub + third;
  return ev;
}

AsymptoticEval logq_asymptotic(double x, double t, const SigmaModel& model) {
  require_positive(x, "logq_asymptotic: x");
  require_positive(t, "logq_asymptotic: t");
  const double j = j_sigma(model);
  const double cp = model.c_plus;
  const double y = scaled_y(x, t, model);
  AsymptoticEval ev;
  ev.y = y;
  const double pi4 = M_PI * M_PI * M_PI * M_PI;
  const double pi6 = pi4 * M_PI * M_PI;
  const double lead = -std::pow(cp, 6) / (pi6 * std::pow(t, 4)) * F1(y);
  const double sub = -std::pow(cp, 3) * std::log(model.c_plus_prime) / (pi4 * t * t) * F2(y);
  const double con = F3(y, cp, model.c_plus_prime, j);
  const double logt = -C_constant(cp, model.c_plus_prime, j) * std::log(t);
  ev.terms = {{"leading", lead}, {"subleading", sub}, {"constant_shape", con}, {"log_t", logt}};
  ev.total = lead + sub + con + logt;
  return ev;
}

AsymptoticEval logq_kpz_asymptotic(double x, double t) {
  require_positive(x, "logq_kpz_asymptotic: x");
  require_positive(t, "logq_kpz_asymptotic: t");
  const double y = M_PI * M_PI * x * t;
  AsymptoticEval ev;
  ev.y = y;
  const double pi6 = std::pow(M_PI, 6);
  const double lead = -F1(y) / (pi6 * std::pow(t, 4));
  const double sqrt_term = -std::sqrt(1.0 + y) / 6.0;
  const double log1 = -std::log1p(y) / 48.0;
  const double log2 = -std::log(sqrt1pm1(y)) / 8.0;
  const double logt = std::log(t) / 6.0;
  ev.terms = {{"leading", lead},
              {"sqrt", sqrt_term},
              {"log_1py", log1},
              {"log_edge", log2},
              {"log_t", logt}};
  ev.total = lead + sqrt_term + log1 + log2 + logt;
  return ev;
}

ConsistencyResiduals expansion_consistency_residuals(double x, double t,
                                                     const SigmaModel& model) {
  require_positive(x, "consistency: x");
  require_positive(t, "consistency: t");
  const double j = j_sigma(model);
  const double cp = model.c_plus;
  const double cpp = model.c_plus_prime;
  const double y = scaled_y(x, t, model);
  const double yx2 = (y / x) * (y / x);
  const double pi4 = M_PI * M_PI * M_PI * M_PI;
  const double pi6 = pi4 * M_PI * M_PI;

  ConsistencyResiduals out;
  {
    const double t1 = -yx2 * std::pow(cp, 6) / (pi6 * std::pow(t, 4)) * F1pp(y);
    const double t2 = x / (2.0 * t);
    const double t3 = x / (2.0 * t) * shape_a0(y);
    out.res1 = t1 + t2 - t3;
    out.scale1 = std::max({1.0, std::abs(t1), std::abs(t2), std::abs(t3)});
  }
  {
    const double t1 = -yx2 * std::pow(cp, 3) * std::log(cpp) / (pi4 * t * t) * F2pp(y);
    const double t2 = 0.5 / std::sqrt(x * t) * shape_a1(y, cpp);
    out.res2 = t1 - t2;
    out.scale2 = std::max({1.0, std::abs(t1), std::abs(t2)});
  }
  {
    const double t1 = yx2 * F3pp(y, cp, cpp, j);
    const double t2 = 0.5 * std::sqrt(t) / std::pow(x, 1.5) * shape_a2(y, cp, cpp, j);
    const double s = std::sqrt(y + 1.0);
    const double sm1 = sqrt1pm1(y);
    const double remainder = y * y * (-3.0 * y + 2.0 * s - 3.0) /
                             (96.0 * x * x * std::pow(y + 1.0, 2.5) * sm1 * sm1);
    out.res3 = t1 - t2 - remainder;
    out.scale3 = std::max({1.0, std::abs(t1), std::abs(t2), std::abs(remainder)});
  }
  return out;
}

double tw_tail(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw invalid_argument_error("tw_tail: m must be > 0");
  return -m * m * m / 12.0 - std::log(m) / 8.0 + std::log(2.0) / 24.0 + zeta_prime_minus_one;
}

double logq_small_t_tail(double x, double t) {
  require_positive(x, "logq_small_t_tail: x");
  require_positive(t, "logq_small_t_tail: t");
  return tw_tail(x * std::pow(t, -1.0 / 3.0));
}

}  // namespace airydet

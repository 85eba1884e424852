#include "airydet/kpz_tail.hpp"

#include <cmath>

#include "airydet/asymptotics.hpp"
#include "airydet/errors.hpp"
#include "airydet/fredholm.hpp"

namespace airydet {
namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw invalid_argument_error(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

XTPoint st_to_xt(double s, double T) {
  require_positive(T, "st_to_xt: T");
  return {s * std::pow(T, -1.0 / 6.0), std::pow(T, -0.5)};
}

STPoint xt_to_st(double x, double t) {
  require_positive(t, "xt_to_st: t");
  return {x * std::pow(t, -1.0 / 3.0), std::pow(t, -2.0)};
}

double G_lower_tail(double s, double T) {
  require_positive(s, "G_lower_tail: s");
  require_positive(T, "G_lower_tail: T");
  const double z = M_PI * M_PI * s / std::pow(T, 2.0 / 3.0);
  const double sp1 = std::sqrt(1.0 + z);
  const double pi6 = std::pow(M_PI, 6);
  return T * T * F1(z) / pi6 + sp1 / 6.0 + std::log1p(z) / 48.0 +
         std::log(z / (sp1 + 1.0)) / 8.0 + std::log(T) / 12.0;
}

double upper_bound_log_prob(double s, double T, double p, double d_plus) {
  if (!(p >= 1.0)) throw invalid_argument_error("upper_bound_log_prob: p must be >= 1");
  return p - G_lower_tail(s + std::pow(T, -1.0 / 3.0) * std::log(p), T) + d_plus;
}

double lower_bound_log_prob(double s, double T, double epsilon, double d_minus) {
  if (!(epsilon > 0.0)) throw invalid_argument_error("lower_bound_log_prob: epsilon must be > 0");
  const double shift =
      std::pow(T, -1.0 / 3.0) * std::log(std::pow(s, 3.0 + epsilon) + std::pow(T, epsilon));
  return -G_lower_tail(s + shift, T) + d_minus;
}

double regime_expansion(double s, double T, TailRegime regime) {
  require_positive(s, "regime_expansion: s");
  require_positive(T, "regime_expansion: T");
  switch (regime) {
    case TailRegime::large_deviation: {
      const double y = s / std::pow(T, 2.0 / 3.0);
      return -T * T * F1(M_PI * M_PI * y) / std::pow(M_PI, 6);
    }
    case TailRegime::deep_tail: {
      const double pi = M_PI;
      return -4.0 * std::pow(s, 2.5) * std::cbrt(T) / (15.0 * pi) +
             s * s * std::pow(T, 2.0 / 3.0) / (2.0 * pi * pi) -
             2.0 * std::pow(s, 1.5) * T / (3.0 * pi * pi * pi) +
             2.0 * s * std::pow(T, 4.0 / 3.0) / (3.0 * std::pow(pi, 4)) +
             std::sqrt(s) * std::pow(T, 5.0 / 3.0) / (2.0 * std::pow(pi, 5)) +
             4.0 * T * T / (15.0 * std::pow(pi, 6)) - std::pow(s, 1.5) * std::log(s) / pi;
    }
    case TailRegime::crossover_small:
      return -s * s * s / 12.0 - std::log(s) / 8.0;
  }
  throw invalid_argument_error("regime_expansion: unknown regime");
}

double compare_G_vs_determinant(double s, double T) {
  const XTPoint p = st_to_xt(s, T);
  DetJob job;
  job.model = make_kpz_model();
  job.x = p.x;
  job.t = p.t;
  const DetResult det = log_q_sigma(job);
  return det.log_det + G_lower_tail(s, T);
}

}  // namespace airydet

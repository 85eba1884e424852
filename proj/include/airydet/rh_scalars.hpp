#ifndef AIRYDET_RH_SCALARS_HPP
#define AIRYDET_RH_SCALARS_HPP

#include "airydet/sigma_model.hpp"

namespace airydet {

// Documented validity regions for the two steepest-descent regimes:
// the small-xt quantities are derived for xt <= delta, the large-xt endpoint
// machinery for x >= k_min and xt >= delta. Neither bound is enforced;
// results carry an in_regime flag instead.
struct RegimeConfig {
  double delta = 0.25;
  double k_min = 8.0;
};

// Band-edge endpoint of the small-xt regime:
// alpha = pi^2 / (sqrt(c+^2 + pi^2 xt) + c+)^2, the bounded solution of
// c+ sqrt(alpha)/pi = (1 - alpha xt)/2.
double alpha_endpoint(double xt, double c_plus);

// g1 = alpha (sqrt(alpha) c+ / 6 pi - 1/4)
double g1_small(double xt, double c_plus);

// W(zeta; x) = -log F(x^2 zeta) + x^2 V(zeta), V = c+ zeta for zeta > 0 else 0.
double w_function(double zeta, double x, const SigmaModel& model);

// d1 = (1/2pi) Int_{-inf}^{alpha} W(s;x) / sqrt(alpha - s) ds
double d1(double x, double t, const SigmaModel& model);

// chi = (1/2pi) Int_{-inf}^{alpha} [W(alpha;x) - W(s;x)] / (alpha - s)^{3/2} ds
double chi(double x, double t, const SigmaModel& model);

struct FCoeffs {
  double f1 = 0.0, f2 = 0.0;
};

// First two Taylor coefficients of the conformal map at the band edge:
// f1 = (c+/(pi sqrt(alpha)) + xt)^{2/3},
// f2 = -(2 c+ / (15 pi alpha^{3/2})) (c+/(pi sqrt(alpha)) + xt)^{-1/3}.
FCoeffs f_coeffs_small(double xt, double c_plus);

// phi(alpha + v) for v > 0 in closed form; the conformal map satisfies
// (-(3/4) phi)^{2/3} = f1 v + f2 v^2 + O(v^3).
double phi_small(double v, double xt, double c_plus);

struct RHScalars {
  double alpha = 0.0;
  double g1 = 0.0;
  double d1 = 0.0;
  double chi = 0.0;
  double f1 = 0.0, f2 = 0.0;
  double x = 0.0, t = 0.0;
  bool in_regime = false;
};

RHScalars evaluate_small_xt(double x, double t, const SigmaModel& model,
                            const RegimeConfig& cfg = {});

// Root of Int_{-inf}^{a} (log F)'((x/t) z) / sqrt(a - z) dz = pi sqrt(xt) (1 - a),
// bracketed by the constructive bounds built from M = ||v||_1 + 2 ||v||_inf,
// v = (log F)' - c+ 1_(0,inf), then refined by bisection/secant.
struct EndpointSolution {
  double a = 0.0;
  double residual = 0.0;
  double bracket_lo = 0.0, bracket_hi = 0.0;
  int iterations = 0;
  bool in_regime = false;
};

EndpointSolution solve_endpoint_a(double x, double t, const SigmaModel& model,
                                  const RegimeConfig& cfg = {});

// Three-term large-x expansion of the endpoint in y = pi^2 xt / c+^2:
// a0(y) + (t^{1/2}/x^{3/2}) a1(y) + (t^{3/2}/x^{5/2}) a2(y).
double endpoint_a_expansion(double x, double t, const SigmaModel& model);

// g1 = a^2/4 - a/2 + (1/pi sqrt(xt)) Int (log F)'((x/t) z) sqrt(a - z) dz
double g1_large(double x, double t, const SigmaModel& model);

// Conformal-map coefficients at the solved endpoint, from the quadratures of
// (log F)'' and (log F)'''.
FCoeffs f_coeffs_large(double x, double t, const SigmaModel& model);

}  // namespace airydet

#endif

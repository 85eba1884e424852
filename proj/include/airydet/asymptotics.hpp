#ifndef AIRYDET_ASYMPTOTICS_HPP
#define AIRYDET_ASYMPTOTICS_HPP

#include <string>
#include <utility>
#include <vector>

#include "airydet/sigma_model.hpp"

namespace airydet {

// zeta'(-1) = 1/12 - log A (A the Glaisher-Kinkelin constant).
inline constexpr double zeta_prime_minus_one = -0.16542114370045092921391966024278064276;

// Shape functions of the large-x expansions, in the scaled variable
// y = pi^2 x t / c_+^2. All evaluated in cancellation-safe forms.
double shape_a0(double y);                                    // (sqrt(y+1)-1)^2 / y
double shape_a1(double y, double c_plus_prime);
double shape_a2(double y, double c_plus, double c_plus_prime, double j_sigma);

double F1(double y);
double F2(double y);  // = F1'
double F3(double y, double c_plus, double c_plus_prime, double j_sigma);

// Closed-form second derivatives, used by the consistency residuals.
double F1pp(double y);
double F2pp(double y);
double F3pp(double y, double c_plus, double c_plus_prime, double j_sigma);

// C = 2 c+ j_sigma / pi + log^2(c'+) / (2 pi^2)
double C_constant(double c_plus, double c_plus_prime, double j_sigma);
double C_constant(const SigmaModel& model);

struct AsymptoticEval {
  double y = 0.0;
  std::vector<std::pair<std::string, double>> terms;
  double total = 0.0;
};

// (x/2t) a0 + (1/2 sqrt(xt)) a1 + (t^{1/2}/2x^{3/2}) a2
AsymptoticEval u_asymptotic(double x, double t, const SigmaModel& model);

// -(c+^6/pi^6 t^4) F1 - (c+^3 log c'+ / pi^4 t^2) F2 + F3 - C log t
AsymptoticEval logq_asymptotic(double x, double t, const SigmaModel& model);

// KPZ weight specialization (c+ = c'+ = 1, j = -pi/12):
// -F1(pi^2 xt)/pi^6 t^4 - sqrt(1+pi^2 xt)/6 - log(1+pi^2 xt)/48
//   - log(sqrt(1+pi^2 xt)-1)/8 + log(t)/6
AsymptoticEval logq_kpz_asymptotic(double x, double t);

// Residuals of the order-by-order consistency between the log-determinant
// expansion and the derivative-of-log expansion; all three vanish identically
// (the third up to the displayed exact remainder, which is subtracted).
struct ConsistencyResiduals {
  double res1 = 0.0, res2 = 0.0, res3 = 0.0;
  double scale1 = 1.0, scale2 = 1.0, scale3 = 1.0;  // max(1, |largest term|)
};
ConsistencyResiduals expansion_consistency_residuals(double x, double t,
                                                     const SigmaModel& model);

// Deep-tail Tracy-Widom expansion at -m: -m^3/12 - log(m)/8 + log2/24 + zeta'(-1)
double tw_tail(double m);

// Small-t tail of the log-determinant at fixed x (the same polynomial with
// m = x t^{-1/3}; the t-independent integral correction is not included).
double logq_small_t_tail(double x, double t);

}  // namespace airydet

#endif

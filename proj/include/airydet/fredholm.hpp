#ifndef AIRYDET_FREDHOLM_HPP
#define AIRYDET_FREDHOLM_HPP

#include "airydet/sigma_model.hpp"

namespace airydet {

// One determinant evaluation. trunc_lo/trunc_hi = 0 selects automatic domain
// truncation (from the sigma and Airy tails); order = 0 selects the automatic
// composite rule with order-doubling until stable (cap ~2048 points).
// Explicit trunc + order gives a fixed x-independent discretization.
struct DetJob {
  SigmaModel model;
  double x = 0.0;
  double t = 1.0;
  double trunc_lo = 0.0;
  double trunc_hi = 0.0;
  int order = 0;
  bool check_stability = true;
};

struct DetResult {
  double log_det = 0.0;
  double eig_min = 0.0;        // spectrum of the discretized symmetrized kernel
  double eig_max = 0.0;
  double trunc_estimate = 0.0; // trace bound on the discarded tails
  int order_used = 0;
  bool stable = false;         // order-doubling agreement reached
  double stability_delta = 0.0;
  int precision_bits = 53;     // 53 = plain double; larger when escalated
};

// log Q_sigma(x,t) = log det(1 - sqrt(sigma) K^Ai sqrt(sigma)) with
// sigma evaluated at r(u) = u t^{-2/3} + x/t. Deep evaluations (largest
// eigenvalue within ~1e-9 of 1) escalate to multiprecision factorization.
DetResult log_q_sigma(const DetJob& job);

// Finite-temperature representation of the same determinant for the KPZ
// weight: det(1 - L) on (-x t^{-1/3}, inf), with
// L(u,v) = Int sigma(s t^{-2/3}) Ai(u+s) Ai(v+s) ds.
struct FiniteTempOpts {
  int order = 0;
  bool check_stability = true;
};
DetResult log_q_finite_temp(double x, double t, const FiniteTempOpts& opts = {});

// Airy-kernel determinant on (s, inf): log of the Tracy-Widom distribution.
struct TwOpts {
  int order = 0;
  bool check_stability = true;
};
DetResult log_tracy_widom(double s, const TwOpts& opts = {});

// Fourth-order central second difference of log Q in x, plus x/(2t).
struct FdResult {
  double value = 0.0;
  double noise_estimate = 0.0;
  bool step_warning = false;  // h below 1e-4: cancellation dominates
};
FdResult u_sigma_fd(const SigmaModel& model, double x, double t, double h = 0.05);

// Finite-difference residual of u_t + 2 u u_x + u_xxx / 6 on a 5 x 3 stencil
// of u values (9 x 3 determinant grid).
struct KdvResult {
  double residual = 0.0;
  double noise_floor = 0.0;
  bool noise_dominated = false;
  double u = 0.0;
};
KdvResult kdv_residual(const SigmaModel& model, double x, double t, double hx = 0.1,
                       double ht = 0.05);

}  // namespace airydet

#endif

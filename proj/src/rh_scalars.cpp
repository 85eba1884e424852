#include "airydet/rh_scalars.hpp"

#include <algorithm>
#include <cmath>

#include "airydet/asymptotics.hpp"
#include "airydet/errors.hpp"
#include "airydet/quadrature.hpp"

namespace airydet {
namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw invalid_argument_error(std::string(what) + " must be positive and finite");
  }
}

// integrate f over contiguous pieces delimited by ascending breakpoints
template <class F>
double integrate_pieces(const F& f, const std::vector<double>& breaks, int order) {
  double acc = 0.0;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i + 1] - breaks[i] < 1e-300) continue;
    acc += integrate(f, breaks[i], breaks[i + 1], order);
  }
  return acc;
}

std::vector<double> clip_sorted(std::vector<double> v, double lo, double hi) {
  std::vector<double> out = {lo, hi};
  for (double b : v) {
    if (b > lo && b < hi) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

double alpha_endpoint(double xt, double c_plus) {
  require_positive(xt, "alpha_endpoint: xt");
  require_positive(c_plus, "alpha_endpoint: c_plus");
  const double root = std::sqrt(c_plus * c_plus + M_PI * M_PI * xt);
  const double denom = root + c_plus;
  return M_PI * M_PI / (denom * denom);
}

double g1_small(double xt, double c_plus) {
  const double a = alpha_endpoint(xt, c_plus);
  return a * (std::sqrt(a) * c_plus / (6.0 * M_PI) - 0.25);
}

double w_function(double zeta, double x, const SigmaModel& model) {
  require_positive(x, "w_function: x");
  const double r = x * x * zeta;
  if (zeta > 0.0) return -model.log_f_minus_linear(r);
  return -model.log_f(r);
}

double d1(double x, double t, const SigmaModel& model) {
  require_positive(x, "d1: x");
  require_positive(t, "d1: t");
  const int order = 80;
  const double alpha = alpha_endpoint(x * t, model.c_plus);
  const double x2 = x * x;
  const double s_min = -45.0 / (model.c_minus * x2);  // |W| < ~e^-45 below
  const double flat = 45.0 / (model.epsilon * x2);    // W ~ -log c'+ beyond
  const double p3lo = std::min(flat, 0.5 * alpha);

  auto w = [&](double s) { return w_function(s, x, model); };

  // direct pieces away from the edge, with the V-kink at 0 as a breakpoint
  const double direct = integrate_pieces(
      [&](double s) { return w(s) / std::sqrt(alpha - s); }, clip_sorted({0.0}, s_min, p3lo),
      order);
  // edge piece through s = alpha - tau^2
  const double tau_max = std::sqrt(alpha - p3lo);
  const double edge =
      integrate([&](double tau) { return 2.0 * w(alpha - tau * tau); }, 0.0, tau_max, order);
  return (direct + edge) / (2.0 * M_PI);
}

double chi(double x, double t, const SigmaModel& model) {
  require_positive(x, "chi: x");
  require_positive(t, "chi: t");
  const int order = 80;
  const double alpha = alpha_endpoint(x * t, model.c_plus);
  const double x2 = x * x;
  const double s_min = -45.0 / (model.c_minus * x2);
  const double flat = 45.0 / (model.epsilon * x2);
  const double p3lo = std::min(flat, 0.5 * alpha);

  auto w = [&](double s) { return w_function(s, x, model); };
  const double w_alpha = w(alpha);

  const double direct = integrate_pieces(
      [&](double s) { return (w_alpha - w(s)) / std::pow(alpha - s, 1.5); },
      clip_sorted({0.0}, s_min, p3lo), order);
  const double tau_max = std::sqrt(alpha - p3lo);
  const double edge = integrate(
      [&](double tau) { return 2.0 * (w_alpha - w(alpha - tau * tau)) / (tau * tau); }, 0.0,
      tau_max, order);
  // the W(s) ~ 0 tail below s_min integrates in closed form
  const double tail = 2.0 * w_alpha / std::sqrt(alpha - s_min);
  return (direct + edge + tail) / (2.0 * M_PI);
}

FCoeffs f_coeffs_small(double xt, double c_plus) {
  const double alpha = alpha_endpoint(xt, c_plus);
  const double base = c_plus / (M_PI * std::sqrt(alpha)) + xt;
  FCoeffs out;
  out.f1 = std::pow(base, 2.0 / 3.0);
  out.f2 = -2.0 * c_plus / (15.0 * M_PI * std::pow(alpha, 1.5)) * std::pow(base, -1.0 / 3.0);
  return out;
}

double phi_small(double v, double xt, double c_plus) {
  require_positive(v, "phi_small: v");
  const double alpha = alpha_endpoint(xt, c_plus);
  // g(alpha+v) in closed form, then phi = 2g - c+ v
  const double g = -(2.0 / 3.0) * xt * v * std::sqrt(v) +
                   c_plus / M_PI *
                       (std::sqrt(alpha * v) - alpha * M_PI / 2.0 +
                        (alpha + v) * std::atan(std::sqrt(alpha / v)));
  return 2.0 * g - c_plus * v;
}

RHScalars evaluate_small_xt(double x, double t, const SigmaModel& model,
                            const RegimeConfig& cfg) {
  RHScalars out;
  out.x = x;
  out.t = t;
  out.alpha = alpha_endpoint(x * t, model.c_plus);
  out.g1 = g1_small(x * t, model.c_plus);
  out.d1 = d1(x, t, model);
  out.chi = chi(x, t, model);
  const FCoeffs f = f_coeffs_small(x * t, model.c_plus);
  out.f1 = f.f1;
  out.f2 = f.f2;
  out.in_regime = x >= cfg.k_min && x * t <= cfg.delta;
  return out;
}

// ---------------------------------------------------------------------------
// Large-xt endpoint machinery
// ---------------------------------------------------------------------------

namespace {

// Int_0^{tau_max} f(tau) dtau for integrands of the form
// g(lambda (a - tau^2)) * poly(tau), with breakpoints at the decay edges of
// the argument; rate_pos/rate_neg are the r-scales where g has reached its
// limits on either side.
template <class F>
double edge_integral(const F& f_of_tau, double a, double lambda, double rate_pos,
                     double rate_neg, int order) {
  const double tau_max = std::sqrt(a + rate_neg / lambda);
  std::vector<double> breaks = {0.0, tau_max};
  if (a > rate_pos / lambda) breaks.push_back(std::sqrt(a - rate_pos / lambda));
  if (a > 0.0 && a < tau_max * tau_max) breaks.push_back(std::sqrt(a));
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  double acc = 0.0;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    acc += integrate(f_of_tau, breaks[i], breaks[i + 1], order);
  }
  return acc;
}

struct VNorms {
  double l1 = 0.0, linf = 0.0;
};

// v = (log F)' - c+ 1_(0,inf); v >= 0 on r < 0 and v <= 0 on r > 0
VNorms v_norms(const SigmaModel& m) {
  VNorms out;
  const double lo = -60.0 / m.c_minus, hi = 120.0 / m.epsilon;
  out.l1 = integrate([&](double r) { return m.log_f_d1(r); }, lo, 0.0, 256) +
           integrate([&](double r) { return m.c_plus - m.log_f_d1(r); }, 0.0, hi, 256);
  for (int i = 0; i <= 2000; ++i) {
    const double r = lo + (hi - lo) * i / 2000.0;
    const double v = m.log_f_d1(r) - (r > 0.0 ? m.c_plus : 0.0);
    out.linf = std::max(out.linf, std::abs(v));
  }
  return out;
}

}  // namespace

EndpointSolution solve_endpoint_a(double x, double t, const SigmaModel& model,
                                  const RegimeConfig& cfg) {
  require_positive(x, "solve_endpoint_a: x");
  require_positive(t, "solve_endpoint_a: t");
  if (!model.admissible()) {
    throw model_not_admissible_error("solve_endpoint_a: model must be admissible");
  }
  const double lambda = x / t;
  const double sqrt_xt = std::sqrt(x * t);
  const int order = 64;

  auto h_gap = [&](double a) {
    const double integral = 2.0 * edge_integral(
        [&](double tau) { return model.log_f_d1(lambda * (a - tau * tau)); }, a, lambda,
        90.0 / model.epsilon, 90.0 / model.c_minus, order);
    return integral - M_PI * sqrt_xt * (1.0 - a);
  };

  // constructive bracket from M = ||v||_1 + 2 ||v||_inf
  const VNorms vn = v_norms(model);
  const double M = vn.l1 + 2.0 * vn.linf;
  const double cp = model.c_plus;
  double lo, hi;
  if (x > M / M_PI) {
    auto bound = [&](double sign) {
      return 1.0 + 2.0 * cp * cp / (M_PI * M_PI * t * x) + sign * M / (M_PI * x) -
             2.0 * cp * std::sqrt(cp * cp + M_PI * t * (M_PI * x + sign * M)) /
                 (M_PI * M_PI * t * x);
    };
    lo = bound(-1.0);
    hi = bound(+1.0);
  } else {
    lo = 1e-6;
    hi = 1.0 + M / (M_PI * x) + 1.0;
  }
  if (!(lo > 0.0)) lo = 1e-9;

  double flo = h_gap(lo), fhi = h_gap(hi);
  int widen = 0;
  while (flo > 0.0 && lo > 1e-14 && widen++ < 60) {
    lo *= 0.5;
    flo = h_gap(lo);
  }
  while (fhi < 0.0 && widen++ < 60) {
    hi *= 1.5;
    fhi = h_gap(hi);
  }
  if (!(flo <= 0.0 && fhi >= 0.0)) {
    throw endpoint_bracket_error("solve_endpoint_a: no sign change on [" + std::to_string(lo) +
                                 ", " + std::to_string(hi) + "], h = " + std::to_string(flo) +
                                 " .. " + std::to_string(fhi));
  }

  EndpointSolution sol;
  sol.bracket_lo = lo;
  sol.bracket_hi = hi;
  int it = 0;
  while (hi - lo > 1e-15 * std::max(1.0, hi) && it < 200) {
    const double mid = 0.5 * (lo + hi);
    const double fm = h_gap(mid);
    if (fm <= 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
    ++it;
  }
  sol.a = 0.5 * (lo + hi);
  sol.residual = h_gap(sol.a);
  sol.iterations = it;
  sol.in_regime = x >= cfg.k_min && x * t >= cfg.delta;
  return sol;
}

double endpoint_a_expansion(double x, double t, const SigmaModel& model) {
  require_positive(x, "endpoint_a_expansion: x");
  require_positive(t, "endpoint_a_expansion: t");
  const double y = M_PI * M_PI * x * t / (model.c_plus * model.c_plus);
  const double j = j_sigma(model);
  return shape_a0(y) + std::sqrt(t) / std::pow(x, 1.5) * shape_a1(y, model.c_plus_prime) +
         std::pow(t, 1.5) / std::pow(x, 2.5) *
             shape_a2(y, model.c_plus, model.c_plus_prime, j);
}

double g1_large(double x, double t, const SigmaModel& model) {
  const EndpointSolution sol = solve_endpoint_a(x, t, model);
  const double a = sol.a;
  const double lambda = x / t;
  const double integral = 2.0 * edge_integral(
      [&](double tau) { return model.log_f_d1(lambda * (a - tau * tau)) * tau * tau; }, a,
      lambda, 90.0 / model.epsilon, 90.0 / model.c_minus, 64);
  return a * a / 4.0 - a / 2.0 + integral / (M_PI * std::sqrt(x * t));
}

FCoeffs f_coeffs_large(double x, double t, const SigmaModel& model) {
  const EndpointSolution sol = solve_endpoint_a(x, t, model);
  const double a = sol.a;
  const double lambda = x / t;
  const int order = 64;
  const double rp = 120.0 / model.epsilon, rm = 120.0 / model.c_minus;
  const double i2 = 2.0 * edge_integral(
      [&](double tau) { return model.log_f_d2(lambda * (a - tau * tau)); }, a, lambda, rp, rm,
      order);
  const double i3 = 2.0 * edge_integral(
      [&](double tau) { return model.log_f_d3(lambda * (a - tau * tau)); }, a, lambda, rp, rm,
      order);
  FCoeffs out;
  out.f1 = std::pow(1.0 + std::sqrt(x) / (M_PI * std::pow(t, 1.5)) * i2, 2.0 / 3.0);
  out.f2 = 4.0 * std::pow(x, 1.5) / (15.0 * M_PI * std::pow(t, 2.5) * std::sqrt(out.f1)) * i3;
  return out;
}

}  // namespace airydet

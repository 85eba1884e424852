#include "airydet/airy.hpp"

#include <cmath>

#include "airydet/errors.hpp"

namespace airydet {
namespace {

// Minimal double-double arithmetic for the compensated Maclaurin summation.
// Only the operations the series needs: add, multiply, divide by double.
struct dd {
  double hi = 0.0;
  double lo = 0.0;
};

inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline dd dd_add(const dd& a, const dd& b) {
  dd s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline dd dd_mul(const dd& a, const dd& b) {
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline dd dd_div_d(const dd& a, double b) {
  double q1 = a.hi / b;
  dd p = two_prod(q1, b);
  double r = ((a.hi - p.hi) - p.lo) + a.lo;
  double q2 = r / b;
  return quick_two_sum(q1, q2);
}

inline dd dd_scale(const dd& a, double b) {
  dd p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

// Ai(0), Ai'(0) to double-double accuracy.
constexpr double kAi0Hi = 3.55028053887817219e-01;
constexpr double kAi0Lo = 2.05233632436211994e-17;
constexpr double kAip0Hi = -2.58819403792806824e-01;
constexpr double kAip0Lo = 2.52224311161083207e-17;

constexpr double kSeriesCut = 9.0;

AiryValue airy_series_dd(double x) {
  // Same recurrence as detail::airy_maclaurin, in double-double arithmetic.
  // Cancellation costs up to exp((2/3) 9^{3/2}) ~ 5e7; ~24 digits survive.
  const dd x3 = dd_mul(two_prod(x, x), {x, 0.0});
  dd tf{1.0, 0.0}, tg{x, 0.0};
  dd sf = tf, sg = tg;
  dd sfp{0.0, 0.0}, sgp{1.0, 0.0};
  for (int k = 0; k < 400; ++k) {
    tf = dd_div_d(dd_mul(tf, x3), (3.0 * k + 2) * (3.0 * k + 3));
    tg = dd_div_d(dd_mul(tg, x3), (3.0 * k + 3) * (3.0 * k + 4));
    sf = dd_add(sf, tf);
    sg = dd_add(sg, tg);
    sfp = dd_add(sfp, dd_div_d(dd_scale(tf, 3.0 * k + 3), x));
    sgp = dd_add(sgp, dd_div_d(dd_scale(tg, 3.0 * k + 4), x));
    if (std::abs(tf.hi) + std::abs(tg.hi) < 1e-40) break;
  }
  const dd ai0{kAi0Hi, kAi0Lo}, aip0{kAip0Hi, kAip0Lo};
  dd ai = dd_add(dd_mul(ai0, sf), dd_mul(aip0, sg));
  dd aip = dd_add(dd_mul(ai0, sfp), dd_mul(aip0, sgp));
  return {ai.hi + ai.lo, aip.hi + aip.lo};
}

// DLMF 9.7 coefficients: u_0 = 1, u_k = u_{k-1} (6k-5)(6k-3)(6k-1) / (216 k (2k-1)),
// v_k = u_k (6k+1)/(1-6k).
AiryValue airy_asymptotic_pos(double x) {
  const double xi = (2.0 / 3.0) * x * std::sqrt(x);
  const double e = std::exp(-xi);
  if (e == 0.0) return {0.0, 0.0};
  double uk = 1.0, term = 1.0;
  double s_ai = 1.0, s_aip = 1.0;
  double prev = 1.0;
  for (int k = 1; k < 80; ++k) {
    uk *= (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) / (216.0 * k * (2.0 * k - 1));
    term = uk / std::pow(xi, k);
    if (std::abs(term) >= prev) break;  // past the optimal truncation point
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    s_ai += sign * term;
    s_aip += sign * term * (6.0 * k + 1) / (1.0 - 6.0 * k);
    prev = std::abs(term);
    if (prev < 1e-19) break;
  }
  const double sqrt_pi = std::sqrt(M_PI);
  const double x14 = std::pow(x, 0.25);
  return {e * s_ai / (2.0 * sqrt_pi * x14), -e * x14 * s_aip / (2.0 * sqrt_pi)};
}

AiryValue airy_asymptotic_neg(double x) {
  const double z = -x;
  const double xi = (2.0 / 3.0) * z * std::sqrt(z);
  double uk = 1.0, vk = 1.0;
  double P = 1.0, Q = 0.0, R = 1.0, S = 0.0;
  double prev = 1.0;
  for (int k = 1; k < 160; ++k) {
    uk *= (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) / (216.0 * k * (2.0 * k - 1));
    vk = uk * (6.0 * k + 1) / (1.0 - 6.0 * k);
    double term = uk / std::pow(xi, k);
    if (std::abs(term) >= prev) break;
    // even k feeds the cos-series, odd k the sin-series, signs (-1)^(k/2)
    double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      P += sign * term;
      R += sign * vk / std::pow(xi, k);
    } else {
      Q += sign * term;
      S += sign * vk / std::pow(xi, k);
    }
    prev = std::abs(term);
    if (prev < 1e-19) break;
  }
  const double c = std::cos(xi - M_PI / 4.0);
  const double s = std::sin(xi - M_PI / 4.0);
  const double sqrt_pi = std::sqrt(M_PI);
  const double z14 = std::pow(z, 0.25);
  return {(c * P + s * Q) / (sqrt_pi * z14), (s * R - c * S) * z14 / sqrt_pi};
}

}  // namespace

AiryValue airy(double x) {
  if (!std::isfinite(x)) {
    throw invalid_argument_error("airy: argument must be finite");
  }
  if (std::abs(x) <= kSeriesCut) return airy_series_dd(x);
  return x > 0 ? airy_asymptotic_pos(x) : airy_asymptotic_neg(x);
}

double airy_kernel(double u, double v) {
  if (!std::isfinite(u) || !std::isfinite(v)) {
    throw invalid_argument_error("airy_kernel: arguments must be finite");
  }
  if (u > v) std::swap(u, v);  // symmetry holds bitwise
  if (v - u < 1e-6) {
    const double m = 0.5 * (u + v);
    const AiryValue a = airy(m);
    return a.ai_prime * a.ai_prime - m * a.ai * a.ai;
  }
  const AiryValue a = airy(u);
  const AiryValue b = airy(v);
  return (a.ai * b.ai_prime - a.ai_prime * b.ai) / (u - v);
}

}  // namespace airydet

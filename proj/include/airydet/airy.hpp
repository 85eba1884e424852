#ifndef AIRYDET_AIRY_HPP
#define AIRYDET_AIRY_HPP

namespace airydet {

struct AiryValue {
  double ai = 0.0;
  double ai_prime = 0.0;
};

// Real-axis Airy function Ai and Ai'. Maclaurin series with compensated
// summation for |x| <= 9, classical asymptotic expansions beyond. Relative
// accuracy better than 1e-12 up to |x| ~ 30; past the positive underflow
// point (x ~ 106) the values hit the denormal floor and 0 is returned.
AiryValue airy(double x);

// Airy kernel (Ai(u)Ai'(v) - Ai'(u)Ai(v)) / (u - v). The confluent diagonal
// form Ai'(m)^2 - m Ai(m)^2 at the midpoint is used for |u - v| < 1e-6,
// where the divided difference loses more than ~8 digits. Symmetric by
// argument ordering, so airy_kernel(u, v) == airy_kernel(v, u) bitwise.
double airy_kernel(double u, double v);

}  // namespace airydet

#endif

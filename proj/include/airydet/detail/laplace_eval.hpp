#ifndef AIRYDET_DETAIL_LAPLACE_EVAL_HPP
#define AIRYDET_DETAIL_LAPLACE_EVAL_HPP

#include <cmath>
#include <vector>

namespace airydet::detail {

// Evaluation core for weights F(z) = 1 + sum_j m_j exp(l_j z).
// Everything goes through log-sum-exp over the exponent set {0} u {l_j r + log m_j},
// so large |r| never overflows. The log-derivatives of F are the cumulants of
// the location variable under the softmax distribution:
//   (log F)'   = E[l],  (log F)'' = Var[l],  (log F)''' = E[(l - E[l])^3].
struct LaplaceData {
  std::vector<double> locations;   // ascending, > 0
  std::vector<double> log_masses;  // log m_j
};

template <class Real>
struct LogFMoments {
  Real log_f, d1, d2, d3;
};

template <class Real>
LogFMoments<Real> logf_moments(const LaplaceData& d, const Real& r) {
  using std::exp;
  using std::log;
  const int n = static_cast<int>(d.locations.size());
  // exponents: e_0 = 0 (the constant 1), e_j = l_j r + log m_j
  Real emax(0);
  std::vector<Real> e(n + 1);
  e[0] = Real(0);
  for (int j = 0; j < n; ++j) {
    e[j + 1] = d.locations[j] * r + d.log_masses[j];
    if (e[j + 1] > emax) emax = e[j + 1];
  }
  Real s(0);
  std::vector<Real> q(n + 1);
  for (int j = 0; j <= n; ++j) {
    q[j] = exp(e[j] - emax);
    s += q[j];
  }
  LogFMoments<Real> out;
  out.log_f = emax + log(s);
  Real mu(0);
  for (int j = 1; j <= n; ++j) mu += d.locations[j - 1] * q[j];
  mu /= s;
  Real var(0), m3(0);
  {
    Real c0 = -mu;  // location of the constant term is 0
    var += c0 * c0 * q[0];
    m3 += c0 * c0 * c0 * q[0];
  }
  for (int j = 1; j <= n; ++j) {
    Real c = d.locations[j - 1] - mu;
    var += c * c * q[j];
    m3 += c * c * c * q[j];
  }
  out.d1 = mu;
  out.d2 = var / s;
  out.d3 = m3 / s;
  return out;
}

// log F(r) - c r, evaluated through shifted exponents so the large-r limit
// log c'_+ comes out without cancellation.
template <class Real>
Real logf_minus_linear(const LaplaceData& d, const Real& r, double c) {
  using std::exp;
  using std::log;
  const int n = static_cast<int>(d.locations.size());
  Real emax = -c * r;
  std::vector<Real> e(n + 1);
  e[0] = emax;
  for (int j = 0; j < n; ++j) {
    e[j + 1] = (d.locations[j] - c) * r + d.log_masses[j];
    if (e[j + 1] > emax) emax = e[j + 1];
  }
  Real s(0);
  for (int j = 0; j <= n; ++j) s += exp(e[j] - emax);
  return emax + log(s);
}

// sigma(r) = 1 - 1/F(r) = -expm1(-log F(r))
template <class Real>
Real sigma_from_logf(const Real& log_f) {
  using std::expm1;
  return -expm1(-log_f);
}

}  // namespace airydet::detail

#endif

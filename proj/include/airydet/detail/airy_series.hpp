#ifndef AIRYDET_DETAIL_AIRY_SERIES_HPP
#define AIRYDET_DETAIL_AIRY_SERIES_HPP

namespace airydet::detail {

// Maclaurin evaluation of Ai, Ai' from the ODE recurrence
// c_{n+3} = c_n / ((n+2)(n+3)) applied to the two solution families seeded by
// (Ai(0), Ai'(0)). Converges everywhere; the summation cancels roughly
// exp((2/3)|x|^{3/2}) worth of magnitude, so Real must carry that many
// guard digits on top of the target accuracy. Callers are responsible for
// setting the working precision; `ai0`/`aip0` must be supplied at it.
template <class Real>
void airy_maclaurin(const Real& x, const Real& ai0, const Real& aip0, Real& ai,
                    Real& aip, const Real& tail_eps) {
  using std::abs;
  if (x == 0) {
    ai = ai0;
    aip = aip0;
    return;
  }
  const Real x3 = x * x * x;
  // f-family: exponents 3k; g-family: exponents 3k+1
  Real tf(1), tg = x;
  Real sf = tf, sg = tg;        // values
  Real sfp(0), sgp(1);          // derivatives
  Real max_term(1);
  for (int k = 0; k < 100000; ++k) {
    tf = tf * x3 / ((3 * k + 2) * (3 * k + 3));
    tg = tg * x3 / ((3 * k + 3) * (3 * k + 4));
    sf += tf;
    sg += tg;
    sfp += (3 * k + 3) * tf / x;
    sgp += (3 * k + 4) * tg / x;
    Real m = abs(tf) + abs(tg);
    if (m > max_term) max_term = m;
    if (m < tail_eps * max_term) break;
  }
  ai = ai0 * sf + aip0 * sg;
  aip = ai0 * sfp + aip0 * sgp;
}

}  // namespace airydet::detail

#endif

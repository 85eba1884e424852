#ifndef AIRYDET_KPZ_TAIL_HPP
#define AIRYDET_KPZ_TAIL_HPP

namespace airydet {

struct STPoint {
  double s = 0.0, T = 0.0;
};
struct XTPoint {
  double x = 0.0, t = 0.0;
};

// Coordinate map between the rescaled-height variables (s, T) and the
// determinant variables: x = s T^{-1/6}, t = T^{-1/2}.
XTPoint st_to_xt(double s, double T);
STPoint xt_to_st(double x, double t);

// Lower-tail rate function
// G(s,T) = T^2 F1(z)/pi^6 + sqrt(1+z)/6 + log(1+z)/48 + log(sqrt(1+z)-1)/8
//          + log(T)/12,  z = pi^2 s / T^{2/3}.
double G_lower_tail(double s, double T);

// log P(Y_T < -s) <= p - G(s + T^{-1/3} log p, T) + D+, any p >= 1.
double upper_bound_log_prob(double s, double T, double p = 1.0, double d_plus = 0.0);

// log P(Y_T < -s) >= -G(s + T^{-1/3} log(s^{3+eps} + T^eps), T) + D-, any eps > 0.
double lower_bound_log_prob(double s, double T, double epsilon = 0.1, double d_minus = 0.0);

enum class TailRegime {
  large_deviation,   // s = y T^{2/3}:      -T^2 F1(pi^2 y)/pi^6
  deep_tail,         // s T^{-2/3} -> inf:  seven-term polynomial bound
  crossover_small,   // s T^{-2/3} -> 0:    -s^3/12 - log(s)/8
};

double regime_expansion(double s, double T, TailRegime regime);

// log Q(sT^{-1/6}, T^{-1/2}) + G(s,T); bounded (O(1)) on the validity region.
double compare_G_vs_determinant(double s, double T);

}  // namespace airydet

#endif

#include "airydet/fredholm.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <limits>
#include <map>
#include <vector>

#include "airydet/airy.hpp"
#include "airydet/detail/airy_series.hpp"
#include "airydet/detail/gauss_legendre_impl.hpp"
#include "airydet/errors.hpp"

namespace airydet {
namespace {

namespace bmp = boost::multiprecision;
using mpreal = bmp::number<bmp::mpfr_float_backend<0>, bmp::et_off>;

struct PrecisionGuard {
  unsigned saved;
  explicit PrecisionGuard(unsigned digits10) : saved(mpreal::default_precision()) {
    mpreal::default_precision(digits10);
  }
  ~PrecisionGuard() { mpreal::default_precision(saved); }
};

int bits_to_digits(double bits) { return static_cast<int>(std::ceil(bits / 3.3219)) + 4; }

// ---------------------------------------------------------------------------
// Discretization planning
// ---------------------------------------------------------------------------

struct Panel {
  double lo = 0.0, hi = 0.0;
  int order = 0;
  bool transition = false;  // contains the sigma switch-on layer
};

// Total oscillation phase of Ai over [a, b] (only the negative axis counts).
double airy_osc_phase(double a, double b) {
  auto ph = [](double u) {
    const double m = std::max(0.0, -u);
    return (2.0 / 3.0) * m * std::sqrt(m);
  };
  return ph(a) - ph(b);
}

int panel_order(const Panel& p) {
  const double phase = airy_osc_phase(p.lo, p.hi);
  const double len = p.hi - p.lo;
  int n = 24 + static_cast<int>(std::ceil(0.8 * phase)) +
          static_cast<int>(std::ceil(2.0 * std::min(len, 12.0)));
  if (p.transition) n = std::max(n, 48);
  return n;
}

// Upper domain cut: smallest U >= 10 with 2 U Ai(U)^2 < 1e-16.
double airy_upper_cut() {
  static const double cut = [] {
    double u = 10.0;
    while (2.0 * u * airy(u).ai * airy(u).ai >= 1e-16) u += 0.5;
    return u;
  }();
  return cut;
}

double tw_gap_nats(double depth) {
  return depth > 0.0 ? (4.0 / 3.0) * depth * std::sqrt(depth) : 0.0;
}

// Series cancellation cost of the multiprecision Airy evaluation, in bits.
double airy_guard_bits(double max_abs_node) {
  return 0.9624 * std::pow(max_abs_node, 1.5) + 64.0;
}

struct Plan {
  std::vector<Panel> panels;
  double lo = 0.0, hi = 0.0;
  double route_depth = 0.0;    // max(0, -u*) where the weight switches on
  double trunc_estimate = 0.0;
  const SigmaModel* weight = nullptr;  // nullptr: sigma == 1 on the domain
  double x = 0.0, t = 1.0;
};

void finalize_panels(Plan& plan, std::vector<double> breaks) {
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i + 1] - breaks[i] < 1e-300) continue;
    Panel p;
    p.lo = breaks[i];
    p.hi = breaks[i + 1];
    plan.panels.push_back(p);
  }
}

double kernel_diag_estimate(double u) {
  if (u < 0) return std::sqrt(-u) / M_PI + 0.3;
  const AiryValue a = airy(u);
  return std::abs(a.ai_prime * a.ai_prime - u * a.ai * a.ai);
}

Plan plan_deformed(const SigmaModel& model, double x, double t, double lo_override,
                   double hi_override) {
  Plan plan;
  plan.weight = &model;
  plan.x = x;
  plan.t = t;
  const double w = std::pow(t, 2.0 / 3.0);
  const double ustar = -x * std::pow(t, -1.0 / 3.0);
  plan.route_depth = std::max(0.0, -ustar);

  if (lo_override != 0.0 || hi_override != 0.0) {
    // Fixed x-independent discretization: only the kink of the Airy
    // oscillation scale at 0 splits the domain.
    plan.lo = lo_override;
    plan.hi = hi_override;
    std::vector<double> breaks = {plan.lo, plan.hi};
    if (plan.lo < 0.0 && plan.hi > 0.0) breaks.push_back(0.0);
    finalize_panels(plan, std::move(breaks));
    for (Panel& p : plan.panels) p.order = panel_order(p);
    return plan;
  }

  const double r_lo = 40.0 / model.c_minus;  // sigma below ~e^-40 further left
  const double r_hi = 40.0 / model.c_plus;   // sigma within ~e^-40 of 1 further right
  double lo = ustar - r_lo * w;
  const double hi = airy_upper_cut();
  if (lo > hi - 0.5) lo = hi - 0.5;
  plan.lo = lo;
  plan.hi = hi;

  std::vector<double> breaks = {lo, hi};
  const double t_lo = ustar - r_lo * w, t_hi = ustar + r_hi * w;
  if (t_hi > lo && t_hi < hi) breaks.push_back(t_hi);
  if (lo < 0.0 && hi > 0.0) breaks.push_back(0.0);
  finalize_panels(plan, std::move(breaks));
  for (Panel& p : plan.panels) {
    p.transition = p.lo < t_hi && p.hi > t_lo;
    p.order = panel_order(p);
  }

  // trace bounds on the discarded tails
  const double sig_lo = model.sigma(lo / w + x / t);
  plan.trunc_estimate = sig_lo * kernel_diag_estimate(lo) * std::max(w / model.c_minus, 1e-3) +
                        kernel_diag_estimate(hi) * 0.5;
  return plan;
}

Plan plan_tracy_widom(double s) {
  Plan plan;
  plan.weight = nullptr;
  plan.route_depth = std::max(0.0, -s);
  plan.lo = s;
  plan.hi = std::max(airy_upper_cut(), s + 0.5);
  std::vector<double> breaks = {plan.lo, plan.hi};
  if (plan.lo < 0.0 && plan.hi > 0.0) breaks.push_back(0.0);
  finalize_panels(plan, std::move(breaks));
  for (Panel& p : plan.panels) p.order = panel_order(p);
  plan.trunc_estimate = kernel_diag_estimate(plan.hi) * 0.5;
  return plan;
}

// ---------------------------------------------------------------------------
// Assembly (templated over the working scalar)
// ---------------------------------------------------------------------------

template <class Real>
struct AiryProvider;

template <>
struct AiryProvider<double> {
  void operator()(const double& x, double& ai, double& aip) const {
    const AiryValue v = airy(x);
    ai = v.ai;
    aip = v.ai_prime;
  }
};

template <>
struct AiryProvider<mpreal> {
  mpreal ai0, aip0, tail_eps;
  AiryProvider() {
    const mpreal one_third = mpreal(1) / 3;
    ai0 = pow(mpreal(3), -2 * one_third) / tgamma(2 * one_third);
    aip0 = -pow(mpreal(3), -one_third) / tgamma(one_third);
    const long bits = static_cast<long>(mpreal::default_precision() * 3.3219);
    tail_eps = ldexp(mpreal(1), -static_cast<int>(bits + 16));
  }
  void operator()(const mpreal& x, mpreal& ai, mpreal& aip) const {
    detail::airy_maclaurin(x, ai0, aip0, ai, aip, tail_eps);
  }
};

template <class Real>
Real machine_eps();

template <>
double machine_eps<double>() {
  return std::numeric_limits<double>::epsilon();
}

template <>
mpreal machine_eps<mpreal>() {
  const long bits = static_cast<long>(mpreal::default_precision() * 3.3219);
  return ldexp(mpreal(1), -static_cast<int>(bits - 8));
}

template <class Real>
void composite_nodes(const std::vector<Panel>& panels, double scale, std::vector<Real>& u,
                     std::vector<Real>& sqw) {
  u.clear();
  sqw.clear();
  std::map<int, std::pair<std::vector<Real>, std::vector<Real>>> cache;
  const Real eps = machine_eps<Real>();
  for (const Panel& p : panels) {
    const int n = std::max(8, static_cast<int>(std::lround(p.order * scale)));
    auto& base = cache[n];
    if (base.first.empty()) detail::gauss_legendre_nodes(n, eps, base.first, base.second);
    const Real c = (Real(p.hi) - Real(p.lo)) / 2;
    const Real m = (Real(p.hi) + Real(p.lo)) / 2;
    for (int i = 0; i < n; ++i) {
      u.push_back(m + c * base.first[i]);
      sqw.push_back(sqrt(c * base.second[i]));
    }
  }
}

// Row-major lower-triangle-valid dense symmetric buffer.
template <class Real>
struct DenseSym {
  int n = 0;
  std::vector<Real> a;
  void resize(int size) {
    n = size;
    a.assign(static_cast<size_t>(size) * size, Real(0));
  }
  Real& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const Real& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

template <class Real>
void assemble_weighted_airy(const Plan& plan, const std::vector<Real>& u,
                            const std::vector<Real>& sqw, DenseSym<Real>& A) {
  const int n = static_cast<int>(u.size());
  A.resize(n);
  AiryProvider<Real> airy_eval;
  std::vector<Real> ai(n), aip(n), g(n);
  Real t23(0), xot(0);
  if (plan.weight) {
    t23 = pow(Real(plan.t), Real(2) / 3);
    xot = Real(plan.x) / Real(plan.t);
  }
  for (int i = 0; i < n; ++i) {
    airy_eval(u[i], ai[i], aip[i]);
    if (plan.weight) {
      const Real r = u[i] / t23 + xot;
      Real logf;
      if (plan.weight->kind == SigmaKind::zero) {
        logf = Real(0);
      } else {
        logf = detail::logf_moments(plan.weight->data, r).log_f;
      }
      const Real sig = -expm1(-logf);
      g[i] = sqw[i] * sqrt(sig);
    } else {
      g[i] = sqw[i];
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      Real k;
      if (i == j) {
        k = aip[i] * aip[i] - u[i] * ai[i] * ai[i];
      } else {
        k = (ai[i] * aip[j] - aip[i] * ai[j]) / (u[i] - u[j]);
      }
      A.at(i, j) = g[i] * g[j] * k;
      A.at(j, i) = A.at(i, j);
    }
  }
}

// ---------------------------------------------------------------------------
// log det(1 - A)
// ---------------------------------------------------------------------------

struct OnceResult {
  bool pivot_ok = false;
  double log_det = 0.0;
  double eig_min = 0.0;
  double eig_max = 0.0;
  double log_min_pivot = 0.0;
  int total = 0;
};

// In-place LDL^T of M = I - A (lower triangle), summing log pivots.
template <class Real>
bool ldlt_logdet(DenseSym<Real>& M, Real& log_det, Real& min_pivot) {
  const int n = M.n;
  log_det = Real(0);
  min_pivot = Real(1e300);
  std::vector<Real> col(n), l(n);
  Real tmp;
  for (int k = 0; k < n; ++k) {
    const Real d = M.at(k, k);
    if (!(d > 0)) return false;
    log_det += log(d);
    if (d < min_pivot) min_pivot = d;
    for (int i = k + 1; i < n; ++i) {
      col[i] = M.at(i, k);
      l[i] = col[i] / d;
    }
    for (int i = k + 1; i < n; ++i) {
      Real* row = &M.at(i, 0);
      const Real li = l[i];
      for (int j = k + 1; j <= i; ++j) {
        tmp = li;
        tmp *= col[j];
        row[j] -= tmp;
      }
    }
  }
  return true;
}

void eig_diagnostics(const Eigen::MatrixXd& A, double& eig_min, double& eig_max) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::EigenvaluesOnly);
  eig_min = es.eigenvalues().minCoeff();
  eig_max = es.eigenvalues().maxCoeff();
}

OnceResult evaluate_once_double(const Plan& plan, double scale) {
  std::vector<double> u, sqw;
  composite_nodes<double>(plan.panels, scale, u, sqw);
  DenseSym<double> A;
  assemble_weighted_airy(plan, u, sqw, A);
  const int n = A.n;
  Eigen::MatrixXd M = Eigen::Map<Eigen::MatrixXd>(A.a.data(), n, n);
  OnceResult out;
  out.total = n;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M, Eigen::EigenvaluesOnly);
  out.eig_min = es.eigenvalues().minCoeff();
  out.eig_max = es.eigenvalues().maxCoeff();
  if (out.eig_max >= 1.0 - 1e-11) {
    out.pivot_ok = false;  // caller escalates
    out.log_min_pivot = std::log(std::max(1.0 - out.eig_max, 1e-300));
    return out;
  }
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += std::log1p(-es.eigenvalues()[i]);
  out.log_det = acc;
  out.log_min_pivot = std::log(1.0 - out.eig_max);
  out.pivot_ok = true;
  return out;
}

OnceResult evaluate_once_mp(const Plan& plan, double scale, double bits) {
  PrecisionGuard guard(bits_to_digits(bits));
  std::vector<mpreal> u, sqw;
  composite_nodes<mpreal>(plan.panels, scale, u, sqw);
  DenseSym<mpreal> A;
  assemble_weighted_airy(plan, u, sqw, A);
  const int n = A.n;
  OnceResult out;
  out.total = n;

  // double-precision spectrum of the same matrix, for diagnostics
  Eigen::MatrixXd Ad(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Ad(i, j) = A.at(i, j).convert_to<double>();
  eig_diagnostics(Ad, out.eig_min, out.eig_max);

  // M = I - A in place
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      A.at(i, j) = -A.at(i, j);
    }
    A.at(i, i) += 1;
  }
  mpreal log_det, min_pivot;
  out.pivot_ok = ldlt_logdet(A, log_det, min_pivot);
  if (out.pivot_ok) {
    out.log_det = log_det.convert_to<double>();
    out.log_min_pivot = log(min_pivot).convert_to<double>();
    // clamp the double-rounded spectrum top to the true gap
    out.eig_max = std::min(out.eig_max, 1.0 - std::numeric_limits<double>::epsilon());
  }
  return out;
}

constexpr int kMaxTotalPoints = 2600;
constexpr double kMaxBits = 16384.0;

DetResult run_plan(const Plan& plan, int order_target, bool check_stability) {
  const double heuristic_total = [&] {
    int s = 0;
    for (const Panel& p : plan.panels) s += p.order;
    return static_cast<double>(s);
  }();
  double scale = 1.0;
  if (order_target > 0) scale = std::max(0.05, order_target / heuristic_total);

  const double beta_route = tw_gap_nats(plan.route_depth);
  bool use_double = beta_route <= 21.0;

  double max_abs_node = std::max(std::abs(plan.lo), std::abs(plan.hi));
  double bits = 1.4427 * tw_gap_nats(plan.route_depth + 1.5) + 192.0 + airy_guard_bits(max_abs_node);

  auto evaluate = [&](double sc) -> OnceResult {
    if (use_double) {
      OnceResult r = evaluate_once_double(plan, sc);
      if (r.pivot_ok) return r;
      use_double = false;  // spectrum too close to 1 for double: escalate
    }
    for (int attempt = 0; attempt < 4; ++attempt) {
      if (bits > kMaxBits) break;
      OnceResult r = evaluate_once_mp(plan, sc, bits);
      if (!r.pivot_ok) {
        bits *= 1.6;
        continue;
      }
      const double needed = 1.4427 * (-r.log_min_pivot) + std::log2(double(r.total)) + 96.0 +
                            airy_guard_bits(max_abs_node);
      if (bits < needed) {
        bits = needed + 64.0;
        continue;
      }
      return r;
    }
    throw near_singular_error(
        "determinant too close to singular for the configured precision cap");
  };

  OnceResult coarse = evaluate(scale);
  DetResult res;
  if (!check_stability) {
    res.log_det = coarse.log_det;
    res.eig_min = coarse.eig_min;
    res.eig_max = coarse.eig_max;
    res.order_used = coarse.total;
    res.stable = false;
    res.stability_delta = std::numeric_limits<double>::quiet_NaN();
  } else {
    for (;;) {
      OnceResult fine = evaluate(2.0 * scale);
      const double delta = std::abs(fine.log_det - coarse.log_det);
      const double tol = std::max(1e-9, 1e-10 * std::abs(fine.log_det));
      res.log_det = fine.log_det;
      res.eig_min = fine.eig_min;
      res.eig_max = fine.eig_max;
      res.order_used = fine.total;
      res.stability_delta = delta;
      if (delta <= tol) {
        res.stable = true;
        break;
      }
      if (2 * fine.total > kMaxTotalPoints) {
        res.stable = false;
        break;
      }
      scale *= 2.0;
      coarse = fine;
    }
  }
  res.trunc_estimate = plan.trunc_estimate;
  res.precision_bits = use_double ? 53 : static_cast<int>(bits);
  if (res.log_det > 0.0 && res.log_det < 1e-10) res.log_det = 0.0;
  return res;
}

void validate_job(const DetJob& job) {
  if (!(job.t > 0.0) || !std::isfinite(job.t) || !std::isfinite(job.x)) {
    throw invalid_argument_error("DetJob: t must be positive finite, x finite");
  }
  const bool has_trunc = job.trunc_lo != 0.0 || job.trunc_hi != 0.0;
  if (has_trunc && !(job.trunc_lo < job.trunc_hi)) {
    throw invalid_argument_error("DetJob: trunc_lo must be < trunc_hi");
  }
  if (job.order != 0 && job.order < 8) {
    throw invalid_argument_error("DetJob: order must be 0 (auto) or >= 8");
  }
}

}  // namespace

DetResult log_q_sigma(const DetJob& job) {
  validate_job(job);
  if (job.model.kind == SigmaKind::cutoff) {
    throw model_not_admissible_error(
        "log_q_sigma: the cutoff weight is served by log_tracy_widom");
  }
  if (job.model.kind == SigmaKind::zero) {
    DetResult res;
    res.log_det = 0.0;
    res.stable = true;
    res.order_used = 0;
    res.precision_bits = 53;
    return res;
  }
  Plan plan = plan_deformed(job.model, job.x, job.t, job.trunc_lo, job.trunc_hi);
  return run_plan(plan, job.order, job.check_stability);
}

DetResult log_tracy_widom(double s, const TwOpts& opts) {
  if (!std::isfinite(s)) throw invalid_argument_error("log_tracy_widom: s must be finite");
  Plan plan = plan_tracy_widom(s);
  return run_plan(plan, opts.order, opts.check_stability);
}

// ---------------------------------------------------------------------------
// Finite-temperature representation (KPZ weight)
// ---------------------------------------------------------------------------

namespace {

struct SPanel {
  double lo, hi;
  int order;
};

DetResult finite_temp_eval(double x, double t, int order_target, bool check_stability) {
  const SigmaModel model = make_kpz_model();
  const double w = std::pow(t, 2.0 / 3.0);
  const double edge = -x * std::pow(t, -1.0 / 3.0);
  const double beta_route = tw_gap_nats(std::max(0.0, -edge));
  if (beta_route > 21.0) {
    throw near_singular_error(
        "log_q_finite_temp: spectrum too close to 1 in double precision; "
        "use log_q_sigma for deep evaluations");
  }

  const double u_hi = airy_upper_cut() + 40.0 * w;  // kernel decay needs u - 40 w > cut
  std::vector<Panel> upanels;
  {
    std::vector<double> breaks = {edge, u_hi};
    if (edge < 0.0 && u_hi > 0.0) breaks.push_back(0.0);
    std::sort(breaks.begin(), breaks.end());
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
      Panel p;
      p.lo = breaks[i];
      p.hi = breaks[i + 1];
      p.order = panel_order(p);
      upanels.push_back(p);
    }
  }
  const double s_mid = 40.0 * w;  // sigma(s t^{-2/3}) within e^-40 of 1 beyond
  const double s_hi = airy_upper_cut() - edge + 2.0;
  std::vector<SPanel> spanels;
  {
    Panel a{-s_mid, std::min(s_mid, s_hi), 0, true};
    a.order = panel_order(a);
    spanels.push_back({a.lo, a.hi, std::max(a.order, 48)});
    if (s_hi > s_mid) {
      Panel b{s_mid, s_hi, 0, false};
      // oscillation of Ai(u+s) in s is worst at u = edge
      Panel shifted{edge + s_mid, edge + s_hi, 0, false};
      b.order = panel_order(shifted);
      spanels.push_back({b.lo, b.hi, b.order});
    }
  }

  auto evaluate = [&](double sc) -> OnceResult {
    std::vector<double> u, sqw;
    composite_nodes<double>(upanels, sc, u, sqw);
    std::vector<double> sn, sw;
    {
      std::vector<double> base_nodes, base_weights;
      for (const SPanel& p : spanels) {
        const int n = std::max(8, static_cast<int>(std::lround(p.order * sc)));
        detail::gauss_legendre_nodes(n, std::numeric_limits<double>::epsilon(), base_nodes,
                                     base_weights);
        const double c = 0.5 * (p.hi - p.lo), m = 0.5 * (p.hi + p.lo);
        for (int i = 0; i < n; ++i) {
          sn.push_back(m + c * base_nodes[i]);
          sw.push_back(c * base_weights[i]);
        }
      }
    }
    const int n = static_cast<int>(u.size());
    const int K = static_cast<int>(sn.size());
    Eigen::MatrixXd G(n, K);
    Eigen::VectorXd d(K);
    for (int k = 0; k < K; ++k) {
      d[k] = sw[k] * model.sigma(sn[k] / w);
    }
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < K; ++k) G(i, k) = airy(u[i] + sn[k]).ai;
    }
    Eigen::MatrixXd B = G * d.asDiagonal() * G.transpose();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) B(i, j) *= sqw[i] * sqw[j];
    }
    B = 0.5 * (B + B.transpose()).eval();
    OnceResult out;
    out.total = n + K;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B, Eigen::EigenvaluesOnly);
    out.eig_min = es.eigenvalues().minCoeff();
    out.eig_max = es.eigenvalues().maxCoeff();
    if (out.eig_max >= 1.0 - 1e-12) {
      throw near_singular_error("log_q_finite_temp: determinant at the double-precision floor");
    }
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += std::log1p(-es.eigenvalues()[i]);
    out.log_det = acc;
    out.pivot_ok = true;
    return out;
  };

  double scale = 1.0;
  if (order_target > 0) {
    int heuristic = 0;
    for (const Panel& p : upanels) heuristic += p.order;
    scale = std::max(0.05, double(order_target) / heuristic);
  }
  DetResult res;
  OnceResult coarse = evaluate(scale);
  if (!check_stability) {
    res.log_det = coarse.log_det;
    res.eig_min = coarse.eig_min;
    res.eig_max = coarse.eig_max;
    res.order_used = coarse.total;
    res.stable = false;
    res.stability_delta = std::numeric_limits<double>::quiet_NaN();
  } else {
    for (;;) {
      OnceResult fine = evaluate(2.0 * scale);
      const double delta = std::abs(fine.log_det - coarse.log_det);
      const double tol = std::max(1e-9, 1e-10 * std::abs(fine.log_det));
      res.log_det = fine.log_det;
      res.eig_min = fine.eig_min;
      res.eig_max = fine.eig_max;
      res.order_used = fine.total;
      res.stability_delta = delta;
      if (delta <= tol) {
        res.stable = true;
        break;
      }
      if (2 * fine.total > kMaxTotalPoints) {
        res.stable = false;
        break;
      }
      scale *= 2.0;
      coarse = fine;
    }
  }
  res.precision_bits = 53;
  res.trunc_estimate = kernel_diag_estimate(u_hi - 40.0 * w) * 0.5 + 4e-18;
  if (res.log_det > 0.0 && res.log_det < 1e-10) res.log_det = 0.0;
  return res;
}

}  // namespace

DetResult log_q_finite_temp(double x, double t, const FiniteTempOpts& opts) {
  if (!(t > 0.0) || !std::isfinite(t) || !std::isfinite(x)) {
    throw invalid_argument_error("log_q_finite_temp: t must be positive finite, x finite");
  }
  return finite_temp_eval(x, t, opts.order, opts.check_stability);
}

// ---------------------------------------------------------------------------
// Finite differences
// ---------------------------------------------------------------------------

FdResult u_sigma_fd(const SigmaModel& model, double x, double t, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw invalid_argument_error("u_sigma_fd: h must be positive");
  }
  double f[5];
  double max_abs = 1.0;
  for (int k = -2; k <= 2; ++k) {
    DetJob job;
    job.model = model;
    job.x = x + k * h;
    job.t = t;
    f[k + 2] = log_q_sigma(job).log_det;
    max_abs = std::max(max_abs, std::abs(f[k + 2]));
  }
  const double d2 = (-f[0] + 16.0 * f[1] - 30.0 * f[2] + 16.0 * f[3] - f[4]) / (12.0 * h * h);
  FdResult out;
  out.value = d2 + x / (2.0 * t);
  out.noise_estimate = 1e-10 * max_abs * 64.0 / (12.0 * h * h);
  out.step_warning = h < 1e-4;
  return out;
}

KdvResult kdv_residual(const SigmaModel& model, double x, double t, double hx, double ht) {
  if (!(hx > 0.0) || !(ht > 0.0) || !(t - ht > 0.0)) {
    throw invalid_argument_error("kdv_residual: need hx, ht > 0 and t - ht > 0");
  }
  std::map<std::pair<double, double>, double> cache;
  double max_abs = 1.0;
  auto lq = [&](double xx, double tt) {
    auto key = std::make_pair(xx, tt);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    DetJob job;
    job.model = model;
    job.x = xx;
    job.t = tt;
    const double v = log_q_sigma(job).log_det;
    max_abs = std::max(max_abs, std::abs(v));
    cache[key] = v;
    return v;
  };
  auto u_at = [&](double xx, double tt) {
    double f[5];
    for (int k = -2; k <= 2; ++k) f[k + 2] = lq(xx + k * hx, tt);
    return (-f[0] + 16.0 * f[1] - 30.0 * f[2] + 16.0 * f[3] - f[4]) / (12.0 * hx * hx) +
           xx / (2.0 * tt);
  };

  double uj[5];
  for (int j = -2; j <= 2; ++j) uj[j + 2] = u_at(x + j * hx, t);
  const double u0 = uj[2];
  const double ux = (uj[0] - 8.0 * uj[1] + 8.0 * uj[3] - uj[4]) / (12.0 * hx);
  const double uxxx = (uj[4] - 2.0 * uj[3] + 2.0 * uj[1] - uj[0]) / (2.0 * hx * hx * hx);
  const double up = u_at(x, t + ht);
  const double um = u_at(x, t - ht);
  const double ut = (up - um) / (2.0 * ht);

  KdvResult out;
  out.u = u0;
  out.residual = ut + 2.0 * u0 * ux + uxxx / 6.0;

  const double eps_det = 1e-10 * max_abs;
  const double nu = eps_det * 64.0 / (12.0 * hx * hx);  // noise of one u value
  const double n_ux = nu * 18.0 / (12.0 * hx);
  const double n_uxxx = nu * 6.0 / (2.0 * hx * hx * hx);
  const double n_ut = nu / ht;
  out.noise_floor = n_ut + 2.0 * (std::abs(u0) * n_ux + std::abs(ux) * nu) + n_uxxx / 6.0;
  out.noise_dominated = std::abs(out.residual) < out.noise_floor;
  return out;
}

}  // namespace airydet

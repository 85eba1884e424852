#include "airydet/sigma_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "airydet/errors.hpp"
#include "airydet/quadrature.hpp"

namespace airydet {
namespace {

void require_laplace(const SigmaModel& m, const char* what) {
  if (m.kind != SigmaKind::laplace) {
    throw model_not_admissible_error(std::string(what) + ": model '" + m.name +
                                     "' is not admissible");
  }
}

}  // namespace

double SigmaModel::sigma(double r) const {
  switch (kind) {
    case SigmaKind::zero:
      return 0.0;
    case SigmaKind::cutoff:
      return r > 0.0 ? 1.0 : 0.0;
    case SigmaKind::laplace:
      return detail::sigma_from_logf(detail::logf_moments(data, r).log_f);
  }
  return 0.0;
}

double SigmaModel::log_f(double r) const {
  if (kind == SigmaKind::zero) return 0.0;
  require_laplace(*this, "log_f");
  return detail::logf_moments(data, r).log_f;
}

double SigmaModel::log_f_minus_linear(double r) const {
  if (kind == SigmaKind::zero) return 0.0;
  require_laplace(*this, "log_f_minus_linear");
  return detail::logf_minus_linear(data, r, c_plus);
}

double SigmaModel::log_f_d1(double r) const {
  if (kind == SigmaKind::zero) return 0.0;
  require_laplace(*this, "log_f_d1");
  return detail::logf_moments(data, r).d1;
}

double SigmaModel::log_f_d2(double r) const {
  if (kind == SigmaKind::zero) return 0.0;
  require_laplace(*this, "log_f_d2");
  return detail::logf_moments(data, r).d2;
}

double SigmaModel::log_f_d3(double r) const {
  if (kind == SigmaKind::zero) return 0.0;
  require_laplace(*this, "log_f_d3");
  return detail::logf_moments(data, r).d3;
}

SigmaModel make_laplace_model(const LaplaceMeasureSpec& spec, const std::string& name) {
  if (spec.atoms.empty()) {
    throw invalid_argument_error("make_laplace_model: need at least one atom, F must grow at +inf");
  }
  std::vector<LaplaceAtom> atoms = spec.atoms;
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const LaplaceAtom& a, const LaplaceAtom& b) { return a.location < b.location; });
  for (const LaplaceAtom& a : atoms) {
    if (!(a.location > 0.0) || !std::isfinite(a.location)) {
      throw invalid_argument_error("make_laplace_model: atom locations must be positive and finite");
    }
    if (!(a.mass > 0.0) || !std::isfinite(a.mass)) {
      throw invalid_argument_error("make_laplace_model: atom masses must be positive and finite");
    }
  }

  SigmaModel m;
  m.name = name;
  m.kind = SigmaKind::laplace;
  for (const LaplaceAtom& a : atoms) {
    m.data.locations.push_back(a.location);
    m.data.log_masses.push_back(std::log(a.mass));
  }

  // Tail constants. The decay of F - 1 at -inf is set by the smallest
  // exponent, the growth at +inf by the largest; equal-location atoms merge.
  const double lmin = atoms.front().location;
  const double lmax = atoms.back().location;
  double mass_min = 0.0, mass_max = 0.0, second = 0.0;
  for (const LaplaceAtom& a : atoms) {
    if (a.location == lmin) mass_min += a.mass;
    if (a.location == lmax) {
      mass_max += a.mass;
    } else if (a.location > second) {
      second = a.location;
    }
  }
  m.c_minus = lmin;
  m.c_minus_prime = mass_min;
  m.c_plus = lmax;
  m.c_plus_prime = mass_max;
  m.epsilon = lmax - second;  // gap to the next exponent (the constant 1 counts as 0)

  m.j_value = j_sigma_numeric(m);
  m.j_is_exact = false;
  return m;
}

SigmaModel make_kpz_model() {
  LaplaceMeasureSpec spec;
  spec.atoms = {{1.0, 1.0}};
  SigmaModel m = make_laplace_model(spec, "kpz");
  m.j_value = -M_PI / 12.0;
  m.j_is_exact = true;
  return m;
}

SigmaModel make_cutoff_model() {
  SigmaModel m;
  m.name = "cutoff";
  m.kind = SigmaKind::cutoff;
  return m;
}

SigmaModel make_zero_model() {
  SigmaModel m;
  m.name = "zero";
  m.kind = SigmaKind::zero;
  return m;
}

SigmaModel parse_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open model file: " + path);
  LaplaceMeasureSpec spec;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank
    if (tag != "atom") {
      throw invalid_argument_error(path + ":" + std::to_string(lineno) +
                                   ": expected 'atom <location> <mass>', got '" + tag + "'");
    }
    LaplaceAtom a;
    if (!(ls >> a.location >> a.mass)) {
      throw invalid_argument_error(path + ":" + std::to_string(lineno) +
                                   ": expected 'atom <location> <mass>'");
    }
    std::string extra;
    if (ls >> extra) {
      throw invalid_argument_error(path + ":" + std::to_string(lineno) +
                                   ": trailing token '" + extra + "'");
    }
    spec.atoms.push_back(a);
  }
  if (spec.atoms.empty()) {
    throw invalid_argument_error(path + ": no atoms found");
  }
  std::string stem = path;
  if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem.erase(0, slash + 1);
  if (auto dot = stem.find_last_of('.'); dot != std::string::npos) stem.erase(dot);
  return make_laplace_model(spec, stem);
}

double j_sigma_numeric(const SigmaModel& model) {
  require_laplace(model, "j_sigma");
  // Split at 0. On (-inf, 0] the integrand -log F decays like exp(-c_minus|r|),
  // on [0, inf) the reduced integrand -(log F - c+ r - log c'+) like exp(-eps r).
  const double lo = -40.0 / model.c_minus;
  const double hi = 40.0 / model.epsilon;
  const double log_cpp = std::log(model.c_plus_prime);
  const double left = integrate([&](double r) { return -model.log_f(r); }, lo, 0.0, 512);
  const double right = integrate(
      [&](double r) { return -(model.log_f_minus_linear(r) - log_cpp); }, 0.0, hi, 512);
  return (left + right) / (2.0 * M_PI);
}

double j_sigma(const SigmaModel& model) {
  require_laplace(model, "j_sigma");
  return model.j_value;
}

AssumptionReport check_assumptions(const SigmaModel& model) {
  AssumptionReport rep;
  auto add = [&rep](const std::string& name, bool pass, double margin) {
    rep.items.push_back({name, pass, margin});
  };

  if (model.kind != SigmaKind::laplace) {
    add("admissible", false, model.kind == SigmaKind::cutoff ? -1.0 : -1.0);
    rep.all_pass = false;
    return rep;
  }
  add("admissible", true, 0.0);

  // Grid checks r = -30, -29.5, ..., 30.
  double worst_range = 1.0;       // min distance of sigma from the closed ends of [0,1)
  double worst_d1 = 0.0;          // most negative (log F)'
  double worst_d2 = 0.0;          // most negative (log F)''
  double worst_consistency = 0.0;
  bool finite = true;
  for (int i = 0; i <= 120; ++i) {
    const double r = -30.0 + 0.5 * i;
    const double s = model.sigma(r);
    const double d1 = model.log_f_d1(r);
    const double d2 = model.log_f_d2(r);
    if (!std::isfinite(s) || !std::isfinite(d1) || !std::isfinite(d2)) {
      finite = false;
      continue;
    }
    worst_range = std::min(worst_range, std::min(s - 0.0, 1.0 - s));
    worst_d1 = std::min(worst_d1, d1);
    worst_d2 = std::min(worst_d2, d2);
    // direct evaluation of 1 - 1/F with the naive sum (safe for |r| <= 30)
    double f = 1.0;
    for (size_t j = 0; j < model.data.locations.size(); ++j) {
      f += std::exp(model.data.log_masses[j] + model.data.locations[j] * r);
    }
    worst_consistency = std::max(worst_consistency, std::abs(s - (1.0 - 1.0 / f)));
  }
  add("finite_on_grid", finite, finite ? 0.0 : -1.0);
  add("sigma_range", finite && worst_range >= 0.0 && worst_range < 1.0, worst_range);
  add("f_monotone", worst_d1 >= -1e-12, worst_d1);
  add("log_f_convex", worst_d2 >= -1e-12, worst_d2);
  add("sigma_consistency", worst_consistency <= 1e-12, 1e-12 - worst_consistency);

  {
    const double r = -20.0;
    const double bound = 10.0 * model.c_minus_prime * std::exp(-model.c_minus * 20.0);
    const double v = std::abs(model.log_f(r));
    add("tail_minus", v <= bound, bound - v);
  }
  {
    const double r = 20.0;
    const double bound = 10.0 * std::exp(-model.epsilon * r);
    const double v = std::abs(model.log_f_minus_linear(r) - std::log(model.c_plus_prime));
    add("tail_plus", v <= bound, bound - v);
  }
  {
    const double r = 20.0;
    const double bound = 10.0 * std::exp(-0.5 * model.epsilon * r);
    const double v = std::abs(model.log_f_d1(r) - model.c_plus);
    add("d1_limit_plus", v <= bound, bound - v);
  }
  {
    const double r = -20.0;
    const double bound = 10.0 * std::exp(-0.5 * model.c_minus * 20.0);
    const double v = model.log_f_d1(r);
    add("d1_limit_minus", v <= bound, bound - v);
  }

  rep.all_pass = std::all_of(rep.items.begin(), rep.items.end(),
                             [](const AssumptionCheck& c) { return c.pass; });
  return rep;
}

}  // namespace airydet

#ifndef AIRYDET_SIGMA_MODEL_HPP
#define AIRYDET_SIGMA_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "airydet/detail/laplace_eval.hpp"

namespace airydet {

enum class SigmaKind {
  laplace,  // F(z) = 1 + sum m_j exp(l_j z); smooth, admissible
  cutoff,   // sigma = 1_(0,inf); Tracy-Widom oracle only, not admissible
  zero,     // sigma = 0; trivial weight, determinant is identically 1
};

struct LaplaceAtom {
  double location = 0.0;
  double mass = 0.0;
};

// Finite atomic measure defining F(z) = 1 + sum mass * exp(location * z).
// The first atom is the leading (slowest) exponent, the last the trailing one.
struct LaplaceMeasureSpec {
  std::vector<LaplaceAtom> atoms;
};

// An admissible weight sigma with F = 1/(1 - sigma), its log-derivatives, and
// the tail constants (c+, c'+, c-, c'-, epsilon). All built-in models are of
// the finite Laplace-transform class, so the log-derivatives are analytic.
struct SigmaModel {
  std::string name;
  SigmaKind kind = SigmaKind::laplace;
  detail::LaplaceData data;

  double c_plus = 1.0;
  double c_plus_prime = 1.0;
  double c_minus = 1.0;
  double c_minus_prime = 1.0;
  double epsilon = 1.0;

  // Value of the tail integral j_sigma; exact for built-ins where known,
  // otherwise filled by quadrature at construction.
  double j_value = 0.0;
  bool j_is_exact = false;

  bool admissible() const { return kind == SigmaKind::laplace; }

  double sigma(double r) const;
  double log_f(double r) const;                // log F(r)
  double log_f_minus_linear(double r) const;   // log F(r) - c_plus * r
  double log_f_d1(double r) const;
  double log_f_d2(double r) const;
  double log_f_d3(double r) const;
};

SigmaModel make_kpz_model();
SigmaModel make_laplace_model(const LaplaceMeasureSpec& spec,
                              const std::string& name = "laplace");
SigmaModel make_cutoff_model();
SigmaModel make_zero_model();

// Model file: one "atom <location> <mass>" per line, '#' comments allowed.
SigmaModel parse_model_file(const std::string& path);

// (1/2pi) Int [log(1 - sigma(r)) + (c+ r + log c'+) 1_{r>0}] dr.
// j_sigma returns the stored value; j_sigma_numeric always integrates.
double j_sigma(const SigmaModel& model);
double j_sigma_numeric(const SigmaModel& model);

struct AssumptionCheck {
  std::string name;
  bool pass = false;
  double margin = 0.0;  // slack against the bound; negative when failing
};

struct AssumptionReport {
  std::vector<AssumptionCheck> items;
  bool all_pass = false;
};

// Evaluates the admissibility conditions on the grid r = -30, -29.5, ..., 30.
AssumptionReport check_assumptions(const SigmaModel& model);

}  // namespace airydet

#endif

#ifndef BOXTORUS_SOLVER_HPP
#define BOXTORUS_SOLVER_HPP

#include <string>
#include <utility>
#include <vector>

#include "boxtorus/model.hpp"

namespace boxtorus {

struct ContinuationSchedule {
  double beta0 = 1.0;
  double beta_min = 1e-4;
  double factor = 0.5;
  int max_newton = 50;
  double tol_residual = 1e-9;
  int m = 16;

  void validate() const;
};

struct NewtonResult {
  Decomposition d;
  double residual_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Damped Newton on the penalized residual; linearization is the diagonal
// multiplier plus pseudospectral multiplication by f_u, solved by GMRES with
// the diagonal part as preconditioner.
NewtonResult newton_solve(const Nonlinearity& nl, const Decomposition& d0,
                          double beta, const ContinuationSchedule& sched);

struct PathPoint {
  double beta = 0.0;
  double v_c0 = 0.0;
  double vt_l2 = 0.0;
  double vtt_l2 = 0.0;
  double w_h1 = 0.0;
  double w_h2 = 0.0;
  double residual = 0.0;
  int newton_iters = 0;
};

struct SolutionRecord {
  Decomposition d;
  double beta_final = 0.0;
  double residual_norm = 0.0;
  double i_value = 0.0;
  std::vector<PathPoint> path;
  std::vector<Decomposition> path_fields;  // iterate at each recorded beta
  std::string seed_descriptor;
  bool converged = false;
  std::string failure;

  explicit SolutionRecord(int m) : d(m) {}
  std::vector<double> v_c0_history() const;
};

// Geometric beta descent with warm starts; records the beta-uniformity
// diagnostics at each step and aborts with a diagnosis if any tracked
// quantity grows faster than beta^{-1/4} between consecutive steps.
SolutionRecord continue_beta(const Nonlinearity& nl, const Decomposition& seed,
                             const ContinuationSchedule& sched,
                             std::string seed_descriptor = "seed");

// Seeded multi-start over mode levels 1..l_max with the rho_l amplitude
// scaling; converged branches are deduplicated modulo time shifts and
// returned sorted by functional value.
std::vector<SolutionRecord> multi_start(const Nonlinearity& nl,
                                        const ContinuationSchedule& sched,
                                        int l_max, int starts_per_level);

// Minimizes ||translate(u1,0,theta) - u2||_L2 over theta in [0,2pi); grid
// scan refined by Newton on the trigonometric objective.
std::pair<double, double> align_time_shift(const FourierField& u1,
                                           const FourierField& u2);

}  // namespace boxtorus

#endif

#ifndef BOXTORUS_RUN_HPP
#define BOXTORUS_RUN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "boxtorus/solver.hpp"

namespace boxtorus {

struct RunConfig {
  std::string mode = "solve";  // solve | verify-estimates | selftest
  // nonlinearity
  double s = 3.0;
  double alpha = 0.5;
  std::vector<double> a_coeffs = {1.0};
  std::vector<double> b_coeffs = {};
  // schedule
  double beta0 = 1.0;
  double beta_min = 1e-4;
  double factor = 0.5;
  int m = 16;
  double tol_residual = 1e-9;
  int max_newton = 50;
  // multiplicity
  int l_max = 2;
  int starts_per_level = 4;
  // verify
  int samples = 100;
  double decay = 1.25;
  std::vector<std::string> estimates = {"sobolev", "gn", "layer_cake"};
  // top level
  std::uint64_t seed = 1;
  std::string out_dir = "out";

  void validate() const;
  Nonlinearity nonlinearity() const;
  ContinuationSchedule schedule() const;
};

// Flat dotted-key config text, one "key = value" per line, '#' comments;
// unknown keys are rejected by name.
RunConfig parse_config(const std::string& text);
void apply_config_line(RunConfig& cfg, const std::string& key,
                       const std::string& value);
std::string config_echo(const RunConfig& cfg);

// Executes the configured mode, writes all artifacts under cfg.out_dir,
// returns the process exit status.
int run(const RunConfig& cfg);

// Prints the branch table of a completed solve run.
int report_summary(const std::string& out_dir);

}  // namespace boxtorus

#endif

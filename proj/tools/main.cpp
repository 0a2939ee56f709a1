#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "boxtorus/io.hpp"
#include "boxtorus/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"boxtorus: spectral variational solver for time-periodic "
               "solutions of u_tt - u_xx + f(x,u) = 0"};
  app.require_subcommand(1);

  std::string config_path, out_dir, seed_str;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "flat dotted-key config file");
    cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--seed", seed_str, "64-bit seed");
  };

  CLI::App* solve = app.add_subcommand("solve", "compute solution branches");
  add_common(solve);
  std::string m_str, beta_min_str, l_max_str, alpha_str, s_str;
  solve->add_option("--m", m_str, "truncation radius");
  solve->add_option("--beta-min", beta_min_str, "final penalty");
  solve->add_option("--l-max", l_max_str, "multi-start levels");
  solve->add_option("--alpha", alpha_str, "monotonicity floor");
  solve->add_option("--s", s_str, "growth exponent");

  CLI::App* verify =
      app.add_subcommand("verify-estimates", "verify the a priori estimates");
  add_common(verify);
  std::string samples_str, decay_str, estimates_str, vm_str;
  verify->add_option("--samples", samples_str, "random samples per estimate");
  verify->add_option("--decay", decay_str, "ensemble spectral decay");
  verify->add_option("--estimates", estimates_str,
                     "comma list: sobolev,gn,layer_cake");
  verify->add_option("--m", vm_str, "truncation radius");

  CLI::App* selftest = app.add_subcommand("selftest", "built-in checks");
  add_common(selftest);

  CLI::App* report = app.add_subcommand("report", "summarize a solve run");
  std::string report_dir;
  report->add_option("dir", report_dir, "run directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (report->parsed()) return boxtorus::report_summary(report_dir);

    boxtorus::RunConfig cfg;
    if (!config_path.empty())
      cfg = boxtorus::parse_config(boxtorus::read_file(config_path));
    if (solve->parsed()) cfg.mode = "solve";
    if (verify->parsed()) cfg.mode = "verify-estimates";
    if (selftest->parsed()) cfg.mode = "selftest";

    auto override_key = [&](const std::string& key, const std::string& val) {
      if (!val.empty()) boxtorus::apply_config_line(cfg, key, val);
    };
    override_key("out", out_dir);
    override_key("seed", seed_str);
    override_key("schedule.m", m_str.empty() ? vm_str : m_str);
    override_key("schedule.beta_min", beta_min_str);
    override_key("multi.l_max", l_max_str);
    override_key("nonlinearity.alpha", alpha_str);
    override_key("nonlinearity.s", s_str);
    override_key("verify.samples", samples_str);
    override_key("verify.decay", decay_str);
    override_key("verify.estimates", estimates_str);

    return boxtorus::run(cfg);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}

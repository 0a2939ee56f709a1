#include "boxtorus/run.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "boxtorus/boxop.hpp"
#include "boxtorus/io.hpp"
#include "boxtorus/norms.hpp"
#include "boxtorus/random_field.hpp"
#include "boxtorus/transforms.hpp"
#include "boxtorus/verify.hpp"

namespace boxtorus {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> parse_doubles(const std::string& s, const std::string& key) {
  std::vector<double> out;
  for (const std::string& item : split_list(s)) {
    std::size_t pos = 0;
    out.push_back(std::stod(item, &pos));
    if (pos != item.size())
      throw domain_error("config key " + key + ": bad number '" + item + "'");
  }
  return out;
}

double parse_double(const std::string& s, const std::string& key) {
  std::size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size())
    throw domain_error("config key " + key + ": bad number '" + s + "'");
  return v;
}

int parse_int(const std::string& s, const std::string& key) {
  std::size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size())
    throw domain_error("config key " + key + ": bad integer '" + s + "'");
  return v;
}

}  // namespace

void RunConfig::validate() const {
  if (mode != "solve" && mode != "verify-estimates" && mode != "selftest")
    throw domain_error("config key mode: unknown mode '" + mode + "'");
  nonlinearity();
  schedule().validate();
  if (l_max < 1) throw domain_error("config key multi.l_max: must be >= 1");
  if (starts_per_level < 1)
    throw domain_error("config key multi.starts_per_level: must be >= 1");
  if (samples < 1) throw domain_error("config key verify.samples: must be >= 1");
  if (decay <= 0.0) throw domain_error("config key verify.decay: must be > 0");
  for (const std::string& e : estimates)
    if (e != "sobolev" && e != "gn" && e != "layer_cake")
      throw domain_error("config key verify.estimates: unknown estimate '" +
                         e + "'");
  if (out_dir.empty()) throw domain_error("config key out: must be nonempty");
}

Nonlinearity RunConfig::nonlinearity() const {
  Nonlinearity::Params p;
  p.s = s;
  p.alpha = alpha;
  p.a_coeffs = a_coeffs;
  p.b_coeffs = b_coeffs;
  return Nonlinearity(p);
}

ContinuationSchedule RunConfig::schedule() const {
  ContinuationSchedule sc;
  sc.beta0 = beta0;
  sc.beta_min = beta_min;
  sc.factor = factor;
  sc.m = m;
  sc.tol_residual = tol_residual;
  sc.max_newton = max_newton;
  return sc;
}

void apply_config_line(RunConfig& cfg, const std::string& key,
                       const std::string& value) {
  if (key == "mode") cfg.mode = value;
  else if (key == "nonlinearity.s") cfg.s = parse_double(value, key);
  else if (key == "nonlinearity.alpha") cfg.alpha = parse_double(value, key);
  else if (key == "nonlinearity.a_coeffs") cfg.a_coeffs = parse_doubles(value, key);
  else if (key == "nonlinearity.b_coeffs") cfg.b_coeffs = parse_doubles(value, key);
  else if (key == "schedule.beta0") cfg.beta0 = parse_double(value, key);
  else if (key == "schedule.beta_min") cfg.beta_min = parse_double(value, key);
  else if (key == "schedule.factor") cfg.factor = parse_double(value, key);
  else if (key == "schedule.m") cfg.m = parse_int(value, key);
  else if (key == "schedule.tol_residual") cfg.tol_residual = parse_double(value, key);
  else if (key == "schedule.max_newton") cfg.max_newton = parse_int(value, key);
  else if (key == "multi.l_max") cfg.l_max = parse_int(value, key);
  else if (key == "multi.starts_per_level") cfg.starts_per_level = parse_int(value, key);
  else if (key == "verify.samples") cfg.samples = parse_int(value, key);
  else if (key == "verify.decay") cfg.decay = parse_double(value, key);
  else if (key == "verify.estimates") cfg.estimates = split_list(value);
  else if (key == "seed") cfg.seed = std::stoull(value);
  else if (key == "out") cfg.out_dir = value;
  else throw domain_error("config: unknown key '" + key + "'");
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw domain_error("config: expected 'key = value': " + line);
    apply_config_line(cfg, trim(line.substr(0, eq)),
                      trim(line.substr(eq + 1)));
  }
  return cfg;
}

std::string config_echo(const RunConfig& cfg) {
  auto list = [](const std::vector<double>& v) {
    std::string s;
    char buf[40];
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", v[i]);
      if (i) s += ",";
      s += buf;
    }
    return s;
  };
  char buf[64];
  std::ostringstream out;
  auto num = [&](const char* key, double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << key << " = " << buf << "\n";
  };
  out << "mode = " << cfg.mode << "\n";
  num("nonlinearity.s", cfg.s);
  num("nonlinearity.alpha", cfg.alpha);
  out << "nonlinearity.a_coeffs = " << list(cfg.a_coeffs) << "\n";
  out << "nonlinearity.b_coeffs = " << list(cfg.b_coeffs) << "\n";
  num("schedule.beta0", cfg.beta0);
  num("schedule.beta_min", cfg.beta_min);
  num("schedule.factor", cfg.factor);
  out << "schedule.m = " << cfg.m << "\n";
  num("schedule.tol_residual", cfg.tol_residual);
  out << "schedule.max_newton = " << cfg.max_newton << "\n";
  out << "multi.l_max = " << cfg.l_max << "\n";
  out << "multi.starts_per_level = " << cfg.starts_per_level << "\n";
  out << "verify.samples = " << cfg.samples << "\n";
  num("verify.decay", cfg.decay);
  out << "verify.estimates = ";
  for (std::size_t i = 0; i < cfg.estimates.size(); ++i)
    out << (i ? "," : "") << cfg.estimates[i];
  out << "\n";
  out << "seed = " << cfg.seed << "\n";
  out << "out = " << cfg.out_dir << "\n";
  return out.str();
}

namespace {

std::string branch_tag(std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "branch_%03zu", i);
  return buf;
}

int run_solve(const RunConfig& cfg, json& manifest) {
  Nonlinearity nl = cfg.nonlinearity();
  ContinuationSchedule sched = cfg.schedule();
  std::vector<SolutionRecord> recs =
      multi_start(nl, sched, cfg.l_max, cfg.starts_per_level);

  json branches = json::array();
  namespace fs = std::filesystem;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    std::string tag = branch_tag(i);
    FourierField u = assemble(recs[i].d);
    write_file((fs::path(cfg.out_dir) / (tag + ".json")).string(),
               to_json(recs[i]));
    write_file((fs::path(cfg.out_dir) / (tag + "_coeffs.csv")).string(),
               field_to_csv(u));
    write_file((fs::path(cfg.out_dir) / (tag + "_grid.csv")).string(),
               grid_to_csv(u));
    json jb;
    jb["tag"] = tag;
    jb["seed_descriptor"] = recs[i].seed_descriptor;
    jb["i_value"] = recs[i].i_value;
    jb["residual_norm"] = recs[i].residual_norm;
    branches.push_back(jb);
  }
  manifest["branches"] = branches;
  return recs.empty() ? 1 : 0;
}

int run_verify(const RunConfig& cfg, json& manifest) {
  RandomFieldParams params;
  params.seed = cfg.seed;
  params.decay = cfg.decay;
  params.kernel_free = true;
  namespace fs = std::filesystem;
  bool all_pass = true;
  json names = json::array();
  for (const std::string& name : cfg.estimates) {
    EstimateReport rep;
    if (name == "sobolev") {
      rep = sobolev_check(cfg.samples, 0.5, SobolevMode::FromS, cfg.m, params);
    } else if (name == "gn") {
      rep = gn_check(cfg.samples, 4.0, cfg.m, params);
    } else {
      rep.name = "layer_cake";
      int n = std::min(cfg.samples, 50);
      rep.samples = n;
      double p = 3.0, s = 0.5;
      for (int i = 0; i < n; ++i) {
        FourierField f = random_field(cfg.m, std::uint64_t(i), params);
        double dis = layer_cake_oracle(f, p, s);
        rep.table.push_back(dis);
        rep.worst_ratio = std::max(rep.worst_ratio, dis);
      }
      rep.envelope = 1e-3;
      rep.pass = rep.worst_ratio < rep.envelope;
    }
    write_file((fs::path(cfg.out_dir) / (name + ".json")).string(),
               to_json(rep));
    all_pass = all_pass && rep.pass;
    names.push_back(name);
  }
  manifest["estimates"] = names;
  return all_pass ? 0 : 1;
}

int run_selftest(const RunConfig& cfg, json& manifest) {
  RandomFieldParams params;
  params.seed = cfg.seed;
  params.decay = cfg.decay;
  int failures = 0;
  auto check = [&](const char* name, bool ok) {
    std::printf("%s %s\n", ok ? "PASS" : "FAIL", name);
    if (!ok) ++failures;
  };

  FourierField u = random_field(16, 0, params);
  int n = grid_size(16);
  FourierField rt = analyze(synthesize(u, n, n), 16);
  rt -= u;
  check("transform round-trip", rt.max_abs() < 1e-12 * u.max_abs());

  double quad = lp_norm(u, 2.0, 1);
  double pars = l2_norm(u);
  check("parseval", std::abs(quad - pars) < 1e-10 * pars);

  RandomFieldParams kf = params;
  kf.kernel_free = true;
  bool box_ok = true, h1_ok = true;
  for (int i = 0; i < 50; ++i) {
    FourierField f = random_field(16, std::uint64_t(i), kf);
    FourierField back = box_apply(box_invert(f));
    back -= f;
    box_ok = box_ok && back.max_abs() < 1e-12 * f.max_abs();
    h1_ok = h1_ok && h1_bootstrap_check(f).pass;
  }
  check("box round-trip", box_ok);
  check("h1 bootstrap bound", h1_ok);

  bool hy_ok = true;
  for (int i = 0; i < 50; ++i) {
    FourierField f = random_field(16, 100 + std::uint64_t(i), params);
    hy_ok = hy_ok && lq_coeff_norm(f, 2.0) <=
                         std::pow(kDomainArea, -0.5) * lp_norm(f, 2.0) + 1e-10;
  }
  check("hausdorff-young p=2", hy_ok);

  Nonlinearity nl = cfg.nonlinearity();
  FourierField up = random_field(8, 7, params);
  EnergyIdentity ei = energy_identity(nl, decompose(up), 0.5);
  check("energy identity", ei.gap < 1e-10 * (1.0 + std::abs(ei.lhs)));

  manifest["selftest_failures"] = failures;
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const RunConfig& cfg) {
  cfg.validate();
  namespace fs = std::filesystem;
  fs::create_directories(cfg.out_dir);

  json manifest;
  manifest["tool"] = "boxtorus";
  manifest["version"] = "1.0";
  manifest["config"] = config_echo(cfg);
  if (const char* threads = std::getenv("BOXTORUS_THREADS"))
    manifest["threads"] = threads;

  auto t0 = std::chrono::steady_clock::now();
  int status = 0;
  if (cfg.mode == "solve") status = run_solve(cfg, manifest);
  else if (cfg.mode == "verify-estimates") status = run_verify(cfg, manifest);
  else status = run_selftest(cfg, manifest);
  auto t1 = std::chrono::steady_clock::now();
  manifest["timing"]["elapsed_seconds"] =
      std::chrono::duration<double>(t1 - t0).count();

  write_file((fs::path(cfg.out_dir) / "manifest.json").string(),
             manifest.dump(2));
  return status;
}

int report_summary(const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::path mpath = fs::path(out_dir) / "manifest.json";
  if (!fs::exists(mpath)) {
    std::fprintf(stderr, "no manifest.json in %s\n", out_dir.c_str());
    return 1;
  }
  json manifest;
  try {
    manifest = json::parse(read_file(mpath.string()));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "corrupt manifest: %s\n", e.what());
    return 1;
  }
  if (!manifest.contains("branches")) {
    std::fprintf(stderr, "manifest has no solve branches\n");
    return 1;
  }

  std::vector<SolutionRecord> recs;
  for (const auto& jb : manifest["branches"]) {
    fs::path bpath =
        fs::path(out_dir) / (jb.at("tag").get<std::string>() + ".json");
    recs.push_back(solution_record_from_json(read_file(bpath.string())));
  }
  std::printf("%-12s %14s %12s %10s %8s\n", "seed", "I_beta", "residual",
              "|v|_C0", "holder");
  for (const auto& r : recs) {
    FourierField w = r.d.w_plus;
    w += r.d.w_minus;
    double hoel = holder_slope(w);
    double v_c0 = r.path.empty() ? 0.0 : r.path.back().v_c0;
    std::printf("%-12s %14.6e %12.3e %10.3e %8.3f\n",
                r.seed_descriptor.c_str(), r.i_value, r.residual_norm, v_c0,
                hoel);
  }
  for (std::size_t i = 0; i < recs.size(); ++i)
    for (std::size_t j = i + 1; j < recs.size(); ++j) {
      auto [theta, dist] =
          align_time_shift(assemble(recs[i].d), assemble(recs[j].d));
      (void)theta;
      std::printf("aligned distance %zu-%zu: %.6e\n", i, j, dist);
    }
  return 0;
}

}  // namespace boxtorus

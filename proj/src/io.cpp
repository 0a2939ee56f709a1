#include "boxtorus/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "boxtorus/transforms.hpp"

namespace boxtorus {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json decomposition_to_json(const Decomposition& d) {
  json jd;
  jd["m"] = d.radius();
  jd["coeffs_csv"] = field_to_csv(assemble(d));
  return jd;
}

Decomposition decomposition_from_json(const json& jd) {
  FourierField u = field_from_csv(jd.at("coeffs_csv").get<std::string>());
  if (u.radius() != jd.at("m").get<int>())
    throw domain_error("decomposition json: radius mismatch");
  return decompose(u);
}

}  // namespace

std::string field_to_csv(const FourierField& u) {
  std::ostringstream out;
  out << "j,k,re,im\n";
  u.for_each([&](int j, int k, cplx z) {
    out << j << ',' << k << ',' << fmt17(z.real()) << ',' << fmt17(z.imag())
        << '\n';
  });
  return out.str();
}

FourierField field_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "j,k,re,im")
    throw domain_error("coefficient csv: bad header");
  struct Row {
    int j, k;
    double re, im;
  };
  std::vector<Row> rows;
  int m = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Row r;
    if (std::sscanf(line.c_str(), "%d,%d,%lf,%lf", &r.j, &r.k, &r.re,
                    &r.im) != 4)
      throw domain_error("coefficient csv: bad row: " + line);
    rows.push_back(r);
    m = std::max(m, 2 * std::abs(r.j) + std::abs(r.k));
  }
  FourierField u(m);
  for (const Row& r : rows) u.set(r.j, r.k, cplx{r.re, r.im});
  return u;
}

std::string grid_to_csv(const FourierField& u) {
  int n = grid_size(u.radius(), 1);
  GridField g = synthesize(u, n, n);
  std::ostringstream out;
  out << "x,t,u\n";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out << fmt17(g.x(a)) << ',' << fmt17(g.t(b)) << ','
          << fmt17(g.at(a, b)) << '\n';
  return out.str();
}

std::string to_json(const NormReport& r) {
  json j;
  j["e_norm"] = r.e;
  j["es_norm"] = r.es;
  j["es_norm.s"] = r.es_s;
  j["hs_norm"] = r.hs;
  j["hs_norm.s"] = r.hs_s;
  j["lp"] = r.lp;
  j["lp.p"] = r.lp_p;
  j["lq"] = r.lq;
  j["lq.q"] = r.lq_q;
  j["holder"] = r.holder;
  j["holder.gamma"] = r.holder_gamma;
  j["beta_norm"] = r.beta_val;
  j["beta_norm.beta"] = r.beta;
  return j.dump(2);
}

std::string to_json(const EstimateReport& r) {
  json j;
  j["name"] = r.name;
  j["samples"] = r.samples;
  j["worst_ratio"] = r.worst_ratio;
  j["envelope"] = r.envelope;
  j["pass"] = r.pass;
  j["table"] = r.table;
  j["details"] = r.details;
  return j.dump(2);
}

std::string to_json(const BootstrapReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json jr;
    jr["beta"] = row.beta;
    jr["w_h1"] = row.w_h1;
    jr["w_h2"] = row.w_h2;
    jr["w_h3"] = row.w_h3;
    jr["vt_l2"] = row.vt_l2;
    jr["vtt_l2"] = row.vtt_l2;
    jr["vttt_l2"] = row.vttt_l2;
    jr["pointwise_residual"] = row.pointwise_residual;
    jr["holder_exponent"] = row.holder_exponent;
    rows.push_back(jr);
  }
  json j;
  j["rows"] = rows;
  j["upward_flags"] = r.upward_flags;
  return j.dump(2);
}

std::string to_json(const SolutionRecord& r) {
  json j;
  j["decomposition"] = decomposition_to_json(r.d);
  j["beta_final"] = r.beta_final;
  j["residual_norm"] = r.residual_norm;
  j["i_value"] = r.i_value;
  j["seed_descriptor"] = r.seed_descriptor;
  j["converged"] = r.converged;
  j["failure"] = r.failure;
  json path = json::array();
  for (const auto& p : r.path) {
    json jp;
    jp["beta"] = p.beta;
    jp["v_c0"] = p.v_c0;
    jp["vt_l2"] = p.vt_l2;
    jp["vtt_l2"] = p.vtt_l2;
    jp["w_h1"] = p.w_h1;
    jp["w_h2"] = p.w_h2;
    jp["residual"] = p.residual;
    jp["newton_iters"] = p.newton_iters;
    path.push_back(jp);
  }
  j["path"] = path;
  json fields = json::array();
  for (const auto& d : r.path_fields) fields.push_back(decomposition_to_json(d));
  j["path_fields"] = fields;
  return j.dump(2);
}

SolutionRecord solution_record_from_json(const std::string& text) {
  json j = json::parse(text);
  Decomposition d = decomposition_from_json(j.at("decomposition"));
  SolutionRecord r(d.radius());
  r.d = d;
  r.beta_final = j.at("beta_final").get<double>();
  r.residual_norm = j.at("residual_norm").get<double>();
  r.i_value = j.at("i_value").get<double>();
  r.seed_descriptor = j.at("seed_descriptor").get<std::string>();
  r.converged = j.at("converged").get<bool>();
  r.failure = j.at("failure").get<std::string>();
  for (const auto& jp : j.at("path")) {
    PathPoint p;
    p.beta = jp.at("beta").get<double>();
    p.v_c0 = jp.at("v_c0").get<double>();
    p.vt_l2 = jp.at("vt_l2").get<double>();
    p.vtt_l2 = jp.at("vtt_l2").get<double>();
    p.w_h1 = jp.at("w_h1").get<double>();
    p.w_h2 = jp.at("w_h2").get<double>();
    p.residual = jp.at("residual").get<double>();
    p.newton_iters = jp.at("newton_iters").get<int>();
    r.path.push_back(p);
  }
  for (const auto& jd : j.at("path_fields"))
    r.path_fields.push_back(decomposition_from_json(jd));
  return r;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw domain_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw domain_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw domain_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace boxtorus

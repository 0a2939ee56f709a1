#include "boxtorus/verify.hpp"

#include <algorithm>
#include <cmath>

#include "boxtorus/norms.hpp"
#include "boxtorus/transforms.hpp"

namespace boxtorus {

double sobolev_index(double p) {
  if (p <= 2.0) throw domain_error("sobolev_index: need p > 2");
  return (p - 2.0) / (p - 1.0);
}

double sobolev_exponent(double s) {
  if (!(s > 0.0 && s < 1.0))
    throw domain_error("sobolev_exponent: need s in (0,1)");
  return (2.0 - s) / (1.0 - s);
}

namespace {

FourierField kernel_free_draw(int m, std::uint64_t sample,
                              const RandomFieldParams& params) {
  RandomFieldParams p = params;
  p.kernel_free = true;
  return random_field(m, sample, p);
}

double worst_sobolev_ratio(int samples, double s, double p, int m,
                           const RandomFieldParams& params,
                           std::vector<double>* table) {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    FourierField f = kernel_free_draw(m, std::uint64_t(i), params);
    double den = es_norm(f, s);
    double r = den > 0.0 ? lp_norm(f, p) / den : 0.0;
    if (table) table->push_back(r);
    worst = std::max(worst, r);
  }
  return worst;
}

}  // namespace

EstimateReport sobolev_check(int samples, double value, SobolevMode mode,
                             int m, const RandomFieldParams& params) {
  if (samples < 1) throw domain_error("sobolev_check: samples must be >= 1");
  double s = mode == SobolevMode::FromS ? value : sobolev_index(value);
  double p = mode == SobolevMode::FromS ? sobolev_exponent(value) : value;
  if (!(s > 0.0 && s < 1.0))
    throw domain_error("sobolev_check: need s in (0,1)");

  EstimateReport rep;
  rep.name = "sobolev_embedding";
  rep.samples = samples;
  rep.details["s"] = s;
  rep.details["p"] = p;

  double worst = worst_sobolev_ratio(samples, s, p, m, params, &rep.table);
  double worst2 =
      worst_sobolev_ratio(samples, s, p, 2 * m, params, nullptr);
  double drift = std::abs(worst2 - worst) / std::max(worst, 1e-300);
  rep.worst_ratio = worst;
  rep.envelope = std::max(worst, worst2);
  rep.details["worst_doubled_m"] = worst2;
  rep.details["truncation_drift"] = drift;

  // Compactness signature: a field supported on a single high dyadic block
  // has es_norm growing like 2^{sm} against a slower L^p norm, so the ratio
  // must decay along the levels.
  double first_block = 0.0, last_block = 0.0;
  int top = max_dyadic_level(2 * m);
  for (int lvl = 2; lvl <= top; ++lvl) {
    FourierField f = kernel_free_draw(2 * m, 10'000 + std::uint64_t(lvl),
                                      params);
    FourierField blk = dyadic_block(f, lvl);
    double den = es_norm(blk, s);
    if (den <= 0.0) continue;
    double r = lp_norm(blk, p) / den;
    if (first_block == 0.0) first_block = r;
    last_block = r;
  }
  rep.details["block_ratio_first"] = first_block;
  rep.details["block_ratio_last"] = last_block;

  rep.pass = std::isfinite(worst) && worst > 0.0 && drift < 0.05 &&
             last_block < first_block;
  return rep;
}

EstimateReport gn_check(int samples, double p, int m,
                        const RandomFieldParams& params) {
  if (!(p > 2.0)) throw domain_error("gn_check: need p > 2");
  double s = sobolev_index(p);

  EstimateReport rep;
  rep.name = "gagliardo_nirenberg";
  rep.samples = samples;
  rep.details["p"] = p;
  rep.details["s"] = s;

  double worst = 0.0, scale_err = 0.0;
  auto ratio = [&](const FourierField& f) {
    double den = std::pow(l2_norm(f), 1.0 - s) * std::pow(es_norm(f, 1.0), s);
    return den > 0.0 ? lp_norm(f, p) / den : 0.0;
  };
  for (int i = 0; i < samples; ++i) {
    FourierField f = kernel_free_draw(m, std::uint64_t(i), params);
    double r = ratio(f);
    rep.table.push_back(r);
    worst = std::max(worst, r);
    if (i == 0) {
      FourierField g = f;
      g *= 7.3;
      scale_err = std::abs(ratio(g) - r) / std::max(r, 1e-300);
    }
  }
  double worst2 = 0.0;
  for (int i = 0; i < samples; ++i)
    worst2 = std::max(worst2,
                      ratio(kernel_free_draw(2 * m, std::uint64_t(i), params)));
  double drift = std::abs(worst2 - worst) / std::max(worst, 1e-300);
  rep.worst_ratio = worst;
  rep.envelope = std::max(worst, worst2);
  rep.details["worst_doubled_m"] = worst2;
  rep.details["truncation_drift"] = drift;
  rep.details["scale_invariance_error"] = scale_err;
  rep.pass = std::isfinite(worst) && worst > 0.0 && drift < 0.05 &&
             scale_err < 1e-12;
  return rep;
}

double layer_cake_oracle(const FourierField& f, double p, double s) {
  (void)s;
  if (!(p > 1.0)) throw domain_error("layer_cake_oracle: need p > 1");
  if (f.max_abs() == 0.0) return 0.0;

  int refine = 4;
  int n = grid_size(f.radius(), refine);
  GridField g = synthesize(f, n, n);
  std::vector<double> a(g.v.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::abs(g.v[i]);
  std::sort(a.begin(), a.end());
  double cell = kDomainArea / double(a.size());
  double amax = a.back();

  // w(lambda) = measure{|f| > lambda} from the sorted samples; trapezoid
  // quadrature of p lambda^{p-1} w(lambda) on a dense level grid.
  auto w = [&](double lam) {
    std::size_t idx = std::size_t(
        std::upper_bound(a.begin(), a.end(), lam) - a.begin());
    return cell * double(a.size() - idx);
  };
  const int levels = 200'000;
  double h = amax / levels;
  double integral = 0.5 * 0.0;  // integrand vanishes at both endpoints
  for (int i = 1; i < levels; ++i) {
    double lam = h * i;
    integral += p * std::pow(lam, p - 1.0) * w(lam);
  }
  integral *= h;

  double direct = 0.0;
  for (double v : a) direct += std::pow(v, p);
  direct *= cell;
  return std::abs(integral - direct) / direct;
}

double psi_comparison(const Nonlinearity& nl, double z, double M5) {
  const int nx = 256, nxi = 2001;
  double best = kInf;
  for (int a = 0; a < nx; ++a) {
    double x = kPi * a / nx;
    for (int i = 0; i < nxi; ++i) {
      double xi = -M5 + 2.0 * M5 * i / (nxi - 1);
      best = std::min(best, nl.f(x, z + xi) - nl.f(x, xi));
    }
  }
  return best;
}

double nu_comparison(const Nonlinearity& nl, double z, double M5) {
  return std::min(psi_comparison(nl, z, M5), -psi_comparison(nl, -z, M5));
}

C0Diagnostic c0_bound_diagnostic(const Nonlinearity& nl,
                                 const SolutionRecord& record, double M5) {
  C0Diagnostic out;
  FourierField v = kernel_field(record.d);
  FourierField w = record.d.w_plus;
  w += record.d.w_minus;

  double v_c0 = v.max_abs() > 0.0 ? grid_sup(v, 4) : 0.0;
  double v_l2 = l2_norm(v);
  if (v_c0 <= 8.0 * v_l2) {
    out.case_id = 1;
    out.lhs = v_c0;
    out.rhs = 8.0 * v_l2;
    out.holds = true;
    return out;
  }

  out.case_id = 2;
  int n = grid_size(v.radius(), 4);
  GridField vg = synthesize(v, n, n);
  double vplus = 0.0, vminus = 0.0;
  for (double val : vg.v) {
    vplus = std::max(vplus, val);
    vminus = std::max(vminus, -val);
  }
  double delta = 0.5 * std::max(vplus, vminus);
  out.lhs = nu_comparison(nl, delta, M5);

  GridField wg = synthesize(w, n, n);
  double fw = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      fw = std::max(fw, std::abs(nl.f(wg.x(a), wg.at(a, b))));
  out.rhs = 8.0 * fw;
  out.holds = out.lhs <= out.rhs;
  return out;
}

double holder_slope(const FourierField& w) {
  int top = max_dyadic_level(w.radius());
  std::vector<double> xs, ys;
  double floor = 1e-13 * std::max(w.max_abs(), 1e-300);
  for (int lvl = 2; lvl <= top; ++lvl) {
    FourierField blk = dyadic_block(w, lvl);
    if (blk.max_abs() <= floor) continue;
    xs.push_back(double(lvl));
    ys.push_back(std::log2(grid_sup(blk, 4)));
  }
  if (xs.size() < 2) return kInf;
  double n = double(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return -(n * sxy - sx * sy) / (n * sxx - sx * sx);
}

BootstrapReport bootstrap_report(const Nonlinearity& nl,
                                 const SolutionRecord& record) {
  BootstrapReport rep;
  for (std::size_t i = 0; i < record.path_fields.size(); ++i) {
    const Decomposition& d = record.path_fields[i];
    BootstrapRow row;
    row.beta = i < record.path.size() ? record.path[i].beta : 0.0;

    FourierField w = d.w_plus;
    w += d.w_minus;
    double h1 = 0.0, h2 = 0.0, h3 = 0.0;
    w.for_each([&](int j, int k, cplx z) {
      double wgt = 4.0 * double(j) * j + double(k) * k;
      double m2 = std::norm(z);
      h1 += wgt * m2;
      h2 += wgt * wgt * m2;
      h3 += wgt * wgt * wgt * m2;
    });
    row.w_h1 = std::sqrt(h1);
    row.w_h2 = std::sqrt(h2);
    row.w_h3 = std::sqrt(h3);

    FourierField v = kernel_field(d);
    double t1 = 0.0, t2 = 0.0, t3 = 0.0;
    v.for_each([&](int, int k, cplx z) {
      double k2 = double(k) * k;
      double m2 = std::norm(z);
      t1 += k2 * m2;
      t2 += k2 * k2 * m2;
      t3 += k2 * k2 * k2 * m2;
    });
    row.vt_l2 = std::sqrt(kDomainArea * t1);
    row.vtt_l2 = std::sqrt(kDomainArea * t2);
    row.vttt_l2 = std::sqrt(kDomainArea * t3);

    FourierField u = assemble(d);
    FourierField bu(u.radius());
    u.for_each([&](int j, int k, cplx z) {
      if (!is_kernel_mode(j, k)) bu.set(j, k, box_symbol(j, k) * z);
    });
    int n = grid_size(u.radius(), 4);
    GridField bg = synthesize(bu, n, n);
    GridField ug = synthesize(u, n, n);
    double res = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        res = std::max(res, std::abs(bg.at(a, b) +
                                     nl.f(ug.x(a), ug.at(a, b))));
    row.pointwise_residual = res;
    row.holder_exponent = holder_slope(w);
    rep.rows.push_back(row);
  }

  if (rep.rows.size() >= 2) {
    const BootstrapRow& a = rep.rows.front();
    const BootstrapRow& b = rep.rows.back();
    auto flag = [&](double first, double last, const char* name) {
      if (last > 1.05 * first + 1e-12) rep.upward_flags.push_back(name);
    };
    flag(a.w_h1, b.w_h1, "w_h1");
    flag(a.w_h2, b.w_h2, "w_h2");
    flag(a.w_h3, b.w_h3, "w_h3");
    flag(a.vt_l2, b.vt_l2, "vt_l2");
    flag(a.vtt_l2, b.vtt_l2, "vtt_l2");
    flag(a.vttt_l2, b.vttt_l2, "vttt_l2");
  }
  return rep;
}

}  // namespace boxtorus

#include "boxtorus/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "boxtorus/norms.hpp"
#include "boxtorus/transforms.hpp"

namespace boxtorus {

void ContinuationSchedule::validate() const {
  if (!(beta_min > 0.0 && beta_min <= beta0))
    throw domain_error("schedule: need 0 < beta_min <= beta0");
  if (!(factor > 0.0 && factor < 1.0))
    throw domain_error("schedule: factor must lie in (0,1)");
  if (tol_residual <= 0.0)
    throw domain_error("schedule: tol_residual must be positive");
  if (max_newton < 1) throw domain_error("schedule: max_newton must be >= 1");
  if (m < 1) throw domain_error("schedule: truncation radius must be >= 1");
}

namespace {

std::vector<cplx> flatten(const FourierField& u) {
  std::vector<cplx> v;
  u.for_each([&](int, int, cplx z) { v.push_back(z); });
  return v;
}

FourierField unflatten(const std::vector<cplx>& v, int m) {
  FourierField u(m);
  std::size_t i = 0;
  u.transform([&](int, int, cplx) { return v[i++]; });
  return u;
}

double vnorm(const std::vector<cplx>& v) {
  double s = 0.0;
  for (auto z : v) s += std::norm(z);
  return std::sqrt(s);
}

cplx vdot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

// Combined residual as one coefficient field: range part on off-kernel
// modes, kernel part on the characteristics.
FourierField combined_residual(const FourierField& u, double beta,
                               const FourierField& fh) {
  FourierField r(u.radius());
  u.for_each([&](int j, int k, cplx z) {
    cplx fz = fh.at(j, k);
    cplx val = is_kernel_mode(j, k)
                   ? beta * (1.0 + double(k) * k) * z + fz
                   : -box_symbol(j, k) * z - fz;
    if (val != cplx{0.0, 0.0}) r.set(j, k, val);
  });
  return r;
}

struct LinearizedOperator {
  const Nonlinearity& nl;
  int m;
  int pad_grid;
  double beta;
  GridField fu;  // f_u(x, u) on the padded grid

  LinearizedOperator(const Nonlinearity& nl_, const FourierField& u,
                     double beta_)
      : nl(nl_), m(u.radius()), pad_grid(grid_size(m, dealias_pad_factor(nl_))),
        beta(beta_), fu(0, 0) {
    fu = f_prime_eval(nl_, synthesize(u, pad_grid, pad_grid));
  }

  std::vector<cplx> apply(const std::vector<cplx>& x) const {
    FourierField dx = unflatten(x, m);
    dx.enforce_conjugate_symmetry();
    GridField g = synthesize(dx, pad_grid, pad_grid);
    for (std::size_t i = 0; i < g.v.size(); ++i) g.v[i] *= fu.v[i];
    FourierField fudx = analyze(g, m);
    FourierField out(m);
    dx.for_each([&](int j, int k, cplx z) {
      cplx w = fudx.at(j, k);
      cplx val = is_kernel_mode(j, k)
                     ? beta * (1.0 + double(k) * k) * z + w
                     : -box_symbol(j, k) * z - w;
      out.set(j, k, val);
    });
    return flatten(out);
  }

  // Diagonal preconditioner; kernel rows pick up the monotonicity floor so
  // they stay well scaled as beta -> 0.
  std::vector<cplx> precondition(const std::vector<cplx>& x) const {
    FourierField dx = unflatten(x, m);
    double fu_mean = std::accumulate(fu.v.begin(), fu.v.end(), 0.0) /
                     double(fu.v.size());
    dx.transform([&](int j, int k, cplx z) {
      double diag = is_kernel_mode(j, k)
                        ? beta * (1.0 + double(k) * k) + fu_mean
                        : -box_symbol(j, k);
      return z / diag;
    });
    return flatten(dx);
  }
};

// Full (unrestarted) GMRES, left-preconditioned; system sizes here are a few
// hundred unknowns so the dense Hessenberg solve is cheap.
std::vector<cplx> gmres(const LinearizedOperator& op,
                        const std::vector<cplx>& rhs, double rel_tol,
                        int max_iter) {
  const std::size_t n = rhs.size();
  std::vector<cplx> b = op.precondition(rhs);
  double bnorm = vnorm(b);
  std::vector<cplx> x(n, cplx{0.0, 0.0});
  if (bnorm == 0.0) return x;

  int mx = std::min<int>(max_iter, int(2 * n));
  std::vector<std::vector<cplx>> V;
  std::vector<std::vector<cplx>> H;  // H[i] column i, length i+2
  std::vector<double> cs(mx + 1);
  std::vector<cplx> sn(mx + 1), g(mx + 1, cplx{0.0, 0.0});

  std::vector<cplx> v0 = b;
  for (auto& z : v0) z /= bnorm;
  V.push_back(v0);
  g[0] = bnorm;

  int iters = 0;
  for (int i = 0; i < mx; ++i) {
    std::vector<cplx> w = op.precondition(op.apply(V[i]));
    std::vector<cplx> h(i + 2, cplx{0.0, 0.0});
    for (int row = 0; row <= i; ++row) {
      h[row] = vdot(V[row], w);
      for (std::size_t t = 0; t < n; ++t) w[t] -= h[row] * V[row][t];
    }
    h[i + 1] = vnorm(w);
    if (std::abs(h[i + 1]) > 1e-300) {
      std::vector<cplx> vi = w;
      for (auto& z : vi) z /= h[i + 1].real();
      V.push_back(vi);
    }
    // Apply previous Givens rotations, then create the new one to zero
    // h[i+1]; rotation is [c, s; -conj(s), c] with c real.
    for (int row = 0; row < i; ++row) {
      cplx tmp = cs[row] * h[row] + sn[row] * h[row + 1];
      h[row + 1] = -std::conj(sn[row]) * h[row] + cs[row] * h[row + 1];
      h[row] = tmp;
    }
    double r0 = std::abs(h[i]);
    double denom = std::hypot(r0, std::abs(h[i + 1]));
    if (denom == 0.0) denom = 1e-300;
    cs[i] = r0 / denom;
    cplx phase = r0 > 0.0 ? h[i] / r0 : cplx{1.0, 0.0};
    sn[i] = phase * std::conj(h[i + 1]) / denom;
    h[i] = phase * denom;
    h[i + 1] = 0.0;
    g[i + 1] = -std::conj(sn[i]) * g[i];
    g[i] = cs[i] * g[i];
    H.push_back(h);
    iters = i + 1;
    if (std::abs(g[i + 1]) <= rel_tol * bnorm || V.size() <= std::size_t(i + 1))
      break;
  }

  // Back substitution.
  std::vector<cplx> y(iters, cplx{0.0, 0.0});
  for (int row = iters - 1; row >= 0; --row) {
    cplx s = g[row];
    for (int col = row + 1; col < iters; ++col) s -= H[col][row] * y[col];
    y[row] = s / H[row][row];
  }
  for (int col = 0; col < iters; ++col)
    for (std::size_t t = 0; t < n; ++t) x[t] += y[col] * V[col][t];
  return x;
}

}  // namespace

NewtonResult newton_solve(const Nonlinearity& nl, const Decomposition& d0,
                          double beta, const ContinuationSchedule& sched) {
  if (beta <= 0.0) throw domain_error("newton_solve: beta must be positive");
  FourierField u = assemble(d0);
  FourierField res = combined_residual(u, beta, f_field(nl, u));
  double rnorm = l2_coeff_norm(res);

  NewtonResult out{decompose(u)};
  out.residual_norm = rnorm;
  for (int it = 0; it < sched.max_newton; ++it) {
    if (rnorm <= sched.tol_residual) {
      out.converged = true;
      break;
    }
    LinearizedOperator op(nl, u, beta);
    std::vector<cplx> rhs = flatten(res);
    for (auto& z : rhs) z = -z;
    double inner_tol = std::min(1e-4, 0.1 * rnorm);
    inner_tol = std::max(inner_tol, 1e-12);
    std::vector<cplx> dxv = gmres(op, rhs, inner_tol, 600);
    FourierField dx = unflatten(dxv, u.radius());
    dx.enforce_conjugate_symmetry();

    double t = 1.0;
    FourierField best_u = u;
    FourierField best_res = res;
    double best = rnorm;
    bool accepted = false;
    for (int half = 0; half < 14; ++half) {
      FourierField trial = u;
      FourierField step = dx;
      step *= t;
      trial += step;
      trial.enforce_conjugate_symmetry();
      FourierField tres = combined_residual(trial, beta,
                                            f_field(nl, trial));
      double tn = l2_coeff_norm(tres);
      if (tn < best) {
        best = tn;
        best_u = trial;
        best_res = tres;
      }
      if (tn <= (1.0 - 1e-4 * t) * rnorm) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    u = best_u;
    res = best_res;
    rnorm = best;
    out.iterations = it + 1;
    if (!accepted && best >= out.residual_norm) break;  // stagnation
    out.residual_norm = rnorm;
  }
  out.residual_norm = rnorm;
  out.converged = rnorm <= sched.tol_residual;
  out.d = decompose(u);
  return out;
}

std::vector<double> SolutionRecord::v_c0_history() const {
  std::vector<double> h;
  h.reserve(path.size());
  for (const auto& p : path) h.push_back(p.v_c0);
  return h;
}

namespace {

PathPoint diagnostics(const Decomposition& d, double beta, double res,
                      int iters) {
  PathPoint p;
  p.beta = beta;
  p.residual = res;
  p.newton_iters = iters;
  FourierField v = kernel_field(d);
  p.v_c0 = v.max_abs() > 0.0 ? grid_sup(v, 4) : 0.0;
  double vt2 = 0.0, vtt2 = 0.0;
  v.for_each([&](int, int k, cplx z) {
    double k2 = double(k) * k;
    vt2 += k2 * std::norm(z);
    vtt2 += k2 * k2 * std::norm(z);
  });
  p.vt_l2 = std::sqrt(kDomainArea * vt2);
  p.vtt_l2 = std::sqrt(kDomainArea * vtt2);
  FourierField w = d.w_plus;
  w += d.w_minus;
  double h1 = 0.0, h2 = 0.0;
  w.for_each([&](int j, int k, cplx z) {
    double wgt = 4.0 * double(j) * j + double(k) * k;
    h1 += wgt * std::norm(z);
    h2 += wgt * wgt * std::norm(z);
  });
  p.w_h1 = std::sqrt(h1);
  p.w_h2 = std::sqrt(h2);
  return p;
}

bool sentinel_trip(double prev, double cur, double beta_ratio, double floor) {
  if (cur <= floor) return false;
  double allowed = std::max(prev, floor) * 2.0 * std::pow(beta_ratio, 0.25);
  return cur > allowed;
}

}  // namespace

SolutionRecord continue_beta(const Nonlinearity& nl, const Decomposition& seed,
                             const ContinuationSchedule& sched,
                             std::string seed_descriptor) {
  sched.validate();
  SolutionRecord rec(sched.m);
  rec.seed_descriptor = std::move(seed_descriptor);

  Decomposition cur = seed;
  double beta = sched.beta0;
  PathPoint prev;
  bool have_prev = false;
  while (true) {
    NewtonResult nr = newton_solve(nl, cur, beta, sched);
    if (!nr.converged) {
      rec.converged = false;
      rec.failure = "newton stalled at beta=" + std::to_string(beta) +
                    " residual=" + std::to_string(nr.residual_norm);
      rec.d = nr.d;
      rec.beta_final = beta;
      rec.residual_norm = nr.residual_norm;
      return rec;
    }
    cur = nr.d;
    PathPoint p = diagnostics(cur, beta, nr.residual_norm, nr.iterations);
    double unorm = l2_coeff_norm(assemble(cur));
    double floor = 1e-8 * (1.0 + unorm);
    if (have_prev) {
      double br = prev.beta / beta;
      if (sentinel_trip(prev.v_c0, p.v_c0, br, floor) ||
          sentinel_trip(prev.vt_l2, p.vt_l2, br, floor) ||
          sentinel_trip(prev.vtt_l2, p.vtt_l2, br, floor) ||
          sentinel_trip(prev.w_h1, p.w_h1, br, floor) ||
          sentinel_trip(prev.w_h2, p.w_h2, br, floor)) {
        rec.converged = false;
        rec.failure = "blow-up sentinel tripped at beta=" +
                      std::to_string(beta);
        rec.d = cur;
        rec.beta_final = beta;
        rec.residual_norm = nr.residual_norm;
        rec.path.push_back(p);
        rec.path_fields.push_back(cur);
        return rec;
      }
    }
    rec.path.push_back(p);
    rec.path_fields.push_back(cur);
    prev = p;
    have_prev = true;
    if (beta <= sched.beta_min * (1.0 + 1e-12)) break;
    beta = std::max(beta * sched.factor, sched.beta_min);
  }

  rec.d = cur;
  rec.beta_final = sched.beta_min;
  rec.residual_norm = rec.path.back().residual;
  rec.i_value = functional_value(nl, cur, sched.beta_min);
  rec.converged = true;
  return rec;
}

namespace {

Decomposition make_seed(int m, int pattern, int level, double amp) {
  FourierField u(m);
  int l = level;
  switch (pattern % 4) {
    case 0: {  // temporal E+ mode cos(l t)
      int k = std::min(l, m);
      u.set(0, k, cplx{0.5 * amp, 0.0});
      u.set(0, -k, cplx{0.5 * amp, 0.0});
      break;
    }
    case 1: {  // kernel profile cos(2l(x+t))
      int j = std::max(1, std::min(l, m / 4));
      u.set(j, 2 * j, cplx{0.5 * amp, 0.0});
      u.set(-j, -2 * j, cplx{0.5 * amp, 0.0});
      break;
    }
    case 2: {  // spatial E- mode cos(2lx)
      int j = std::max(1, std::min(l, m / 2));
      u.set(j, 0, cplx{0.5 * amp, 0.0});
      u.set(-j, 0, cplx{0.5 * amp, 0.0});
      break;
    }
    default: {  // mixed temporal + spatial
      int k = std::min(l, m);
      int j = std::max(1, std::min(l, m / 2));
      u.set(0, k, cplx{0.35 * amp, 0.0});
      u.set(0, -k, cplx{0.35 * amp, 0.0});
      u.set(j, 0, cplx{0.35 * amp, 0.0});
      u.set(-j, 0, cplx{0.35 * amp, 0.0});
      break;
    }
  }
  return decompose(u);
}

std::string seed_name(int pattern, int level) {
  static const char* names[4] = {"Eplus", "kernel", "Eminus", "mixed"};
  return std::string(names[pattern % 4]) + "-l" + std::to_string(level);
}

}  // namespace

std::vector<SolutionRecord> multi_start(const Nonlinearity& nl,
                                        const ContinuationSchedule& sched,
                                        int l_max, int starts_per_level) {
  sched.validate();
  if (l_max < 1) throw domain_error("multi_start: l_max must be >= 1");
  // rho_l scaling of the critical-level lemma with theta(s) = (s-1)/s.
  double expo = (1.0 / nl.s()) * (nl.s() + 1.0) / (nl.s() - 1.0);

  std::vector<SolutionRecord> records;
  auto try_push = [&](SolutionRecord&& rec) {
    if (!rec.converged) return;
    FourierField u = assemble(rec.d);
    double un = l2_norm(u);
    for (const auto& other : records) {
      FourierField v = assemble(other.d);
      double scale = std::max(un, l2_norm(v));
      // Branches at the residual noise floor are all the zero orbit.
      if (scale < 1e3 * sched.tol_residual) return;
      auto [theta, dist] = align_time_shift(u, v);
      (void)theta;
      if (dist <= 1e-3 * scale) return;  // same orbit
    }
    records.push_back(std::move(rec));
  };

  try_push(continue_beta(nl, Decomposition(sched.m), sched, "zero"));
  for (int l = 1; l <= l_max; ++l) {
    double amp = std::pow(double(l), expo);
    for (int si = 0; si < starts_per_level; ++si) {
      Decomposition seed = make_seed(sched.m, si, l, amp);
      try_push(continue_beta(nl, seed, sched, seed_name(si, l)));
    }
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const SolutionRecord& a, const SolutionRecord& b) {
                     return a.i_value < b.i_value;
                   });
  return records;
}

std::pair<double, double> align_time_shift(const FourierField& u1,
                                           const FourierField& u2) {
  // q(theta) = ||translate(u1,0,theta) - u2||^2 / |Q|
  //          = c - 2 Re sum_k z_k e^{ik theta},  z_k = sum_j u1^ conj(u2^).
  const int kmax = std::max(u1.kmax(), u2.kmax());
  std::vector<cplx> zk(2 * kmax + 1, cplx{0.0, 0.0});
  double c = 0.0;
  u1.for_each([&](int, int, cplx z) { c += std::norm(z); });
  u2.for_each([&](int, int, cplx z) { c += std::norm(z); });
  u1.for_each([&](int j, int k, cplx z) {
    cplx o = u2.at(j, k);
    if (z != cplx{0.0, 0.0} && o != cplx{0.0, 0.0})
      zk[std::size_t(k + kmax)] += z * std::conj(o);
  });
  auto q = [&](double th) {
    cplx s = 0.0;
    for (int k = -kmax; k <= kmax; ++k)
      s += zk[std::size_t(k + kmax)] * std::polar(1.0, k * th);
    return c - 2.0 * s.real();
  };
  auto dq = [&](double th, double& d1, double& d2) {
    cplx s1 = 0.0, s2 = 0.0;
    for (int k = -kmax; k <= kmax; ++k) {
      cplx e = zk[std::size_t(k + kmax)] * std::polar(1.0, k * th);
      s1 += cplx(0.0, double(k)) * e;
      s2 += -double(k) * double(k) * e;
    }
    d1 = -2.0 * s1.real();
    d2 = -2.0 * s2.real();
  };

  const int ngrid = 1024;
  double best_th = 0.0, best_q = q(0.0);
  for (int i = 1; i < ngrid; ++i) {
    double th = 2.0 * kPi * i / ngrid;
    double v = q(th);
    if (v < best_q) {
      best_q = v;
      best_th = th;
    }
  }
  double th = best_th;
  for (int it = 0; it < 8; ++it) {
    double d1, d2;
    dq(th, d1, d2);
    if (d2 <= 0.0) break;
    double step = d1 / d2;
    if (!std::isfinite(step)) break;
    th -= step;
  }
  double qv = q(th);
  if (qv > best_q) {
    th = best_th;
    qv = best_q;
  }
  th = std::fmod(th, 2.0 * kPi);
  if (th < 0.0) th += 2.0 * kPi;
  return {th, std::sqrt(std::max(0.0, qv) * kDomainArea)};
}

}  // namespace boxtorus

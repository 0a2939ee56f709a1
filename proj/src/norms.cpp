#include "boxtorus/norms.hpp"

#include <algorithm>
#include <cmath>

#include "boxtorus/transforms.hpp"

namespace boxtorus {

double e_norm(const FourierField& u) {
  double s = 0.0;
  u.for_each([&](int j, int k, cplx z) {
    double a2 = std::norm(z);
    if (a2 == 0.0) return;
    if (j == 0 && k == 0) s += a2;
    else if (is_kernel_mode(j, k)) s += 4.0 * double(j) * double(j) * a2;
    else s += 0.25 * kDomainArea * std::abs(box_symbol(j, k)) * a2;
  });
  return std::sqrt(s);
}

double es_norm(const FourierField& u, double s) {
  const double scale = std::max(u.max_abs(), 1e-300);
  double acc = 0.0;
  u.for_each([&](int j, int k, cplx z) {
    double a2 = std::norm(z);
    if (a2 == 0.0) return;
    if (is_kernel_mode(j, k)) {
      if (std::abs(z) > 1e-14 * scale)
        throw domain_error("es_norm: kernel mode present");
      return;
    }
    acc += a2 * std::pow(std::abs(box_symbol(j, k)), s);
  });
  return std::sqrt(acc);
}

double hs_norm(const FourierField& u, double s) {
  double acc = 0.0;
  u.for_each([&](int j, int k, cplx z) {
    double a2 = std::norm(z);
    if (a2 == 0.0) return;
    acc += a2 * std::pow(1.0 + 2.0 * std::abs(j) + std::abs(k), 2.0 * s);
  });
  return std::sqrt(acc);
}

double hs_norm_bare(const FourierField& u, double s) {
  double acc = 0.0;
  u.for_each([&](int j, int k, cplx z) {
    double a2 = std::norm(z);
    if (a2 == 0.0) return;
    double n = 2.0 * std::abs(j) + std::abs(k);
    if (n > 0.0) acc += a2 * std::pow(n, 2.0 * s);
  });
  return std::sqrt(acc);
}

double h1_operator_norm(const FourierField& u) {
  double acc = 0.0;
  u.for_each([&](int j, int k, cplx z) {
    acc += std::norm(z) * (4.0 * double(j) * double(j) + double(k) * double(k));
  });
  return std::sqrt(acc);
}

double l2_coeff_norm(const FourierField& u) {
  double acc = 0.0;
  u.for_each([&](int, int, cplx z) { acc += std::norm(z); });
  return std::sqrt(acc);
}

double l2_norm(const FourierField& u) {
  return std::sqrt(kDomainArea) * l2_coeff_norm(u);
}

double lp_norm(const GridField& g, double p) {
  if (p == kInf) return g.max_abs();
  if (p < 1.0) throw domain_error("lp_norm: p must be >= 1");
  double acc = 0.0;
  for (double x : g.v) acc += std::pow(std::abs(x), p);
  acc *= kDomainArea / (double(g.nx) * g.nt);
  return std::pow(acc, 1.0 / p);
}

double lp_norm(const FourierField& u, double p, int refine) {
  const int n = grid_size(u.radius(), refine);
  return lp_norm(synthesize(u, n, n), p);
}

double lq_coeff_norm(const FourierField& u, double q) {
  if (q == kInf) return u.max_abs();
  if (q < 1.0) throw domain_error("lq_coeff_norm: q must be >= 1");
  double acc = 0.0;
  u.for_each([&](int, int, cplx z) {
    if (z != cplx{0.0, 0.0}) acc += std::pow(std::abs(z), q);
  });
  return std::pow(acc, 1.0 / q);
}

int dyadic_level(int j, int k) {
  int n = 2 * std::abs(j) + std::abs(k);
  if (n <= 2) return 0;
  int lvl = 0;
  int top = 2;
  while (top < n) {
    top *= 2;
    ++lvl;
  }
  return lvl;
}

int max_dyadic_level(int radius) {
  int lvl = 0;
  int top = 2;
  while (top < radius) {
    top *= 2;
    ++lvl;
  }
  return lvl;
}

FourierField dyadic_block(const FourierField& u, int level) {
  FourierField out(u.radius());
  u.for_each([&](int j, int k, cplx z) {
    if (z != cplx{0.0, 0.0} && dyadic_level(j, k) == level) out.set(j, k, z);
  });
  return out;
}

double holder_estimate(const FourierField& u, double gamma, int refine) {
  double best = 0.0;
  for (int lvl = 0; lvl <= max_dyadic_level(u.radius()); ++lvl) {
    FourierField blk = dyadic_block(u, lvl);
    if (blk.max_abs() == 0.0) continue;
    best = std::max(best, std::pow(2.0, gamma * lvl) * grid_sup(blk, refine));
  }
  if (u.max_abs() == 0.0) return 0.0;
  return best + grid_sup(u, refine);
}

double beta_norm(const Decomposition& d, double beta) {
  if (beta <= 0.0) throw domain_error("beta_norm: beta must be positive");
  FourierField v = kernel_field(d);
  double vh1 = 0.0;
  v.for_each([&](int, int k, cplx z) {
    vh1 += std::norm(z) * (1.0 + double(k) * double(k));
  });
  vh1 *= kDomainArea;
  double ep = e_norm(d.w_plus), em = e_norm(d.w_minus);
  return std::sqrt(ep * ep + em * em + beta * vh1);
}

NormReport norm_report(const Decomposition& d, double s, double p, double q,
                       double gamma, double beta) {
  FourierField u = assemble(d);
  NormReport r;
  r.e = e_norm(u);
  FourierField w = d.w_plus;
  w += d.w_minus;
  r.es_s = s;
  r.es = es_norm(w, s);
  r.hs_s = s;
  r.hs = hs_norm(u, s);
  r.lp_p = p;
  r.lp = lp_norm(u, p);
  r.lq_q = q;
  r.lq = lq_coeff_norm(u, q);
  r.holder_gamma = gamma;
  r.holder = holder_estimate(u, gamma);
  r.beta = beta;
  r.beta_val = beta_norm(d, beta);
  return r;
}

}  // namespace boxtorus

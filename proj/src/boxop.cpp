#include "boxtorus/boxop.hpp"

#include <algorithm>
#include <cmath>

#include "boxtorus/norms.hpp"
#include "boxtorus/transforms.hpp"

namespace boxtorus {

FourierField box_apply(const FourierField& u) {
  FourierField out(u.radius());
  u.for_each([&](int j, int k, cplx z) {
    if (z == cplx{0.0, 0.0} || is_kernel_mode(j, k)) return;
    out.set(j, k, box_symbol(j, k) * z);
  });
  return out;
}

FourierField box_invert(const FourierField& f) {
  const double scale = std::max(f.max_abs(), 1e-300);
  FourierField out(f.radius());
  f.for_each([&](int j, int k, cplx z) {
    if (z == cplx{0.0, 0.0}) return;
    if (is_kernel_mode(j, k)) {
      if (std::abs(z) > 1e-14 * scale)
        throw domain_error("box_invert: nonzero amplitude on a kernel mode");
      return;
    }
    out.set(j, k, z / box_symbol(j, k));
  });
  return out;
}

BoundCheck h1_bootstrap_check(const FourierField& f) {
  const double scale = std::max(f.max_abs(), 1e-300);
  BoundCheck r;
  f.for_each([&](int j, int k, cplx z) {
    double a2 = std::norm(z);
    if (a2 == 0.0) return;
    if (is_kernel_mode(j, k)) {
      if (std::abs(z) > 1e-14 * scale)
        throw domain_error("h1_bootstrap_check: kernel mode present");
      return;
    }
    double lam = box_symbol(j, k);
    r.lhs += a2 * (4.0 * double(j) * double(j) + double(k) * double(k)) /
             (lam * lam);
    r.rhs += a2;
  });
  r.pass = r.lhs <= r.rhs * (1.0 + 1e-12);
  return r;
}

HolderInversionCheck holder_inversion_check(const FourierField& f, double p,
                                            double gamma) {
  if (!(p > 1.0 && p <= 2.0))
    throw domain_error("holder_inversion_check: p must lie in (1,2]");
  if (!(gamma < 1.0 - 1.0 / p))
    throw domain_error("holder_inversion_check: need gamma < 1 - 1/p");
  FourierField u = box_invert(f);
  HolderInversionCheck r;
  double fp = lp_norm(f, p);
  r.lhs = holder_estimate(u, gamma, 4);
  r.ratio = r.lhs / fp;
  r.ratio_refined = holder_estimate(u, gamma, 8) / lp_norm(f, p, 8);
  r.rhs = r.ratio * fp;
  r.pass = std::abs(r.ratio_refined - r.ratio) <=
           0.05 * std::max(r.ratio, r.ratio_refined);
  return r;
}

HolderToSobolevCheck holder_to_sobolev_check(const FourierField& u,
                                             double gamma,
                                             double gamma_prime) {
  if (!(0.0 < gamma_prime && gamma_prime < gamma && gamma < 1.0))
    throw domain_error("holder_to_sobolev_check: need 0 < gamma' < gamma < 1");
  static const Quadrant quads[4] = {Quadrant::PP, Quadrant::PM, Quadrant::MP,
                                    Quadrant::MM};
  // Shift signs per quadrant so the multiplier phase 2j*s1*h + k*s2*h equals
  // +(2|j|+|k|)h on the quadrant's modes: that phase lies in (2pi/3, 4pi/3]
  // on block m at h(m) = (2pi/3) 2^{-m}, where |e^{i phi} - 1| >= sqrt(3).
  static const double sign1[4] = {1.0, 1.0, -1.0, -1.0};
  static const double sign2[4] = {1.0, -1.0, 1.0, -1.0};

  HolderToSobolevCheck r;
  const int levels = max_dyadic_level(u.radius());
  for (int qi = 0; qi < 4; ++qi) {
    FourierField uq = quadrant(u, quads[qi]);
    double lhs = hs_norm_bare(uq, gamma_prime);
    lhs *= lhs;
    double rhs = 0.0;
    if (uq.max_abs() > 0.0) {
      for (int lvl = 0; lvl <= levels; ++lvl) {
        double h = (2.0 * kPi / 3.0) * std::pow(2.0, -lvl);
        FourierField diff = translate(uq, sign1[qi] * h, sign2[qi] * h);
        diff -= uq;
        double sup = complex_grid_sup(diff, 4);
        rhs += std::pow(2.0, 2.0 * (lvl + 1) * gamma_prime) * sup * sup;
      }
    }
    r.q[qi].lhs = lhs;
    r.q[qi].rhs = rhs;
    r.total_lhs += lhs;
  }
  double whole = hs_norm_bare(u, gamma_prime);
  r.whole_norm2 = whole * whole;
  bool ok =
      std::abs(r.total_lhs - r.whole_norm2) <= 1e-10 * (1.0 + r.whole_norm2);
  for (auto& qb : r.q) ok = ok && qb.lhs <= qb.rhs * (1.0 + 1e-10) + 1e-12;
  r.pass = ok;
  return r;
}

}  // namespace boxtorus

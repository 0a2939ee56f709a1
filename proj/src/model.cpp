#include "boxtorus/model.hpp"

#include <algorithm>
#include <cmath>

#include "boxtorus/norms.hpp"
#include "boxtorus/transforms.hpp"

namespace boxtorus {

namespace {

double cosine_series(const std::vector<double>& c, double x) {
  if (c.empty()) return 0.0;
  double v = c[0];
  for (std::size_t n = 1; n < c.size(); ++n) v += c[n] * std::cos(2.0 * n * x);
  return v;
}

double odd_power(double u, double s) {
  // |u|^{s-1} u
  return std::copysign(std::pow(std::abs(u), s), u);
}

}  // namespace

Nonlinearity::Nonlinearity(Params p) : p_(std::move(p)) {
  if (p_.s <= 1.0) throw domain_error("nonlinearity: growth exponent s must exceed 1");
  if (p_.alpha < 0.0) throw domain_error("nonlinearity: alpha must be nonnegative");
  if (p_.envelope_range <= 0.0)
    throw domain_error("nonlinearity: envelope_range must be positive");

  const int ngrid = 1024;
  c0_min_ = kInf;
  c0_max_ = -kInf;
  for (int i = 0; i < ngrid; ++i) {
    double x = kPi * i / ngrid;
    double ax = a(x);
    c0_min_ = std::min(c0_min_, ax);
    c0_max_ = std::max(c0_max_, ax);
    b_sup_ = std::max(b_sup_, std::abs(b(x)));
  }
  if (c0_min_ < 0.0) throw domain_error("nonlinearity: a(x) must be nonnegative");
  // Degenerate a == 0 is allowed as the purely linear problem.
  if (c0_max_ > 0.0 && !(c0_min_ > c0_max_ / (p_.s + 1.0)))
    throw domain_error("nonlinearity: admissibility c0_min > c0_max/(s+1) fails");

  // Offsets of the power envelope, scanned over |u| <= envelope_range.
  const int ugrid = 4096;
  double lo = 0.0, hi = 0.0;
  for (int i = -ugrid; i <= ugrid; ++i) {
    double u = p_.envelope_range * i / ugrid;
    double pw = odd_power(u, p_.s);
    for (int xg = 0; xg < 64; ++xg) {
      double x = kPi * xg / 64;
      double fv = f(x, u);
      lo = std::min(lo, fv - c0_min_ * pw);
      hi = std::max(hi, fv - c0_max_ * pw);
    }
  }
  lower_offset_ = lo;
  upper_offset_ = hi;

  // u f/2 - F = a(x)|u|^{s+1} (s-1)/(2(s+1)) - b(x) u / 2
  //           >= 2*a1 |u|^{s+1} - (b_sup/2)|u|, then absorb the linear term.
  double kappa = c0_min_ * (p_.s - 1.0) / (2.0 * (p_.s + 1.0));
  if (kappa > 0.0) {
    energy_a1_ = 0.5 * kappa;
    double spare = kappa - energy_a1_;  // coefficient left to eat b_sup/2 |u|
    double B = 0.5 * b_sup_;
    double pointwise = 0.0;
    if (B > 0.0) {
      double ustar = std::pow(B / ((p_.s + 1.0) * spare), 1.0 / p_.s);
      pointwise = B * ustar - spare * std::pow(ustar, p_.s + 1.0);
    }
    energy_a2_ = pointwise * kDomainArea;
  } else {
    // Linear problem: u f/2 - F = -b u / 2, no superlinear coercivity.
    energy_a1_ = 0.0;
    energy_a2_ = 0.0;
  }
}

double Nonlinearity::a(double x) const { return cosine_series(p_.a_coeffs, x); }
double Nonlinearity::b(double x) const { return cosine_series(p_.b_coeffs, x); }

double Nonlinearity::f(double x, double u) const {
  return a(x) * odd_power(u, p_.s) + p_.alpha * u + b(x);
}

double Nonlinearity::f_u(double x, double u) const {
  return p_.s * a(x) * std::pow(std::abs(u), p_.s - 1.0) + p_.alpha;
}

double Nonlinearity::f_uu(double x, double u) const {
  if (u == 0.0) return 0.0;
  return p_.s * (p_.s - 1.0) * a(x) *
         std::copysign(std::pow(std::abs(u), p_.s - 2.0), u);
}

double Nonlinearity::F(double x, double u) const {
  return a(x) * std::pow(std::abs(u), p_.s + 1.0) / (p_.s + 1.0) +
         0.5 * p_.alpha * u * u + b(x) * u;
}

namespace {

template <typename Fn>
GridField pointwise(const Nonlinearity& nl, const GridField& u, Fn&& fn) {
  GridField out(u.nx, u.nt);
  for (int a = 0; a < u.nx; ++a) {
    double x = u.x(a);
    for (int b = 0; b < u.nt; ++b)
      out.at(a, b) = fn(nl, x, u.at(a, b));
  }
  return out;
}

}  // namespace

GridField f_eval(const Nonlinearity& nl, const GridField& u) {
  return pointwise(nl, u, [](const Nonlinearity& n, double x, double v) {
    return n.f(x, v);
  });
}
GridField f_prime_eval(const Nonlinearity& nl, const GridField& u) {
  return pointwise(nl, u, [](const Nonlinearity& n, double x, double v) {
    return n.f_u(x, v);
  });
}
GridField f_second_eval(const Nonlinearity& nl, const GridField& u) {
  return pointwise(nl, u, [](const Nonlinearity& n, double x, double v) {
    return n.f_uu(x, v);
  });
}
GridField F_eval(const Nonlinearity& nl, const GridField& u) {
  return pointwise(nl, u, [](const Nonlinearity& n, double x, double v) {
    return n.F(x, v);
  });
}

int dealias_pad_factor(const Nonlinearity& nl) {
  double s = nl.s();
  if (s == std::floor(s)) return int(std::ceil((s + 1.0) / 2.0));
  return 4;
}

FourierField f_field(const Nonlinearity& nl, const FourierField& u,
                     int pad_override) {
  int pad = pad_override > 0 ? pad_override : dealias_pad_factor(nl);
  int n = grid_size(u.radius(), pad);
  GridField g = synthesize(u, n, n);
  return analyze(f_eval(nl, g), u.radius());
}

double functional_value(const Nonlinearity& nl, const Decomposition& d,
                        double beta) {
  FourierField u = assemble(d);
  double quad = 0.0;
  u.for_each([&](int j, int k, cplx z) {
    double a2 = std::norm(z);
    if (a2 == 0.0) return;
    quad += (double(k) * k - 4.0 * double(j) * j) * a2;
  });
  quad *= 0.5 * kDomainArea;

  double pen = 0.0;
  kernel_field(d).for_each([&](int, int k, cplx z) {
    pen += (1.0 + double(k) * k) * std::norm(z);
  });
  pen *= 0.5 * beta * kDomainArea;

  int n = grid_size(u.radius(), dealias_pad_factor(nl));
  GridField g = synthesize(u, n, n);
  GridField Fg = F_eval(nl, g);
  double intF = 0.0;
  for (double v : Fg.v) intF += v;
  intF *= kDomainArea / (double(n) * n);

  return quad - pen - intF;
}

double PenalizedResidual::l2() const {
  double a = l2_coeff_norm(range_part), b = l2_coeff_norm(kernel_part);
  return std::sqrt(a * a + b * b);
}

PenalizedResidual residual(const Nonlinearity& nl, const Decomposition& d,
                           double beta, int pad_override) {
  if (beta <= 0.0) throw domain_error("residual: beta must be positive");
  FourierField u = assemble(d);
  FourierField fh = f_field(nl, u, pad_override);
  PenalizedResidual r(u.radius());
  r.beta = beta;
  u.for_each([&](int j, int k, cplx z) {
    cplx fz = fh.at(j, k);
    if (is_kernel_mode(j, k)) {
      cplx val = beta * (1.0 + double(k) * k) * z + fz;
      if (val != cplx{0.0, 0.0}) r.kernel_part.set(j, k, val);
    } else {
      cplx val = -box_symbol(j, k) * z - fz;
      if (val != cplx{0.0, 0.0}) r.range_part.set(j, k, val);
    }
  });
  return r;
}

double residual_pairing(const PenalizedResidual& r, const FourierField& phi) {
  double acc = 0.0;
  phi.for_each([&](int j, int k, cplx pz) {
    if (pz == cplx{0.0, 0.0}) return;
    if (is_kernel_mode(j, k))
      acc += (r.kernel_part.at(j, k) * std::conj(pz)).real();
    else
      acc -= (r.range_part.at(j, k) * std::conj(pz)).real();
  });
  return kDomainArea * acc;
}

EnergyIdentity energy_identity(const Nonlinearity& nl, const Decomposition& d,
                               double beta) {
  FourierField u = assemble(d);
  PenalizedResidual r = residual(nl, d, beta);
  double dI_along_u = -residual_pairing(r, u);
  EnergyIdentity e;
  e.lhs = functional_value(nl, d, beta) - 0.5 * dI_along_u;

  int n = grid_size(u.radius(), dealias_pad_factor(nl));
  GridField g = synthesize(u, n, n);
  double acc = 0.0;
  for (int a = 0; a < n; ++a) {
    double x = g.x(a);
    for (int b = 0; b < n; ++b) {
      double uv = g.at(a, b);
      acc += 0.5 * uv * nl.f(x, uv) - nl.F(x, uv);
    }
  }
  e.rhs = acc * kDomainArea / (double(n) * n);
  e.gap = std::abs(e.lhs - e.rhs);
  return e;
}

}  // namespace boxtorus

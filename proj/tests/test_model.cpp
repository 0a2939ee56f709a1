#include <doctest.h>

#include <cmath>

#include "boxtorus/model.hpp"
#include "boxtorus/norms.hpp"
#include "boxtorus/random_field.hpp"
#include "boxtorus/transforms.hpp"
#include "oracles.hpp"

using namespace boxtorus;

namespace {

Nonlinearity cubic(double alpha = 0.5) {
  Nonlinearity::Params p;
  p.s = 3.0;
  p.alpha = alpha;
  return Nonlinearity(p);
}

GridField constant_grid(int n, double c) {
  GridField g(n, n);
  for (double& v : g.v) v = c;
  return g;
}

FourierField cos_mode(int m, int j, int k, double amp = 1.0) {
  FourierField u(m);
  u.set(j, k, {0.5 * amp, 0.0});
  u.set(-j, -k, {0.5 * amp, 0.0});
  return u;
}

}  // namespace

TEST_CASE("pointwise evaluation of the built-in family") {
  Nonlinearity nl = cubic(0.0);
  GridField two = constant_grid(8, 2.0);
  GridField f = f_eval(nl, two);
  for (double v : f.v) CHECK(v == doctest::Approx(8.0).epsilon(1e-15));

  GridField zero = constant_grid(8, 0.0);
  CHECK(f_eval(nl, zero).max_abs() == 0.0);

  // oddness when b = 0
  Nonlinearity nla = cubic(0.5);
  RandomFieldParams params;
  params.seed = 71;
  GridField u = synthesize(random_field(8, 0, params), 32, 32);
  GridField neg = u;
  for (double& v : neg.v) v = -v;
  GridField fu = f_eval(nla, u), fneg = f_eval(nla, neg);
  for (std::size_t i = 0; i < fu.v.size(); ++i)
    CHECK(fneg.v[i] == doctest::Approx(-fu.v[i]).epsilon(1e-13));

  // F is the antiderivative: compare against its closed form at u = 2
  GridField F2 = F_eval(nl, two);
  for (double v : F2.v) CHECK(v == doctest::Approx(4.0).epsilon(1e-14));
  GridField fp = f_prime_eval(nla, two);
  for (double v : fp.v)
    CHECK(v == doctest::Approx(3.0 * 4.0 + 0.5).epsilon(1e-14));
  GridField fpp = f_second_eval(nla, two);
  for (double v : fpp.v) CHECK(v == doctest::Approx(12.0).epsilon(1e-13));
}

TEST_CASE("admissibility and monotonicity are validated at construction") {
  Nonlinearity::Params p;
  p.s = 3.0;
  p.alpha = -0.1;
  CHECK_THROWS_AS(Nonlinearity{p}, domain_error);
  p.alpha = 0.5;
  p.a_coeffs = {1.0, 1.5};  // a(x) dips negative
  CHECK_THROWS_AS(Nonlinearity{p}, domain_error);
  p.a_coeffs = {1.0, 0.9};  // min a = 0.1 < max a / (s+1) = 1.9/4
  CHECK_THROWS_AS(Nonlinearity{p}, domain_error);
  p.a_coeffs = {1.0, 0.2};  // 0.8 > 1.2/4: admissible
  CHECK_NOTHROW(Nonlinearity{p});
  p.s = 0.9;
  CHECK_THROWS_AS(Nonlinearity{p}, domain_error);
}

TEST_CASE("f_field matches the trigonometric expansion of cos^3") {
  // u = cos(2x): u^3 = (3cos2x + cos6x)/4
  Nonlinearity nl = cubic(0.5);
  FourierField u = cos_mode(8, 1, 0);
  FourierField f = f_field(nl, u);
  CHECK(f.at(1, 0).real() == doctest::Approx(3.0 / 8.0 + 0.25).epsilon(1e-13));
  CHECK(f.at(3, 0).real() == doctest::Approx(1.0 / 8.0).epsilon(1e-13));
  CHECK(std::abs(f.at(1, 0).imag()) < 1e-14);
  CHECK(f_field(nl, FourierField(8)).max_abs() == 0.0);
}

TEST_CASE("padding rule de-aliases exactly for integer growth") {
  Nonlinearity nl = cubic(0.5);
  CHECK(dealias_pad_factor(nl) == 2);
  RandomFieldParams params;
  params.seed = 73;
  for (int i = 0; i < 5; ++i) {
    FourierField u = random_field(12, std::uint64_t(i), params);
    FourierField f1 = f_field(nl, u);
    FourierField f2 = f_field(nl, u, 2 * dealias_pad_factor(nl));
    f2 -= f1;
    CHECK(f2.max_abs() < 1e-12 * f1.max_abs());
  }
}

TEST_CASE("functional_value against an independent quadrature oracle") {
  Nonlinearity nl = cubic(0.5);
  CHECK(functional_value(nl, Decomposition(8), 0.7) == 0.0);

  RandomFieldParams params;
  params.seed = 79;
  for (int i = 0; i < 5; ++i) {
    FourierField u = random_field(8, std::uint64_t(i), params);
    Decomposition d = decompose(u);
    // quadratic part by modewise Parseval of u_t, u_x; F by direct sum
    double quad = 0.0, pen = 0.0;
    u.for_each([&](int j, int k, cplx z) {
      quad += 0.5 * kDomainArea * (double(k) * k - 4.0 * j * j) *
              std::norm(z);
    });
    kernel_field(d).for_each([&](int, int k, cplx z) {
      pen += 0.5 * kDomainArea * (1.0 + double(k) * k) * std::norm(z);
    });
    int n = 64;
    GridField g = oracles::direct_synthesize(u, n, n);
    double intF = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        intF += nl.F(g.x(a), g.at(a, b)) * kDomainArea / (n * n);
    double beta = 0.7;
    CHECK(functional_value(nl, d, beta) ==
          doctest::Approx(quad - beta * pen - intF).epsilon(1e-11));
  }
}

TEST_CASE("functional is strictly decreasing in beta when v is present") {
  Nonlinearity nl = cubic(0.5);
  FourierField u = cos_mode(8, 1, 2);  // pure kernel
  Decomposition d = decompose(u);
  double i1 = functional_value(nl, d, 0.5);
  double i2 = functional_value(nl, d, 1.0);
  CHECK(i2 < i1);
}

TEST_CASE("residual vanishes at u = 0 and rejects bad beta") {
  Nonlinearity nl = cubic(0.5);
  PenalizedResidual r = residual(nl, Decomposition(8), 1.0);
  CHECK(r.l2() == 0.0);
  CHECK_THROWS_AS(residual(nl, Decomposition(8), 0.0), domain_error);
}

TEST_CASE("residual parts live on disjoint mode sets") {
  Nonlinearity nl = cubic(0.5);
  RandomFieldParams params;
  params.seed = 83;
  FourierField u = random_field(12, 0, params);
  PenalizedResidual r = residual(nl, decompose(u), 0.3);
  r.range_part.for_each([&](int j, int k, cplx z) {
    if (is_kernel_mode(j, k)) CHECK(z == cplx{0.0, 0.0});
  });
  r.kernel_part.for_each([&](int j, int k, cplx z) {
    if (!is_kernel_mode(j, k)) CHECK(z == cplx{0.0, 0.0});
  });
}

TEST_CASE("linear kernel equation has only the zero fixed point") {
  // a == 0 keeps only the alpha term: beta(1+k^2)v^ = -alpha v^ forces v = 0
  Nonlinearity::Params p;
  p.s = 3.0;
  p.alpha = 0.5;
  p.a_coeffs = {0.0};
  Nonlinearity nl{p};
  CHECK(nl.linear_only());
  FourierField v = cos_mode(8, 1, 2);
  PenalizedResidual r = residual(nl, decompose(v), 0.25);
  // one kernel mode: (beta(1+k^2) + alpha) v^
  CHECK(std::abs(r.kernel_part.at(1, 2) -
                 (0.25 * 5.0 + 0.5) * v.at(1, 2)) < 1e-13);
}

TEST_CASE("gradient consistency by finite differences") {
  Nonlinearity nl = cubic(0.5);
  RandomFieldParams params;
  params.seed = 89;
  FourierField u = random_field(8, 0, params);
  FourierField phi = random_field(8, 1, params);
  Decomposition d = decompose(u);
  double beta = 0.4;
  PenalizedResidual r = residual(nl, d, beta);
  double deriv = -residual_pairing(r, phi);
  double h = 1e-5;
  FourierField up = u, um = u;
  FourierField hp = phi, hm = phi;
  hp *= h;
  hm *= -h;
  up += hp;
  um += hm;
  double fd = (functional_value(nl, decompose(up), beta) -
               functional_value(nl, decompose(um), beta)) /
              (2.0 * h);
  CHECK(fd == doctest::Approx(deriv).epsilon(1e-6));
}

TEST_CASE("energy identity closed form and random fields") {
  Nonlinearity nl0 = cubic(0.0);
  EnergyIdentity z = energy_identity(nl0, Decomposition(8), 0.5);
  CHECK(z.lhs == 0.0);
  CHECK(z.rhs == 0.0);
  CHECK(z.gap == 0.0);

  // u = cos(2x), f = u^3: rhs = (1/4) int u^4 = 3 pi^2 / 16
  EnergyIdentity c = energy_identity(nl0, decompose(cos_mode(8, 1, 0)), 0.5);
  CHECK(c.rhs == doctest::Approx(3.0 * kPi * kPi / 16.0).epsilon(1e-12));
  CHECK(c.gap < 1e-12 * (1.0 + std::abs(c.lhs)));

  Nonlinearity nl = cubic(0.5);
  RandomFieldParams params;
  params.seed = 97;
  for (int i = 0; i < 100; ++i) {
    FourierField u = random_field(10, std::uint64_t(i), params);
    EnergyIdentity e = energy_identity(nl, decompose(u), 0.7);
    CHECK(e.gap < 1e-10 * (1.0 + std::abs(e.lhs)));
  }
}

TEST_CASE("residual is time-translation equivariant") {
  Nonlinearity nl = cubic(0.5);
  RandomFieldParams params;
  params.seed = 101;
  FourierField u = random_field(10, 0, params);
  double theta = 1.234;
  PenalizedResidual r = residual(nl, decompose(u), 0.6);
  PenalizedResidual rs = residual(nl, decompose(translate(u, 0.0, theta)), 0.6);
  FourierField lhs = translate(r.range_part, 0.0, theta);
  lhs -= rs.range_part;
  CHECK(lhs.max_abs() < 1e-12 * (r.range_part.max_abs() + 1e-300));
  FourierField lk = translate(r.kernel_part, 0.0, theta);
  lk -= rs.kernel_part;
  CHECK(lk.max_abs() < 1e-12 * (r.kernel_part.max_abs() + 1e-300));
}

TEST_CASE("f_field commutes with shifts for constant coefficients") {
  Nonlinearity nl = cubic(0.5);
  RandomFieldParams params;
  params.seed = 103;
  FourierField u = random_field(10, 0, params);
  FourierField a = f_field(nl, translate(u, 0.9, 0.3));
  FourierField b = translate(f_field(nl, u), 0.9, 0.3);
  a -= b;
  CHECK(a.max_abs() < 1e-12 * b.max_abs());
}

TEST_CASE("coercivity envelope holds on sampled amplitudes") {
  Nonlinearity nl = cubic(0.5);
  CHECK(nl.c0_min() == doctest::Approx(1.0));
  CHECK(nl.c0_max() == doctest::Approx(1.0));
  for (int i = -100; i <= 100; ++i) {
    double u = 0.1 * i;
    double x = 0.03 * std::abs(i);
    double power = std::pow(std::abs(u), nl.s() - 1.0) * u;
    CHECK(nl.f(x, u) >= nl.c0_min() * power + nl.lower_offset() - 1e-12);
    CHECK(nl.f(x, u) <= nl.c0_max() * power + nl.upper_offset() + 1e-12);
    CHECK(nl.f_u(x, u) >= nl.alpha() - 1e-12);
    // the energy constants bound u f/2 - F from below
    CHECK(0.5 * u * nl.f(x, u) - nl.F(x, u) >=
          nl.energy_a1() * std::pow(std::abs(u), nl.s() + 1.0) -
              nl.energy_a2() - 1e-12);
  }
}

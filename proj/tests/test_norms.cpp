#include <doctest.h>

#include <cmath>

#include "boxtorus/norms.hpp"
#include "boxtorus/random_field.hpp"
#include "boxtorus/transforms.hpp"

using namespace boxtorus;

namespace {

FourierField cos_mode(int m, int j, int k, double amp = 1.0) {
  FourierField u(m);
  u.set(j, k, {0.5 * amp, 0.0});
  u.set(-j, -k, {0.5 * amp, 0.0});
  return u;
}

}  // namespace

TEST_CASE("e_norm on single modes") {
  // cos(2x+3t): |k^2-4j^2| = 5, two modes of amplitude 1/2
  FourierField u = cos_mode(8, 1, 3);
  double expected2 = 2.0 * (kDomainArea / 4.0) * 5.0 * 0.25;
  CHECK(e_norm(u) == doctest::Approx(std::sqrt(expected2)).epsilon(1e-13));

  FourierField c(4);
  c.set(0, 0, {3.0, 0.0});
  CHECK(e_norm(c) == doctest::Approx(3.0).epsilon(1e-15));

  // cos(2(x+t)): kernel term 4 j^2 |u^|^2 summed over the pair
  FourierField v = cos_mode(8, 1, 2);
  CHECK(e_norm(v) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("es_norm weights, kernel exclusion, monotonicity") {
  FourierField u = cos_mode(8, 1, 3);
  CHECK(es_norm(u, 0.5) ==
        doctest::Approx(std::sqrt(2.0 * std::sqrt(5.0) * 0.25))
            .epsilon(1e-13));
  // s = 1 relates to e_norm off the kernel by the |Q|/4 factor
  CHECK(e_norm(u) == doctest::Approx(std::sqrt(kDomainArea / 4.0) *
                                     es_norm(u, 1.0))
                         .epsilon(1e-13));
  CHECK_THROWS_AS(es_norm(cos_mode(8, 1, 2), 0.5), domain_error);

  RandomFieldParams params;
  params.seed = 21;
  params.kernel_free = true;
  for (int i = 0; i < 20; ++i) {
    FourierField f = random_field(12, std::uint64_t(i), params);
    CHECK(es_norm(f, 0.3) <= es_norm(f, 0.8) + 1e-12);
  }
}

TEST_CASE("hs_norm regularized weight") {
  RandomFieldParams params;
  params.seed = 23;
  FourierField u = random_field(12, 0, params);
  CHECK(hs_norm(u, 0.0) == doctest::Approx(l2_coeff_norm(u)).epsilon(1e-14));
  FourierField one(4);
  one.set(1, 2, {0.5, 0.0});
  one.set(-1, -2, {0.5, 0.0});
  CHECK(hs_norm(one, 0.7) ==
        doctest::Approx(std::sqrt(2.0 * 0.25 * std::pow(5.0, 1.4)))
            .epsilon(1e-13));
  CHECK(hs_norm(u, 0.0) <= hs_norm(u, 0.6) + 1e-12);
}

TEST_CASE("lp_norm quadrature on closed forms") {
  GridField one(16, 16);
  for (double& v : one.v) v = 1.0;
  CHECK(lp_norm(one, 2.0) ==
        doctest::Approx(std::sqrt(kDomainArea)).epsilon(1e-13));

  FourierField c2x = cos_mode(4, 1, 0);
  CHECK(lp_norm(c2x, 2.0) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(lp_norm(c2x, 4.0) ==
        doctest::Approx(std::pow(3.0 * kPi * kPi / 4.0, 0.25))
            .epsilon(1e-12));
  CHECK(lp_norm(c2x, kInf) == doctest::Approx(1.0).epsilon(1e-12));
  GridField g(4, 4);
  CHECK_THROWS_AS(lp_norm(g, 0.5), domain_error);
}

TEST_CASE("lq_coeff_norm basics") {
  FourierField u(4);
  u.set(1, 1, {0.0, 0.7});
  u.set(-1, -1, {0.0, -0.7});
  CHECK(lq_coeff_norm(u, 1.0) == doctest::Approx(1.4).epsilon(1e-14));
  CHECK(lq_coeff_norm(u, kInf) == doctest::Approx(0.7).epsilon(1e-14));

  RandomFieldParams params;
  params.seed = 29;
  for (int i = 0; i < 20; ++i) {
    FourierField f = random_field(10, std::uint64_t(i), params);
    CHECK(lq_coeff_norm(f, 2.0) ==
          doctest::Approx(hs_norm(f, 0.0)).epsilon(1e-13));
    CHECK(lq_coeff_norm(f, 1.0) >= lq_coeff_norm(f, 2.0) - 1e-13);
  }
  CHECK_THROWS_AS(lq_coeff_norm(u, 0.9), domain_error);
}

TEST_CASE("dyadic blocks partition the coefficient mass") {
  CHECK(dyadic_level(0, 0) == 0);
  CHECK(dyadic_level(0, 2) == 0);
  CHECK(dyadic_level(1, 1) == 1);
  CHECK(dyadic_level(0, 4) == 1);
  CHECK(dyadic_level(0, 5) == 2);

  RandomFieldParams params;
  params.seed = 31;
  for (int i = 0; i < 10; ++i) {
    FourierField u = random_field(16, std::uint64_t(i), params);
    double total = 0.0;
    for (int lvl = 0; lvl <= max_dyadic_level(16); ++lvl) {
      double b = l2_coeff_norm(dyadic_block(u, lvl));
      total += b * b;
    }
    double whole = l2_coeff_norm(u);
    CHECK(total == doctest::Approx(whole * whole).epsilon(1e-13));
  }
}

TEST_CASE("holder_estimate on one block and the zero field") {
  double gamma = 0.4;
  FourierField u = cos_mode(4, 1, 1);  // level 1: 2|j|+|k| = 3
  double sup = grid_sup(u, 8);
  CHECK(holder_estimate(u, gamma) ==
        doctest::Approx(std::pow(2.0, gamma) * sup + sup).epsilon(1e-10));
  CHECK(holder_estimate(FourierField(8), gamma) == 0.0);
}

TEST_CASE("holder_estimate is subadditive and homogeneous") {
  RandomFieldParams params;
  params.seed = 37;
  for (int i = 0; i < 10; ++i) {
    FourierField a = random_field(12, 2 * std::uint64_t(i), params);
    FourierField b = random_field(12, 2 * std::uint64_t(i) + 1, params);
    double ha = holder_estimate(a, 0.4), hb = holder_estimate(b, 0.4);
    CHECK(holder_estimate(a + b, 0.4) <= ha + hb + 1e-10);
    FourierField sa = a;
    sa *= 3.7;
    CHECK(holder_estimate(sa, 0.4) == doctest::Approx(3.7 * ha).epsilon(1e-12));
  }
}

TEST_CASE("hausdorff-young nesting at the endpoints and p=4/3") {
  RandomFieldParams params;
  params.seed = 41;
  double ps[3] = {1.0, 4.0 / 3.0, 2.0};
  for (int i = 0; i < 100; ++i) {
    FourierField u = random_field(12, std::uint64_t(i), params);
    for (double p : ps) {
      double q = p == 1.0 ? kInf : p / (p - 1.0);
      double lhs = lq_coeff_norm(u, q);
      double rhs = std::pow(kDomainArea, -1.0 / p) * lp_norm(u, p);
      CHECK(lhs <= rhs + 1e-10);
    }
  }
}

TEST_CASE("beta_norm combines the pieces") {
  FourierField v = cos_mode(8, 1, -2);  // cos(2(x-t))
  Decomposition d = decompose(v);
  CHECK(beta_norm(d, 1.0) ==
        doctest::Approx(std::sqrt(5.0 * kPi * kPi)).epsilon(1e-12));
  // affine in beta
  double b1 = beta_norm(d, 1.0), b2 = beta_norm(d, 2.0),
         b3 = beta_norm(d, 3.0);
  CHECK(b3 * b3 - b2 * b2 == doctest::Approx(b2 * b2 - b1 * b1).epsilon(1e-10));
  CHECK_THROWS_AS(beta_norm(d, 0.0), domain_error);

  RandomFieldParams params;
  params.seed = 43;
  for (int i = 0; i < 10; ++i) {
    FourierField u = random_field(12, std::uint64_t(i), params);
    Decomposition du = decompose(u);
    FourierField vk = kernel_field(du);
    double h1 = 0.0;
    vk.for_each([&](int, int k, cplx z) {
      h1 += (1.0 + double(k) * k) * std::norm(z);
    });
    double expect2 = e_norm(du.w_plus) * e_norm(du.w_plus) +
                     e_norm(du.w_minus) * e_norm(du.w_minus) +
                     0.7 * kDomainArea * h1;
    CHECK(beta_norm(du, 0.7) ==
          doctest::Approx(std::sqrt(expect2)).epsilon(1e-12));
  }
}

TEST_CASE("norm_report fills every slot and vanishes at zero") {
  NormReport z = norm_report(Decomposition(8), 0.5, 4.0, 2.0, 0.4, 1.0);
  CHECK(z.e == 0.0);
  CHECK(z.lp == 0.0);
  CHECK(z.holder == 0.0);
  CHECK(z.beta_val == 0.0);

  RandomFieldParams params;
  params.seed = 47;
  params.kernel_free = true;
  Decomposition d = decompose(random_field(12, 0, params));
  NormReport r = norm_report(d, 0.5, 4.0, 2.0, 0.4, 1.0);
  CHECK(r.e > 0.0);
  CHECK(r.es > 0.0);
  CHECK(r.hs > 0.0);
  CHECK(r.lp > 0.0);
  CHECK(r.lq > 0.0);
  CHECK(r.holder > 0.0);
  CHECK(r.beta_val > 0.0);
}

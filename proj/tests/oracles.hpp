#ifndef BOXTORUS_TEST_ORACLES_HPP
#define BOXTORUS_TEST_ORACLES_HPP

// Independent reference implementations used only by the tests: direct
// double-loop Fourier sums (no FFT) and a dense finite-difference Newton
// solve of the penalized system (no Krylov, no pseudospectral shortcuts).

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "boxtorus/field.hpp"
#include "boxtorus/model.hpp"

namespace oracles {

using boxtorus::cplx;
using boxtorus::FourierField;
using boxtorus::GridField;
using boxtorus::kPi;

// Direct evaluation of the Fourier sum on the grid.
inline GridField direct_synthesize(const FourierField& u, int nx, int nt) {
  GridField g(nx, nt);
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < nt; ++b) {
      cplx sum = 0.0;
      u.for_each([&](int j, int k, cplx z) {
        sum += z * std::polar(1.0, 2.0 * j * g.x(a) + k * g.t(b));
      });
      g.at(a, b) = sum.real();
    }
  return g;
}

// Direct mean-convention Fourier coefficients from grid samples.
inline FourierField direct_analyze(const GridField& g, int m) {
  FourierField u(m);
  u.transform([&](int j, int k, cplx) {
    cplx sum = 0.0;
    for (int a = 0; a < g.nx; ++a)
      for (int b = 0; b < g.nt; ++b)
        sum += g.at(a, b) * std::polar(1.0, -2.0 * j * g.x(a) - k * g.t(b));
    return sum / double(g.nx * g.nt);
  });
  return u;
}

// Dense Newton on the penalized system at small m: unknowns are the real
// and imaginary parts of the canonical half-lattice, the nonlinear term is
// composed on the grid by direct trigonometric sums, and the Jacobian is
// assembled column by column from central finite differences.
class DensePenalizedSystem {
 public:
  DensePenalizedSystem(const boxtorus::Nonlinearity& nl, int m, double beta)
      : nl_(nl), m_(m), beta_(beta) {
    FourierField probe(m);
    probe.for_each([&](int j, int k, cplx) {
      if (j > 0 || (j == 0 && k >= 0)) modes_.push_back({j, k});
    });
    // grid large enough to de-alias |u|^{s-1}u for the test exponents
    n_ = 1;
    while (n_ < (int(nl_.s()) + 2) * (2 * m + 1)) n_ *= 2;
  }

  int dim() const {
    return 2 * int(modes_.size()) - 1;  // (0,0) has no imaginary part
  }

  std::vector<double> pack(const FourierField& u) const {
    std::vector<double> x;
    for (auto [j, k] : modes_) {
      x.push_back(u.at(j, k).real());
      if (!(j == 0 && k == 0)) x.push_back(u.at(j, k).imag());
    }
    return x;
  }

  FourierField unpack(const std::vector<double>& x) const {
    FourierField u(m_);
    std::size_t i = 0;
    for (auto [j, k] : modes_) {
      double re = x[i++];
      double im = (j == 0 && k == 0) ? 0.0 : x[i++];
      u.set(j, k, {re, im});
      if (!(j == 0 && k == 0)) u.set(-j, -k, {re, -im});
    }
    return u;
  }

  std::vector<double> residual(const std::vector<double>& x) const {
    FourierField u = unpack(x);
    // f(x, u) on the grid by direct summation
    std::vector<double> fg(std::size_t(n_) * n_);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        double xx = kPi * a / n_, tt = 2.0 * kPi * b / n_;
        cplx sum = 0.0;
        u.for_each([&](int j, int k, cplx z) {
          sum += z * std::polar(1.0, 2.0 * j * xx + k * tt);
        });
        fg[std::size_t(a) * n_ + b] = nl_.f(xx, sum.real());
      }
    std::vector<double> r;
    for (auto [j, k] : modes_) {
      cplx fh = 0.0;
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
          double xx = kPi * a / n_, tt = 2.0 * kPi * b / n_;
          fh += fg[std::size_t(a) * n_ + b] *
                std::polar(1.0, -2.0 * j * xx - k * tt);
        }
      fh /= double(n_) * n_;
      cplx val = boxtorus::is_kernel_mode(j, k)
                     ? beta_ * (1.0 + double(k) * k) * u.at(j, k) + fh
                     : -boxtorus::box_symbol(j, k) * u.at(j, k) - fh;
      r.push_back(val.real());
      if (!(j == 0 && k == 0)) r.push_back(val.imag());
    }
    return r;
  }

  // Plain dense Newton; returns the iterate when the residual drops below
  // tol or after max_iter steps.
  FourierField solve(const FourierField& start, double tol,
                     int max_iter = 30) const {
    std::vector<double> x = pack(start);
    const int nn = dim();
    for (int it = 0; it < max_iter; ++it) {
      std::vector<double> r = residual(x);
      double rn = 0.0;
      for (double v : r) rn += v * v;
      if (std::sqrt(rn) < tol) break;
      Eigen::MatrixXd jac(nn, nn);
      Eigen::VectorXd rhs(nn);
      for (int i = 0; i < nn; ++i) rhs(i) = -r[std::size_t(i)];
      const double h = 1e-7;
      for (int c = 0; c < nn; ++c) {
        std::vector<double> xp = x, xm = x;
        xp[std::size_t(c)] += h;
        xm[std::size_t(c)] -= h;
        std::vector<double> rp = residual(xp), rm = residual(xm);
        for (int i = 0; i < nn; ++i)
          jac(i, c) = (rp[std::size_t(i)] - rm[std::size_t(i)]) / (2.0 * h);
      }
      Eigen::VectorXd dx = jac.fullPivLu().solve(rhs);
      for (int i = 0; i < nn; ++i) x[std::size_t(i)] += dx(i);
    }
    return unpack(x);
  }

 private:
  const boxtorus::Nonlinearity& nl_;
  int m_;
  double beta_;
  int n_;
  std::vector<std::pair<int, int>> modes_;
};

}  // namespace oracles

#endif

#include "boxtorus/transforms.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

namespace boxtorus {

namespace {

// FFTW planning is not thread-safe; execution on distinct buffers is.
std::mutex& planner_mutex() {
  static std::mutex mu;
  return mu;
}

struct FftBuffer {
  fftw_complex* data = nullptr;
  fftw_plan plan = nullptr;
  FftBuffer(int nx, int nt, int sign) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    data = fftw_alloc_complex(std::size_t(nx) * nt);
    plan = fftw_plan_dft_2d(nx, nt, data, data, sign, FFTW_ESTIMATE);
  }
  ~FftBuffer() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
    fftw_free(data);
  }
  FftBuffer(const FftBuffer&) = delete;
  FftBuffer& operator=(const FftBuffer&) = delete;
};

void check_pow2(int n, const char* name) {
  if (n < 1 || (n & (n - 1)) != 0)
    throw domain_error(std::string(name) + " must be a power of two");
}

// Largest occupied 2|j|+|k|; lets sup evaluations of sparse fields (dyadic
// blocks) run on grids sized to their actual band limit.
int effective_radius(const FourierField& u) {
  int r = 0;
  u.for_each([&](int j, int k, cplx z) {
    if (z != cplx{0.0, 0.0}) r = std::max(r, 2 * std::abs(j) + std::abs(k));
  });
  return r;
}

FourierField compact(const FourierField& u, int r) {
  FourierField out(r);
  u.for_each([&](int j, int k, cplx z) {
    if (z != cplx{0.0, 0.0}) out.set(j, k, z);
  });
  return out;
}

}  // namespace

// Temporal wavenumbers reach k = m, so the time grid needs 2m+1 points to
// keep the +-k bins distinct; the same size is used in x for simplicity.
int grid_size(int m, int factor) { return next_pow2(factor * (2 * m + 1)); }

GridField synthesize(const FourierField& u, int nx, int nt) {
  check_pow2(nx, "nx");
  check_pow2(nt, "nt");
  const int m = u.radius();
  if (nx < m + 1 || nt < 2 * m + 1)
    throw domain_error("grid too small for truncation radius " +
                       std::to_string(m));
  if (!u.is_conjugate_symmetric(1e-10))
    throw domain_error("synthesize: input is not conjugate-symmetric");

  FftBuffer buf(nx, nt, FFTW_BACKWARD);
  for (std::size_t i = 0; i < std::size_t(nx) * nt; ++i)
    buf.data[i][0] = buf.data[i][1] = 0.0;
  // e^{i2jx_a} = e^{2pi i j a / nx}: mode j sits at DFT index j mod nx.
  u.for_each([&](int j, int k, cplx z) {
    if (z == cplx{0.0, 0.0}) return;
    int a = ((j % nx) + nx) % nx;
    int b = ((k % nt) + nt) % nt;
    buf.data[std::size_t(a) * nt + b][0] += z.real();
    buf.data[std::size_t(a) * nt + b][1] += z.imag();
  });
  fftw_execute(buf.plan);

  GridField g(nx, nt);
  double worst_imag = 0.0, scale = std::max(u.max_abs(), 1e-300);
  for (std::size_t i = 0; i < g.v.size(); ++i) {
    g.v[i] = buf.data[i][0];
    worst_imag = std::max(worst_imag, std::abs(buf.data[i][1]));
  }
  if (worst_imag > 1e-9 * scale * (m + 1))
    throw domain_error("synthesize: output has non-negligible imaginary part");
  return g;
}

FourierField analyze(const GridField& g, int m) {
  check_pow2(g.nx, "nx");
  check_pow2(g.nt, "nt");
  if (g.nx < m + 1 || g.nt < 2 * m + 1)
    throw domain_error("analyze: grid too small for truncation radius " +
                       std::to_string(m));

  FftBuffer buf(g.nx, g.nt, FFTW_FORWARD);
  for (std::size_t i = 0; i < g.v.size(); ++i) {
    buf.data[i][0] = g.v[i];
    buf.data[i][1] = 0.0;
  }
  fftw_execute(buf.plan);

  const double inv = 1.0 / (double(g.nx) * g.nt);
  FourierField u(m);
  u.transform([&](int j, int k, cplx) {
    int a = ((j % g.nx) + g.nx) % g.nx;
    int b = ((k % g.nt) + g.nt) % g.nt;
    auto& z = buf.data[std::size_t(a) * g.nt + b];
    return cplx{z[0] * inv, z[1] * inv};
  });
  u.enforce_conjugate_symmetry();
  return u;
}

double grid_sup(const FourierField& u, int refine) {
  int r = effective_radius(u);
  if (r == 0) return std::abs(u.at(0, 0));
  const int n = grid_size(r, refine);
  return synthesize(compact(u, r), n, n).max_abs();
}

double complex_grid_sup(const FourierField& uin, int refine) {
  int r = effective_radius(uin);
  if (r == 0) return std::abs(uin.at(0, 0));
  FourierField u = compact(uin, r);
  const int n = grid_size(r, refine);
  FftBuffer buf(n, n, FFTW_BACKWARD);
  for (std::size_t i = 0; i < std::size_t(n) * n; ++i)
    buf.data[i][0] = buf.data[i][1] = 0.0;
  u.for_each([&](int j, int k, cplx z) {
    if (z == cplx{0.0, 0.0}) return;
    int a = ((j % n) + n) % n;
    int b = ((k % n) + n) % n;
    buf.data[std::size_t(a) * n + b][0] += z.real();
    buf.data[std::size_t(a) * n + b][1] += z.imag();
  });
  fftw_execute(buf.plan);
  double sup = 0.0;
  for (std::size_t i = 0; i < std::size_t(n) * n; ++i)
    sup = std::max(sup, std::hypot(buf.data[i][0], buf.data[i][1]));
  return sup;
}

}  // namespace boxtorus

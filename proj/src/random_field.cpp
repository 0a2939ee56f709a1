#include "boxtorus/random_field.hpp"

#include <cmath>

namespace boxtorus {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ splitmix64(b));
}

double to_unit(std::uint64_t h) {
  return double(h >> 11) * 0x1.0p-53;
}

// One complex standard normal from two uniforms (Box-Muller).
cplx gaussian(std::uint64_t h) {
  double u1 = to_unit(splitmix64(h));
  double u2 = to_unit(splitmix64(h ^ 0xa5a5a5a5a5a5a5a5ULL));
  double r = std::sqrt(-2.0 * std::log(u1 + 0x1.0p-60));
  return {r * std::cos(2.0 * kPi * u2) / std::sqrt(2.0),
          r * std::sin(2.0 * kPi * u2) / std::sqrt(2.0)};
}

}  // namespace

double hash_uniform(std::uint64_t seed, std::uint64_t counter) {
  return to_unit(mix(seed, counter));
}

FourierField random_field(int m, std::uint64_t sample,
                          const RandomFieldParams& params) {
  FourierField u(m);
  std::uint64_t base = mix(params.seed, sample);
  u.transform([&](int j, int k, cplx) -> cplx {
    if (params.kernel_free && is_kernel_mode(j, k)) return {0.0, 0.0};
    // Draw each conjugate pair once, keyed by its canonical representative.
    int cj = j, ck = k;
    bool flip = (j < 0) || (j == 0 && k < 0);
    if (flip) {
      cj = -j;
      ck = -k;
    }
    std::uint64_t key =
        (std::uint64_t(std::uint32_t(cj)) << 32) | std::uint32_t(ck);
    cplx z = gaussian(mix(base, key));
    if (cj == 0 && ck == 0) z = {z.real(), 0.0};
    if (flip) z = std::conj(z);
    double sigma = std::pow(1.0 + 2.0 * std::abs(j) + std::abs(k),
                            -params.decay);
    return sigma * z;
  });
  return u;
}

}  // namespace boxtorus

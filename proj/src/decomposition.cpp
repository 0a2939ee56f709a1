#include "boxtorus/decomposition.hpp"

#include <cmath>

namespace boxtorus {

Decomposition decompose(const FourierField& u) {
  Decomposition d(u.radius());
  u.for_each([&](int j, int k, cplx z) {
    if (z == cplx{0.0, 0.0}) return;
    switch (classify_mode(j, k)) {
      case ModeClass::Eplus:
        d.w_plus.set(j, k, z);
        break;
      case ModeClass::Eminus:
        d.w_minus.set(j, k, z);
        break;
      case ModeClass::Kernel:
        // Profiles are indexed by j >= 0; negative-j amplitudes are the
        // conjugates and are reconstructed on assembly.
        if (j > 0) {
          if (k == 2 * j) d.p1[j] = z;
          else d.p2[j] = z;
        } else if (j == 0) {
          d.p2[0] = cplx{z.real(), 0.0};
        }
        break;
    }
  });
  return d;
}

FourierField kernel_field(const Decomposition& d) {
  FourierField v(d.radius());
  v.set(0, 0, d.p2[0]);
  for (int j = 1; j < int(d.p1.size()); ++j) {
    if (d.p1[j] != cplx{0.0, 0.0}) {
      v.set(j, 2 * j, d.p1[j]);
      v.set(-j, -2 * j, std::conj(d.p1[j]));
    }
    if (d.p2[j] != cplx{0.0, 0.0}) {
      v.set(j, -2 * j, d.p2[j]);
      v.set(-j, 2 * j, std::conj(d.p2[j]));
    }
  }
  return v;
}

FourierField assemble(const Decomposition& d) {
  FourierField u = kernel_field(d);
  u += d.w_plus;
  u += d.w_minus;
  return u;
}

std::pair<std::vector<cplx>, std::vector<cplx>> kernel_profiles(
    const FourierField& u) {
  const double scale = std::max(u.max_abs(), 1e-300);
  u.for_each([&](int j, int k, cplx z) {
    if (!is_kernel_mode(j, k) && std::abs(z) > 1e-14 * scale)
      throw domain_error("kernel_profiles: non-kernel mode present");
  });
  Decomposition d = decompose(u);
  return {d.p1, d.p2};
}

}  // namespace boxtorus

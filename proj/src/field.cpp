#include "boxtorus/field.hpp"

#include <algorithm>
#include <cmath>

namespace boxtorus {

FourierField::FourierField(int m) : m_(m), jmax_(m / 2), kmax_(m) {
  if (m < 0) throw domain_error("truncation radius must be nonnegative");
  c_.assign(std::size_t(2 * jmax_ + 1) * (2 * kmax_ + 1), cplx{0.0, 0.0});
}

void FourierField::set(int j, int k, cplx v) {
  if (!in_ball(j, k))
    throw domain_error("mode (" + std::to_string(j) + "," + std::to_string(k) +
                       ") outside truncation radius " + std::to_string(m_));
  c_[idx(j, k)] = v;
}

void FourierField::add(int j, int k, cplx v) { set(j, k, at(j, k) + v); }

double FourierField::max_abs() const {
  double r = 0.0;
  for (const auto& z : c_) r = std::max(r, std::abs(z));
  return r;
}

bool FourierField::is_conjugate_symmetric(double tol) const {
  const double scale = std::max(max_abs(), 1e-300);
  bool ok = true;
  for_each([&](int j, int k, cplx z) {
    if (std::abs(z - std::conj(at(-j, -k))) > tol * scale) ok = false;
  });
  return ok;
}

void FourierField::enforce_conjugate_symmetry() {
  for (int j = 0; j <= jmax_; ++j) {
    int kr = m_ - 2 * j;
    for (int k = -kr; k <= kr; ++k) {
      if (j == 0 && k < 0) continue;
      cplx z = 0.5 * (at(j, k) + std::conj(at(-j, -k)));
      if (j == 0 && k == 0) z = cplx{z.real(), 0.0};
      c_[idx(j, k)] = z;
      c_[idx(-j, -k)] = std::conj(z);
    }
  }
}

FourierField& FourierField::operator+=(const FourierField& o) {
  if (o.m_ > m_) throw domain_error("field sum would exceed truncation radius");
  o.for_each([&](int j, int k, cplx z) {
    if (z != cplx{0.0, 0.0}) c_[idx(j, k)] += z;
  });
  return *this;
}

FourierField& FourierField::operator-=(const FourierField& o) {
  if (o.m_ > m_) throw domain_error("field sum would exceed truncation radius");
  o.for_each([&](int j, int k, cplx z) {
    if (z != cplx{0.0, 0.0}) c_[idx(j, k)] -= z;
  });
  return *this;
}

FourierField& FourierField::operator*=(double a) {
  for (auto& z : c_) z *= a;
  return *this;
}

double GridField::max_abs() const {
  double r = 0.0;
  for (double x : v) r = std::max(r, std::abs(x));
  return r;
}

FourierField project(const FourierField& u, Part part) {
  FourierField out(u.radius());
  u.for_each([&](int j, int k, cplx z) {
    if (z == cplx{0.0, 0.0}) return;
    bool keep = false;
    switch (part) {
      case Part::Mean:
        keep = (j == 0 && k == 0);
        break;
      case Part::Kernel:
        keep = is_kernel_mode(j, k) && !(j == 0 && k == 0);
        break;
      case Part::Eplus:
        keep = classify_mode(j, k) == ModeClass::Eplus;
        break;
      case Part::Eminus:
        keep = classify_mode(j, k) == ModeClass::Eminus;
        break;
    }
    if (keep) out.set(j, k, z);
  });
  return out;
}

FourierField quadrant(const FourierField& u, Quadrant q) {
  FourierField out(u.radius());
  u.for_each([&](int j, int k, cplx z) {
    if (z == cplx{0.0, 0.0}) return;
    bool keep = false;
    switch (q) {
      case Quadrant::PP: keep = j >= 0 && k >= 0; break;
      case Quadrant::PM: keep = j >= 0 && k < 0; break;
      case Quadrant::MP: keep = j < 0 && k >= 0; break;
      case Quadrant::MM: keep = j < 0 && k < 0; break;
    }
    if (keep) out.set(j, k, z);
  });
  return out;
}

FourierField translate(const FourierField& u, double h1, double h2) {
  FourierField out(u.radius());
  u.for_each([&](int j, int k, cplx z) {
    if (z == cplx{0.0, 0.0}) return;
    double phase = 2.0 * j * h1 + k * h2;
    out.set(j, k, z * std::polar(1.0, phase));
  });
  return out;
}

int next_pow2(int n) {
  int p = 1;
  while (p < n) p *= 2;
  return p;
}

}  // namespace boxtorus

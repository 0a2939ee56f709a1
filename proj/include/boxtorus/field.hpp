#ifndef BOXTORUS_FIELD_HPP
#define BOXTORUS_FIELD_HPP

#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <vector>

// Real-valued fields on Q = [0,pi] x [0,2pi] represented by complex Fourier
// amplitudes on the mode lattice (j,k), basis e^{i2jx} e^{ikt}.

namespace boxtorus {

using cplx = std::complex<double>;

// |Q| = pi * 2pi
inline constexpr double kDomainArea = 2.0 * 3.14159265358979323846 *
                                      3.14159265358979323846;
inline constexpr double kPi = 3.14159265358979323846;

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ModeClass { Kernel, Eplus, Eminus };

// Characteristic lattice lines k = +-2j (includes (0,0)).
inline bool is_kernel_mode(int j, int k) { return k == 2 * j || k == -2 * j; }

inline ModeClass classify_mode(int j, int k) {
  if (is_kernel_mode(j, k)) return ModeClass::Kernel;
  return std::abs(k) > 2 * std::abs(j) ? ModeClass::Eplus : ModeClass::Eminus;
}

// Symbol of the d'Alembertian dtt - dxx on e^{i2jx+ikt}; zero exactly on the
// kernel lines.
inline double box_symbol(int j, int k) {
  return 4.0 * double(j) * double(j) - double(k) * double(k);
}

// Finite table of complex amplitudes over the ball 2|j| + |k| <= m.
// Stored dense over j in [-m/2, m/2], k in [-m, m]; modes outside the ball
// are identically zero.
class FourierField {
 public:
  explicit FourierField(int m);

  int radius() const { return m_; }
  int jmax() const { return jmax_; }
  int kmax() const { return kmax_; }

  bool in_ball(int j, int k) const {
    return 2 * std::abs(j) + std::abs(k) <= m_;
  }

  cplx at(int j, int k) const {
    if (std::abs(j) > jmax_ || std::abs(k) > kmax_) return {0.0, 0.0};
    return c_[idx(j, k)];
  }
  void set(int j, int k, cplx v);
  void add(int j, int k, cplx v);

  // Visits modes of the ball in lexicographic (j,k) order.
  template <typename F>
  void for_each(F&& fn) const {
    for (int j = -jmax_; j <= jmax_; ++j) {
      int kr = m_ - 2 * std::abs(j);
      for (int k = -kr; k <= kr; ++k) fn(j, k, c_[idx(j, k)]);
    }
  }
  template <typename F>
  void transform(F&& fn) {
    for (int j = -jmax_; j <= jmax_; ++j) {
      int kr = m_ - 2 * std::abs(j);
      for (int k = -kr; k <= kr; ++k) c_[idx(j, k)] = fn(j, k, c_[idx(j, k)]);
    }
  }

  // Largest |coefficient|.
  double max_abs() const;

  // coeffs(-j,-k) == conj(coeffs(j,k)) within tol * max_abs().
  bool is_conjugate_symmetric(double tol = 1e-12) const;
  // Replaces each conjugate pair by its symmetrization; kills round-off drift.
  void enforce_conjugate_symmetry();

  FourierField& operator+=(const FourierField& o);
  FourierField& operator-=(const FourierField& o);
  FourierField& operator*=(double a);

  friend FourierField operator+(FourierField a, const FourierField& b) {
    a += b;
    return a;
  }
  friend FourierField operator-(FourierField a, const FourierField& b) {
    a -= b;
    return a;
  }
  friend FourierField operator*(double a, FourierField u) {
    u *= a;
    return u;
  }

 private:
  std::size_t idx(int j, int k) const {
    return std::size_t(j + jmax_) * (2 * kmax_ + 1) + std::size_t(k + kmax_);
  }
  int m_, jmax_, kmax_;
  std::vector<cplx> c_;
};

// Real samples on the uniform collocation grid x_a = pi a / nx,
// t_b = 2pi b / nt.
struct GridField {
  int nx = 0, nt = 0;
  std::vector<double> v;

  GridField() = default;
  GridField(int nx_, int nt_) : nx(nx_), nt(nt_), v(std::size_t(nx_) * nt_, 0.0) {}

  double& at(int a, int b) { return v[std::size_t(a) * nt + b]; }
  double at(int a, int b) const { return v[std::size_t(a) * nt + b]; }
  double x(int a) const { return kPi * a / nx; }
  double t(int b) const { return 2.0 * kPi * b / nt; }
  double max_abs() const;
};

enum class Part { Kernel, Eplus, Eminus, Mean };
enum class Quadrant { PP, PM, MP, MM };

// Keeps exactly the modes of the requested class. The four parts partition
// the lattice: Mean is (0,0) alone and Kernel here excludes it.
FourierField project(const FourierField& u, Part part);

// Sign-quadrant restriction (PP: j>=0,k>=0; PM: j>=0,k<0; MP: j<0,k>=0;
// MM: j<0,k<0). The four quadrants partition the lattice.
FourierField quadrant(const FourierField& u, Quadrant q);

// coeffs'(j,k) = coeffs(j,k) e^{i(2j h1 + k h2)}.
FourierField translate(const FourierField& u, double h1, double h2);

int next_pow2(int n);

}  // namespace boxtorus

#endif

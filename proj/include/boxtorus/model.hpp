#ifndef BOXTORUS_MODEL_HPP
#define BOXTORUS_MODEL_HPP

#include <vector>

#include "boxtorus/decomposition.hpp"
#include "boxtorus/field.hpp"

namespace boxtorus {

// Built-in monotone family f(x,u) = a(x)|u|^{s-1}u + alpha*u + b(x) with
// a(x) > 0 band-limited and even, given as cosine coefficients in x
// (a(x) = a0 + sum_n a_n cos(2nx)), and antiderivative
// F(x,u) = a(x)|u|^{s+1}/(s+1) + alpha u^2/2 + b(x) u.
class Nonlinearity {
 public:
  struct Params {
    double s = 3.0;
    double alpha = 0.5;
    std::vector<double> a_coeffs = {1.0};
    std::vector<double> b_coeffs = {};
    // Amplitude range on which the two-sided power envelope offsets are
    // computed; the pure-power envelope cannot hold globally once the
    // linear term is present.
    double envelope_range = 10.0;
  };

  explicit Nonlinearity(Params p);

  double s() const { return p_.s; }
  double alpha() const { return p_.alpha; }
  const Params& params() const { return p_; }
  bool linear_only() const { return c0_max_ == 0.0; }

  double a(double x) const;
  double b(double x) const;

  double f(double x, double u) const;
  double f_u(double x, double u) const;
  double f_uu(double x, double u) const;
  double F(double x, double u) const;

  // Envelope data: c0_min |u|^{s-1}u + lower_offset <= f <= c0_max
  // |u|^{s-1}u + upper_offset on |u| <= envelope_range.
  double c0_min() const { return c0_min_; }
  double c0_max() const { return c0_max_; }
  double lower_offset() const { return lower_offset_; }
  double upper_offset() const { return upper_offset_; }

  // Constants of the coercivity bound
  //   integral(u f/2 - F) >= a1 ||u||_{L^{s+1}}^{s+1} - a2,
  // valid globally for this family.
  double energy_a1() const { return energy_a1_; }
  double energy_a2() const { return energy_a2_; }

 private:
  Params p_;
  double c0_min_ = 0.0, c0_max_ = 0.0;
  double b_sup_ = 0.0;
  double lower_offset_ = 0.0, upper_offset_ = 0.0;
  double energy_a1_ = 0.0, energy_a2_ = 0.0;
};

GridField f_eval(const Nonlinearity& nl, const GridField& u);
GridField f_prime_eval(const Nonlinearity& nl, const GridField& u);
GridField f_second_eval(const Nonlinearity& nl, const GridField& u);
GridField F_eval(const Nonlinearity& nl, const GridField& u);

// Pseudospectral composition: synthesize u on a zero-padded grid, apply f
// pointwise, analyze back to radius u.m. Exactly de-aliased for integer s.
FourierField f_field(const Nonlinearity& nl, const FourierField& u,
                     int pad_override = 0);
// Same padding rule exposed for diagnostics.
int dealias_pad_factor(const Nonlinearity& nl);

// I_beta(u) = (1/2) int_Q (u_t^2 - u_x^2) - (beta/2) int_Q (v^2 + v_t^2)
//           - int_Q F(x,u), evaluated spectrally plus padded quadrature.
double functional_value(const Nonlinearity& nl, const Decomposition& d,
                        double beta);

// Residual of the penalized Euler-Lagrange system. Vanishing of both parts
// characterizes a discrete critical point of I_beta.
struct PenalizedResidual {
  FourierField range_part;   // (-4j^2+k^2) w^ - f^ on off-kernel modes
  FourierField kernel_part;  // beta (1+k^2) v^ + f^ on kernel modes
  double beta = 0.0;

  explicit PenalizedResidual(int m) : range_part(m), kernel_part(m) {}
  double l2() const;
};

PenalizedResidual residual(const Nonlinearity& nl, const Decomposition& d,
                           double beta, int pad_override = 0);

// Duality pairing oriented so that the directional derivative of
// functional_value at d along phi equals -residual_pairing(residual, phi).
double residual_pairing(const PenalizedResidual& r, const FourierField& phi);

struct EnergyIdentity {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};

// I_beta(u) - (1/2) I_beta'(u)[u] = int_Q (u f/2 - F): algebraic identity of
// the quadratic part, round-off at any d, not only at critical points.
EnergyIdentity energy_identity(const Nonlinearity& nl, const Decomposition& d,
                               double beta);

}  // namespace boxtorus

#endif

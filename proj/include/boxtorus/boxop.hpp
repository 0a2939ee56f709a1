#ifndef BOXTORUS_BOXOP_HPP
#define BOXTORUS_BOXOP_HPP

#include "boxtorus/field.hpp"

namespace boxtorus {

// Modewise multiplication by the symbol 4j^2 - k^2; kernel modes map to zero.
FourierField box_apply(const FourierField& u);

// Modewise division by the symbol. Kernel amplitudes below 1e-14 relative are
// zeroed silently; larger ones throw (caller must project first).
FourierField box_invert(const FourierField& f);

struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

// H^1 bootstrap: sum (4j^2+k^2)/lambda^2 |f^|^2  <=  sum |f^|^2, an algebraic
// inequality exact up to round-off for kernel-free f.
BoundCheck h1_bootstrap_check(const FourierField& f);

struct HolderInversionCheck {
  double lhs = 0.0;        // holder_estimate(box_invert(f), gamma)
  double rhs = 0.0;        // measured envelope constant times ||f||_Lp
  double ratio = 0.0;      // lhs / ||f||_Lp
  double ratio_refined = 0.0;  // same ratio at doubled grid resolution
  bool pass = false;
};

// C^gamma control of the inverted operator. Requires gamma < 1 - 1/p. The
// envelope constant is measured, not asserted a priori; pass means the
// lhs/||f||_Lp ratio is stable within 5% under doubling the evaluation grids.
HolderInversionCheck holder_inversion_check(const FourierField& f, double p,
                                            double gamma);

struct QuadrantBound {
  double lhs = 0.0;
  double rhs = 0.0;
};

struct HolderToSobolevCheck {
  QuadrantBound q[4];  // PP, PM, MP, MM
  double total_lhs = 0.0;    // sum of quadrant lhs
  double whole_norm2 = 0.0;  // bare ||u||_{H^gamma'}^2, must equal total_lhs
  bool pass = false;
};

// Dyadic telescoping bound behind "Holder implies H^{gamma'}": per quadrant,
// the bare H^{gamma'} mass is bounded by shifted-difference suprema at
// h(m) = (2pi/3) 2^{-m}. Requires 0 < gamma' < gamma < 1.
HolderToSobolevCheck holder_to_sobolev_check(const FourierField& u,
                                             double gamma, double gamma_prime);

}  // namespace boxtorus

#endif

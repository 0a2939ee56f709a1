#ifndef BOXTORUS_DECOMPOSITION_HPP
#define BOXTORUS_DECOMPOSITION_HPP

#include <utility>
#include <vector>

#include "boxtorus/field.hpp"

namespace boxtorus {

// u = w+ + w- + v with v(x,t) = p1(x+t) + p2(x-t). Profiles stored for
// j >= 0 only (conjugate symmetry), p1[0] == 0, p2[0] carries the mean.
struct Decomposition {
  FourierField w_plus;
  FourierField w_minus;
  std::vector<cplx> p1;
  std::vector<cplx> p2;

  explicit Decomposition(int m)
      : w_plus(m), w_minus(m), p1(std::size_t(m / 4) + 1, cplx{0.0, 0.0}),
        p2(std::size_t(m / 4) + 1, cplx{0.0, 0.0}) {}

  int radius() const { return w_plus.radius(); }
  double mean() const { return p2[0].real(); }
};

Decomposition decompose(const FourierField& u);

// Exact reassembly w+ + w- + v.
FourierField assemble(const Decomposition& d);

// The kernel component v as a field (profiles plus mean).
FourierField kernel_field(const Decomposition& d);

// Profile extraction from a pure-kernel field: p1(j) = coeffs(j,2j) (j != 0),
// p2(j) = coeffs(j,-2j), p2(0) = coeffs(0,0). Throws if a non-kernel mode
// carries a nonzero amplitude.
std::pair<std::vector<cplx>, std::vector<cplx>> kernel_profiles(
    const FourierField& u);

}  // namespace boxtorus

#endif

#ifndef BOXTORUS_TRANSFORMS_HPP
#define BOXTORUS_TRANSFORMS_HPP

#include "boxtorus/field.hpp"

namespace boxtorus {

// Exact inverse of analyze on band-limited fields. Requires nx, nt powers of
// two with nx >= m+1, nt >= m+1; throws on non-conjugate-symmetric input.
GridField synthesize(const FourierField& u, int nx, int nt);

// coeffs(j,k) = (1/(nx*nt)) sum_{a,b} values(a,b) e^{-i(2j x_a + k t_b)}.
// Throws if the grid is too small for the requested truncation radius.
FourierField analyze(const GridField& g, int m);

// Smallest valid power-of-two grid for radius m, refined by `factor` beyond
// the band limit.
int grid_size(int m, int factor = 1);

// C0-type evaluation: grid maximum of |u| on a grid refined `refine`-fold
// beyond the band limit. A lower bound on the true supremum.
double grid_sup(const FourierField& u, int refine = 4);

// Grid maximum of the modulus of the complex-valued synthesis; accepts
// one-sided spectra (quadrant fields) with no conjugate symmetry.
double complex_grid_sup(const FourierField& u, int refine = 4);

}  // namespace boxtorus

#endif

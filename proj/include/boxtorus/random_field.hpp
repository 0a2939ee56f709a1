#ifndef BOXTORUS_RANDOM_FIELD_HPP
#define BOXTORUS_RANDOM_FIELD_HPP

#include <cstdint>

#include "boxtorus/field.hpp"

namespace boxtorus {

// Random test ensemble: independent complex Gaussian amplitudes with
// variance (1 + 2|j| + |k|)^{-2 decay}, conjugate-symmetrized. Amplitudes
// depend only on (seed, sample, j, k), so the draw at radius m is the
// restriction of the draw at any larger radius (nested ensembles let
// truncation sweeps compare like with like).
struct RandomFieldParams {
  std::uint64_t seed = 1;
  double decay = 1.25;
  bool kernel_free = false;
};

FourierField random_field(int m, std::uint64_t sample,
                          const RandomFieldParams& params);

// Uniform double in [0,1) from a counter; same splitmix64 stream as the
// field sampler.
double hash_uniform(std::uint64_t seed, std::uint64_t counter);

}  // namespace boxtorus

#endif

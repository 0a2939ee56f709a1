#ifndef BOXTORUS_NORMS_HPP
#define BOXTORUS_NORMS_HPP

#include <limits>

#include "boxtorus/decomposition.hpp"
#include "boxtorus/field.hpp"

namespace boxtorus {

// ||u||_E^2 = sum_{2j != +-k} (|Q|/4)|k^2-4j^2| |u^|^2
//           + sum_{2j = +-k, (j,k) != 0} 4j^2 |u^|^2 + |u^(0,0)|^2.
double e_norm(const FourierField& u);

// ||u||_{E^s}^2 = sum_{2j != +-k} |u^|^2 |k^2-4j^2|^s. Throws if a kernel
// mode carries a nonzero amplitude (E^s excludes the characteristics).
double es_norm(const FourierField& u, double s);

// Regularized Sobolev weight (1 + 2|j| + |k|)^{2s}; finite at (0,0).
double hs_norm(const FourierField& u, double s);

// Bare weight (2|j| + |k|)^{2s}, as in the dyadic telescoping argument.
double hs_norm_bare(const FourierField& u, double s);

// H^1 with the exact weight 4j^2 + k^2 (the bootstrap lemma's convention).
double h1_operator_norm(const FourierField& u);

// Coefficient l2 norm, and the L2 function norm |Q|^{1/2} * l2.
double l2_coeff_norm(const FourierField& u);
double l2_norm(const FourierField& u);

// (sum |values|^p |Q|/(nx nt))^{1/p}; p = infinity returns the grid maximum.
double lp_norm(const GridField& g, double p);
// Convenience: lp_norm of u synthesized on a grid refined `refine`-fold.
double lp_norm(const FourierField& u, double p, int refine = 4);

// (sum |u^(j,k)|^q)^{1/q}; q = infinity returns max |u^|.
double lq_coeff_norm(const FourierField& u, double q);

// Dyadic level of a mode: 0 for 2|j|+|k| <= 2, else the unique m with
// 2^m < 2|j|+|k| <= 2^{m+1}.
int dyadic_level(int j, int k);
int max_dyadic_level(int radius);
FourierField dyadic_block(const FourierField& u, int level);

// Besov-type C^gamma estimator: max_m 2^{gamma m} sup|Delta_m u| plus the
// C0 grid norm of u itself.
double holder_estimate(const FourierField& u, double gamma, int refine = 4);

// ||u||_{beta,E}^2 = ||w+||_E^2 + ||w-||_E^2 + beta(||v||_L2^2 + ||v_t||_L2^2).
double beta_norm(const Decomposition& d, double beta);

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct NormReport {
  double e = 0.0;
  double es = 0.0, es_s = 0.0;
  double hs = 0.0, hs_s = 0.0;
  double lp = 0.0, lp_p = 0.0;
  double lq = 0.0, lq_q = 0.0;
  double holder = 0.0, holder_gamma = 0.0;
  double beta_val = 0.0, beta = 0.0;
};

NormReport norm_report(const Decomposition& d, double s, double p, double q,
                       double gamma, double beta);

}  // namespace boxtorus

#endif

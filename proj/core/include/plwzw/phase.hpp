#pragma once

#include "plwzw/factorize.hpp"
#include "plwzw/lie.hpp"
#include "plwzw/loop.hpp"

namespace plwzw {

/// (k, a): k in LG, a in the open Weyl chamber.
struct PhasePointKA {
  FourierLoop k;
  CartanElement a;
};

/// (ktilde, atilde): ktilde in B-bar, -atilde in the open Weyl chamber.
struct PhasePointDual {
  FourierLoop ktilde;
  CartanElement atilde;
};

/// Minimum alpha(a) over positive roots required for generated and CLI points.
inline constexpr double chamber_margin = 1e-3;

/// Throws WallError unless alpha(a) >= margin for every positive root.
void require_chamber(const RootSystem& rs, const CartanElement& a, double margin = chamber_margin);

/// Random phase point: k = random_near_identity(n, M, amplitude, seed) and a
/// drawn in the chamber with alpha(a) in [alpha_lo, alpha_hi] for simple roots.
PhasePointKA random_phase_point(const AlgebraRep& rep, int M, double amplitude, std::uint64_t seed,
                                double alpha_lo = 0.3, double alpha_hi = 1.0);

/// Chamber element with prescribed simple-root values alpha_i(a) = values[i].
CartanElement cartan_from_simple_roots(const AlgebraRep& rep, const RVec& values);

/// Iw_eps(k exp(eps t H)), the moment map at finite eps.
FourierLoop moment_map_eps(const AlgebraRep& rep, const FourierLoop& k, const CartanElement& t_coords, double eps,
                           int M_out, double tol);

/// RH(k e^a). Throws NotInDomainError outside the domain.
FourierLoop moment_map_inf(const AlgebraRep& rep, const PhasePointKA& p, int M_out, double tol);

struct DualityForward {
  PhasePointDual q;
  /// Grid distance between e^{-a} k^{-1} RH(k e^a) and bbar.
  double expr_agreement = 0.0;
  /// Positive-mode mass and unitarity defect at infinity of ktilde.
  double ktilde_pos_mass = 0.0;
  double ktilde_g_defect = 0.0;
  BirkhoffFactors factors;
};

struct DualityInverse {
  PhasePointKA p;
  double unitarity_defect = 0.0;
  int iterations = 0;
};

inline constexpr int default_duality_modes = 12;

DualityForward duality_forward(const AlgebraRep& rep, const PhasePointKA& p, int M_out = default_duality_modes,
                               double tol = 1e-9);
DualityInverse duality_inverse(const AlgebraRep& rep, const PhasePointDual& q, int M_out = default_duality_modes,
                               double tol = 1e-9);

/// Left actions h k and htilde ktilde; the actor must be in LG resp. B-bar within tol.
PhasePointKA act_left(const FourierLoop& h, const PhasePointKA& p, double tol = 1e-9);
PhasePointDual act_left_dual(const FourierLoop& h, const PhasePointDual& q, double tol = 1e-9);

/// k(sigma) -> k(sigma - tau), a fixed.
PhasePointKA evolve(const PhasePointKA& p, double tau);

/// Random element of B-bar near the identity: U exp(Y(sigma)) with Y over
/// modes [-M, -1] and U = exp(i A) a constant unitary, both of size amplitude.
FourierLoop random_bbar(int n, int M, double amplitude, std::uint64_t seed, int window = 16);

} // namespace plwzw

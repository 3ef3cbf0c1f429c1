#ifndef QFLAG_DEGREE_HPP_
#define QFLAG_DEGREE_HPP_

// Curve classes of G/P and the lift of a G/P degree to G/B.
//
// A degree of G/P is an integer vector d indexed by the nodes outside J
// (the quantum parameters q_i, i not in J). Its lifts are the coweights
// lambda = sum c_i h_i with c_i = d_i for i not in J and arbitrary integer
// c_j for j in J. Effective degrees have d >= 0, and the preferred lift is
// the unique one with <alpha, lambda> in {-1, 0} for every positive root
// alpha of the Levi. It is found by walking into the alcove
//
//   <alpha_j, lambda> <= 0 (j in J),   <theta_k, lambda> >= -1,
//
// theta_k running over the highest roots of the components of J.

#include <cstdint>
#include <span>
#include <vector>

#include "qflag/lie.hpp"

namespace qflag {

struct CurveClass {
  Vec lambda;  // simple-coroot coordinates
  ParabolicSubset parabolic;

  // <omega_i, lambda> = lambda_i for every node outside the parabolic.
  Vec degree(const RootSystem& rs) const;
};

// Connected components of the Dynkin subdiagram on J, each sorted.
std::vector<ParabolicSubset> components(const RootSystem& rs, const ParabolicSubset& J);

// Index of the root of maximal height supported on a connected subset.
std::size_t highest_root(const RootSystem& rs, const ParabolicSubset& component);

struct AlcoveSpec {
  struct AffineWall {
    std::size_t root;  // highest root of one component
  };

  ParabolicSubset parabolic;
  Vec linear_walls;  // <alpha_j, .> <= 0
  std::vector<AffineWall> affine_walls;  // <theta, .> >= -1

  static AlcoveSpec build(const RootSystem& rs, const ParabolicSubset& J);
  bool contains(const RootSystem& rs, std::span<const int> lambda) const;
};

// Direct check of <alpha, lambda> in {-1, 0} over all of R_J^+.
bool in_lift_window(const RootSystem& rs, const ParabolicSubset& J, std::span<const int> lambda);

// Throws InputError when d does not have one entry per node outside J.
void check_degree_length(const RootSystem& rs, const ParabolicSubset& J, std::span<const int> d);

// Coweight with lambda_i = d_i outside J and 0 on J.
Vec naive_lift(const RootSystem& rs, const ParabolicSubset& J, std::span<const int> d);

// Upper bound on alcove-walk steps; exceeding it is an internal error.
std::uint64_t lift_step_ceiling(const RootSystem& rs, const ParabolicSubset& J,
                                std::span<const int> d);

CurveClass lift_degree(const RootSystem& rs, const ParabolicSubset& J, std::span<const int> d,
                         std::uint64_t* steps_taken = nullptr);

// J' = { j in J : <alpha_j, lambda_B> = 0 }. Rejects lambdas outside the alcove.
ParabolicSubset derived_parabolic(const RootSystem& rs, const ParabolicSubset& J,
                                  std::span<const int> lambda);

// Degree of lambda in H_2(G/P') : the coordinates outside J'.
Vec push_degree(const RootSystem& rs, const ParabolicSubset& J_prime, std::span<const int> lambda);

bool is_effective(std::span<const int> d);

// dim G/P = #(R^+ \ R_J^+)
long long flag_dimension(const RootSystem& rs, const ParabolicSubset& J);

// (c_1(G/P), d) = sum over R^+ \ R_J^+ of <alpha, lambda>; independent of
// the chosen lift, and linear in d.
long long anticanonical_degree(const RootSystem& rs, const ParabolicSubset& J,
                               std::span<const int> d);

// dim Hom_d(P^1, G/P). Throws InputError for non-effective d.
long long hom_dimension(const RootSystem& rs, const ParabolicSubset& J, std::span<const int> d);

// Whether the lift is fixed by W_J, i.e. the derived parabolic is J itself.
bool is_generic_levi_semistable(const RootSystem& rs, const ParabolicSubset& J,
                                std::span<const int> d);

}  // namespace qflag

#endif  // QFLAG_DEGREE_HPP_

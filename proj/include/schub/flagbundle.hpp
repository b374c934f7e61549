#pragma once

#include <vector>

#include "schub/poly.hpp"

namespace schub {

// A flag type 0 < d_1 < ... < d_k = n of subbundle ranks.
struct FlagType {
    int n = 0;
    std::vector<int> d;

    static FlagType make(int n, std::vector<int> d);
    static FlagType complete(int n);
    int steps() const { return static_cast<int>(d.size()); }
};

// dim X + d (n - d), the relative dimension formula for a Grassmann bundle.
long dim_grassmann(long dim_x, int d, int n);

// dim X + sum (d_i - d_{i-1})(n - d_i).
long dim_flag(long dim_x, const FlagType& flag);

// Computes dim_flag by iterating dim_grassmann along the tower of Grassmann
// bundles; agrees with the closed form.
long dim_flag_tower(long dim_x, const FlagType& flag);

// Rank of the kernel bundle H: checks the two-sum identity
//   sum d_i (n - d_i) - sum d_i (n - d_{i+1}) = sum (d_i - d_{i-1})(n - d_i)
// and returns the common value.
long rank_h(const FlagType& flag);

// rank(pi^* G) + d * rank(Q) on a Grassmann bundle; asserts equality with
// dim_grassmann and returns it.
long point_bundle_rank_check(long dim_x, int d, int n);

// Chern-root model of the two-factor flag bundle: the working variables are
// x_1..x_n (first factor) and y_1..y_n (second factor), with Hom(p1*S_i,
// p2*Q_j) carrying roots {x_a - y_b : a <= d_i < b <= n} (the dual-quotient
// orientation, under which the complete-flag top class comes out as
// prod_{i<j}(x_i - y_j)).
struct ChernModel {
    FlagType flag;
    int truncation = 0;
};

// Multiset of Chern roots of a direct sum of Hom bundles; `upper` selects
// Q_i (0) or Q_{i+1} (+1) as the target index offset.
std::vector<Poly> hom_sum_roots(const FlagType& flag, int upper);

// Truncated total Chern class prod (1 + root) as graded components 0..trunc.
std::vector<Poly> total_chern(const std::vector<Poly>& roots, int nvars, int trunc);

// Degree-truncated multiplicative inverse of a series with constant term 1.
std::vector<Poly> series_inverse(const std::vector<Poly>& series);

// Graded components of c(H) = c(sum Hom(S_i, Q_i)) / c(sum Hom(S_i, Q_{i+1}))
// up to the truncation degree; the component in degree rank_h is the top
// Chern class of H.
std::vector<Poly> chern_h(const ChernModel& model);

// x1^(2n-1) * x2^(2n-3) * ... * xn: top Chern class of L_1 + 3 L_2 + ... on
// the type-C flag manifold, written in the coordinate characters (the
// subquotient labels run opposite to the coordinates); total degree n^2.
Poly typec_point_bundle_top_chern(int n);

// All flag types 0 < d_1 < ... < d_k = n (2^{n-1} of them).
std::vector<FlagType> all_flags(int n);

}  // namespace schub

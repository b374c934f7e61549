#pragma once

#include <string>
#include <vector>

#include "schub/schubert.hpp"

namespace schub {

// A representative of the diagonal class of G/B x G/B in Q[x;y], together
// with the global factor printed in its source formula.
struct DiagonalCandidate {
    RootSystem system;
    std::string source;  // typeA_product, fultonC, deconciniC, deconciniD,
                         // grahamG2, prop29G2, deconciniG2, generic
    Poly poly;           // homogeneous of degree N over the two-block ring
    Rat expected_global_factor;
};

struct VerificationReport {
    std::string candidate;
    std::string system;
    Rat diag_eval_constant;  // d_{w0} of the y := x substitution
    bool kronecker_ok = false;
    int global_sign = 0;  // measured from the (id, w0) coefficient
    std::vector<ClassMismatch> mismatches;
};

// prod_{i<j} (x_i - y_j): the top double Schubert polynomial, type A_{n-1}.
DiagonalCandidate type_a_product(int n);

// prod_{i<j}(x_i - y_j) times the determinant |e_{n+1+j-2i}(x) + e_{n+1+j-2i}(y)|.
DiagonalCandidate fulton_c(int n);

// prod_{i<j}(x_i^2 - y_j^2) * prod_i (x_i + y_i).
DiagonalCandidate deconcini_c(int n);

// prod_{i=1}^{n-1} W_i with
// W_i = ((x_i + y_i) prod_{j>i}(x_i^2 - y_j^2)
//        + (-1)^{n-i} (x_i...x_n - y_i...y_n) y_{i+1}...y_n) / (2 x_i),
// each quotient taken by exact division (the numerator vanishes at x_i = 0).
DiagonalCandidate deconcini_d(int n);

// The three G2 representatives in (a1, a2; b1, b2) coordinates. Graham's
// expression is stated in auxiliary variables x1,x2,x3 with x1+x2+x3 = 0 and
// is transported through the bridge a1 = x1 - x2, a2 = -2 x1 + x2 + x3.
DiagonalCandidate graham_g2();
DiagonalCandidate prop29_g2();
DiagonalCandidate deconcini_g2();
std::vector<DiagonalCandidate> g2_candidates();

// Type-independent constructor: sum_w sigma_w(x) * sigma_{w0 w}(y).
DiagonalCandidate generic_diagonal(const RootSystem& rs, const WeylGroup& W);

// Verifies a candidate: (i) d_{w0} of the diagonal substitution, expected
// +-|W|; (ii) Kronecker pattern of all pair coefficients against
// sign * delta_{v, w0 u}, with the sign measured at (id, w0).
VerificationReport verify(const DiagonalCandidate& cand, const WeylGroup& W,
                          bool parallel = true);

// G2 integrality check: leading Schubert coefficient (at s2 s1 s2) of
// x1 x2 x3 + y1 y2 y3 transported to G2 coordinates. The interesting facts
// are |value| = 2/9 and that half of it is not an integer, which kills the
// integrality conjecture for (x1 x2 x3 + y1 y2 y3)/2.
Rat graham_counterexample();

// The G2 coordinate bridge x -> (a1, a2): images of x1, x2, x3.
std::vector<RatVec> g2_bridge_images();

DiagonalCandidate build_candidate(const std::string& system_id,
                                  const std::string& source,
                                  const WeylGroup* W = nullptr);

}  // namespace schub

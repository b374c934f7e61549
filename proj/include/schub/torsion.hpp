#pragma once

#include <string>
#include <vector>

#include "schub/schubert.hpp"

namespace schub {

// Image of the Borel characteristic homomorphism in top degree: each
// degree-N monomial in the fundamental weights has an integer top
// coefficient d_{w0}(m); the gcd of these is the torsion index.
struct TorsionReport {
    std::string system;
    int top_degree = 0;        // N, number of positive roots
    long monomial_count = 0;
    Int gcd;                   // = t_G
    Exp witness;               // exponents (in fundamental weights) of the first
                               // monomial achieving the final gcd
    std::vector<std::pair<Exp, Int>> coefficients;  // filled when keep_all
};

TorsionReport torsion_index(const RootSystem& rs, const WeylGroup& W,
                            bool keep_all = false, bool parallel = true);

// d_{w0} of the point-class monomial x1^(2n-1) * ... * xn in type C_n; value
// 1 certifies that the monomial represents the point class with coefficient 1.
Rat type_c_point_certificate(int n);

}  // namespace schub

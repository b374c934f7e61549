#pragma once

#include <map>
#include <utility>
#include <vector>

#include "schub/poly.hpp"
#include "schub/rootsys.hpp"

namespace schub {

// Divided difference d_i(p) = (p - s_i p) / alpha_i.
//
// p may live over the plain coordinate ring (nvars == coord_dim) or the
// two-block ring Q[x;y] (nvars == 2*coord_dim); `block` selects which block
// the operator acts on (0 = x, 1 = y).
Poly divided_difference(const RootSystem& rs, int i, const Poly& p, int block = 0);

// Composition d_{i1} o ... o d_{ik} (the last letter acts first). Requires a
// reduced word; non-reduced words are rejected by a length check against the
// enumerated element.
Poly divided_difference_word(const RootSystem& rs, const WeylGroup& W,
                             const std::vector<int>& word, const Poly& p,
                             int block = 0);

// (prod of positive roots) / |W|, homogeneous of degree N.
Poly point_class_rep(const RootSystem& rs);

// BGG representative of sigma_w: d_{w^{-1} w0} applied to the point
// representative. Canonical only as a class modulo the invariant ideal.
Poly schubert_class_rep(const RootSystem& rs, const WeylGroup& W, int w);

// Constant d_u(p) for homogeneous p with deg p = l(u): the coefficient of
// sigma_u in the coinvariant class of p.
Rat extract_coefficient(const RootSystem& rs, const WeylGroup& W, const Poly& p, int u);

// Constant d_u^x d_v^y (p) for homogeneous p over Q[x;y] with
// l(u) + l(v) = deg p: the coefficient of sigma_u (x) sigma_v.
Rat extract_pair_coefficient(const RootSystem& rs, const WeylGroup& W,
                             const Poly& p, int u, int v);

// All pair coefficients of a homogeneous p over Q[x;y] at degree deg p.
// Shares divided-difference prefixes along left-descent chains; the parallel
// variant distributes the independent per-element work over OpenMP threads.
// extract_pair_coefficient above is the serial reference path kept for
// testing and benchmarking.
using PairKey = std::pair<int, int>;
std::map<PairKey, Rat> extract_all_pair_coefficients(const RootSystem& rs,
                                                     const WeylGroup& W,
                                                     const Poly& p,
                                                     bool parallel = true);

// Single-factor analogue: coefficients d_w(p) for all w with l(w) = deg p.
std::map<int, Rat> extract_all_coefficients(const RootSystem& rs, const WeylGroup& W,
                                            const Poly& p, bool parallel = true);

struct ClassMismatch {
    int u, v;
    Rat lhs, rhs;
};

// Class equality of two representatives over Q[x;y]: all pair coefficients
// agree. Mismatching pairs are reported as a certificate.
bool class_equal(const RootSystem& rs, const WeylGroup& W, const Poly& p,
                 const Poly& q, std::vector<ClassMismatch>* certificate = nullptr);

// Coefficients of a class in the (double) Schubert basis, for serialization.
struct ClassExpansion {
    std::string system;
    int degree = 0;
    struct Entry {
        std::vector<int> u_word;
        std::vector<int> v_word;  // empty marker for single-factor classes
        bool has_v = false;
        Rat coeff;
    };
    std::vector<Entry> entries;  // sorted by (l(u), u_word, v_word)
};

ClassExpansion expand_class(const RootSystem& rs, const WeylGroup& W, const Poly& p);

}  // namespace schub

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "schub/poly.hpp"
#include "schub/rational.hpp"

namespace schub {

enum class Family { A, B, C, D, G2 };

std::string family_name(Family f);

using IVec = std::vector<long>;
using IMat = std::vector<std::vector<long>>;  // row-major, square

IMat identity_matrix(int n);
IMat mat_mul(const IMat& a, const IMat& b);
RatVec mat_apply(const IMat& m, const RatVec& v);
IVec mat_apply(const IMat& m, const IVec& v);

// A Weyl group element. Equality is matrix equality; the stored word is one
// reduced word (from the breadth-first enumeration).
struct WeylElement {
    IMat matrix;
    std::vector<int> word;
    int length = 0;

    bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
};

// Root datum of one of A_{n-1}, B_n, C_n, D_n, G2 in an integral coordinate
// realization:
//   A_{n-1}: n variables, alpha_i = x_i - x_{i+1}
//   B_n:     alpha_i = x_i - x_{i+1} (i < n), alpha_n = x_n
//   C_n:     alpha_i = x_i - x_{i+1} (i < n), alpha_n = 2 x_n
//   D_n:     alpha_i = x_i - x_{i+1} (i < n), alpha_n = x_{n-1} + x_n
//   G2:      native coordinates (a1 short, a2 long)
class RootSystem {
public:
    static RootSystem build(Family family, int rank);

    // Parses identifiers like "A3", "C2", "G2".
    static RootSystem parse(const std::string& id);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    int coord_dim() const { return dim_; }
    std::string name() const;

    const std::vector<IVec>& simple_roots() const { return simple_roots_; }
    const std::vector<IVec>& positive_roots() const { return positive_roots_; }
    const std::vector<RatVec>& fundamental_weights() const { return fundamental_weights_; }

    // e_1(x) relation for type A; x1+x2+x3 for the auxiliary G2 x-coordinates.
    std::optional<RatVec> linear_relation() const;

    const IMat& simple_reflection(int i) const { return simple_refl_[i]; }

    // Matrix of the reflection in an arbitrary root of this system.
    IMat reflection_matrix(const IVec& root) const;
    bool is_root(const IVec& v) const;

    // Cartan integer <alpha_i, alpha_j^vee>.
    long cartan(int i, int j) const;

    // Pairing 2(v, root)/(root, root) with the invariant form.
    Rat coroot_pairing(const RatVec& v, const IVec& root) const;

    // Simple root as a linear polynomial in the coordinates.
    Poly simple_root_poly(int i) const;
    Poly root_poly(const IVec& root) const;

    // Expresses v as a rational combination of simple roots, if possible.
    std::optional<RatVec> in_simple_root_basis(const RatVec& v) const;

    // Expected Weyl group order.
    unsigned long weyl_order() const;

    // W-orbit of a vector (matrix action, closure under simple reflections).
    std::set<RatVec> orbit(const RatVec& v) const;

private:
    RootSystem() = default;

    Family family_;
    int rank_ = 0;
    int dim_ = 0;
    std::vector<IVec> simple_roots_;
    std::vector<IVec> positive_roots_;
    std::vector<RatVec> fundamental_weights_;
    std::vector<IMat> simple_refl_;
    std::vector<RatVec> gram_;  // invariant bilinear form on coordinates
};

// Full Weyl group enumeration: breadth-first closure over right
// multiplication by simple reflections, deduplicated by matrix. Elements are
// sorted by (length, word lex); index 0 is the identity.
class WeylGroup {
public:
    explicit WeylGroup(const RootSystem& rs, size_t cap = 50000);
    // The group keeps a pointer to the root system; temporaries would dangle.
    explicit WeylGroup(RootSystem&&, size_t = 0) = delete;

    // Rebuilds the lookup structures from a previously enumerated (and
    // validated) element list, e.g. a cache load.
    static WeylGroup from_elements(const RootSystem& rs,
                                   std::vector<WeylElement> elems);
    static WeylGroup from_elements(RootSystem&&, std::vector<WeylElement>) = delete;

    const RootSystem& system() const { return *rs_; }
    size_t size() const { return elements_.size(); }
    const WeylElement& operator[](size_t i) const { return elements_[i]; }
    const std::vector<WeylElement>& elements() const { return elements_; }

    int longest() const { return longest_; }
    int max_length() const { return elements_[longest_].length; }

    // Index lookup by matrix; -1 if absent.
    int index_of(const IMat& m) const;
    int index_of(const WeylElement& w) const { return index_of(w.matrix); }

    int left_mult(int j, int u) const;   // index of s_j * u
    int right_mult(int u, int j) const;  // index of u * s_j
    int product(int u, int v) const;
    int inverse(int u) const;

    // Some j with l(s_j u) < l(u); -1 for the identity.
    int left_descent(int u) const;

    // Count of positive roots sent to negative ones.
    int inversion_count(int u) const;

private:
    explicit WeylGroup(const RootSystem* rs) : rs_(rs) {}

    const RootSystem* rs_;
    std::vector<WeylElement> elements_;
    std::map<IMat, int> index_;
    int longest_ = 0;
};

// Reflection in a root, as an enumerated group element (word included).
WeylElement reflection(const RootSystem& rs, const WeylGroup& W, const IVec& root);

// All w with w.v = v.
std::vector<int> stabilizer(const WeylGroup& W, const RatVec& v);

}  // namespace schub

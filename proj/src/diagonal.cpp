#include "schub/diagonal.hpp"

#include <stdexcept>

namespace schub {

namespace {

Poly var(int nvars, int i) { return Poly::variable(nvars, i); }

std::vector<int> x_vars(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

std::vector<int> y_vars(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n + i;
    return v;
}

// prod_{i<j} (x_i - y_j) over a 2n-variable ring.
Poly partial_vandermonde(int n) {
    Poly p = Poly::one(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            p = p * (var(2 * n, i) - var(2 * n, n + j));
    return p;
}

// e_k(x) + e_k(y), with e_k = 0 outside 0..n.
Poly e_sum(int n, int k) {
    if (k < 0 || k > n) return Poly::zero(2 * n);
    return elementary_symmetric(2 * n, k, x_vars(n)) +
           elementary_symmetric(2 * n, k, y_vars(n));
}

Poly determinant(const std::vector<std::vector<Poly>>& m) {
    int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    Poly det = Poly::zero(m[0][0].nvars());
    for (int j = 0; j < n; ++j) {
        std::vector<std::vector<Poly>> minor;
        for (int i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (int k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][j] * determinant(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

}  // namespace

DiagonalCandidate type_a_product(int n) {
    if (n < 2 || n > 5) throw std::invalid_argument("type_a_product: n out of range");
    return {RootSystem::build(Family::A, n - 1), "typeA_product",
            partial_vandermonde(n), Rat(1)};
}

DiagonalCandidate fulton_c(int n) {
    if (n < 2 || n > 3) throw std::invalid_argument("fulton_c: n out of range");
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly::zero(2 * n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m[i - 1][j - 1] = e_sum(n, n + 1 + j - 2 * i);
    return {RootSystem::build(Family::C, n), "fultonC",
            partial_vandermonde(n) * determinant(m), Rat(1)};
}

DiagonalCandidate deconcini_c(int n) {
    if (n < 2 || n > 3) throw std::invalid_argument("deconcini_c: n out of range");
    Poly p = Poly::one(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            p = p * (var(2 * n, i) * var(2 * n, i) -
                     var(2 * n, n + j) * var(2 * n, n + j));
    for (int i = 0; i < n; ++i)
        p = p * (var(2 * n, i) + var(2 * n, n + i));
    return {RootSystem::build(Family::C, n), "deconciniC", p, Rat(1)};
}

DiagonalCandidate deconcini_d(int n) {
    if (n < 4 || n > 5) throw std::invalid_argument("deconcini_d: n out of range");
    int nv = 2 * n;
    Poly prod = Poly::one(nv);
    for (int i = 1; i <= n - 1; ++i) {
        Poly first = var(nv, i - 1) + var(nv, n + i - 1);
        for (int j = i + 1; j <= n; ++j)
            first = first * (var(nv, i - 1) * var(nv, i - 1) -
                             var(nv, n + j - 1) * var(nv, n + j - 1));
        Poly xs = Poly::one(nv), ys = Poly::one(nv), ytail = Poly::one(nv);
        for (int j = i; j <= n; ++j) {
            xs = xs * var(nv, j - 1);
            ys = ys * var(nv, n + j - 1);
        }
        for (int j = i + 1; j <= n; ++j) ytail = ytail * var(nv, n + j - 1);
        Poly second = (xs - ys) * ytail;
        if ((n - i) % 2 == 1) second = -second;
        // The numerator vanishes at x_i = 0, so the division is exact.
        Poly wi = (first + second).exact_divide(var(nv, i - 1)).scale(Rat(1, 2));
        prod = prod * wi;
    }
    return {RootSystem::build(Family::D, n), "deconciniD", prod, Rat(1, 2)};
}

std::vector<RatVec> g2_bridge_images() {
    // a1 = x1 - x2, a2 = -2 x1 + x2 + x3 with x1 + x2 + x3 = 0 inverts to
    // x1 = -a2/3, x2 = -a1 - a2/3, x3 = a1 + 2 a2/3.
    return {
        {Rat(0), Rat(-1, 3)},
        {Rat(-1), Rat(-1, 3)},
        {Rat(1), Rat(2, 3)},
    };
}

DiagonalCandidate graham_g2() {
    // Stated in auxiliary coordinates x1,x2,x3; y1,y2,y3.
    Poly p = Poly::constant(6, Rat(-27, 2));
    p = p * (var(6, 0) - var(6, 4));
    p = p * (var(6, 0) - var(6, 5));
    p = p * (var(6, 1) - var(6, 5));
    p = p * (var(6, 0) * var(6, 1) * var(6, 2) +
             var(6, 3) * var(6, 4) * var(6, 5));
    // Transport to (a1, a2; b1, b2).
    auto bridge = g2_bridge_images();
    std::vector<RatVec> images(6, RatVec(4, Rat(0)));
    for (int i = 0; i < 3; ++i) {
        images[i][0] = bridge[i][0];
        images[i][1] = bridge[i][1];
        images[3 + i][2] = bridge[i][0];
        images[3 + i][3] = bridge[i][1];
    }
    return {RootSystem::build(Family::G2, 2), "grahamG2",
            p.substitute_linear(images), Rat(-27, 2)};
}

namespace {

// Linear form c1*a1 + c2*a2 in the chosen block of the 4-variable G2 ring.
Poly g2_form(long c1, long c2, int block) {
    RatVec v(4, Rat(0));
    v[2 * block] = c1;
    v[2 * block + 1] = c2;
    return Poly::linear(v);
}

}  // namespace

DiagonalCandidate prop29_g2() {
    Poly a1 = g2_form(1, 0, 0), a2 = g2_form(0, 1, 0);
    Poly b1 = g2_form(1, 0, 1), b2 = g2_form(0, 1, 1);
    // Last factor taken as a2 + (3b1 + b2): with this sign the a := b
    // substitution equals the product of all positive roots exactly, which
    // is the evaluation the construction is built on.
    Poly p = (a1 + b1) *
             (a1 - (b1.scale(2) + b2)) * (a1 + (b1.scale(2) + b2)) *
             (a1 - (b1 + b2)) * (a1 + (b1 + b2)) *
             (a2 + (b1.scale(3) + b2));
    return {RootSystem::build(Family::G2, 2), "prop29G2", p.scale(Rat(1, 2)),
            Rat(1, 2)};
}

DiagonalCandidate deconcini_g2() {
    Poly a1 = g2_form(1, 0, 0), a2 = g2_form(0, 1, 0);
    Poly b1 = g2_form(1, 0, 1), b2 = g2_form(0, 1, 1);
    Poly u = b1.scale(2) + b2, v = b1 + b2;
    Poly p = (a1 + b1) * (a1 * a1 - u * u) * (a1 * a1 - v * v) *
             (a2 + (b1.scale(3) + b2));
    return {RootSystem::build(Family::G2, 2), "deconciniG2", p.scale(Rat(1, 2)),
            Rat(1, 2)};
}

std::vector<DiagonalCandidate> g2_candidates() {
    return {graham_g2(), prop29_g2(), deconcini_g2()};
}

DiagonalCandidate generic_diagonal(const RootSystem& rs, const WeylGroup& W) {
    int dim = rs.coord_dim();
    Poly sum = Poly::zero(2 * dim);
    int w0 = W.longest();
    for (size_t w = 0; w < W.size(); ++w) {
        Poly sx = schubert_class_rep(rs, W, static_cast<int>(w));
        Poly sy = schubert_class_rep(rs, W, W.product(w0, static_cast<int>(w)));
        sum = sum + embed_block(sx, 0) * embed_block(sy, 1);
    }
    return {rs, "generic", sum, Rat(1)};
}

VerificationReport verify(const DiagonalCandidate& cand, const WeylGroup& W,
                          bool parallel) {
    const RootSystem& rs = cand.system;
    int N = static_cast<int>(rs.positive_roots().size());
    if (cand.poly.is_zero() || !cand.poly.is_homogeneous() || cand.poly.degree() != N)
        throw std::invalid_argument("candidate is not homogeneous of degree N");

    VerificationReport rep;
    rep.candidate = cand.source;
    rep.system = rs.name();

    int w0 = W.longest();
    rep.diag_eval_constant =
        extract_coefficient(rs, W, diagonal_substitute(cand.poly), w0);

    auto coeffs = extract_all_pair_coefficients(rs, W, cand.poly, parallel);
    if (coeffs.empty()) throw std::runtime_error("zero class");

    auto it = coeffs.find({0, w0});
    Rat lead = it == coeffs.end() ? Rat(0) : it->second;
    rep.global_sign = lead >= 0 ? 1 : -1;
    Rat expected(rep.global_sign);

    rep.kronecker_ok = true;
    for (size_t u = 0; u < W.size(); ++u) {
        int dual = W.product(w0, static_cast<int>(u));
        for (size_t v = 0; v < W.size(); ++v) {
            if (W[u].length + W[v].length != N) continue;
            auto jt = coeffs.find({static_cast<int>(u), static_cast<int>(v)});
            Rat got = jt == coeffs.end() ? Rat(0) : jt->second;
            Rat want = static_cast<int>(v) == dual ? expected : Rat(0);
            if (got != want) {
                rep.kronecker_ok = false;
                rep.mismatches.push_back(
                    {static_cast<int>(u), static_cast<int>(v), got, want});
            }
        }
    }
    return rep;
}

Rat graham_counterexample() {
    auto rs = RootSystem::build(Family::G2, 2);
    WeylGroup W(rs);
    // Leading coefficient of x1 x2 x3 + y1 y2 y3 at sigma_{s2 s1 s2}; the
    // conjectured-integral class is half of this, so any odd denominator
    // here already settles non-integrality.
    Poly p = Poly::variable(6, 0) * Poly::variable(6, 1) * Poly::variable(6, 2) +
             Poly::variable(6, 3) * Poly::variable(6, 4) * Poly::variable(6, 5);
    auto bridge = g2_bridge_images();
    std::vector<RatVec> images(6, RatVec(4, Rat(0)));
    for (int i = 0; i < 3; ++i) {
        images[i][0] = bridge[i][0];
        images[i][1] = bridge[i][1];
        images[3 + i][2] = bridge[i][0];
        images[3 + i][3] = bridge[i][1];
    }
    Poly q = p.substitute_linear(images);
    // Leading coefficient at s2 s1 s2; the pure-b term dies under any d^x.
    return divided_difference_word(rs, W, {1, 0, 1}, q, 0).constant_term();
}

DiagonalCandidate build_candidate(const std::string& system_id,
                                  const std::string& source, const WeylGroup* W) {
    RootSystem rs = RootSystem::parse(system_id);
    auto need = [&](Family f) {
        if (rs.family() != f)
            throw std::invalid_argument("formula '" + source +
                                        "' does not apply to " + rs.name());
    };
    if (source == "typeA" || source == "typeA_product") {
        need(Family::A);
        return type_a_product(rs.rank() + 1);
    }
    if (source == "fultonC") {
        need(Family::C);
        return fulton_c(rs.rank());
    }
    if (source == "deconciniC") {
        need(Family::C);
        return deconcini_c(rs.rank());
    }
    if (source == "deconciniD") {
        need(Family::D);
        return deconcini_d(rs.rank());
    }
    if (source == "grahamG2" || source == "graham") {
        need(Family::G2);
        return graham_g2();
    }
    if (source == "prop29G2" || source == "prop29") {
        need(Family::G2);
        return prop29_g2();
    }
    if (source == "deconciniG2" ||
        (source == "deconcini" && rs.family() == Family::G2)) {
        need(Family::G2);
        return deconcini_g2();
    }
    if (source == "generic") {
        if (W) return generic_diagonal(W->system(), *W);
        WeylGroup group(rs);
        return generic_diagonal(group.system(), group);
    }
    throw std::invalid_argument("unknown formula source: " + source);
}

}  // namespace schub

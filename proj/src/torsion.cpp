#include "schub/torsion.hpp"

#include <stdexcept>

#include "schub/flagbundle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace schub {

namespace {

// All exponent vectors of total degree d over r slots, lexicographic.
void enumerate_exponents(int r, int d, Exp& cur, std::vector<Exp>& out) {
    if (r == 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = d; k >= 0; --k) {
        cur.push_back(k);
        enumerate_exponents(r - 1, d - k, cur, out);
        cur.pop_back();
    }
}

Int top_coefficient(const RootSystem& rs, const WeylGroup& W,
                    const std::vector<Poly>& weights, const Exp& e) {
    Poly m = Poly::one(rs.coord_dim());
    for (size_t i = 0; i < weights.size(); ++i)
        for (int k = 0; k < e[i]; ++k) m = m * weights[i];
    Rat c = extract_coefficient(rs, W, m, W.longest());
    if (!is_integer(c))
        throw std::logic_error("non-integral top coefficient for a weight monomial");
    return c.get_num();
}

}  // namespace

TorsionReport torsion_index(const RootSystem& rs, const WeylGroup& W,
                            bool keep_all, bool parallel) {
    if (rs.rank() > 4) throw std::invalid_argument("torsion_index: rank cap exceeded");
    int N = static_cast<int>(rs.positive_roots().size());
    int r = rs.rank();

    std::vector<Poly> weights;
    for (const auto& w : rs.fundamental_weights())
        weights.push_back(Poly::linear(w));

    std::vector<Exp> monomials;
    Exp cur;
    enumerate_exponents(r, N, cur, monomials);

    TorsionReport rep;
    rep.system = rs.name();
    rep.top_degree = N;
    rep.monomial_count = static_cast<long>(monomials.size());

    std::vector<Int> coeffs(monomials.size());
    bool done = false;
    Int g = 0;

    if (keep_all) {
        // Full coefficient list requested: no short-circuit.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
        for (size_t i = 0; i < monomials.size(); ++i)
            coeffs[i] = top_coefficient(rs, W, weights, monomials[i]);
        for (size_t i = 0; i < monomials.size(); ++i) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), coeffs[i].get_mpz_t());
            if (rep.witness.empty() && g != 0) rep.witness = monomials[i];
            rep.coefficients.emplace_back(monomials[i], coeffs[i]);
        }
    } else {
        // Chunked scan with a gcd short-circuit: types A and C reach 1 fast.
        const size_t chunk = 64;
        for (size_t base = 0; base < monomials.size() && !done; base += chunk) {
            size_t end = std::min(base + chunk, monomials.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
            for (size_t i = base; i < end; ++i)
                coeffs[i] = top_coefficient(rs, W, weights, monomials[i]);
            for (size_t i = base; i < end; ++i) {
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), coeffs[i].get_mpz_t());
                if (rep.witness.empty() && g != 0) rep.witness = monomials[i];
                if (g == 1) { done = true; break; }
            }
        }
    }
    (void)parallel;
    if (g == 0) throw std::logic_error("all top coefficients vanish");
    rep.gcd = g;

    // Deterministic witness: first monomial at which the running gcd reaches
    // the reported value.
    Int running = 0;
    for (size_t i = 0; i < monomials.size(); ++i) {
        mpz_gcd(running.get_mpz_t(), running.get_mpz_t(), coeffs[i].get_mpz_t());
        if (running == rep.gcd) {
            rep.witness = monomials[i];
            break;
        }
    }
    return rep;
}

Rat type_c_point_certificate(int n) {
    if (n < 2 || n > 3)
        throw std::invalid_argument("type_c_point_certificate: n out of range");
    auto rs = RootSystem::build(Family::C, n);
    WeylGroup W(rs);
    Poly m = typec_point_bundle_top_chern(n);
    return extract_coefficient(rs, W, m, W.longest());
}

}  // namespace schub

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "schub/schubert.hpp"

using namespace schub;

namespace {

Poly random_homogeneous(std::mt19937& rng, int nvars, int deg, int nterms) {
    std::uniform_int_distribution<int> vd(0, nvars - 1);
    std::uniform_int_distribution<long> cd(-5, 5);
    Poly p(nvars);
    for (int t = 0; t < nterms; ++t) {
        Exp e(nvars, 0);
        for (int d = 0; d < deg; ++d) ++e[vd(rng)];
        p.add_term(e, Rat(cd(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("divided differences on small type A inputs") {
    RootSystem rs = RootSystem::parse("A1");
    Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
    CHECK(divided_difference(rs, 0, x1) == Poly::one(2));
    CHECK(divided_difference(rs, 0, x1 * x1) == x1 + x2);
    CHECK(divided_difference(rs, 0, x1 * x2).is_zero());  // symmetric input
    CHECK(divided_difference(rs, 0, Poly::one(2)).is_zero());
}

TEST_CASE("operator laws: nilpotence, degree drop, Leibniz on invariants") {
    std::mt19937 rng(31);
    for (const char* id : {"A2", "B2", "G2"}) {
        RootSystem rs = RootSystem::parse(id);
        int n = rs.coord_dim();
        for (int i = 0; i < rs.rank(); ++i) {
            for (int trial = 0; trial < 10; ++trial) {
                Poly p = random_homogeneous(rng, n, 3, 5);
                Poly dp = divided_difference(rs, i, p);
                // d_i^2 = 0
                CHECK(divided_difference(rs, i, dp).is_zero());
                if (!dp.is_zero()) CHECK(dp.degree() == p.degree() - 1);
                // d_i(f g) = d_i(f) g when g is s_i-invariant; alpha_i^2 is.
                Poly inv = rs.simple_root_poly(i) * rs.simple_root_poly(i);
                CHECK(divided_difference(rs, i, p * inv) == dp * inv);
            }
        }
    }
}

TEST_CASE("word application is braid-invariant") {
    RootSystem a2 = RootSystem::parse("A2");
    WeylGroup Wa(a2);
    std::mt19937 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        Poly p = random_homogeneous(rng, 3, 4, 6);
        CHECK(divided_difference_word(a2, Wa, {0, 1, 0}, p) ==
              divided_difference_word(a2, Wa, {1, 0, 1}, p));
    }

    RootSystem g2 = RootSystem::parse("G2");
    WeylGroup Wg(g2);
    for (int trial = 0; trial < 5; ++trial) {
        Poly p = random_homogeneous(rng, 2, 7, 6);
        CHECK(divided_difference_word(g2, Wg, {0, 1, 0, 1, 0, 1}, p) ==
              divided_difference_word(g2, Wg, {1, 0, 1, 0, 1, 0}, p));
    }
}

TEST_CASE("non-reduced words are rejected") {
    RootSystem rs = RootSystem::parse("A2");
    WeylGroup W(rs);
    Poly p = Poly::variable(3, 0);
    CHECK_THROWS(divided_difference_word(rs, W, {0, 0}, p));
    CHECK_THROWS(divided_difference_word(rs, W, {0, 1, 0, 1}, p));
}

TEST_CASE("hand-checked coefficient extraction in A2") {
    RootSystem rs = RootSystem::parse("A2");
    WeylGroup W(rs);
    // d_{s1 s2 s1}(x1^2 x2) = 1: the top-degree coefficient of the point class.
    Poly m = Poly::variable(3, 0) * Poly::variable(3, 0) * Poly::variable(3, 1);
    int w0 = W.longest();
    CHECK(extract_coefficient(rs, W, m, w0) == 1);
}

TEST_CASE("top extraction of the positive-root product is |W|") {
    for (const char* id : {"A1", "A2", "A3", "B2", "C3", "G2", "D4"}) {
        RootSystem rs = RootSystem::parse(id);
        WeylGroup W(rs);
        Poly prod = Poly::one(rs.coord_dim());
        for (const auto& r : rs.positive_roots()) prod = prod * rs.root_poly(r);
        CHECK(extract_coefficient(rs, W, prod, W.longest()) ==
              Rat(static_cast<long>(W.size())));
    }
}

TEST_CASE("invariant-ideal elements extract to zero") {
    // alpha-degree elements of the invariant ideal have zero Schubert
    // coefficients in every degree-matching slot.
    RootSystem rs = RootSystem::parse("A2");
    WeylGroup W(rs);
    // e_2(x1,x2,x3) times x1 has degree 3 = l(w0).
    Poly e2 = elementary_symmetric(3, 2, {0, 1, 2});
    Poly p = e2 * Poly::variable(3, 0);
    CHECK(extract_coefficient(rs, W, p, W.longest()) == 0);
}

TEST_CASE("pair extraction on A1") {
    RootSystem rs = RootSystem::parse("A1");
    WeylGroup W(rs);
    // Q[x;y] with 4 variables: x1 x2 | y1 y2.
    Poly x1 = Poly::variable(4, 0), y1 = Poly::variable(4, 2), y2 = Poly::variable(4, 3);
    REQUIRE(W.size() == 2);
    int s = W.longest();  // the non-identity element
    CHECK(extract_pair_coefficient(rs, W, x1 + y1, s, 0) == 1);
    CHECK(extract_pair_coefficient(rs, W, x1 + y1, 0, s) == 1);
    CHECK(extract_pair_coefficient(rs, W, x1 - y2, 0, s) == 1);
    CHECK(extract_pair_coefficient(rs, W, x1 - y2, s, 0) == 1);
}

TEST_CASE("all-pairs extraction agrees with the serial reference") {
    std::mt19937 rng(123);
    for (const char* id : {"A2", "B2", "G2"}) {
        RootSystem rs = RootSystem::parse(id);
        WeylGroup W(rs);
        int n = rs.coord_dim();
        int N = static_cast<int>(rs.positive_roots().size());
        std::uniform_int_distribution<int> dd(1, std::min(2 * N, 6));
        for (int trial = 0; trial < 3; ++trial) {
            int deg = dd(rng);
            Poly p = random_homogeneous(rng, 2 * n, deg, 12);
            if (p.is_zero()) continue;
            auto table = extract_all_pair_coefficients(rs, W, p, true);
            auto serial = extract_all_pair_coefficients(rs, W, p, false);
            CHECK(table == serial);
            for (size_t u = 0; u < W.size(); ++u)
                for (size_t v = 0; v < W.size(); ++v) {
                    if (W[u].length + W[v].length != deg) continue;
                    Rat ref = extract_pair_coefficient(
                        rs, W, p, static_cast<int>(u), static_cast<int>(v));
                    auto it = table.find({static_cast<int>(u), static_cast<int>(v)});
                    Rat got = it == table.end() ? Rat(0) : it->second;
                    CHECK(ref == got);
                }
        }
    }
}

TEST_CASE("class equality detects a genuine difference") {
    RootSystem rs = RootSystem::parse("A2");
    WeylGroup W(rs);
    Poly x1 = Poly::variable(6, 0), y1 = Poly::variable(6, 3);
    std::vector<ClassMismatch> cert;
    CHECK_FALSE(class_equal(rs, W, x1, y1 + x1, &cert));
    CHECK_FALSE(cert.empty());
    // And confirms invariance under adding an invariant-ideal element.
    Poly e1x(6);
    for (int i = 0; i < 3; ++i) e1x = e1x + Poly::variable(6, i);
    CHECK(class_equal(rs, W, x1, x1 + e1x.scale(Rat(5))));
}

TEST_CASE("schubert class representatives pair to the identity matrix") {
    for (const char* id : {"A2", "B2"}) {
        RootSystem rs = RootSystem::parse(id);
        WeylGroup W(rs);
        for (size_t w = 0; w < W.size(); ++w) {
            Poly rep = schubert_class_rep(rs, W, static_cast<int>(w));
            for (size_t u = 0; u < W.size(); ++u) {
                if (W[u].length != W[w].length) continue;
                Rat c = extract_coefficient(rs, W, rep, static_cast<int>(u));
                CHECK(c == (u == w ? 1 : 0));
            }
        }
    }
}

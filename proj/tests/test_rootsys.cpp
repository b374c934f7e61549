#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schub/rootsys.hpp"

using namespace schub;

TEST_CASE("group orders and positive root counts") {
    struct Row {
        const char* id;
        unsigned long order;
        size_t npos;
    };
    const Row rows[] = {
        {"A1", 2, 1},   {"A2", 6, 3},    {"A3", 24, 6},   {"A4", 120, 10},
        {"B2", 8, 4},   {"B3", 48, 9},   {"C2", 8, 4},    {"C3", 48, 9},
        {"D4", 192, 12}, {"G2", 12, 6},
    };
    for (const auto& r : rows) {
        RootSystem rs = RootSystem::parse(r.id);
        CHECK(rs.weyl_order() == r.order);
        CHECK(rs.positive_roots().size() == r.npos);
        WeylGroup W(rs);
        CHECK(W.size() == r.order);
        CHECK(W.max_length() == static_cast<int>(r.npos));
    }
}

TEST_CASE("Cartan matrices") {
    RootSystem a2 = RootSystem::parse("A2");
    CHECK(a2.cartan(0, 0) == 2);
    CHECK(a2.cartan(0, 1) == -1);
    CHECK(a2.cartan(1, 0) == -1);

    RootSystem b3 = RootSystem::parse("B3");
    CHECK(b3.cartan(1, 2) == -2);  // <alpha_2, alpha_3^vee> for the short alpha_3
    CHECK(b3.cartan(2, 1) == -1);

    RootSystem c3 = RootSystem::parse("C3");
    CHECK(c3.cartan(1, 2) == -1);
    CHECK(c3.cartan(2, 1) == -2);

    RootSystem g2 = RootSystem::parse("G2");
    CHECK(g2.cartan(0, 1) == -1);
    CHECK(g2.cartan(1, 0) == -3);

    RootSystem d4 = RootSystem::parse("D4");
    CHECK(d4.cartan(1, 3) == -1);
    CHECK(d4.cartan(0, 3) == 0);
}

TEST_CASE("positive roots are nonnegative integer combinations of simples") {
    for (const char* id : {"A3", "B3", "C3", "D4", "G2"}) {
        RootSystem rs = RootSystem::parse(id);
        for (const auto& root : rs.positive_roots()) {
            RatVec v(root.begin(), root.end());
            auto coords = rs.in_simple_root_basis(v);
            REQUIRE(coords.has_value());
            for (const auto& c : *coords) {
                CHECK(is_integer(c));
                CHECK(c >= 0);
            }
        }
    }
}

TEST_CASE("words are consistent with matrices and lengths") {
    for (const char* id : {"A3", "B2", "C3", "G2"}) {
        RootSystem rs = RootSystem::parse(id);
        WeylGroup W(rs);
        for (const auto& w : W.elements()) {
            IMat m = identity_matrix(rs.coord_dim());
            for (int j : w.word) m = mat_mul(m, rs.simple_reflection(j));
            CHECK(m == w.matrix);
            CHECK(static_cast<int>(w.word.size()) == w.length);
        }
        // Length equals the inversion count.
        for (size_t u = 0; u < W.size(); ++u)
            CHECK(W.inversion_count(static_cast<int>(u)) == W[u].length);
    }
}

TEST_CASE("group operations") {
    RootSystem rs = RootSystem::parse("B2");
    WeylGroup W(rs);
    for (size_t u = 0; u < W.size(); ++u) {
        CHECK(W.product(static_cast<int>(u), W.inverse(static_cast<int>(u))) == 0);
        CHECK(W.product(0, static_cast<int>(u)) == static_cast<int>(u));
    }
    int w0 = W.longest();
    CHECK(W.product(w0, w0) == 0);
    // Left descent decreases length.
    for (size_t u = 1; u < W.size(); ++u) {
        int j = W.left_descent(static_cast<int>(u));
        REQUIRE(j >= 0);
        int su = W.left_mult(j, static_cast<int>(u));
        CHECK(W[su].length == W[u].length - 1);
    }
    CHECK(W.left_descent(0) == -1);
}

TEST_CASE("G2 short root orbit and stabilizer") {
    RootSystem rs = RootSystem::parse("G2");
    RatVec a1 = {Rat(1), Rat(0)};
    auto orb = rs.orbit(a1);
    CHECK(orb.size() == 6);  // the six short roots
    CHECK(orb.count({Rat(1), Rat(0)}) == 1);
    CHECK(orb.count({Rat(-1), Rat(0)}) == 1);
    CHECK(orb.count({Rat(1), Rat(1)}) == 1);
    CHECK(orb.count({Rat(-1), Rat(-1)}) == 1);
    CHECK(orb.count({Rat(2), Rat(1)}) == 1);
    CHECK(orb.count({Rat(-2), Rat(-1)}) == 1);

    WeylGroup W(rs);
    auto stab = stabilizer(W, a1);
    REQUIRE(stab.size() == 2);
    CHECK(stab[0] == 0);
    // The nontrivial stabilizer element is the reflection in 3a1 + 2a2
    // (perpendicular to a1); it sends a2 to a2 - (3a1 + 2a2) = -(3a1 + a2).
    const WeylElement& s = W[stab[1]];
    IVec long_root = {3, 2};
    CHECK(s.matrix == rs.reflection_matrix(long_root));
    IVec a2 = {0, 1};
    CHECK(mat_apply(s.matrix, a2) == IVec{-3, -1});
}

TEST_CASE("orbits are closed under every simple reflection") {
    for (const char* id : {"A2", "B2", "G2"}) {
        RootSystem rs = RootSystem::parse(id);
        RatVec v(rs.coord_dim(), Rat(0));
        v[0] = 1;
        v.back() += Rat(1, 2);
        auto orb = rs.orbit(v);
        for (const auto& w : orb)
            for (int i = 0; i < rs.rank(); ++i)
                CHECK(orb.count(mat_apply(rs.simple_reflection(i), w)) == 1);
    }
}

TEST_CASE("reflection matrices preserve the root set") {
    for (const char* id : {"A3", "B3", "C3", "D4", "G2"}) {
        RootSystem rs = RootSystem::parse(id);
        for (const auto& root : rs.positive_roots()) {
            IMat m = rs.reflection_matrix(root);
            CHECK(mat_mul(m, m) == identity_matrix(rs.coord_dim()));
            IVec neg(root.size());
            for (size_t i = 0; i < root.size(); ++i) neg[i] = -root[i];
            CHECK(mat_apply(m, root) == neg);
            for (const auto& other : rs.positive_roots()) {
                IVec image = mat_apply(m, other);
                bool is_pm_root = rs.is_root(image);
                CHECK(is_pm_root);
            }
        }
    }
}

TEST_CASE("parse rejects out-of-range systems") {
    CHECK_THROWS(RootSystem::parse("A7"));
    CHECK_THROWS(RootSystem::parse("B1"));
    CHECK_THROWS(RootSystem::parse("D3"));
    CHECK_THROWS(RootSystem::parse("E8"));
    CHECK_THROWS(RootSystem::parse("G3"));
    CHECK_THROWS(RootSystem::parse(""));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schub/diagonal.hpp"

using namespace schub;

namespace {

Poly xvar(int n2, int i) { return Poly::variable(n2, i); }
Poly yvar(int n2, int i) { return Poly::variable(n2, n2 / 2 + i); }

}  // namespace

TEST_CASE("type A product in closed form for n = 2") {
    DiagonalCandidate c = type_a_product(2);
    Poly expect = xvar(4, 0) - yvar(4, 1);  // x1 - y2
    CHECK(c.poly == expect);
    CHECK(c.expected_global_factor == 1);
}

TEST_CASE("type C formulas in closed form for n = 2") {
    // fultonC: (x1 - y2) * det | e1+e1' 1+e0'... | -- spot-check the degree
    // and a couple of structural facts rather than re-deriving the
    // determinant here; full verification happens through verify().
    DiagonalCandidate f = fulton_c(2);
    CHECK(f.poly.is_homogeneous());
    CHECK(f.poly.degree() == 4);
    CHECK(f.poly.nvars() == 4);

    DiagonalCandidate d = deconcini_c(2);
    Poly expect = (xvar(4, 0) * xvar(4, 0) - yvar(4, 1) * yvar(4, 1)) *
                  (xvar(4, 0) + yvar(4, 0)) * (xvar(4, 1) + yvar(4, 1));
    CHECK(d.poly == expect);
}

TEST_CASE("the two type C candidates represent the same class") {
    for (int n : {2, 3}) {
        DiagonalCandidate f = fulton_c(n);
        DiagonalCandidate d = deconcini_c(n);
        WeylGroup W(f.system);
        CHECK(class_equal(f.system, W, f.poly, d.poly));
    }
}

TEST_CASE("verification reports for the small systems") {
    for (int n : {2, 3}) {
        DiagonalCandidate c = type_a_product(n);
        WeylGroup W(c.system);
        VerificationReport rep = verify(c, W);
        CHECK(rep.kronecker_ok);
        CHECK(rep.global_sign == 1);
        CHECK(rep.diag_eval_constant == Rat(static_cast<long>(W.size())));
        CHECK(rep.mismatches.empty());
    }
    for (int n : {2, 3}) {
        for (auto* make : {fulton_c, deconcini_c}) {
            DiagonalCandidate c = make(n);
            WeylGroup W(c.system);
            VerificationReport rep = verify(c, W);
            CHECK(rep.kronecker_ok);
            CHECK(abs(rep.diag_eval_constant) == Rat(static_cast<long>(W.size())));
        }
    }
}

TEST_CASE("type D candidate verifies for n = 4") {
    DiagonalCandidate c = deconcini_d(4);
    WeylGroup W(c.system);
    VerificationReport rep = verify(c, W);
    CHECK(rep.kronecker_ok);
    CHECK(rep.global_sign == 1);
    CHECK(rep.diag_eval_constant == 192);
}

TEST_CASE("the three G2 candidates verify and agree up to recorded signs") {
    auto cands = g2_candidates();
    REQUIRE(cands.size() == 3);
    WeylGroup W(cands[0].system);
    std::vector<int> signs;
    for (const auto& c : cands) {
        VerificationReport rep = verify(c, W);
        CHECK(rep.kronecker_ok);
        CHECK(abs(rep.diag_eval_constant) == 12);
        signs.push_back(rep.global_sign);
    }
    CHECK(signs[0] == -1);  // grahamG2
    CHECK(signs[1] == 1);   // prop29G2
    CHECK(signs[2] == 1);   // deconciniG2
    for (size_t i = 0; i < cands.size(); ++i)
        for (size_t j = i + 1; j < cands.size(); ++j) {
            Poly a = cands[i].poly.scale(Rat(signs[i]));
            Poly b = cands[j].poly.scale(Rat(signs[j]));
            CHECK(class_equal(cands[i].system, W, a, b));
        }
}

TEST_CASE("generic diagonal construction verifies across families") {
    for (const char* id : {"A1", "A2", "A3", "B2", "C2", "B3", "G2"}) {
        RootSystem rs = RootSystem::parse(id);
        WeylGroup W(rs);
        DiagonalCandidate c = generic_diagonal(rs, W);
        VerificationReport rep = verify(c, W);
        CHECK(rep.kronecker_ok);
        CHECK(rep.global_sign == 1);
        CHECK(rep.diag_eval_constant == Rat(static_cast<long>(W.size())));
    }
}

TEST_CASE("generic and closed-form A2 candidates agree as classes") {
    RootSystem rs = RootSystem::parse("A2");
    WeylGroup W(rs);
    DiagonalCandidate g = generic_diagonal(rs, W);
    DiagonalCandidate p = type_a_product(3);
    CHECK(class_equal(rs, W, g.poly, p.poly));
}

TEST_CASE("G2 integrality counterexample") {
    Rat c = graham_counterexample();
    CHECK(abs(c) == Rat(2, 9));
    CHECK_FALSE(is_integer(c / 2));
}

TEST_CASE("build_candidate dispatch and validation") {
    RootSystem c2 = RootSystem::parse("C2");
    WeylGroup W(c2);
    DiagonalCandidate c = build_candidate("C2", "fultonC", &W);
    CHECK(c.source == "fultonC");
    CHECK_THROWS(build_candidate("A2", "fultonC"));
    CHECK_THROWS(build_candidate("C2", "deconciniD"));
    CHECK_THROWS(build_candidate("C2", "nope"));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k3lab/lattice.hpp"

using namespace k3lab;

TEST_CASE("gram matrix accessors and text form") {
    GramLattice2 L(4, 5, 2);
    CHECK(L.a() == 4);
    CHECK(L.b() == 5);
    CHECK(L.c() == 2);
    CHECK(L.to_string() == "4 5 2");
    CHECK(GramLattice2::parse("4 5 2") == L);
    CHECK(GramLattice2::parse("  4\t5  2 ") == L);
}

TEST_CASE("construction rejects odd diagonal and degenerate pairings") {
    CHECK_THROWS_AS(GramLattice2(3, 1, 2), OddDiagonalError);
    CHECK_THROWS_AS(GramLattice2(4, 1, 3), OddDiagonalError);
    CHECK_THROWS_AS(GramLattice2(2, 2, 2), DegenerateError);  // det = 0
    CHECK_THROWS_AS(GramLattice2::parse("4 5"), ParseError);
    CHECK_THROWS_AS(GramLattice2::parse("4 5 2 9"), ParseError);
    CHECK_THROWS_AS(GramLattice2::parse("4 x 2"), ParseError);
}

TEST_CASE("inner products of the quartic fixture classes") {
    // basis (H, C): K = 3H - C, D = 2H - C, pullback of D = -2H + 9C
    GramLattice2 L(4, 5, 2);
    LatVec H{1, 0}, C{0, 1}, K{3, -1}, D{2, -1}, iD{-2, 9};
    CHECK(L.norm(H) == 4);
    CHECK(L.norm(C) == 2);
    CHECK(L.inner(H, C) == 5);
    CHECK(L.norm(K) == 8);
    CHECK(L.inner(K, D) == 1);
    CHECK(L.inner(K, iD) == 103);
    // D and its pullback are the two -2-curves; the pullback is an isometry
    // so both have square -2
    CHECK(L.norm(D) == -2);
    CHECK(L.norm(iD) == -2);
    CHECK(L.inner(D, iD) == 66);
}

TEST_CASE("determinants of the three fixture lattices") {
    CHECK(GramLattice2(4, 5, 2).determinant() == -17);
    CHECK(GramLattice2(6, 6, 2).determinant() == -24);
    CHECK(GramLattice2(4, 0, -2).determinant() == -8);
}

TEST_CASE("signatures") {
    CHECK(GramLattice2(4, 5, 2).signature2() == std::make_pair(1, 1));
    CHECK(GramLattice2(4, 0, -2).signature2() == std::make_pair(1, 1));
    CHECK(GramLattice2(2, 0, 2).signature2() == std::make_pair(2, 0));
    CHECK(GramLattice2(-2, 0, -2).signature2() == std::make_pair(0, 2));
    CHECK(GramLattice2(2, 3, 2).signature2() == std::make_pair(1, 1));
}

TEST_CASE("adjunction genus") {
    GramLattice2 L(4, 5, 2);
    CHECK(L.genus_of_class({0, 1}) == 2);    // square 2
    CHECK(L.genus_of_class({1, 0}) == 3);    // square 4
    CHECK(L.genus_of_class({2, -1}) == 0);  // square -2, rational curve
    GramLattice2 N(4, 0, -2);
    CHECK(N.genus_of_class({1, 0}) == 3);
    CHECK(N.genus_of_class({0, 1}) == 0);  // exceptional curve
}

TEST_CASE("primitivity") {
    CHECK(is_primitive({2, -1}));
    CHECK(is_primitive({1, 0}));
    CHECK(is_primitive({-3, 7}));
    CHECK_FALSE(is_primitive({2, 2}));
    CHECK_FALSE(is_primitive({0, 3}));
    CHECK_THROWS_AS(is_primitive({0, 0}), ZeroVectorError);
}

TEST_CASE("vector algebra") {
    LatVec a{2, -1}, b{1, 3};
    CHECK((a + b) == LatVec(3, 2));
    CHECK((a - b) == LatVec(1, -4));
    CHECK((-a) == LatVec(-2, 1));
    CHECK(a.scaled(3) == LatVec(6, -3));
    CHECK(a.to_string() == "(2,-1)");
}

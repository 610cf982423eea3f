#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "k3lab/forms.hpp"

using namespace k3lab;

namespace {
std::vector<std::pair<long, long>> coords(const std::vector<PellSolution>& v) {
    std::vector<std::pair<long, long>> out;
    for (const auto& s : v) out.emplace_back(s.x.get_si(), s.y.get_si());
    return out;
}
}  // namespace

TEST_CASE("form from lattice and discriminant") {
    BinaryForm F = BinaryForm::from_lattice(GramLattice2(4, 5, 2));
    CHECK(F.A == 4);
    CHECK(F.B == 10);
    CHECK(F.C == 2);
    CHECK(F.disc() == 68);
    CHECK(F.eval(3, -1) == 8);
    CHECK(F.eval(0, 1) == 2);
    BinaryForm G = BinaryForm::from_lattice(GramLattice2(4, 0, -2));
    CHECK(G.disc() == 32);  // twice a square, the Pell case
}

TEST_CASE("square roots of 2 modulo d") {
    CHECK(qr2_mod(7) == 3);
    CHECK(qr2_mod(17) == 6);
    CHECK(qr2_mod(49) == 10);
    CHECK(qr2_mod(2) == 0);
    CHECK_FALSE(qr2_mod(5).has_value());
    CHECK_FALSE(qr2_mod(3).has_value());
    CHECK_FALSE(qr2_mod(4).has_value());
    CHECK_THROWS_AS(qr2_mod(0), DomainError);
    CHECK_THROWS_AS(qr2_mod(2000000), SizeLimitError);
}

TEST_CASE("d list up to 100") {
    std::vector<long> want = {7,  14, 17, 23, 31, 34, 41, 46, 47, 49,
                              62, 71, 73, 79, 82, 89, 94, 97, 98};
    CHECK(d_list(100) == want);
    CHECK(d_list(7) == std::vector<long>{7});
    CHECK(d_list(6).empty());
    CHECK_THROWS_AS(d_list(2), DomainError);
}

TEST_CASE("pell unit step preserves the value and inverts") {
    PellSolution s{3, 1, 7};
    PellSolution t = pell_unit_step(s);
    CHECK(t.x == 13);
    CHECK(t.y == 9);
    CHECK(t.verifies());
    CHECK(pell_unit_step_back(t).x == s.x);
    CHECK(pell_unit_step_back(t).y == s.y);
}

TEST_CASE("pell orbit representatives, frozen small cases") {
    using P = std::vector<std::pair<long, long>>;
    CHECK((coords(solve_pell_like(1)) == P{{1, 0}}));
    CHECK((coords(solve_pell_like(-1)) == P{{1, 1}}));
    CHECK((coords(solve_pell_like(2)) == P{{2, 1}}));
    CHECK((coords(solve_pell_like(7)) == P{{3, -1}, {3, 1}}));
    CHECK((coords(solve_pell_like(-7)) == P{{1, -2}, {1, 2}}));
    CHECK(solve_pell_like(6).empty());
    CHECK(solve_pell_like(-3).empty());
    CHECK((coords(solve_pell_like(-4)) == P{{2, 2}}));  // imprimitive only
    CHECK_THROWS_AS(solve_pell_like(0), DomainError);
}

TEST_CASE("orbit equivalence") {
    PellSolution a{3, 1, 7}, b{13, 9, 7}, c{3, -1, 7};
    CHECK(pell_same_orbit(a, b));
    CHECK(pell_same_orbit(a, PellSolution{-3, -1, 7}));
    CHECK_FALSE(pell_same_orbit(a, c));
    CHECK(pell_same_orbit(c, PellSolution{5, 3, 7}));
}

TEST_CASE("representation witnesses") {
    BinaryForm F = BinaryForm::from_lattice(GramLattice2(4, 5, 2));
    RepResult r8 = represents(F, 8);
    REQUIRE(r8.verdict == RepResult::Verdict::witness);
    REQUIRE(r8.witness.has_value());
    CHECK(r8.witness->x == 0);
    CHECK(r8.witness->y == 2);
    CHECK(r8.witness->verifies(F));

    BinaryForm F492{4, 18, 2};
    RepResult r6 = represents(F492, 6);
    REQUIRE(r6.verdict == RepResult::Verdict::witness);
    CHECK(r6.witness->x == 22);
    CHECK(r6.witness->y == -5);
}

TEST_CASE("all witnesses in a box") {
    BinaryForm F492{4, 18, 2};
    std::vector<RepWitness> ws = all_witnesses(F492, 6, 1000);
    REQUIRE(ws.size() == 4);
    CHECK(ws[0].x == -22);
    CHECK(ws[0].y == 5);
    CHECK(ws[1].x == -22);
    CHECK(ws[1].y == 193);
    CHECK(ws[2].x == 22);
    CHECK(ws[2].y == -193);
    CHECK(ws[3].x == 22);
    CHECK(ws[3].y == -5);
    for (const auto& w : ws) CHECK(w.verifies(F492));

    BinaryForm F452 = BinaryForm::from_lattice(GramLattice2(4, 5, 2));
    std::vector<RepWitness> w2 = all_witnesses(F452, 2, 10);
    REQUIRE(w2.size() == 2);
    CHECK(w2[0].x == 0);
    CHECK(w2[0].y == -1);
    CHECK(w2[1].x == 0);
    CHECK(w2[1].y == 1);
    CHECK_THROWS_AS(all_witnesses(F452, 2, -1), DomainError);
}

TEST_CASE("modular certificates") {
    BinaryForm F452 = BinaryForm::from_lattice(GramLattice2(4, 5, 2));
    RepResult r = represents(F452, 6);
    REQUIRE(r.verdict == RepResult::Verdict::obstruction);
    REQUIRE(r.cert.has_value());
    CHECK(r.cert->kind == ObstructionCert::Kind::modular);
    CHECK(r.cert->modulus == 9);
    CHECK(modular_certificate(F452, 6) == Int(9));
    // replay: no residue pair hits 6 mod 9
    CHECK(excludes_residue_mod(F452, 9, 6));
    CHECK_FALSE(excludes_residue_mod(F452, 9, 8));
}

TEST_CASE("residue class exclusion for the degree six lattice") {
    BinaryForm F662 = BinaryForm::from_lattice(GramLattice2(6, 6, 2));
    CHECK(excludes_residue_mod(F662, 6, 4));   // the class 4 mod 6
    CHECK(excludes_residue_mod(F662, 3, 1));   // the minimal modulus behind it
    CHECK_FALSE(excludes_residue_mod(F662, 6, 2));
    CHECK_THROWS_AS(excludes_residue_mod(F662, 0, 1), DomainError);
}

TEST_CASE("no -2 classes in the family lattice [2 d+1 2d]") {
    for (long d : {4L, 5L, 100L, 9999L}) {
        ObstructionCert cert = no_minus_two_for_family(d);
        CHECK(cert.kind == ObstructionCert::Kind::factorization);
        CHECK(cert.divisor_trace.size() >= 1);
    }
    // d = 3 really does represent -2: q(-2,1) = 2(-2+1)(-2+3) = -2
    BinaryForm F3 = BinaryForm::from_lattice(GramLattice2(2, 4, 6));
    CHECK(F3.eval(-2, 1) == -2);
    CHECK_THROWS_AS(no_minus_two_for_family(3), NoCertificateError);
    CHECK_THROWS_AS(no_minus_two_for_family(2), NoCertificateError);
}

TEST_CASE("square discriminant factorization") {
    BinaryForm F = BinaryForm::from_lattice(GramLattice2(2, 4, 6));  // disc 16
    SquareFactorization sq = square_disc_factor(F);
    for (long x = -6; x <= 6; ++x)
        for (long y = -6; y <= 6; ++y)
            CHECK(F.eval(x, y) == sq.scale * sq.L1.eval(x, y) * sq.L2.eval(x, y));
    BinaryForm G = BinaryForm::from_lattice(GramLattice2(4, 5, 2));  // disc 68
    CHECK_THROWS_AS(square_disc_factor(G), NotSquareError);
}

TEST_CASE("decision pipeline settles every |n| <= 40 for the quartic lattice") {
    BinaryForm F = BinaryForm::from_lattice(GramLattice2(4, 5, 2));
    int witnesses = 0, obstructions = 0;
    for (long n = -40; n <= 40; ++n) {
        if (n == 0) continue;
        RepResult r = represents(F, n);
        if (r.verdict == RepResult::Verdict::witness) {
            CHECK(r.witness->verifies(F));
            ++witnesses;
        } else if (r.verdict == RepResult::Verdict::obstruction) {
            ++obstructions;
        } else {
            FAIL("unknown verdict for n = ", n);
        }
    }
    CHECK(witnesses + obstructions == 80);
    CHECK(witnesses > 0);
    CHECK(obstructions > 0);
}

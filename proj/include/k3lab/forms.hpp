#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3lab/lattice.hpp"
#include "k3lab/types.hpp"

namespace k3lab {

// q(x,y) = A x^2 + B xy + C y^2. A lattice [a b c] gives A=a, B=2b, C=c.
struct BinaryForm {
    Int A, B, C;

    static BinaryForm from_lattice(const GramLattice2& L) { return {L.a(), 2 * L.b(), L.c()}; }
    Int eval(const Int& x, const Int& y) const { return A * x * x + B * x * y + C * y * y; }
    Int disc() const { return B * B - 4 * A * C; }
    std::string to_string() const {
        return A.get_str() + "*x^2 + " + B.get_str() + "*xy + " + C.get_str() + "*y^2";
    }
};

// Smallest y in [0,d) with y^2 = 2 mod d, if any. Exhaustive scan, so d is
// capped at 10^6.
std::optional<long> qr2_mod(long d);

// All 2 < d <= N admitting a square root of 2 mod d, ascending. N >= 3.
std::vector<long> d_list(long N);

// Solution of x^2 - 2 y^2 = m.
struct PellSolution {
    Int x, y, m;
    bool verifies() const { return x * x - 2 * y * y == m; }
};

// Multiplication by 3 + 2*sqrt(2), the square of the fundamental unit of
// Z[sqrt(2)]; preserves the value m.
PellSolution pell_unit_step(const PellSolution& s);
PellSolution pell_unit_step_back(const PellSolution& s);

// Orbit representatives for x^2 - 2 y^2 = m under {±(1+sqrt2)^k}. Every
// integer solution is a unit power times exactly one representative, up to
// sign. Empty means no solution. |m| is capped at 10^6 by the root scan.
std::vector<PellSolution> solve_pell_like(const Int& m);

// True iff (x1,y1) and (x2,y2) solve the same m and differ by ±(1+sqrt2)^k.
bool pell_same_orbit(const PellSolution& s1, const PellSolution& s2);

struct RepWitness {
    Int x, y, value;
    bool verifies(const BinaryForm& F) const { return F.eval(x, y) == value; }
};

struct ObstructionCert {
    enum class Kind { modular, factorization };
    Kind kind = Kind::modular;
    Int modulus = 0;                                  // modular case
    std::vector<std::pair<Int, Int>> divisor_trace;   // factorization case
    std::string detail;
};

struct RepResult {
    enum class Verdict { witness, obstruction, unknown };
    Verdict verdict = Verdict::unknown;
    std::optional<RepWitness> witness;
    std::optional<ObstructionCert> cert;
    std::string note;  // names the pipeline stage that settled the question
};

// Decision pipeline, in this order: bounded witness search, factorization
// through a square discriminant, modular certificates over the fixed
// schedule, Pell reduction for positive nonsquare discriminant. Unknown is
// returned when every stage is inconclusive.
RepResult represents(const BinaryForm& F, const Int& n, long search_bound = 1000);

// Smallest modulus m in the schedule (prime powers up to 512 and coprime
// products of two of them) with q(x,y) never n mod m. By CRT a product can
// only exclude n when one of its factors already does, so the minimum is
// always a prime power.
std::optional<Int> modular_certificate(const BinaryForm& F, const Int& n);

// every (x, y) with |x|, |y| <= bound and q(x, y) = n, sorted by (x, y)
std::vector<RepWitness> all_witnesses(const BinaryForm& F, const Int& n, long bound);

// Exhaustive check of a single modulus: q(x,y) mod m != r for every residue
// pair. Family claims quantify over a residue class rather than a single n.
bool excludes_residue_mod(const BinaryForm& F, long m, const Int& r);

// Factorization certificate that the lattice [2 d+1 2d] represents no -2:
// half the form splits as (x+y)(x+dy), so a representation forces
// (d-1)y = ±2. Fails with NoCertificateError for d <= 3, where witnesses
// exist.
ObstructionCert no_minus_two_for_family(const Int& d);

// p*x + q*y
struct LinearForm {
    Int p, q;
    Int eval(const Int& x, const Int& y) const { return p * x + q * y; }
    std::string to_string() const;
};

// q = scale * L1 * L2 with primitive integral linear factors; only forms of
// square discriminant split this way.
struct SquareFactorization {
    Int scale;
    LinearForm L1, L2;
};
SquareFactorization square_disc_factor(const BinaryForm& F);

}  // namespace k3lab

#pragma once

#include <array>
#include <string>
#include <vector>

#include "k3lab/forms.hpp"
#include "k3lab/lattice.hpp"

namespace k3lab {

// Walls of the ample chamber: effective classes of square -2 whose
// orthogonals bound it, plus a reference direction interior to the chamber
// used to orient the walls.
struct WallSet {
    std::vector<LatVec> walls;
    LatVec reference;
};

// Lattice [4 0 -2] in basis (H, e) with e = -[exceptional curve]; walls are
// the exceptional curve (0,-1) and the conic class 2H - 3E = (2,3).
GramLattice2 nodal_lattice();
WallSet nodal_walls();

// x -> x + (x . delta) delta; delta must have square -2
LatVec reflect(const GramLattice2& L, const LatVec& delta, const LatVec& x);

// All square -2 vectors with |u|,|v| <= coeff_bound, one representative per
// sign pair, first nonzero coordinate positive. pell mode enumerates
// complete unit-orbit representatives instead and is implemented for forms
// whose discriminant is twice a square.
std::vector<LatVec> roots(const GramLattice2& L, long coeff_bound, bool pell = false);

bool contains_up_to_sign(const std::vector<LatVec>& vs, const LatVec& x);

// Class x H - y E on the nodal quartic: ample iff 0 < y and 3y < 4x.
bool is_ample_nodal(const Int& x, const Int& y);

struct ReduceResult {
    LatVec reduced;
    std::vector<int> word;  // wall indices in application order
    bool negated = false;   // input was replaced by its negative first
    bool interior = false;  // strictly positive pairing with every wall
};

// Weyl descent into the chamber: reflect in the most negative wall pairing
// until all pairings are nonnegative. Ties go to the earlier wall. The
// recorded word replays exactly on the (possibly negated) input.
ReduceResult reduce_to_ample(const GramLattice2& L, const WallSet& walls, LatVec x,
                             long step_limit = 1000000);

struct AmpleSearch {
    enum class Status { found, no_solution, no_primitive_solution };
    Status status = Status::no_solution;
    LatVec witness;  // coordinates (x0, y0) of the class x0 H - y0 E
    long word_length = 0;
    std::string reason;
};

// Primitive ample class of square 2d on the nodal lattice: Pell orbits of
// x^2 - 2y^2 = -d, primitivity filter, then chamber reduction. d > 2.
AmpleSearch ample_search_2d(long d);

using Mat2 = std::array<std::array<Int, 2>, 2>;  // row-major, acts on column coords

// The unique nontrivial isometry of [4 e 2] fixing C: H -> -H + eC. e > 4.
Mat2 involution_pullback(const Int& e);

Mat2 mat_mul(const Mat2& a, const Mat2& b);
LatVec mat_apply(const Mat2& m, const LatVec& v);

struct GenusTwoAmple {
    bool ample = false;
    LatVec obstruction;  // square -2 class orthogonal to C when not ample
};

// C = (0,1) in [4 e 2] is ample iff no root pairs to zero with it; the only
// obstructed integer case is e = 3.
GenusTwoAmple verify_genus2_ample(const Int& e);

struct FixedLocusDescriptor {
    enum class Kind { symplectic, nonsymplectic_empty, nonsymplectic_two_elliptic,
                      nonsymplectic_curves };
    Kind kind = Kind::symplectic;
    long p_a = 0;
    long k = 0;
};

// Lower bound for the Picard number of the quotient-side surface from the
// fixed locus of the involution.
long nikulin_bound(const FixedLocusDescriptor& desc);

}  // namespace k3lab

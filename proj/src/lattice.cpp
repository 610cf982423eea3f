#include "k3lab/lattice.hpp"

#include <sstream>

namespace k3lab {

GramLattice2::GramLattice2(Int a, Int b, Int c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_ % 2 != 0 || c_ % 2 != 0) {
        throw OddDiagonalError("even lattice requires even diagonal, got [" + a_.get_str() +
                               " " + b_.get_str() + " " + c_.get_str() + "]");
    }
    if (determinant() == 0) {
        throw DegenerateError("degenerate pairing: det [" + a_.get_str() + " " + b_.get_str() +
                              " " + c_.get_str() + "] = 0");
    }
}

Int GramLattice2::inner(const LatVec& x, const LatVec& y) const {
    return a_ * x.u * y.u + b_ * (x.u * y.v + x.v * y.u) + c_ * x.v * y.v;
}

std::pair<int, int> GramLattice2::signature2() const {
    // det < 0 forces one eigenvalue of each sign. For det > 0 both
    // eigenvalues share the sign of the nonzero diagonal entry (a = c = 0
    // would make det = -b^2 < 0, so one of them is nonzero here).
    Int det = determinant();
    if (det < 0) return {1, 1};
    const Int& lead = (a_ != 0) ? a_ : c_;
    return (lead > 0) ? std::pair<int, int>{2, 0} : std::pair<int, int>{0, 2};
}

std::string GramLattice2::to_string() const {
    return a_.get_str() + " " + b_.get_str() + " " + c_.get_str();
}

GramLattice2 GramLattice2::parse(const std::string& text) {
    std::istringstream in(text);
    std::string sa, sb, sc, extra;
    if (!(in >> sa >> sb >> sc)) {
        throw ParseError("lattice needs three integers \"a b c\", got \"" + text + "\"");
    }
    if (in >> extra) {
        throw ParseError("trailing data after \"a b c\": \"" + text + "\"");
    }
    try {
        return GramLattice2(Int(sa), Int(sb), Int(sc));
    } catch (const std::invalid_argument&) {
        throw ParseError("non-integer lattice entry in \"" + text + "\"");
    }
}

bool is_primitive(const LatVec& x) {
    if (x.is_zero()) throw ZeroVectorError("primitivity undefined for the zero vector");
    return gcd(x.u, x.v) == 1;
}

}  // namespace k3lab

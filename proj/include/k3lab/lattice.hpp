#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k3lab/types.hpp"

namespace k3lab {

// Coordinate pair in a fixed lattice basis. The first basis vector is always
// the polarization class H of the fixture the lattice belongs to.
struct LatVec {
    Int u = 0;
    Int v = 0;

    LatVec() = default;
    LatVec(Int uu, Int vv) : u(std::move(uu)), v(std::move(vv)) {}

    bool operator==(const LatVec& o) const { return u == o.u && v == o.v; }
    bool operator!=(const LatVec& o) const { return !(*this == o); }
    LatVec operator+(const LatVec& o) const { return {u + o.u, v + o.v}; }
    LatVec operator-(const LatVec& o) const { return {u - o.u, v - o.v}; }
    LatVec operator-() const { return {-u, -v}; }
    LatVec scaled(const Int& k) const { return {k * u, k * v}; }
    bool is_zero() const { return u == 0 && v == 0; }
    std::string to_string() const { return "(" + u.get_str() + "," + v.get_str() + ")"; }
};

// Rank-2 even lattice with Gram matrix ((a,b),(b,c)), written [a b c].
class GramLattice2 {
  public:
    // Even lattices need even diagonal entries; the pairing must be
    // nondegenerate. Both conditions raise typed errors because fixture
    // files are user-editable.
    GramLattice2(Int a, Int b, Int c);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }

    Int inner(const LatVec& x, const LatVec& y) const;
    Int norm(const LatVec& x) const { return inner(x, x); }
    Int determinant() const { return a_ * c_ - b_ * b_; }

    // (n_plus, n_minus) of the real quadratic space; entries sum to 2.
    std::pair<int, int> signature2() const;

    // Adjunction: a class of square 2g-2 has arithmetic genus g.
    Int genus_of_class(const LatVec& d) const { return norm(d) / 2 + 1; }

    std::string to_string() const;
    static GramLattice2 parse(const std::string& text);

    bool operator==(const GramLattice2& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
    }

  private:
    Int a_, b_, c_;
};

// gcd(|u|,|v|) = 1; the zero vector has no primitivity notion.
bool is_primitive(const LatVec& x);

}  // namespace k3lab

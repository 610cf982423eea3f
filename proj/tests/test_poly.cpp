#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k3lab/poly.hpp"

using namespace k3lab;

namespace {
const VarContext V3({"x", "y", "z"});
const VarContext V4({"x", "y", "z", "w"});
const VarContext VW({"x", "y", "z", "w"}, {1, 1, 1, 3});

MultiPoly mono(const VarContext& v, const Exps& e, long c = 1) {
    MultiPoly p(v);
    p.add_term(e, c);
    return p;
}

// assembles f4 + f3 w + f2 w^2 in four plain variables
MultiPoly quartic_from_blocks(const MultiPoly& f2, const MultiPoly& f3, const MultiPoly& f4) {
    std::vector<MultiPoly> xyz = {MultiPoly::variable(V4, 0), MultiPoly::variable(V4, 1),
                                  MultiPoly::variable(V4, 2)};
    MultiPoly w = MultiPoly::variable(V4, 3);
    return compose(f4, xyz) + compose(f3, xyz) * w + compose(f2, xyz) * w * w;
}
}  // namespace

TEST_CASE("canonical text form") {
    MultiPoly p(V3);
    p.add_term({1, 0, 0}, 1);
    CHECK(p.to_string() == "+1*x");
    p.add_term({2, 0, 0}, -2);
    CHECK(p.to_string() == "-2*x^2 +1*x");
    p.add_term({1, 1, 0}, 3);
    CHECK(p.to_string() == "-2*x^2 +3*x*y +1*x");
    CHECK(MultiPoly(V3).to_string() == "0");
    CHECK(MultiPoly::parse(V3, "-2*x^2 +3*x*y +1*x").to_string() == "-2*x^2 +3*x*y +1*x");
    CHECK_THROWS_AS(MultiPoly::parse(V3, "+1*q"), ParseError);
}

TEST_CASE("grlex order drives the text order") {
    MultiPoly p(V3);
    p.add_term({0, 0, 1}, 1);   // z, degree 1
    p.add_term({0, 2, 0}, 1);   // y^2, degree 2
    p.add_term({1, 0, 1}, 1);   // xz, degree 2, beats y^2 lexicographically
    p.add_term({0, 0, 0}, -7);  // constant last
    CHECK(p.to_string() == "+1*x*z +1*y^2 +1*z -7");
}

TEST_CASE("checksums freeze the canonical text") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("0") == 0xaf63ad4c86019cafULL);
    MultiPoly p(V3);
    p.add_term({1, 0, 0}, 1);
    CHECK(checksum_hex(p) == "969fa0c0cfdbbbeb");  // fnv of "+1*x"
    MultiPoly q = mono(V3, {2, 0, 0}) + mono(V3, {1, 1, 0}, -2);
    CHECK(q.to_string() == "+1*x^2 -2*x*y");
    CHECK(checksum_hex(q) == "868c59c50fb8caf1");
}

TEST_CASE("arithmetic and cancellation") {
    MultiPoly x = MultiPoly::variable(V3, 0), y = MultiPoly::variable(V3, 1);
    MultiPoly s = (x + y) * (x - y);
    CHECK(s == x * x - y * y);
    CHECK((s - s).is_zero());
    CHECK((x + y).pow(2) == x * x + (x * y).scaled(2) + y * y);
    MultiPoly zero(V3);
    CHECK((x * zero).is_zero());
    MultiPoly t = x;
    t.add_term({1, 0, 0}, -1);
    CHECK(t.is_zero());
}

TEST_CASE("evaluation") {
    MultiPoly f = mono(V3, {2, 0, 0}, 3) + mono(V3, {0, 1, 1}, -1);
    CHECK(f.eval({2, 5, 7}) == 12 - 35);
    CHECK(f.eval({0, 0, 0}) == 0);
    CHECK_THROWS_AS(f.eval({1, 2}), ArityError);
}

TEST_CASE("weighted homogeneity") {
    MultiPoly f = mono(VW, {6, 0, 0, 0}) + mono(VW, {0, 0, 0, 2}, -1);  // x^6 - w^2
    long deg = 0;
    CHECK(f.is_homogeneous(&deg));
    CHECK(deg == 6);
    MultiPoly g = mono(VW, {1, 0, 0, 0}) + mono(VW, {0, 0, 0, 1});  // x + w
    CHECK_FALSE(g.is_homogeneous());
    MultiPoly h = mono(V4, {4, 0, 0, 0}) + mono(V4, {0, 0, 0, 4});
    CHECK(h.is_homogeneous(&deg));
    CHECK(deg == 4);
}

TEST_CASE("partials") {
    MultiPoly f = mono(V3, {3, 1, 0}, 2);  // 2 x^3 y
    std::vector<MultiPoly> df = partials(f);
    REQUIRE(df.size() == 3);
    CHECK(df[0] == mono(V3, {2, 1, 0}, 6));
    CHECK(df[1] == mono(V3, {3, 0, 0}, 2));
    CHECK(df[2].is_zero());
}

TEST_CASE("composition") {
    MultiPoly f = mono(V3, {2, 0, 0}) + mono(V3, {0, 1, 1});  // x^2 + yz
    std::vector<MultiPoly> subs = {MultiPoly::variable(V4, 3), MultiPoly::variable(V4, 0),
                                   MultiPoly::variable(V4, 1)};
    MultiPoly g = compose(f, subs);
    CHECK(g == mono(V4, {0, 0, 0, 2}) + mono(V4, {1, 1, 0, 0}));
    CHECK_THROWS_AS(compose(f, {MultiPoly::variable(V4, 0)}), ArityError);
}

TEST_CASE("branch sextic of a cover shape") {
    MultiPoly f2 = mono(V3, {2, 0, 0});
    MultiPoly f3 = mono(V3, {3, 0, 0});
    MultiPoly f4 = mono(V3, {4, 0, 0});
    MultiPoly b = branch_sextic(f2, f3, f4);
    CHECK(b == mono(V3, {6, 0, 0}, -3));  // f3^2 - 4 f2 f4 = (1 - 4) x^6
    CHECK_THROWS_AS(branch_sextic(f3, f3, f4), DegreeError);
}

TEST_CASE("segre transfer to the quadric") {
    VarContext P({"x0", "x1", "y0", "y1"});
    // x0^3 x1 y0^3 y1 has bidegree (4,4); its xw-free preimage is x^2 y z
    MultiPoly g = mono(P, {3, 1, 3, 1});
    SegreTransfer t = segre_transfer(g);
    CHECK(t.F == mono(V4, {2, 1, 1, 0}));
    CHECK(t.relation == mono(V4, {1, 0, 0, 1}) - mono(V4, {0, 1, 1, 0}));
    // (x0 y0)^4 pulls back to x^4
    CHECK(segre_transfer(mono(P, {4, 0, 4, 0})).F == mono(V4, {4, 0, 0, 0}));
    // bidegree (2,1) is not transferable
    CHECK_THROWS_AS(segre_transfer(mono(P, {2, 0, 1, 0})), NotBihomogeneousError);
}

TEST_CASE("xw elimination normal form") {
    CHECK(xw_eliminate(mono(V4, {1, 0, 0, 1})) == mono(V4, {0, 1, 1, 0}));
    CHECK(xw_eliminate(mono(V4, {2, 0, 0, 2})) == mono(V4, {0, 2, 2, 0}));
    CHECK(xw_eliminate(mono(V4, {1, 1, 0, 2})) == mono(V4, {0, 2, 1, 1}));
    MultiPoly f = mono(V4, {0, 3, 1, 0}) + mono(V4, {1, 1, 1, 1}, 5);
    CHECK(xw_eliminate(f) == mono(V4, {0, 3, 1, 0}) + mono(V4, {0, 2, 2, 0}, 5));
    CHECK(xw_eliminate(mono(V4, {0, 2, 1, 1})) == mono(V4, {0, 2, 1, 1}));
}

TEST_CASE("nodal shape detection") {
    MultiPoly x = MultiPoly::variable(V3, 0), y = MultiPoly::variable(V3, 1),
              z = MultiPoly::variable(V3, 2);
    MultiPoly f3 = x * y * z;
    MultiPoly f4 = x.pow(4);
    NodalShape good = nodal_shape_check(quartic_from_blocks(x * x + y * y + z * z, f3, f4));
    CHECK(good.node_at_origin);
    CHECK(good.cone_det == 8);  // det diag(2,2,2)
    // rank-deficient cone
    NodalShape flat = nodal_shape_check(quartic_from_blocks(z * z, f3, f4));
    CHECK_FALSE(flat.node_at_origin);
    // surviving w^3 term
    MultiPoly w = MultiPoly::variable(V4, 3);
    NodalShape cubic = nodal_shape_check(
        quartic_from_blocks(x * x + y * y + z * z, f3, f4) + w.pow(3) * MultiPoly::variable(V4, 0));
    CHECK_FALSE(cubic.node_at_origin);
}

TEST_CASE("variable context declaration text") {
    CHECK(V3.declaration() == "x y z");
    CHECK(VW.declaration() == "x y z w weights 1 1 1 3");
    CHECK_THROWS_AS(VarContext({"x", "y"}, {1, 2, 3}), ArityError);
}

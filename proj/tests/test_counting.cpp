#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "k3lab/counting.hpp"
#include "k3lab/fixtures.hpp"

using namespace k3lab;

namespace {
const VarContext V3({"x", "y", "z"});
const VarContext V4({"x", "y", "z", "w"});

MultiPoly mono(const VarContext& v, const Exps& e, long c = 1) {
    MultiPoly p(v);
    p.add_term(e, c);
    return p;
}

// plain nested-loop evaluation, no chart or table machinery
long slow_eval(const MultiPoly& f, const std::vector<long>& pt, const FqContext& ctx) {
    long acc = 0;
    for (const auto& [exps, coef] : f.terms()) {
        long m = ctx.from_int(coef);
        for (size_t i = 0; i < exps.size(); ++i)
            for (int e = 0; e < exps[i]; ++e) m = ctx.mul(m, pt[i]);
        acc = ctx.add(acc, m);
    }
    return acc;
}

long slow_cover_count(const MultiPoly& f, const FqContext& ctx) {
    long q = ctx.q(), pairs = 0;
    for (long x = 0; x < q; ++x)
        for (long y = 0; y < q; ++y)
            for (long z = 0; z < q; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                long v = slow_eval(f, {x, y, z}, ctx);
                for (long w = 0; w < q; ++w)
                    if (ctx.mul(w, w) == v) ++pairs;
            }
    return pairs / (q - 1);
}

long slow_p3_count(const MultiPoly& F, const FqContext& ctx) {
    long q = ctx.q(), zeros = 0;
    for (long x = 0; x < q; ++x)
        for (long y = 0; y < q; ++y)
            for (long z = 0; z < q; ++z)
                for (long w = 0; w < q; ++w) {
                    if (x == 0 && y == 0 && z == 0 && w == 0) continue;
                    if (slow_eval(F, {x, y, z, w}, ctx) == 0) ++zeros;
                }
    return zeros / (q - 1);
}
}  // namespace

TEST_CASE("projective point enumeration") {
    FqContext f3(3, 1);
    std::vector<ProjPoint> p1 = proj_points(f3, 1);
    REQUIRE(p1.size() == 4);
    CHECK((p1[0].coords == std::vector<long>{0, 1}));
    CHECK((p1[1].coords == std::vector<long>{1, 0}));
    CHECK((p1[2].coords == std::vector<long>{1, 1}));
    CHECK((p1[3].coords == std::vector<long>{1, 2}));
    CHECK(proj_points(FqContext(5, 1), 2).size() == 31);
    CHECK(proj_points(FqContext(7, 1), 3).size() == 400);
}

TEST_CASE("point normalization") {
    FqContext f5(5, 1);
    CHECK((normalize_point({0, 2, 4}, f5).coords == std::vector<long>{0, 1, 2}));
    CHECK((normalize_point({3, 0, 0}, f5).coords == std::vector<long>{1, 0, 0}));
    CHECK_THROWS_AS(normalize_point({0, 0, 0}, f5), DomainError);
    CHECK((ProjPoint{{1, 0, 2}}.to_string() == "(1:0:2)"));
}

TEST_CASE("hypersurface counts with analytic answers") {
    // the plane x = 0 is a P^2
    MultiPoly plane = mono(V4, {1, 0, 0, 0});
    CHECK(count_hypersurface_p3(plane, FqContext(5, 1)) == 31);
    CHECK(count_hypersurface_p3(plane, FqContext(3, 2)) == 91);
    // the smooth quadric xw - yz has (q+1)^2 points
    MultiPoly quadric = mono(V4, {1, 0, 0, 1}) - mono(V4, {0, 1, 1, 0});
    CHECK(count_hypersurface_p3(quadric, FqContext(5, 1)) == 36);
    CHECK(count_hypersurface_p3(quadric, FqContext(7, 1)) == 64);
    CHECK(count_hypersurface_p3(quadric, FqContext(3, 2)) == 100);
    CHECK_THROWS_AS(count_hypersurface_p3(MultiPoly(V4), FqContext(5, 1)), DomainError);
    CHECK_THROWS_AS(count_hypersurface_p3(mono(V3, {1, 0, 0}), FqContext(5, 1)), ArityError);
}

TEST_CASE("double cover counts with analytic answers") {
    // w^2 = z^6: chi(z^6) is 1 off z = 0, so the count is 2q^2 + q + 1
    MultiPoly z6 = mono(V3, {0, 0, 6});
    CHECK(count_double_cover(z6, FqContext(5, 1)) == 56);
    CHECK(count_double_cover(z6, FqContext(3, 2)) == 172);
    CHECK_THROWS_AS(count_double_cover(mono(V3, {0, 0, 4}), FqContext(5, 1)), DegreeError);
    CHECK_THROWS_AS(count_double_cover(z6, FqContext(2, 2, true)), FieldError);
}

TEST_CASE("kernels agree with the nested-loop oracle") {
    MultiPoly f = mono(V3, {6, 0, 0}, 2) + mono(V3, {3, 2, 1}, -1) + mono(V3, {0, 5, 1}, 3) +
                  mono(V3, {2, 2, 2}, 1);
    MultiPoly F = mono(V4, {4, 0, 0, 0}) + mono(V4, {1, 1, 1, 1}, -2) + mono(V4, {0, 2, 2, 0}, 5) +
                  mono(V4, {0, 0, 1, 3}, 1);
    for (long p : {3L, 5L}) {
        FqContext ctx(p, 1);
        CHECK(count_double_cover(f, ctx) == slow_cover_count(f, ctx));
        CHECK(count_hypersurface_p3(F, ctx) == slow_p3_count(F, ctx));
    }
    FqContext f9(3, 2);
    CHECK(count_double_cover(f, f9) == slow_cover_count(f, f9));
    CHECK(count_hypersurface_p3(F, f9) == slow_p3_count(F, f9));
}

TEST_CASE("serial and parallel modes match") {
    MultiPoly f = mono(V3, {6, 0, 0}, 1) + mono(V3, {0, 6, 0}, 1) + mono(V3, {0, 0, 6}, 1) +
                  mono(V3, {2, 2, 2}, -3);
    FqContext ctx(11, 1);
    CHECK(count_double_cover(f, ctx, ExecMode::serial) ==
          count_double_cover(f, ctx, ExecMode::parallel));
    MultiPoly F = mono(V4, {4, 0, 0, 0}) + mono(V4, {0, 4, 0, 0}) + mono(V4, {0, 0, 4, 0}) +
                  mono(V4, {0, 0, 0, 4});
    CHECK(count_hypersurface_p3(F, ctx, ExecMode::serial) ==
          count_hypersurface_p3(F, ctx, ExecMode::parallel));
    std::vector<ProjPoint> a = singular_search({F}, ctx, ExecMode::serial);
    std::vector<ProjPoint> b = singular_search({F}, ctx, ExecMode::parallel);
    CHECK(a == b);
}

TEST_CASE("counts are invariant under a linear change of coordinates") {
    SurfaceFixture x4 = load_fixture("X4");
    const MultiPoly& F = x4.poly("surface");
    // (x, y, z, w) -> (x + y, y, z + w, w)
    std::vector<MultiPoly> subs = {
        MultiPoly::variable(V4, 0) + MultiPoly::variable(V4, 1), MultiPoly::variable(V4, 1),
        MultiPoly::variable(V4, 2) + MultiPoly::variable(V4, 3), MultiPoly::variable(V4, 3)};
    MultiPoly G = compose(F, subs);
    FqContext ctx(5, 1);
    CHECK(count_hypersurface_p3(F, ctx) == count_hypersurface_p3(G, ctx));
}

TEST_CASE("fixture surface counts at the good primes") {
    SurfaceFixture x2 = load_fixture("X2");
    CHECK(count_double_cover(x2.poly("sextic"), FqContext(5, 1)) == 31);
    CHECK(count_double_cover(x2.poly("sextic"), FqContext(7, 1)) == 64);
    CHECK(count_double_cover(x2.poly("sextic"), FqContext(11, 1)) == 147);
    CHECK(count_double_cover(x2.poly("sextic"), FqContext(13, 1)) == 176);

    SurfaceFixture x4 = load_fixture("X4");
    CHECK(count_hypersurface_p3(x4.poly("surface"), FqContext(5, 1)) == 31);
    CHECK(count_hypersurface_p3(x4.poly("surface"), FqContext(7, 1)) == 61);
    CHECK(count_hypersurface_p3(x4.poly("surface"), FqContext(11, 1)) == 145);
    CHECK(count_hypersurface_p3(x4.poly("surface"), FqContext(13, 1)) == 194);

    SurfaceFixture x6 = load_fixture("X6");
    CHECK(common_zeros(x6.poly_group("surface."), FqContext(7, 1)).size() == 58);
    CHECK(common_zeros(x6.poly_group("surface."), FqContext(11, 1)).size() == 139);
    CHECK(common_zeros(x6.poly_group("surface."), FqContext(13, 1)).size() == 190);

    SurfaceFixture x8 = load_fixture("X8");
    CHECK(common_zeros(x8.poly_group("surface."), FqContext(11, 1)).size() == 145);
}

TEST_CASE("common zeros and containment") {
    MultiPoly x = mono(V3, {1, 0, 0}), y = mono(V3, {0, 1, 0});
    FqContext ctx(7, 1);
    std::vector<ProjPoint> pts = common_zeros({x, y}, ctx);
    REQUIRE(pts.size() == 1);
    CHECK((pts[0].coords == std::vector<long>{0, 0, 1}));

    ContainmentResult in = containment_check({x, y}, {x + y}, ctx);
    CHECK(in.contained);
    CHECK(in.curve_points == 1);
    ContainmentResult out = containment_check({x}, {y}, ctx);
    CHECK_FALSE(out.contained);
    REQUIRE(out.counterexample.has_value());
    CHECK(slow_eval(y, out.counterexample->coords, ctx) != 0);
}

TEST_CASE("singular point detection") {
    FqContext f5(5, 1);
    // cone over a smooth plane quartic, vertex (0:0:0:1)
    MultiPoly cone = mono(V4, {4, 0, 0, 0}) + mono(V4, {0, 4, 0, 0}) + mono(V4, {0, 0, 4, 0});
    std::vector<ProjPoint> sing = singular_search({cone}, f5);
    REQUIRE(sing.size() == 1);
    CHECK((sing[0].coords == std::vector<long>{0, 0, 0, 1}));
    // smooth quadric
    MultiPoly quadric = mono(V4, {1, 0, 0, 1}) - mono(V4, {0, 1, 1, 0});
    CHECK(singular_search({quadric}, f5).empty());
    // complete intersection: two transverse hyperplanes are smooth
    MultiPoly X = mono(V4, {1, 0, 0, 0}), W = mono(V4, {0, 0, 0, 1});
    CHECK(singular_search({X, W}, f5).empty());
}

TEST_CASE("involution and cover reports on a toy surface") {
    FqContext ctx(7, 1);
    MultiPoly quadric = mono(V4, {1, 0, 0, 1}) - mono(V4, {0, 1, 1, 0});
    std::array<MultiPoly, 4> swap_map = {mono(V4, {0, 1, 0, 0}), mono(V4, {1, 0, 0, 0}),
                                         mono(V4, {0, 0, 0, 1}), mono(V4, {0, 0, 1, 0})};
    InvolutionReport rep = involution_check(swap_map, quadric, ctx);
    CHECK(rep.ok());
    CHECK(rep.surface_points == 64);
    CHECK(rep.base_skipped == 0);
    CHECK(rep.checked == 64);
    std::array<MultiPoly, 4> zero_map = {MultiPoly(V4), MultiPoly(V4), MultiPoly(V4),
                                         MultiPoly(V4)};
    CHECK_THROWS_AS(involution_check(zero_map, quadric, ctx), DomainError);
}

TEST_CASE("sparse evaluation helper") {
    FqContext f7(7, 1);
    MultiPoly f = mono(V3, {2, 0, 0}, 3) + mono(V3, {0, 1, 1}, -1);
    CHECK(eval_mod(f, {2, 3, 4}, f7) == ((3 * 4 - 12) % 7 + 7) % 7);
    CHECK_THROWS_AS(eval_mod(f, {1, 2}, f7), ArityError);
}

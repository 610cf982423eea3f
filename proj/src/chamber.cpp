#include "k3lab/chamber.hpp"

#include <algorithm>

namespace k3lab {

GramLattice2 nodal_lattice() { return GramLattice2(4, 0, -2); }

WallSet nodal_walls() {
    // (0,-1) is the exceptional curve E, (2,3) is 2H - 3E; (3,2) = 3H - 2E
    // lies strictly inside the chamber 0 < y < 4x/3
    return WallSet{{LatVec(0, -1), LatVec(2, 3)}, LatVec(3, 2)};
}

LatVec reflect(const GramLattice2& L, const LatVec& delta, const LatVec& x) {
    if (L.norm(delta) != -2) {
        throw NonRootError("reflection vector must have square -2, got " +
                           L.norm(delta).get_str());
    }
    Int pairing = L.inner(x, delta);
    return x + delta.scaled(pairing);
}

bool contains_up_to_sign(const std::vector<LatVec>& vs, const LatVec& x) {
    for (const auto& v : vs) {
        if (v == x || v == -x) return true;
    }
    return false;
}

std::vector<LatVec> roots(const GramLattice2& L, long coeff_bound, bool pell) {
    if (coeff_bound < 1) throw DomainError("coefficient bound must be positive");
    if (L.signature2() != std::pair<int, int>(1, 1)) {
        throw DomainError("root enumeration needs a hyperbolic lattice");
    }
    std::vector<LatVec> out;
    auto push_normalized = [&out](LatVec v) {
        if (v.u < 0 || (v.u == 0 && v.v < 0)) v = -v;
        if (!contains_up_to_sign(out, v)) out.push_back(v);
    };
    if (!pell) {
        for (long u = -coeff_bound; u <= coeff_bound; ++u) {
            for (long v = -coeff_bound; v <= coeff_bound; ++v) {
                LatVec x{u, v};
                if (L.norm(x) == -2) push_normalized(x);
            }
        }
        std::sort(out.begin(), out.end(), [](const LatVec& l, const LatVec& r) {
            return std::array<Int, 2>{l.u, l.v} < std::array<Int, 2>{r.u, r.v};
        });
        return out;
    }
    // Complete enumeration up to the unit action. The form a u^2 + 2b uv +
    // c v^2 = -2 lifts through X = a u + b v, Y = v to X^2 - (b^2-ac) Y^2 =
    // -2a; supported when b^2 - ac = 2 f^2.
    Int disc = L.b() * L.b() - L.a() * L.c();
    Int f = isqrt(disc / 2);
    if (L.a() == 0 || disc <= 0 || 2 * f * f != disc) {
        throw DomainError("pell root enumeration supports positive discriminant 2*f^2 only");
    }
    for (const auto& s : solve_pell_like(-2 * L.a())) {
        // X = s.x, f*Y = s.y; u = (X - b Y)/a, v = Y
        if (s.y % f != 0) continue;
        Int v = s.y / f;
        Int num = s.x - L.b() * v;
        if (num % L.a() != 0) continue;
        push_normalized(LatVec{num / L.a(), v});
    }
    std::sort(out.begin(), out.end(), [](const LatVec& l, const LatVec& r) {
        return std::array<Int, 2>{l.u, l.v} < std::array<Int, 2>{r.u, r.v};
    });
    return out;
}

bool is_ample_nodal(const Int& x, const Int& y) { return y > 0 && 3 * y < 4 * x; }

ReduceResult reduce_to_ample(const GramLattice2& L, const WallSet& walls, LatVec x,
                             long step_limit) {
    if (step_limit < 1) throw DomainError("step limit must be positive");
    if (L.norm(x) <= 0) {
        throw DomainError("chamber reduction needs a class of positive square");
    }
    if (L.norm(walls.reference) <= 0) {
        throw DomainError("reference direction must have positive square");
    }
    // orient every wall toward the reference chamber
    std::vector<LatVec> oriented;
    for (const auto& w : walls.walls) {
        if (L.norm(w) != -2) throw NonRootError("wall must have square -2");
        Int pr = L.inner(walls.reference, w);
        if (pr == 0) throw DomainError("reference direction lies on a wall");
        oriented.push_back(pr > 0 ? w : -w);
    }
    ReduceResult res;
    // positive-cone normalization: flip to the side of the reference
    if (L.inner(x, walls.reference) < 0) {
        x = -x;
        res.negated = true;
    }
    for (long step = 0; step <= step_limit; ++step) {
        int worst = -1;
        Int worst_pairing = 0;
        for (size_t i = 0; i < oriented.size(); ++i) {
            Int p = L.inner(x, oriented[i]);
            if (p < worst_pairing) {
                worst_pairing = p;
                worst = static_cast<int>(i);
            }
        }
        if (worst < 0) {
            res.reduced = x;
            res.interior = true;
            for (const auto& w : oriented) {
                if (L.inner(x, w) == 0) res.interior = false;
            }
            return res;
        }
        x = reflect(L, oriented[worst], x);
        res.word.push_back(worst);
    }
    throw StepLimitError("chamber reduction exceeded the step limit; wall set is "
                         "likely not a chamber boundary");
}

AmpleSearch ample_search_2d(long d) {
    if (d <= 2) throw DomainError("ample class search needs d > 2");
    AmpleSearch out;
    // class x H - y E has square 4x^2 - 2y^2 = 2d; in the classical Pell
    // orientation X^2 - 2 Y^2 = -d with (X, Y) = (y, x)
    std::vector<PellSolution> orbits = solve_pell_like(Int(-d));
    if (orbits.empty()) {
        out.status = AmpleSearch::Status::no_solution;
        auto r = qr2_mod(d);
        out.reason = r ? "no pell orbit despite residue " + std::to_string(*r)
                       : "2 is not a quadratic residue mod " + std::to_string(d);
        return out;
    }
    GramLattice2 L = nodal_lattice();
    WallSet walls = nodal_walls();
    bool any_primitive = false;
    std::optional<LatVec> best;
    long best_word = 0;
    for (const auto& s : orbits) {
        LatVec cls{s.y, s.x};  // x0 = Y, y0 = X
        if (cls.is_zero() || !is_primitive(cls)) continue;
        any_primitive = true;
        ReduceResult red = reduce_to_ample(L, walls, cls);
        if (!red.interior) continue;  // boundary classes fail strict ampleness
        if (!best || std::array<Int, 2>{red.reduced.u, red.reduced.v} <
                         std::array<Int, 2>{best->u, best->v}) {
            best = red.reduced;
            best_word = static_cast<long>(red.word.size());
        }
    }
    if (!any_primitive) {
        out.status = AmpleSearch::Status::no_primitive_solution;
        out.reason = "pell orbits exist but none is primitive";
        return out;
    }
    if (!best) {
        out.status = AmpleSearch::Status::no_solution;
        out.reason = "primitive orbits reduce to the chamber boundary only";
        return out;
    }
    out.status = AmpleSearch::Status::found;
    out.witness = *best;
    out.word_length = best_word;
    return out;
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    Mat2 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    return out;
}

LatVec mat_apply(const Mat2& m, const LatVec& v) {
    return {m[0][0] * v.u + m[0][1] * v.v, m[1][0] * v.u + m[1][1] * v.v};
}

Mat2 involution_pullback(const Int& e) {
    if (e <= 4) throw DomainError("involution pullback defined for e > 4");
    // H -> -H + eC, C -> C. Uniqueness: an isometry sending H to aH + bC
    // and fixing C preserves H.C = e and H^2 = 4, which forces
    // a^2 (8 - e^2) = 8 - e^2, so a = -1, b = e is the only nontrivial case.
    Mat2 m{{{Int(-1), Int(0)}, {e, Int(1)}}};
    GramLattice2 L(4, e, 2);
    LatVec h{1, 0}, c{0, 1};
    LatVec ih = mat_apply(m, h), ic = mat_apply(m, c);
    if (L.norm(ih) != 4 || L.inner(ih, ic) != e || ic != c) {
        throw InconsistentError("pullback fails to preserve the form");
    }
    if (mat_apply(m, ih) != h) throw InconsistentError("pullback fails to square to identity");
    return m;
}

GenusTwoAmple verify_genus2_ample(const Int& e) {
    // root delta = aH + bC orthogonal to C: e a + 2 b = 0 and
    // 4a^2 + 2e ab + 2b^2 = -2 combine to a^2 (e^2 - 8) = 4
    GenusTwoAmple out;
    Int d = e * e - 8;
    if (d > 0 && is_square(d)) {
        Int s = isqrt(d);
        // a^2 d = 4 needs a = 2/s
        if (s == 1 || s == 2) {
            Int a = 2 / s;
            Int eb = -e * a;
            if (eb % 2 == 0) {
                out.ample = false;
                out.obstruction = LatVec{a, eb / 2};
                return out;
            }
        }
    }
    out.ample = true;
    return out;
}

long nikulin_bound(const FixedLocusDescriptor& desc) {
    switch (desc.kind) {
        case FixedLocusDescriptor::Kind::symplectic:
            return 9;
        case FixedLocusDescriptor::Kind::nonsymplectic_empty:
        case FixedLocusDescriptor::Kind::nonsymplectic_two_elliptic:
            return 10;
        case FixedLocusDescriptor::Kind::nonsymplectic_curves:
            if (desc.p_a < 0 || desc.k < 0) throw DomainError("p_a and k must be nonnegative");
            return 11 - desc.p_a + desc.k;
    }
    throw DomainError("unreachable fixed-locus kind");
}

}  // namespace k3lab

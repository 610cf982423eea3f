#include "k3lab/claims.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "k3lab/counting.hpp"
#include "k3lab/zeta.hpp"

namespace k3lab {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw InconsistentError(msg); }

void expect(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
}

std::string istr(const Int& v) { return v.get_str(); }

MultiPoly random_homogeneous(const VarContext& vc, int degree, int terms, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> var_pick(0, static_cast<int>(vc.arity()) - 1);
    std::uniform_int_distribution<long> coef_pick(-9, 9);
    MultiPoly out(vc);
    for (int t = 0; t < terms; ++t) {
        Exps e(vc.arity(), 0);
        for (int u = 0; u < degree; ++u) e[var_pick(rng)]++;
        long c = coef_pick(rng);
        out.add_term(e, c == 0 ? 1 : c);
    }
    if (out.is_zero()) {
        Exps e(vc.arity(), 0);
        e[0] = degree;
        out.add_term(e, 1);
    }
    return out;
}

// term-by-term product evaluator, deliberately free of the chart/Horner
// machinery the counting kernels use
long naive_eval(const MultiPoly& f, const std::vector<long>& pt, const FqContext& ctx) {
    long acc = 0;
    for (const auto& [exps, coef] : f.terms()) {
        long m = ctx.from_int(coef);
        for (size_t i = 0; i < exps.size(); ++i)
            for (int e = 0; e < exps[i]; ++e) m = ctx.mul(m, pt[i]);
        acc = ctx.add(acc, m);
    }
    return acc;
}

// each projective point has q-1 affine representatives, and each (point, w)
// pair of the weighted cover likewise; dividing restores the point count
long oracle_double_cover(const MultiPoly& f, const FqContext& ctx) {
    long q = ctx.q(), pairs = 0;
    for (long x = 0; x < q; ++x)
        for (long y = 0; y < q; ++y)
            for (long z = 0; z < q; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                long v = naive_eval(f, {x, y, z}, ctx);
                for (long w = 0; w < q; ++w)
                    if (ctx.mul(w, w) == v) ++pairs;
            }
    return pairs / (q - 1);
}

long oracle_hypersurface_p3(const MultiPoly& F, const FqContext& ctx) {
    long q = ctx.q(), zeros = 0;
    for (long x = 0; x < q; ++x)
        for (long y = 0; y < q; ++y)
            for (long z = 0; z < q; ++z)
                for (long w = 0; w < q; ++w) {
                    if (x == 0 && y == 0 && z == 0 && w == 0) continue;
                    if (naive_eval(F, {x, y, z, w}, ctx) == 0) ++zeros;
                }
    return zeros / (q - 1);
}

std::vector<long> expected_dlist() {
    return {7, 14, 17, 23, 31, 34, 41, 46, 47, 49, 62, 71, 73, 79, 82, 89, 94, 97, 98};
}

// ---- claim bodies ----------------------------------------------------

std::string claim_lattice_products(const ClaimContext& cc) {
    const SurfaceFixture& x4 = cc.fixture("X4");
    const GramLattice2& L = *x4.lattice;
    LatVec K = x4.named_class("K"), D = x4.named_class("D"), iD = x4.named_class("iD");
    Int k2 = L.norm(K), kd = L.inner(K, D), kid = L.inner(K, iD);
    expect(k2 == 8, "K^2 = " + istr(k2) + ", want 8");
    expect(kd == 1, "K.D = " + istr(kd) + ", want 1");
    expect(kid == 103, "K.(pullback D) = " + istr(kid) + ", want 103");
    Mat2 M = involution_pullback(L.b());
    expect(mat_apply(M, D) == iD, "pullback matrix does not send D to the stored class");
    expect(L.genus_of_class(x4.named_class("C")) == 2, "C must have genus 2");
    return "K^2=8 K.D=1 K.iD=103 pullback(D)=(-2,9) genus(C)=2";
}

std::string claim_gram_determinants(const ClaimContext& cc) {
    struct Row {
        const char* fixture;
        long want;
    };
    std::ostringstream os;
    for (Row r : {Row{"X4", -17}, Row{"X6", -24}, Row{"Xprime", -8}}) {
        const SurfaceFixture& fx = cc.fixture(r.fixture);
        Int det = fx.lattice->determinant();
        expect(det == r.want, std::string(r.fixture) + " det = " + istr(det) + ", want " +
                                  std::to_string(r.want));
        os << (os.tellp() > 0 ? " " : "") << "det[" << fx.lattice->to_string() << "]=" << det;
    }
    return os.str();
}

std::string claim_certificates(const ClaimContext& cc) {
    BinaryForm f452 = BinaryForm::from_lattice(*cc.fixture("X4").lattice);
    RepResult r = represents(f452, 6);
    expect(r.verdict == RepResult::Verdict::obstruction && r.cert &&
               r.cert->kind == ObstructionCert::Kind::modular,
           "[4 5 2] vs 6 did not yield a modular certificate");
    expect(r.cert->modulus == 9,
           "[4 5 2] vs 6 certificate modulus " + istr(r.cert->modulus) + ", want 9");

    BinaryForm f662 = BinaryForm::from_lattice(*cc.fixture("X6").lattice);
    expect(excludes_residue_mod(f662, 6, 4), "[6 6 2] fails to exclude residue 4 mod 6");

    long family = 0;
    for (long d = 4; d <= 10000; ++d) {
        ObstructionCert cert = no_minus_two_for_family(d);
        if (cert.kind != ObstructionCert::Kind::factorization)
            fail("family certificate for d=" + std::to_string(d) + " has the wrong kind");
        ++family;
    }
    return "modulus9_cert=yes modulus6_family=yes minus2_family_certs=" + std::to_string(family);
}

std::string claim_witness_search(const ClaimContext&) {
    BinaryForm F{4, 18, 2};  // lattice [4 9 2]
    std::vector<RepWitness> ws = all_witnesses(F, 6, 1000);
    std::vector<std::pair<long, long>> got;
    for (const auto& w : ws) {
        expect(w.verifies(F), "witness fails to verify");
        got.emplace_back(w.x.get_si(), w.y.get_si());
    }
    std::vector<std::pair<long, long>> want = {{-22, 5}, {-22, 193}, {22, -193}, {22, -5}};
    if (got != want) {
        std::ostringstream os;
        os << "witness set differs:";
        for (auto [x, y] : got) os << " (" << x << "," << y << ")";
        fail(os.str());
    }
    RepResult r = represents(F, 6);
    expect(r.verdict == RepResult::Verdict::witness && r.witness && r.witness->x == 22 &&
               r.witness->y == -5,
           "minimal witness is not (22,-5)");
    return "witnesses={(-22,5),(-22,193),(22,-193),(22,-5)} minimal=(22,-5)";
}

std::string claim_dlist(const ClaimContext&) {
    std::vector<long> got = d_list(100), want = expected_dlist();
    if (got != want) {
        std::ostringstream os;
        os << "d_list(100) differs:";
        for (long d : got) os << " " << d;
        fail(os.str());
    }
    return "d_list(100) has 19 entries, first=7 last=98";
}

std::string claim_ample_sweep(const ClaimContext&) {
    GramLattice2 L = nodal_lattice();
    std::vector<long> dlv = expected_dlist();
    std::set<long> dl(dlv.begin(), dlv.end());
    long found = 0, rejected = 0;
    for (long d = 3; d <= 100; ++d) {
        AmpleSearch s = ample_search_2d(d);
        if (dl.count(d)) {
            expect(s.status == AmpleSearch::Status::found,
                   "d=" + std::to_string(d) + " in the list but search failed: " + s.reason);
            expect(L.norm(s.witness) == 2 * d,
                   "d=" + std::to_string(d) + " witness has wrong square");
            expect(is_primitive(s.witness), "d=" + std::to_string(d) + " witness imprimitive");
            expect(is_ample_nodal(s.witness.u, s.witness.v),
                   "d=" + std::to_string(d) + " witness not strictly ample");
            ++found;
        } else {
            expect(s.status != AmpleSearch::Status::found,
                   "d=" + std::to_string(d) + " not in the list but search found " +
                       s.witness.to_string());
            ++rejected;
        }
    }
    return "found=" + std::to_string(found) + " rejected=" + std::to_string(rejected);
}

std::string claim_property_suite(const ClaimContext& cc) {
    std::mt19937_64 rng(20260815);
    std::uniform_int_distribution<long> coord(-100, 100);

    // reflections: isometry and involution in three lattices with a root
    struct Pair {
        GramLattice2 L;
        LatVec root;
    };
    std::vector<Pair> pairs = {{nodal_lattice(), {0, -1}},
                               {nodal_lattice(), {2, 3}},
                               {*cc.fixture("X4").lattice, {2, -1}}};
    for (const auto& pr : pairs)
        expect(pr.L.norm(pr.root) == -2, "reflection lattice root does not square to -2");
    for (int i = 0; i < 1000; ++i) {
        const Pair& pr = pairs[i % pairs.size()];
        LatVec x{coord(rng), coord(rng)}, y{coord(rng), coord(rng)};
        LatVec sx = reflect(pr.L, pr.root, x), sy = reflect(pr.L, pr.root, y);
        expect(pr.L.inner(sx, sy) == pr.L.inner(x, y), "reflection is not an isometry");
        expect(reflect(pr.L, pr.root, sx) == x, "reflection is not an involution");
    }

    // Pell solver against an exhaustive scan over |x| <= 2000
    long pell_checked = 0;
    for (long m = -200; m <= 200; ++m) {
        if (m == 0) continue;
        std::vector<PellSolution> reps = solve_pell_like(m);
        for (size_t a = 0; a < reps.size(); ++a) {
            expect(reps[a].verifies(), "orbit representative fails its equation");
            for (size_t b = a + 1; b < reps.size(); ++b)
                expect(!pell_same_orbit(reps[a], reps[b]), "duplicate orbit representatives");
        }
        for (long x = 0; x <= 2000; ++x) {
            long t = x * x - m;
            if (t < 0 || t % 2) continue;
            long y = static_cast<long>(std::sqrt(static_cast<double>(t / 2)));
            while (y * y < t / 2) ++y;
            if (y * y != t / 2) continue;
            for (auto [sx, sy] : std::initializer_list<std::pair<long, long>>{
                     {x, y}, {x, -y}, {-x, y}, {-x, -y}}) {
                PellSolution s{sx, sy, m};
                if (!s.verifies()) continue;
                int hits = 0;
                for (const auto& r : reps)
                    if (pell_same_orbit(s, r)) ++hits;
                expect(hits == 1, "solution (" + std::to_string(sx) + "," + std::to_string(sy) +
                                      ") of m=" + std::to_string(m) + " matched " +
                                      std::to_string(hits) + " orbits");
            }
        }
        ++pell_checked;
    }

    // evaluation is a ring homomorphism
    VarContext v3({"x", "y", "z"});
    std::uniform_int_distribution<long> small(-5, 5);
    std::uniform_int_distribution<int> deg_pick(1, 4);
    for (int i = 0; i < 1000; ++i) {
        MultiPoly f = random_homogeneous(v3, deg_pick(rng), 4, rng);
        MultiPoly g = random_homogeneous(v3, deg_pick(rng), 4, rng);
        std::vector<Int> pt = {small(rng), small(rng), small(rng)};
        expect((f + g).eval(pt) == f.eval(pt) + g.eval(pt), "evaluation breaks addition");
        expect((f * g).eval(pt) == f.eval(pt) * g.eval(pt), "evaluation breaks multiplication");
    }

    // Euler identity for homogeneous forms
    for (int i = 0; i < 1000; ++i) {
        int d = deg_pick(rng);
        MultiPoly f = random_homogeneous(v3, d, 5, rng);
        std::vector<MultiPoly> df = partials(f);
        MultiPoly sum(v3);
        for (size_t j = 0; j < df.size(); ++j) sum = sum + MultiPoly::variable(v3, j) * df[j];
        expect(sum == f.scaled(d), "Euler identity fails");
    }

    return "reflections=1000 pell_m=" + std::to_string(pell_checked) +
           " eval_hom=1000 euler=1000";
}

std::string claim_symbolic(const ClaimContext& cc) {
    const SurfaceFixture& xp = cc.fixture("Xprime");
    MultiPoly b = branch_sextic(xp.poly("f2"), xp.poly("f3"), xp.poly("f4"));
    Exps x6(3, 0);
    x6[0] = 6;
    Int c = b.coefficient(x6);
    expect(c == 124, "branch sextic x^6 coefficient = " + istr(c) + ", want 124");

    const SurfaceFixture& x4 = cc.fixture("X4");
    MultiPoly g44 = x4.poly("segre.cprime") * x4.poly("segre.dprime");
    SegreTransfer tr = segre_transfer(g44);
    MultiPoly nf = xw_eliminate(x4.poly("surface"));
    std::string scalar;
    if (tr.F == nf) {
        scalar = "+1";
    } else if (tr.F == nf.scaled(-1)) {
        scalar = "-1";
    } else {
        fail("Segre transfer does not match the quartic normal form up to sign");
    }
    return "branch_x6_coeff=124 segre_scalar=" + scalar;
}

std::string claim_pointwise_geometry(const ClaimContext& cc) {
    const SurfaceFixture& x4 = cc.fixture("X4");
    const SurfaceFixture& x6 = cc.fixture("X6");
    std::ostringstream os;

    FqContext f11(11, 1);
    std::vector<MultiPoly> x4surf = {x4.poly("surface")};
    ContainmentResult c = containment_check(x4.poly_group("curve.C."), x4surf, f11);
    expect(c.contained, "curve C leaves X4 at " +
                            (c.counterexample ? c.counterexample->to_string() : "?"));
    ContainmentResult d = containment_check(x4.poly_group("curve.D."), x4surf, f11);
    expect(d.contained, "curve D leaves X4");
    os << "C_pts=" << c.curve_points << " D_pts=" << d.curve_points;

    std::vector<MultiPoly> x6surf = x6.poly_group("surface.");
    for (long p : {7L, 11L}) {
        FqContext fp(p, 1);
        ContainmentResult c6 = containment_check(x6.poly_group("curve.C6."), x6surf, fp);
        expect(c6.contained, "curve C6 leaves X6 at p=" + std::to_string(p));
        os << " C6_pts_p" << p << "=" << c6.curve_points;
    }

    std::vector<MultiPoly> invs = x4.poly_group("inv.");
    expect(invs.size() == 4, "involution needs 4 components");
    InvolutionReport ir =
        involution_check({invs[0], invs[1], invs[2], invs[3]}, x4.poly("surface"), f11);
    expect(ir.ok(), "involution check failed: " + ir.to_string() +
                        (ir.first_failure ? " at " + ir.first_failure->to_string() : ""));
    os << " inv[" << ir.to_string() << "]";

    std::vector<MultiPoly> cov = x4.poly_group("cover.");
    expect(cov.size() == 3, "cover map needs 3 components");
    CoverReport cr =
        double_cover_map_check({cov[0], cov[1], cov[2]}, x4.poly("branch"), x4.poly("surface"), f11);
    expect(cr.ok(), "double cover check failed: " + cr.to_string() +
                        (cr.first_failure ? " at " + cr.first_failure->to_string() : ""));
    os << " cover[" << cr.to_string() << "]";
    return os.str();
}

std::string claim_singular_scans(const ClaimContext& cc) {
    std::ostringstream os;

    const SurfaceFixture& xp = cc.fixture("Xprime");
    MultiPoly quartic = nodal_quartic_from(xp);
    FqContext f11(11, 1);
    std::vector<ProjPoint> sing = singular_search({quartic}, f11);
    ProjPoint node{{0, 0, 0, 1}};
    bool node_found = false;
    for (const auto& pt : sing) node_found = node_found || pt == node;
    expect(node_found, "node (0:0:0:1) not found on the nodal quartic mod 11");
    os << "xprime_p11_singular=" << sing.size() << " node_found=yes";

    const SurfaceFixture& x4 = cc.fixture("X4");
    for (long p : x4.scan_primes) {
        for (int k = 1; k <= 2; ++k) {
            FqContext fq(p, k);
            auto s = singular_search({x4.poly("surface")}, fq);
            expect(s.empty(), "X4 has a singular point mod " + std::to_string(p) + " k=" +
                                  std::to_string(k) +
                                  (s.empty() ? "" : " at " + s.front().to_string()));
            os << " x4_p" << p << "k" << k << "=0";
        }
    }

    const SurfaceFixture& x6 = cc.fixture("X6");
    std::vector<MultiPoly> x6surf = x6.poly_group("surface.");
    for (long p : x6.scan_primes) {
        for (int k = 1; k <= 2; ++k) {
            FqContext fq(p, k);
            auto s = singular_search(x6surf, fq);
            expect(s.empty(), "X6 has a singular point mod " + std::to_string(p) + " k=" +
                                  std::to_string(k) +
                                  (s.empty() ? "" : " at " + s.front().to_string()));
            os << " x6_p" << p << "k" << k << "=0";
        }
    }

    // p=11 is deliberately absent from the X6 scan list: the reduction is
    // singular there. Show the offending point rather than hiding the gap.
    FqContext f11b(11, 1);
    auto bad = singular_search(x6surf, f11b);
    os << " x6_p11_excluded_singular=" << bad.size();
    if (!bad.empty()) os << " at " << bad.front().to_string();
    expect(!bad.empty(), "X6 mod 11 scan came back clean; its exclusion from scanprimes is stale");
    return os.str();
}

std::string claim_counting_oracles(const ClaimContext& cc) {
    std::mt19937_64 rng(4242424242ULL);
    VarContext v3({"x", "y", "z"}), v4({"x", "y", "z", "w"});
    long comparisons = 0;
    std::ostringstream os;

    struct Combo {
        long p;
        int k;
    };
    std::vector<Combo> cover_combos = {{3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}, {7, 2},
                                       {3, 1}, {5, 1}, {7, 2}, {5, 2}};
    for (size_t i = 0; i < cover_combos.size(); ++i) {
        FqContext ctx(cover_combos[i].p, cover_combos[i].k);
        MultiPoly f = random_homogeneous(v3, 6, 10, rng);
        long fast = count_double_cover(f, ctx);
        long serial = count_double_cover(f, ctx, ExecMode::serial);
        long slow = oracle_double_cover(f, ctx);
        expect(fast == slow && serial == slow,
               "double cover count mismatch at q=" + std::to_string(ctx.q()) + ": kernel " +
                   std::to_string(fast) + ", serial " + std::to_string(serial) + ", oracle " +
                   std::to_string(slow));
        ++comparisons;
    }

    std::vector<Combo> hyper_combos = {{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1},
                                       {5, 2}, {7, 1}, {7, 2}, {3, 2}, {5, 1}};
    for (size_t i = 0; i < hyper_combos.size(); ++i) {
        FqContext ctx(hyper_combos[i].p, hyper_combos[i].k, true);
        MultiPoly F = random_homogeneous(v4, 4, 12, rng);
        long fast = count_hypersurface_p3(F, ctx);
        long serial = count_hypersurface_p3(F, ctx, ExecMode::serial);
        long slow = oracle_hypersurface_p3(F, ctx);
        expect(fast == slow && serial == slow,
               "hypersurface count mismatch at q=" + std::to_string(ctx.q()) + ": kernel " +
                   std::to_string(fast) + ", serial " + std::to_string(serial) + ", oracle " +
                   std::to_string(slow));
        ++comparisons;
    }

    const SurfaceFixture& x2 = cc.fixture("X2");
    FqContext f5(5, 1);
    long n = count_double_cover(x2.poly("sextic"), f5);
    long n_oracle = oracle_double_cover(x2.poly("sextic"), f5);
    expect(n == n_oracle, "fixture sextic count disagrees with the oracle");
    expect(n == 31, "double sextic count at p=5 is " + std::to_string(n) + ", want 31");
    ++comparisons;

    os << "comparisons=" << comparisons << " all_equal serial_matches_parallel x2_p5_count=31";
    return os.str();
}

std::string claim_zeta_roundtrip(const ClaimContext&) {
    std::mt19937_64 rng(777001);
    std::vector<long> primes = {3, 5, 7, 11, 13};
    long detected = 0;
    for (int trial = 0; trial < 100; ++trial) {
        long p = primes[rng() % primes.size()];
        std::vector<Int> coeffs = {1};
        long deg = 0;
        while (deg < 22) {
            long n = 1 + static_cast<long>(rng() % 12);
            std::vector<Int> g = scaled_cyclotomic(n, p);
            long gd = static_cast<long>(g.size()) - 1;
            if (gd > 22 - deg) continue;
            coeffs = poly_mul(coeffs, g);
            deg += gd;
        }
        WeilPolynomial W;
        W.p = p;
        W.coefficients = coeffs;

        Int p22;
        mpz_ui_pow_ui(p22.get_mpz_t(), p, 22);
        int sign = coeffs[22] == p22 ? +1 : (coeffs[22] == -p22 ? -1 : 0);
        expect(sign != 0, "synthetic polynomial has a non-Weil constant term");

        std::vector<Int> counts = counts_from_weil(W, 11);
        // synthetic eigenvalue sets need not give nonnegative counts, so
        // invert N_k = 1 + a_k + p^2k directly instead of through the
        // physical-count entry point
        std::vector<Int> traces;
        Int pk2 = 1;
        for (size_t i = 0; i < counts.size(); ++i) {
            pk2 *= Int(p) * Int(p);
            traces.push_back(counts[i] - 1 - pk2);
        }
        std::vector<Int> prefix = newton_charpoly(traces);
        expect(prefix.size() == 12, "Newton prefix has wrong length");
        for (int i = 0; i <= 11; ++i)
            expect(prefix[i] == coeffs[i], "Newton coefficient " + std::to_string(i) +
                                               " mismatch on trial " + std::to_string(trial));
        WeilPolynomial back = apply_functional_equation(p, prefix, sign);
        expect(back.coefficients == coeffs, "functional equation fails to reconstruct trial " +
                                                std::to_string(trial));
        if (prefix[11] != 0) {
            WeilPolynomial auto_back = apply_functional_equation(p, prefix, 0);
            expect(auto_back.coefficients == coeffs && auto_back.sign == sign,
                   "sign detection failed on trial " + std::to_string(trial));
            ++detected;
        }
    }

    WeilPolynomial all7;
    all7.p = 7;
    all7.coefficients = {1};
    for (int i = 0; i < 22; ++i) all7.coefficients = poly_mul(all7.coefficients, {1, -7});
    long b22 = picard_upper_bound(all7);
    expect(b22 == 22, "picard bound of (T-7)^22 is " + std::to_string(b22));

    // rank-2 plant: (T-7)^2 times a monic factor with no unit-root divisor
    Int q19, q20;
    mpz_ui_pow_ui(q19.get_mpz_t(), 7, 19);
    mpz_ui_pow_ui(q20.get_mpz_t(), 7, 20);
    std::vector<Int> Q(21, 0);
    Q[0] = 1;
    Q[19] = q19;
    Q[20] = 3 * q20;
    WeilPolynomial planted;
    planted.p = 7;
    planted.coefficients = poly_mul(poly_mul({1, -7}, {1, -7}), Q);
    long b2 = picard_upper_bound(planted);
    expect(b2 == 2, "picard bound of the planted rank-2 polynomial is " + std::to_string(b2));

    return "roundtrips=100 signs_detected=" + std::to_string(detected) +
           " picard_T-p_22=22 picard_planted=2";
}

std::string claim_two_prime_descent(const ClaimContext& cc) {
    const SurfaceFixture& x2 = cc.fixture("X2");
    expect(x2.reductions.size() >= 2, "double sextic fixture needs two reduction rows");
    const ReductionRow& r1 = x2.reductions[0];
    const ReductionRow& r2 = x2.reductions[1];
    long rho = compare_reductions(r1.rank, r1.disc_class, r2.rank, r2.disc_class);
    expect(rho == 1, "descent gives rho <= " + std::to_string(rho) + ", want 1");
    return "p" + std::to_string(r1.p) + ":rank=" + std::to_string(r1.rank) + ",disc=" +
           istr(r1.disc_class) + " p" + std::to_string(r2.p) + ":rank=" +
           std::to_string(r2.rank) + ",disc=" + istr(r2.disc_class) + " rho_upper=1";
}

std::string claim_h2d_table(const ClaimContext&) {
    std::vector<H2dRow> rows = h2d_table(100);
    expect(rows.size() == 100, "table must have 100 rows");
    std::vector<long> dlv = expected_dlist();
    std::set<long> dl(dlv.begin(), dlv.end());
    GramLattice2 L = nodal_lattice();
    long flagged = 0;
    for (const auto& r : rows) {
        expect(r.h == (r.d == 1 ? 1 : 2), "h value wrong at d=" + std::to_string(r.d));
        bool want_flag = r.d <= 4 || dl.count(r.d) > 0;
        expect(r.q_flag == want_flag, "flag wrong at d=" + std::to_string(r.d));
        if (r.q_flag) ++flagged;
        if (r.d > 4 && r.q_flag) {
            expect(r.witness.has_value(), "flagged row misses its witness at d=" +
                                              std::to_string(r.d));
            expect(L.norm(*r.witness) == 2 * r.d && is_primitive(*r.witness) &&
                       is_ample_nodal(r.witness->u, r.witness->v),
                   "witness fails verification at d=" + std::to_string(r.d));
        }
    }
    return "rows=100 flagged=" + std::to_string(flagged) + " witnesses_verified=19";
}

}  // namespace

const SurfaceFixture& ClaimContext::fixture(const std::string& name) const {
    for (const auto& f : fixtures)
        if (f.name == name) return f;
    throw DomainError("fixture not registered: " + name);
}

MultiPoly nodal_quartic_from(const SurfaceFixture& fx) {
    VarContext v4({"x", "y", "z", "w"});
    std::vector<MultiPoly> xyz = {MultiPoly::variable(v4, 0), MultiPoly::variable(v4, 1),
                                  MultiPoly::variable(v4, 2)};
    MultiPoly w = MultiPoly::variable(v4, 3);
    return compose(fx.poly("f4"), xyz) + compose(fx.poly("f3"), xyz) * w +
           compose(fx.poly("f2"), xyz) * w * w;
}

const std::vector<Claim>& claim_registry() {
    static const std::vector<Claim> reg = [] {
        std::vector<Claim> r;
        r.push_back({"01-lattice-products",
                     "intersection numbers of K, D and the pulled-back D in [4 5 2]", 1.0, "",
                     claim_lattice_products});
        r.push_back({"02-gram-determinants", "Picard lattice determinants -17, -24, -8", 0.0, "",
                     claim_gram_determinants});
        r.push_back({"03-nonrepresentation-certificates",
                     "modular and factorization certificates for excluded values", 1000.0, "",
                     claim_certificates});
        r.push_back({"04-witness-search", "exhaustive witness set of [4 9 2] at value 6", 5000.0,
                     "", claim_witness_search});
        r.push_back({"05-dlist", "square-root-of-2 modulus list up to 100", 1000.0, "",
                     claim_dlist});
        r.push_back({"06-ample-search-sweep",
                     "primitive ample classes of square 2d exactly on the d-list", 10000.0, "",
                     claim_ample_sweep});
        r.push_back({"07-property-suite",
                     "reflection, Pell-vs-scan, evaluation and Euler properties", 0.0, "",
                     claim_property_suite});
        r.push_back({"08-symbolic-constructions",
                     "branch sextic coefficient and Segre transfer of the quartic", 1000.0, "",
                     claim_symbolic});
        r.push_back({"09-pointwise-geometry",
                     "curves, involution and cover map on the finite-field points", 60000.0, "",
                     claim_pointwise_geometry});
        r.push_back({"10-singular-scans", "node detection and smoothness scans", 120000.0, "",
                     claim_singular_scans});
        r.push_back({"11-counting-oracles", "kernel counts equal naive oracle counts", 120000.0,
                     "", claim_counting_oracles});
        r.push_back({"12-zeta-roundtrip",
                     "synthetic Weil polynomial reconstruction and unit-root bounds", 30000.0, "",
                     claim_zeta_roundtrip});
        r.push_back({"13-two-prime-descent", "rank-2 reductions with distinct square classes",
                     0.0, "", claim_two_prime_descent});
        r.push_back({"14-h2d-table", "polarized-rank table with rational-construction flags",
                     0.0, "", claim_h2d_table});
        r.push_back({"skip-x2-weil-p5",
                     "full degree-22 Frobenius polynomial of the double sextic at p=5", 0.0,
                     "needs point counts over F_{5^k} up to k~10, beyond desk scale; covered "
                     "instead by the counting, zeta-roundtrip and two-prime-descent checks",
                     nullptr});
        r.push_back({"skip-x2-weil-p13",
                     "full degree-22 Frobenius polynomial of the double sextic at p=13", 0.0,
                     "needs point counts over F_{13^k} up to k~10, beyond desk scale; covered "
                     "instead by the counting, zeta-roundtrip and two-prime-descent checks",
                     nullptr});
        return r;
    }();
    return reg;
}

std::vector<ClaimResult> reproduce_all(const std::string& fixture_dir) {
    std::vector<SurfaceFixture> fixtures = load_all_fixtures(fixture_dir);
    ClaimContext cc{fixtures};
    std::vector<ClaimResult> out;
    for (const Claim& c : claim_registry()) {
        ClaimResult res;
        res.id = c.id;
        res.title = c.title;
        if (!c.skip_reason.empty()) {
            res.status = ClaimResult::Status::skipped;
            res.detail = c.skip_reason;
            out.push_back(std::move(res));
            continue;
        }
        auto t0 = std::chrono::steady_clock::now();
        try {
            res.detail = c.run(cc);
            res.status = ClaimResult::Status::pass;
        } catch (const std::exception& e) {
            res.status = ClaimResult::Status::fail;
            res.detail = e.what();
        }
        res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                     .count();
        if (res.status == ClaimResult::Status::pass && c.budget_ms > 0 && res.ms > c.budget_ms) {
            res.status = ClaimResult::Status::fail;
            res.detail += " [exceeded the " + std::to_string(static_cast<long>(c.budget_ms)) +
                          " ms budget]";
        }
        out.push_back(std::move(res));
    }
    return out;
}

namespace {
const char* status_word(ClaimResult::Status s) {
    switch (s) {
        case ClaimResult::Status::pass: return "PASS";
        case ClaimResult::Status::fail: return "FAIL";
        case ClaimResult::Status::skipped: return "SKIP";
    }
    return "?";
}
}  // namespace

std::string report_text(const std::vector<ClaimResult>& results) {
    std::ostringstream os;
    long pass = 0, failn = 0, skip = 0;
    for (const auto& r : results) {
        os << status_word(r.status) << " " << r.id << ": " << r.detail << "\n";
        if (r.status == ClaimResult::Status::pass) ++pass;
        else if (r.status == ClaimResult::Status::fail) ++failn;
        else ++skip;
    }
    os << "summary: " << pass << " passed, " << failn << " failed, " << skip << " skipped\n";
    return os.str();
}

std::string report_json(const std::vector<ClaimResult>& results) {
    std::ostringstream os;
    long pass = 0, failn = 0, skip = 0;
    os << "{\n  \"claims\": [\n";
    for (size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        auto esc = [](const std::string& s) {
            std::string out;
            for (char c : s) {
                if (c == '"' || c == '\\') out += '\\';
                out += c;
            }
            return out;
        };
        os << "    {\"id\": \"" << esc(r.id) << "\", \"status\": \"" << status_word(r.status)
           << "\", \"title\": \"" << esc(r.title) << "\", \"detail\": \"" << esc(r.detail)
           << "\"}" << (i + 1 < results.size() ? "," : "") << "\n";
        if (r.status == ClaimResult::Status::pass) ++pass;
        else if (r.status == ClaimResult::Status::fail) ++failn;
        else ++skip;
    }
    os << "  ],\n  \"summary\": {\"pass\": " << pass << ", \"fail\": " << failn
       << ", \"skipped\": " << skip << "}\n}\n";
    return os.str();
}

}  // namespace k3lab

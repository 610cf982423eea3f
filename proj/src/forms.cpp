#include "k3lab/forms.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace k3lab {

namespace {

constexpr long kScanCap = 1000000;  // exhaustive residue scans stop here

// ---- arithmetic in Z[sqrt(2)], which is norm-Euclidean ----

struct Zr2 {
    Int a, b;  // a + b*sqrt(2)
};

Int znorm(const Zr2& z) { return z.a * z.a - 2 * z.b * z.b; }

Zr2 zmul(const Zr2& u, const Zr2& v) {
    return {u.a * v.a + 2 * u.b * v.b, u.a * v.b + u.b * v.a};
}

// nearest integer to num/den, den > 0; any nearest value keeps the
// Euclidean remainder bound
Int round_div(const Int& num, const Int& den) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den) q += 1;
    return q;
}

// remainder of u by v with |norm| strictly below |norm(v)|
Zr2 zmod(const Zr2& u, const Zr2& v) {
    Int den = znorm(v);
    Zr2 conj{v.a, -v.b};
    Zr2 num = zmul(u, conj);
    if (den < 0) {
        den = -den;
        num.a = -num.a;
        num.b = -num.b;
    }
    Zr2 k{round_div(num.a, den), round_div(num.b, den)};
    Zr2 kv = zmul(k, v);
    return {u.a - kv.a, u.b - kv.b};
}

Zr2 zgcd(Zr2 u, Zr2 v) {
    while (!(v.a == 0 && v.b == 0)) {
        Zr2 r = zmod(u, v);
        u = v;
        v = r;
    }
    return u;
}

long sum_abs(const PellSolution& s) {
    Int f = abs(s.x) + abs(s.y);
    return to_long(f);
}

PellSolution negate(const PellSolution& s) { return {-s.x, -s.y, s.m}; }

PellSolution sign_normal(const PellSolution& s) {
    if (s.x < 0 || (s.x == 0 && s.y < 0)) return negate(s);
    return s;
}

// Walks the orbit to the element of least |x|+|y|, then picks a canonical
// representative among the at most two minima.
PellSolution canonical_rep(PellSolution s) {
    long guard = 0;
    while (sum_abs(pell_unit_step_back(s)) < sum_abs(s)) {
        s = pell_unit_step_back(s);
        if (++guard > kScanCap) throw StepLimitError("pell orbit walk did not reach a valley");
    }
    while (sum_abs(pell_unit_step(s)) < sum_abs(s)) {
        s = pell_unit_step(s);
        if (++guard > kScanCap) throw StepLimitError("pell orbit walk did not reach a valley");
    }
    std::vector<PellSolution> cand{s};
    if (sum_abs(pell_unit_step(s)) == sum_abs(s)) cand.push_back(pell_unit_step(s));
    if (sum_abs(pell_unit_step_back(s)) == sum_abs(s)) cand.push_back(pell_unit_step_back(s));
    for (auto& c : cand) c = sign_normal(c);
    auto key = [](const PellSolution& t) { return std::array<Int, 3>{abs(t.x) + abs(t.y), t.x, -t.y}; };
    PellSolution best = cand[0];
    for (const auto& c : cand) {
        if (key(c) < key(best)) best = c;
    }
    return best;
}

// Orbit representatives of the primitive solutions of x^2 - 2 y^2 = m.
// Each square root z of 2 mod |m| names the ideal (m, z - sqrt2), whose
// generator solves the norm equation up to unit sign.
std::vector<PellSolution> primitive_orbits(const Int& m) {
    std::vector<PellSolution> out;
    long am = to_long(abs(m));
    for (long z = 0; z < am; ++z) {
        if (((static_cast<std::int64_t>(z) * z - 2) % am + am) % am != 0) continue;
        Zr2 g = zgcd(Zr2{Int(am), 0}, Zr2{Int(z), -1});
        Int ng = znorm(g);
        if (abs(ng) != am) {
            throw InconsistentError("ideal gcd has wrong norm for m=" + m.get_str());
        }
        if (ng != m) g = zmul(g, Zr2{1, 1});  // unit 1+sqrt2 has norm -1
        PellSolution s{g.a, g.b, m};
        if (!s.verifies()) throw InconsistentError("pell generator fails to verify");
        s = canonical_rep(s);
        bool dup = false;
        for (const auto& r : out) dup = dup || pell_same_orbit(r, s);
        if (!dup) out.push_back(s);
    }
    return out;
}

}  // namespace

std::optional<long> qr2_mod(long d) {
    if (d < 1) throw DomainError("qr2_mod needs d >= 1");
    if (d > kScanCap) throw SizeLimitError("qr2_mod scan capped at 10^6");
    for (long y = 0; y < d; ++y) {
        if (((y * y - 2) % d + d) % d == 0) return y;
    }
    return std::nullopt;
}

std::vector<long> d_list(long N) {
    if (N < 3) throw DomainError("d_list needs N >= 3");
    std::vector<long> out;
    for (long d = 3; d <= N; ++d) {
        if (qr2_mod(d)) out.push_back(d);
    }
    return out;
}

PellSolution pell_unit_step(const PellSolution& s) {
    return {3 * s.x + 4 * s.y, 2 * s.x + 3 * s.y, s.m};
}

PellSolution pell_unit_step_back(const PellSolution& s) {
    return {3 * s.x - 4 * s.y, -2 * s.x + 3 * s.y, s.m};
}

bool pell_same_orbit(const PellSolution& s1, const PellSolution& s2) {
    if (s1.m != s2.m || s1.m == 0) return false;
    // quotient (x1 + y1*w)/(x2 + y2*w) is integral iff m divides both parts
    // of (x1 + y1*w)(x2 - y2*w); its norm is then m*m/m^2 = 1, so it is
    // plus or minus an even unit power
    Int pa = s1.x * s2.x - 2 * s1.y * s2.y;
    Int pb = s1.y * s2.x - s1.x * s2.y;
    return pa % s1.m == 0 && pb % s1.m == 0;
}

std::vector<PellSolution> solve_pell_like(const Int& m) {
    if (m == 0) throw DomainError("solve_pell_like needs m != 0");
    if (abs(m) > kScanCap) throw SizeLimitError("solve_pell_like capped at |m| <= 10^6");
    std::vector<PellSolution> out;
    long am = to_long(abs(m));
    for (long e = 1; static_cast<std::int64_t>(e) * e <= am; ++e) {
        if (am % (e * e) != 0) continue;
        for (const auto& s : primitive_orbits(m / (e * e))) {
            out.push_back({e * s.x, e * s.y, m});
        }
    }
    std::sort(out.begin(), out.end(), [](const PellSolution& l, const PellSolution& r) {
        return std::array<Int, 3>{abs(l.x) + abs(l.y), l.x, l.y} <
               std::array<Int, 3>{abs(r.x) + abs(r.y), r.x, r.y};
    });
    return out;
}

namespace {

// witness preference: least |x|+|y|, then least |x|, then positive x, then
// positive y; this pins a single representative of each sign pair
bool witness_better(const RepWitness& a, const RepWitness& b) {
    auto key = [](const RepWitness& w) {
        return std::array<Int, 4>{abs(w.x) + abs(w.y), abs(w.x), -w.x, -w.y};
    };
    return key(a) < key(b);
}

std::optional<RepWitness> bounded_search(const BinaryForm& F, const Int& n, long bound) {
    bool small = F.A.fits_slong_p() && F.B.fits_slong_p() && F.C.fits_slong_p() &&
                 n.fits_slong_p() && bound <= 2000000;
    std::optional<RepWitness> best;
    if (small) {
        const __int128 A = to_long(F.A), B = to_long(F.B), C = to_long(F.C), N = to_long(n);
        for (long s = 0; s <= 2 * bound; ++s) {
            for (long x = -std::min(s, bound); x <= std::min(s, bound); ++x) {
                long ay = s - (x < 0 ? -x : x);
                if (ay > bound) continue;
                for (long y : {ay, -ay}) {
                    if (A * x * x + B * x * y + C * y * y == N) {
                        RepWitness w{x, y, n};
                        if (!best || witness_better(w, *best)) best = w;
                    }
                    if (ay == 0) break;
                }
            }
            if (best) break;  // s is |x|+|y|, so the first hit level is minimal
        }
        return best;
    }
    for (long x = -bound; x <= bound; ++x) {
        for (long y = -bound; y <= bound; ++y) {
            if (F.eval(x, y) == n) {
                RepWitness w{x, y, n};
                if (!best || witness_better(w, *best)) best = w;
            }
        }
    }
    return best;
}

std::vector<long> prime_power_schedule() {
    static const std::vector<long> schedule = [] {
        std::vector<bool> sieve(513, true);
        std::vector<long> pps;
        for (long p = 2; p <= 512; ++p) {
            if (!sieve[p]) continue;
            for (long q = 2 * p; q <= 512; q += p) sieve[q] = false;
            for (long pe = p; pe <= 512; pe *= p) pps.push_back(pe);
        }
        std::sort(pps.begin(), pps.end());
        return pps;
    }();
    return schedule;
}

bool excludes_mod_long(long A, long B, long C, long r, long m) {
    std::vector<char> hit(m, 0);
    for (long x = 0; x < m; ++x) {
        for (long y = 0; y < m; ++y) {
            long v = ((A * x % m) * x + (B * x % m) * y + (C * y % m) * y) % m;
            hit[(v % m + m) % m] = 1;
        }
    }
    return !hit[r];
}

}  // namespace

bool excludes_residue_mod(const BinaryForm& F, long m, const Int& r) {
    if (m < 2 || m > 10000) throw DomainError("modulus must lie in [2, 10^4]");
    auto red = [m](const Int& v) { return to_long(((v % m) + m) % m); };
    return excludes_mod_long(red(F.A), red(F.B), red(F.C), red(r), m);
}

std::optional<Int> modular_certificate(const BinaryForm& F, const Int& n) {
    // The schedule also contains coprime products of two prime powers, but a
    // product excludes n only when one factor does (CRT splits the residue
    // check), so the smallest certifying modulus is always a prime power.
    for (long m : prime_power_schedule()) {
        if (excludes_residue_mod(F, m, n)) return Int(m);
    }
    return std::nullopt;
}

SquareFactorization square_disc_factor(const BinaryForm& F) {
    Int disc = F.disc();
    if (!is_square(disc)) {
        throw NotSquareError("discriminant " + disc.get_str() + " is not a perfect square");
    }
    Int s = isqrt(disc);
    SquareFactorization out;
    auto make_primitive = [](Int p, Int q, Int& content) {
        Int g = gcd(p, q);
        if (g == 0) throw DegenerateError("zero linear factor");
        content = g;
        return LinearForm{p / g, q / g};
    };
    if (F.A != 0) {
        // 4A q = (2Ax + (B-s)y)(2Ax + (B+s)y)
        Int g1, g2;
        LinearForm L1 = make_primitive(2 * F.A, F.B - s, g1);
        LinearForm L2 = make_primitive(2 * F.A, F.B + s, g2);
        Int num = g1 * g2;
        Int den = 4 * F.A;
        if (num % den != 0) throw InconsistentError("square factor content not integral");
        out = {num / den, L1, L2};
    } else if (F.B != 0) {
        // q = y (Bx + Cy)
        Int g;
        LinearForm L2 = make_primitive(F.B, F.C, g);
        out = {g, LinearForm{0, 1}, L2};
    } else {
        // q = C y^2
        if (F.C == 0) throw DegenerateError("zero form has no factorization");
        out = {F.C, LinearForm{0, 1}, LinearForm{0, 1}};
    }
    auto norm_sign = [](LinearForm& L, Int& scale) {
        if (L.p < 0 || (L.p == 0 && L.q < 0)) {
            L.p = -L.p;
            L.q = -L.q;
            scale = -scale;
        }
    };
    norm_sign(out.L1, out.scale);
    norm_sign(out.L2, out.scale);
    auto key = [](const LinearForm& L) { return std::array<Int, 3>{L.p, abs(L.q), -L.q}; };
    if (key(out.L2) < key(out.L1)) std::swap(out.L1, out.L2);
    return out;
}

std::string LinearForm::to_string() const {
    std::string out;
    if (p != 0) {
        out += (p == 1 ? "" : (p == -1 ? "-" : p.get_str() + "*")) + std::string("x");
    }
    if (q != 0) {
        Int aq = abs(q);
        std::string c = (aq == 1 ? "" : aq.get_str() + "*");
        if (out.empty()) {
            out += (q < 0 ? "-" : "") + c + "y";
        } else {
            out += (q < 0 ? " - " : " + ") + c + "y";
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

struct FactorOutcome {
    std::optional<RepWitness> witness;
    ObstructionCert cert;
};

// Solve scale * L1 * L2 = n by enumerating divisor pairs of n/scale.
FactorOutcome factor_stage(const BinaryForm& F, const SquareFactorization& S, const Int& n) {
    FactorOutcome out;
    out.cert.kind = ObstructionCert::Kind::factorization;
    if (n % S.scale != 0) {
        out.cert.detail = "content " + S.scale.get_str() + " of the form does not divide " +
                          n.get_str();
        return out;
    }
    Int target = n / S.scale;
    if (abs(target) > Int("1000000000000")) {
        throw SizeLimitError("divisor enumeration capped at |n/scale| <= 10^12");
    }
    Int det = S.L1.p * S.L2.q - S.L1.q * S.L2.p;
    std::optional<RepWitness> best;
    auto try_pair = [&](const Int& u, const Int& w) {
        if (det == 0) {
            // repeated factor: L1 = L2, so only pairs with u = w can lift;
            // solve p*x + q*y = u through the extended gcd (gcd(p,q) = 1)
            if (u != w) return;
            Int g, xg, yg;
            mpz_gcdext(g.get_mpz_t(), xg.get_mpz_t(), yg.get_mpz_t(), S.L1.p.get_mpz_t(),
                       S.L1.q.get_mpz_t());
            Int x = xg * u, y = yg * u;
            RepWitness wit{x, y, n};
            if (wit.verifies(F) && (!best || witness_better(wit, *best))) best = wit;
            out.cert.divisor_trace.push_back({u, w});
            return;
        }
        Int num_x = u * S.L2.q - w * S.L1.q;
        Int num_y = S.L1.p * w - S.L2.p * u;
        if (num_x % det == 0 && num_y % det == 0) {
            RepWitness wit{num_x / det, num_y / det, n};
            if (wit.verifies(F) && (!best || witness_better(wit, *best))) best = wit;
        }
        out.cert.divisor_trace.push_back({u, w});
    };
    if (target == 0) {
        // any zero of L1 works
        try_pair(0, 1);
        try_pair(1, 0);
        try_pair(0, 0);
    } else {
        for (Int d = 1; d * d <= abs(target); ++d) {
            if (target % d != 0) continue;
            Int cod = target / d;
            try_pair(d, cod);
            try_pair(-d, -cod);
            if (d != abs(cod)) {
                try_pair(cod, d);
                try_pair(-cod, -d);
            }
        }
    }
    out.witness = best;
    if (!best) {
        out.cert.detail = "no divisor pair of " + target.get_str() +
                          " lifts to integer coordinates";
    }
    return out;
}

// squarefree part: disc = f^2 * d0 with d0 squarefree
std::pair<Int, Int> squarefree_split(Int v) {
    Int f = 1, d0 = 1;
    for (Int p = 2; p * p <= v; ++p) {
        if (v % p != 0) continue;
        int e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) f *= p;
        if (e % 2) d0 *= p;
        if (p > 1000000) throw SizeLimitError("discriminant too large to factor");
    }
    d0 *= v;
    return {f, d0};
}

struct PellStageResult {
    std::optional<RepWitness> witness;
    std::optional<ObstructionCert> cert;
    std::string note;
};

// q = n lifts to u^2 - 2 w^2 = 4An with u = 2Ax + By, w = f y, through
// disc = 2 f^2. Orbits are filtered by the congruences that make (x, y)
// integral; the unit action has finite order mod 2|A|f, so one period of
// each orbit decides existence.
PellStageResult pell_stage(const BinaryForm& F, const Int& n, const Int& f) {
    PellStageResult out;
    Int N = 4 * F.A * n;
    if (N == 0) {
        out.note = "pell stage skipped for target 0";
        return out;
    }
    if (abs(N) > Int(kScanCap)) {
        out.note = "pell stage skipped: |4An| exceeds the descent cap";
        return out;
    }
    std::vector<PellSolution> orbits = solve_pell_like(N);
    if (orbits.empty()) {
        // insolubility of the norm equation always has a prime-power reason
        // for Z[sqrt2]; find it and hand back a replayable modular
        // certificate when it fits the exhaustive-check cap
        auto try_prime = [&](const Int& p, int e) -> bool {
            if (e % 2 == 0 || qr2_mod(to_long(p)).has_value()) return false;
            Int mod = 1;
            for (int i = 0; i <= e; ++i) mod *= p;
            if (mod > 10000 || !excludes_residue_mod(F, to_long(mod), n)) return false;
            ObstructionCert cert;
            cert.kind = ObstructionCert::Kind::modular;
            cert.modulus = mod;
            cert.detail = "pell reduction located obstruction at " + p.get_str();
            out.cert = cert;
            out.note = "pell stage";
            return true;
        };
        Int v = abs(N);
        while (v % 2 == 0) v /= 2;  // 2 ramifies in Z[sqrt2], never obstructs
        for (Int p = 3; p * p <= v; ++p) {
            if (v % p != 0) continue;
            int e = 0;
            while (v % p == 0) {
                v /= p;
                ++e;
            }
            if (try_prime(p, e)) return out;
        }
        if (v > 1 && try_prime(v, 1)) return out;
        out.note = "pell stage: no solutions of the reduced norm equation, "
                   "but no replayable certificate below the modulus cap";
        return out;
    }
    Int M = 2 * abs(F.A) * f;
    long Ml = to_long(M);
    for (const auto& rep : orbits) {
        // walk one full period of the unit action mod M
        long u0 = to_long(((rep.x % M) + M) % M), w0 = to_long(((rep.y % M) + M) % M);
        long u = u0, w = w0;
        PellSolution exact = rep;
        long guard = 0;
        do {
            for (int sgn : {1, -1}) {
                long uu = ((sgn * u) % Ml + Ml) % Ml;
                long ww = ((sgn * w) % Ml + Ml) % Ml;
                if (ww % to_long(f) != 0) continue;
                long y_mod = (ww / to_long(f)) % to_long(2 * abs(F.A));
                long lhs = ((uu - to_long(((F.B % M) + M) % M) * y_mod) % to_long(2 * abs(F.A)) +
                            to_long(2 * abs(F.A))) %
                           to_long(2 * abs(F.A));
                if (lhs != 0) continue;
                // exact witness from the exact orbit element
                Int sy = sgn * exact.y;
                Int su = sgn * exact.x;
                if (sy % f != 0) continue;
                Int y = sy / f;
                Int num = su - F.B * y;
                if (num % (2 * F.A) != 0) continue;
                RepWitness wit{num / (2 * F.A), y, n};
                if (wit.verifies(F)) {
                    out.witness = wit;
                    out.note = "pell stage";
                    return out;
                }
            }
            PellSolution nxt = pell_unit_step(exact);
            exact = nxt;
            u = to_long(((exact.x % M) + M) % M);
            w = to_long(((exact.y % M) + M) % M);
            if (++guard > 100000) {
                out.note = "pell stage: period scan guard hit";
                return out;
            }
        } while (!(u == u0 && w == w0));
    }
    out.note = "pell stage: congruence filter empty on every orbit, "
               "but no replayable certificate format covers this";
    return out;
}

}  // namespace

RepResult represents(const BinaryForm& F, const Int& n, long search_bound) {
    if (search_bound < 1) throw DomainError("search bound must be positive");
    RepResult res;
    if (auto w = bounded_search(F, n, search_bound)) {
        res.verdict = RepResult::Verdict::witness;
        res.witness = w;
        res.note = "bounded search";
        return res;
    }
    Int disc = F.disc();
    if (is_square(disc)) {
        FactorOutcome fo = factor_stage(F, square_disc_factor(F), n);
        if (fo.witness) {
            res.verdict = RepResult::Verdict::witness;
            res.witness = fo.witness;
            res.note = "square-discriminant factorization";
        } else {
            res.verdict = RepResult::Verdict::obstruction;
            res.cert = fo.cert;
            res.note = "square-discriminant factorization";
        }
        return res;
    }
    if (auto m = modular_certificate(F, n)) {
        ObstructionCert cert;
        cert.kind = ObstructionCert::Kind::modular;
        cert.modulus = *m;
        cert.detail = "exhaustive residue check";
        res.verdict = RepResult::Verdict::obstruction;
        res.cert = cert;
        res.note = "modular schedule";
        return res;
    }
    if (disc > 0) {
        auto [f, d0] = squarefree_split(disc);
        if (d0 == 2) {
            PellStageResult ps = pell_stage(F, n, f);
            if (ps.witness) {
                res.verdict = RepResult::Verdict::witness;
                res.witness = ps.witness;
                res.note = ps.note;
                return res;
            }
            if (ps.cert) {
                res.verdict = RepResult::Verdict::obstruction;
                res.cert = ps.cert;
                res.note = ps.note;
                return res;
            }
            res.note = ps.note;
        } else {
            res.note = "pell reduction implemented for discriminants 2*f^2 only";
        }
    } else {
        // negative nonsquare discriminant: definite form, the bounded search
        // is already exhaustive once the bound passes sqrt(|n|/min-value)
        res.note = "definite form: no witness in the search box and no modular certificate";
    }
    res.verdict = RepResult::Verdict::unknown;
    return res;
}

std::vector<RepWitness> all_witnesses(const BinaryForm& F, const Int& n, long bound) {
    if (bound < 0) throw DomainError("negative search bound");
    std::vector<RepWitness> out;
    bool small = F.A.fits_slong_p() && F.B.fits_slong_p() && F.C.fits_slong_p() &&
                 n.fits_slong_p() && bound <= 2000000;
    if (small) {
        __int128 a = F.A.get_si(), b = F.B.get_si(), c = F.C.get_si(), t = n.get_si();
        for (long x = -bound; x <= bound; ++x)
            for (long y = -bound; y <= bound; ++y)
                if (a * x * x + b * x * y + c * y * y == t)
                    out.push_back(RepWitness{x, y, n});
    } else {
        for (Int x = -bound; x <= bound; ++x)
            for (Int y = -bound; y <= bound; ++y)
                if (F.eval(x, y) == n) out.push_back(RepWitness{x, y, n});
    }
    std::sort(out.begin(), out.end(), [](const RepWitness& l, const RepWitness& r) {
        return std::tie(l.x, l.y) < std::tie(r.x, r.y);
    });
    return out;
}

ObstructionCert no_minus_two_for_family(const Int& d) {
    if (d <= 3) {
        throw NoCertificateError(
            "lattice [2 " + Int(d + 1).get_str() + " " + Int(2 * d).get_str() +
            "] represents -2 for d <= 3 (d=3 witness: (x,y)=(-2,1)), no certificate exists");
    }
    // half the form is (x+y)(x+dy); value -1 forces the factor pair (s,t)
    // with s*t = -1, and t - s = (d-1)y, so (d-1)y = +-2
    ObstructionCert cert;
    cert.kind = ObstructionCert::Kind::factorization;
    cert.divisor_trace = {{1, -1}, {-1, 1}};
    cert.detail = "(x+y)(x+dy) = -1 needs (d-1)*y = -2 or +2; impossible for d-1 > 2";
    for (const auto& [s, t] : cert.divisor_trace) {
        Int diff = t - s;
        if (diff % (d - 1) == 0) {
            throw InconsistentError("family certificate replay failed for d=" + d.get_str());
        }
    }
    return cert;
}

}  // namespace k3lab

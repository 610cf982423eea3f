#include "k3lab/poly.hpp"

#include <algorithm>
#include <sstream>

namespace k3lab {

VarContext::VarContext(std::vector<std::string> ns, std::vector<long> ws)
    : names(std::move(ns)), weights(std::move(ws)) {
    if (weights.empty()) weights.assign(names.size(), 1);
    if (weights.size() != names.size()) {
        throw ArityError("weights list must match the variable list");
    }
    for (long w : weights) {
        if (w < 1) throw DomainError("variable weights must be positive");
    }
    for (size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty()) throw ParseError("empty variable name");
        for (size_t j = i + 1; j < names.size(); ++j) {
            if (names[i] == names[j]) throw ParseError("duplicate variable " + names[i]);
        }
    }
}

std::string VarContext::declaration() const {
    std::string out;
    for (const auto& n : names) out += (out.empty() ? "" : " ") + n;
    bool unit = true;
    for (long w : weights) unit = unit && w == 1;
    if (!unit) {
        out += " weights";
        for (long w : weights) out += " " + std::to_string(w);
    }
    return out;
}

MultiPoly MultiPoly::constant(const VarContext& ctx, const Int& c) {
    MultiPoly p(ctx);
    p.add_term(Exps(ctx.arity(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const VarContext& ctx, size_t index, int exponent) {
    if (index >= ctx.arity()) throw ArityError("variable index out of range");
    if (exponent < 0) throw DomainError("exponents must be nonnegative");
    MultiPoly p(ctx);
    Exps e(ctx.arity(), 0);
    e[index] = exponent;
    p.add_term(e, 1);
    return p;
}

void MultiPoly::add_term(const Exps& e, const Int& c) {
    if (e.size() != ctx_.arity()) throw ArityError("exponent vector has wrong arity");
    for (int x : e) {
        if (x < 0) throw DomainError("exponents must be nonnegative");
    }
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int MultiPoly::coefficient(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (ctx_ != o.ctx_) throw ArityError("mixed variable contexts in addition");
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (ctx_ != o.ctx_) throw ArityError("mixed variable contexts in subtraction");
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(ctx_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (ctx_ != o.ctx_) throw ArityError("mixed variable contexts in multiplication");
    MultiPoly out(ctx_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exps e(e1.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    }
    return out;
}

MultiPoly MultiPoly::scaled(const Int& c) const {
    MultiPoly out(ctx_);
    if (c == 0) return out;
    for (const auto& [e, co] : terms_) out.terms_.emplace(e, co * c);
    return out;
}

MultiPoly MultiPoly::pow(long e) const {
    if (e < 0) throw DomainError("negative power");
    MultiPoly acc = constant(ctx_, 1);
    for (long i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

long MultiPoly::weighted_degree(const Exps& e) const {
    long d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += e[i] * ctx_.weights[i];
    return d;
}

bool MultiPoly::is_homogeneous(long* degree) const {
    std::optional<long> d;
    for (const auto& [e, c] : terms_) {
        long de = weighted_degree(e);
        if (d && *d != de) return false;
        d = de;
    }
    if (degree) *degree = d.value_or(0);
    return true;
}

Int MultiPoly::eval(const std::vector<Int>& point) const {
    if (point.size() != ctx_.arity()) throw ArityError("evaluation point has wrong arity");
    Int acc = 0;
    for (const auto& [e, c] : terms_) {
        Int t = c;
        for (size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += ' ';
        out += (c > 0 ? '+' : '-');
        out += Int(abs(c)).get_str();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out += '*';
            out += ctx_.names[i];
            if (e[i] > 1) out += '^' + std::to_string(e[i]);
        }
    }
    return out;
}

MultiPoly MultiPoly::parse(const VarContext& ctx, const std::string& body) {
    MultiPoly p(ctx);
    std::istringstream in(body);
    std::string tok;
    bool any = false;
    while (in >> tok) {
        any = true;
        if (tok == "0" && p.terms_.empty()) continue;
        size_t pos = 0;
        int sign = 1;
        if (tok[pos] == '+' || tok[pos] == '-') {
            sign = tok[pos] == '-' ? -1 : 1;
            ++pos;
        }
        size_t start = pos;
        while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos == start) throw ParseError("term lacks a coefficient: " + tok);
        Int coef = Int(tok.substr(start, pos - start)) * sign;
        Exps e(ctx.arity(), 0);
        while (pos < tok.size()) {
            if (tok[pos] != '*') throw ParseError("expected '*' in term: " + tok);
            ++pos;
            size_t vstart = pos;
            while (pos < tok.size() && tok[pos] != '*' && tok[pos] != '^') ++pos;
            std::string vname = tok.substr(vstart, pos - vstart);
            auto it = std::find(ctx.names.begin(), ctx.names.end(), vname);
            if (it == ctx.names.end()) throw ParseError("unknown variable " + vname);
            int exp = 1;
            if (pos < tok.size() && tok[pos] == '^') {
                ++pos;
                size_t estart = pos;
                while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos])))
                    ++pos;
                if (pos == estart) throw ParseError("missing exponent in term: " + tok);
                exp = std::stoi(tok.substr(estart, pos - estart));
            }
            e[it - ctx.names.begin()] += exp;
        }
        p.add_term(e, coef);
    }
    if (!any) throw ParseError("empty polynomial body");
    return p;
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : s) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string checksum_hex(const MultiPoly& p) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(p.to_string())));
    return buf;
}

MultiPoly compose(const MultiPoly& f, const std::vector<MultiPoly>& subs) {
    if (subs.size() != f.ctx().arity()) {
        throw ArityError("one substituent required per variable");
    }
    for (const auto& s : subs) {
        if (s.ctx() != subs[0].ctx()) throw ArityError("substituents share one context");
    }
    long fdeg = 0;
    if (f.is_homogeneous(&fdeg) && !f.is_zero()) {
        std::optional<long> common;
        for (const auto& s : subs) {
            long d = 0;
            if (!s.is_homogeneous(&d)) {
                throw DegreeError("substituent not homogeneous under a homogeneous target");
            }
            if (s.is_zero()) continue;
            if (common && *common != d) {
                throw DegreeError("substituents have unequal weighted degrees");
            }
            common = d;
        }
    }
    VarContext tctx = subs.empty() ? f.ctx() : subs[0].ctx();
    MultiPoly acc(tctx);
    for (const auto& [e, c] : f.terms()) {
        MultiPoly term = MultiPoly::constant(tctx, c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) term = term * subs[i].pow(e[i]);
        }
        acc = acc + term;
    }
    return acc;
}

std::vector<MultiPoly> partials(const MultiPoly& f) {
    std::vector<MultiPoly> out;
    for (size_t i = 0; i < f.ctx().arity(); ++i) {
        MultiPoly d(f.ctx());
        for (const auto& [e, c] : f.terms()) {
            if (e[i] == 0) continue;
            Exps de = e;
            de[i] -= 1;
            d.add_term(de, c * e[i]);
        }
        out.push_back(d);
    }
    return out;
}

namespace {

void require_plane_form(const MultiPoly& f, long expect, const char* what) {
    if (f.ctx().arity() != 3) throw ArityError(std::string(what) + " must use three variables");
    long d = 0;
    if (!f.is_homogeneous(&d) || (!f.is_zero() && d != expect)) {
        throw DegreeError(std::string(what) + " must be homogeneous of degree " +
                          std::to_string(expect));
    }
}

}  // namespace

MultiPoly branch_sextic(const MultiPoly& f2, const MultiPoly& f3, const MultiPoly& f4) {
    require_plane_form(f2, 2, "f2");
    require_plane_form(f3, 3, "f3");
    require_plane_form(f4, 4, "f4");
    MultiPoly out = f3 * f3 - (f2 * f4).scaled(4);
    long d = 0;
    if (!out.is_homogeneous(&d) || (!out.is_zero() && d != 6)) {
        throw InconsistentError("branch locus is not a sextic");
    }
    return out;
}

std::vector<MultiPoly> segre_components(const VarContext& p1p1, const VarContext& p3) {
    if (p1p1.arity() != 4 || p3.arity() != 4) {
        throw ArityError("segre map needs 4 source and 4 target variables");
    }
    auto mono = [&p1p1](int a, int b, int c, int d) {
        MultiPoly m(p1p1);
        m.add_term({a, b, c, d}, 1);
        return m;
    };
    return {mono(1, 0, 1, 0), mono(1, 0, 0, 1), mono(0, 1, 1, 0), mono(0, 1, 0, 1)};
}

MultiPoly xw_eliminate(const MultiPoly& F) {
    if (F.ctx().arity() != 4) throw ArityError("normal form defined on four variables");
    MultiPoly out(F.ctx());
    for (const auto& [e, c] : F.terms()) {
        int m = std::min(e[0], e[3]);
        out.add_term({e[0] - m, e[1] + m, e[2] + m, e[3] - m}, c);
    }
    return out;
}

SegreTransfer segre_transfer(const MultiPoly& g) {
    if (g.ctx().arity() != 4) throw ArityError("bidegree form needs four variables");
    if (g.is_zero()) throw DegreeError("zero form has no well-defined bidegree");
    std::optional<long> dx, dy;
    for (const auto& [e, c] : g.terms()) {
        long a = e[0] + e[1], b = e[2] + e[3];
        if ((dx && *dx != a) || (dy && *dy != b)) {
            throw NotBihomogeneousError("form is not bihomogeneous");
        }
        dx = a;
        dy = b;
    }
    if (*dx != *dy) {
        throw NotBihomogeneousError("bidegree (" + std::to_string(*dx) + "," +
                                    std::to_string(*dy) + ") is not balanced");
    }
    long n = *dx;
    VarContext p3({"x", "y", "z", "w"});
    MultiPoly F(p3);
    // monomial x0^a x1^b y0^c y1^d pulls back from x^i y^j z^k w^l with
    // i+j = a, i+k = c; taking i minimal avoids the monomial x*w entirely
    for (const auto& [e, c] : g.terms()) {
        long a = e[0], cc = e[2];
        int i = static_cast<int>(std::max(0L, a + cc - n));
        int j = static_cast<int>(a - i);
        int k = static_cast<int>(cc - i);
        int l = static_cast<int>(n - i - j - k);
        F.add_term({i, j, k, l}, c);
    }
    MultiPoly rel(p3);
    rel.add_term({1, 0, 0, 1}, 1);
    rel.add_term({0, 1, 1, 0}, -1);
    // roundtrip: substituting the segre monomials must reproduce g exactly
    VarContext src = g.ctx();
    MultiPoly back = compose(F, segre_components(src, p3));
    if (back != g) throw InconsistentError("segre transfer roundtrip failed");
    return {F, rel};
}

NodalShape nodal_shape_check(const MultiPoly& F) {
    if (F.ctx().arity() != 4) throw ArityError("nodal shape check runs on P^3 quartics");
    long d = 0;
    if (!F.is_homogeneous(&d) || d != 4) {
        throw DegreeError("nodal shape check needs a homogeneous quartic");
    }
    NodalShape out;
    for (const auto& [e, c] : F.terms()) {
        if (e[3] >= 3) {
            out.reason = "term of w-degree " + std::to_string(e[3]) +
                         " present, so (0:0:0:1) does not lie at a quadratic cone";
            return out;
        }
    }
    // matrix of 2*f2 where f2 is the w^2 slice
    Int M[3][3];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Exps e(4, 0);
            e[3] = 2;
            e[i] += 1;
            e[j] += 1;
            Int c = F.coefficient(e);
            M[i][j] = (i == j) ? 2 * c : c;
        }
    }
    Int det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
              M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
              M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    if (det == 0) {
        out.reason = "quadratic cone at (0:0:0:1) is degenerate";
        return out;
    }
    out.node_at_origin = true;
    out.cone_det = det;
    return out;
}

}  // namespace k3lab

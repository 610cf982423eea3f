#include "k3lab/counting.hpp"

#include <algorithm>
#include <sstream>

namespace k3lab {

namespace {

// one polynomial restricted to one chart, grouped by the degree of the
// innermost free variable so the inner scan loop is a Horner evaluation
struct ChartTerm {
    long coef;
    std::vector<int> exps;  // outer free variables only
};

struct ChartPoly {
    std::vector<std::vector<ChartTerm>> groups;  // index = inner degree
};

ChartPoly compile_chart(const MultiPoly& f, const FqContext& ctx, int one_pos) {
    ChartPoly out;
    int inner = one_pos - 1;
    for (const auto& [exps, coef] : f.terms()) {
        bool dead = false;
        for (size_t i = one_pos + 1; i < exps.size(); ++i)
            if (exps[i] > 0) { dead = true; break; }
        if (dead) continue;
        long c = ctx.from_int(coef);
        if (c == 0) continue;
        int d = inner >= 0 ? exps[inner] : 0;
        if (static_cast<int>(out.groups.size()) <= d) out.groups.resize(d + 1);
        ChartTerm t;
        t.coef = c;
        if (inner > 0) t.exps.assign(exps.begin(), exps.begin() + inner);
        out.groups[d].push_back(std::move(t));
    }
    return out;
}

long eval_group(const std::vector<ChartTerm>& g, const std::vector<long>& vals,
                const FqContext& ctx) {
    long acc = 0;
    for (const auto& t : g) {
        long m = t.coef;
        for (size_t i = 0; i < t.exps.size(); ++i) {
            int e = t.exps[i];
            if (e == 0) continue;
            if (vals[i] == 0) { m = 0; break; }
            m = ctx.mul(m, ctx.pow(vals[i], e));
        }
        if (m != 0) acc = ctx.add(acc, m);
    }
    return acc;
}

// coefficients of the inner-variable polynomial at one outer assignment
void build_coefs(const ChartPoly& cp, const std::vector<long>& vals, const FqContext& ctx,
                 std::vector<long>& coefs) {
    coefs.assign(cp.groups.size(), 0);
    for (size_t d = 0; d < cp.groups.size(); ++d) coefs[d] = eval_group(cp.groups[d], vals, ctx);
}

long horner(const std::vector<long>& coefs, long v, const FqContext& ctx) {
    if (coefs.empty()) return 0;
    long acc = coefs.back();
    for (size_t d = coefs.size() - 1; d-- > 0;) acc = ctx.add(ctx.mul(acc, v), coefs[d]);
    return acc;
}

void decode_outer(long idx, long q, std::vector<long>& vals) {
    for (auto& v : vals) {
        v = idx % q;
        idx /= q;
    }
}

template <class Body>
long parallel_sum(long total, ExecMode mode, const Body& body) {
#ifdef _OPENMP
    if (mode == ExecMode::parallel) {
        long acc = 0;
#pragma omp parallel for reduction(+ : acc) schedule(static)
        for (long i = 0; i < total; ++i) acc += body(i);
        return acc;
    }
#else
    (void)mode;
#endif
    long acc = 0;
    for (long i = 0; i < total; ++i) acc += body(i);
    return acc;
}

template <class Body>
void parallel_collect(long total, ExecMode mode, std::vector<std::vector<long>>& out,
                      const Body& body) {
#ifdef _OPENMP
    if (mode == ExecMode::parallel) {
#pragma omp parallel
        {
            std::vector<std::vector<long>> local;
#pragma omp for schedule(static) nowait
            for (long i = 0; i < total; ++i) body(i, local);
#pragma omp critical
            out.insert(out.end(), local.begin(), local.end());
        }
        return;
    }
#else
    (void)mode;
#endif
    for (long i = 0; i < total; ++i) body(i, out);
}

long outer_total(long q, int free_count) {
    long t = 1;
    for (int i = 1; i < free_count; ++i) t *= q;
    return t;
}

void require_form(const MultiPoly& f, size_t arity, const char* what) {
    if (f.ctx().arity() != arity)
        throw ArityError(std::string(what) + " must have " + std::to_string(arity) + " variables");
    if (f.is_zero()) throw DomainError(std::string(what) + " is the zero polynomial");
    if (!f.is_homogeneous(nullptr))
        throw DegreeError(std::string(what) + " is not homogeneous");
}

std::vector<long> chart_point(const std::vector<long>& vals, long inner_v, int one_pos, int n) {
    std::vector<long> c(n + 1, 0);
    for (int i = 0; i + 1 < one_pos; ++i) c[i] = vals[i];
    if (one_pos > 0) c[one_pos - 1] = inner_v;
    c[one_pos] = 1;
    return c;
}

}  // namespace

std::string ProjPoint::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ":";
        os << coords[i];
    }
    os << ")";
    return os.str();
}

ProjPoint normalize_point(std::vector<long> coords, const FqContext& ctx) {
    size_t lead = coords.size();
    for (size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) { lead = i; break; }
    if (lead == coords.size()) throw DomainError("zero vector is not a projective point");
    long s = ctx.inv(coords[lead]);
    for (auto& c : coords) c = ctx.mul(c, s);
    return ProjPoint{std::move(coords)};
}

std::vector<ProjPoint> proj_points(const FqContext& ctx, int n) {
    if (n < 1) throw DomainError("projective dimension must be at least 1");
    long q = ctx.q(), total = 0, power = 1;
    for (int i = 0; i <= n; ++i) {
        total += power;
        power *= q;
        if (total > 2000000) throw SizeLimitError("too many projective points to materialize");
    }
    std::vector<ProjPoint> out;
    out.reserve(total);
    for (int one_pos = n; one_pos >= 0; --one_pos) {
        int fc = one_pos;
        if (fc == 0) {
            std::vector<long> c(n + 1, 0);
            c[one_pos] = 1;
            out.push_back(normalize_point(std::move(c), ctx));
            continue;
        }
        long outer = outer_total(q, fc);
        std::vector<long> vals(fc - 1, 0);
        for (long idx = 0; idx < outer; ++idx) {
            decode_outer(idx, q, vals);
            for (long v = 0; v < q; ++v)
                out.push_back(normalize_point(chart_point(vals, v, one_pos, n), ctx));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long count_double_cover(const MultiPoly& f, const FqContext& ctx, ExecMode mode) {
    if (ctx.p() == 2) throw FieldError("double cover counting needs odd characteristic");
    require_form(f, 3, "branch form");
    long deg = 0;
    f.is_homogeneous(&deg);
    if (deg != 6) throw DegreeError("branch form must be a sextic");

    long q = ctx.q(), total = 0;
    for (int one_pos = 2; one_pos >= 0; --one_pos) {
        int fc = one_pos;
        ChartPoly cp = compile_chart(f, ctx, one_pos);
        if (fc == 0) {
            long v = cp.groups.empty() ? 0 : eval_group(cp.groups[0], {}, ctx);
            total += 1 + ctx.chi(v);
            continue;
        }
        long outer = outer_total(q, fc);
        total += parallel_sum(outer, mode, [&](long idx) {
            std::vector<long> vals(fc - 1, 0);
            decode_outer(idx, q, vals);
            std::vector<long> coefs;
            build_coefs(cp, vals, ctx, coefs);
            long part = 0;
            for (long v = 0; v < q; ++v) part += 1 + ctx.chi(horner(coefs, v, ctx));
            return part;
        });
    }
    return total;
}

long count_hypersurface_p3(const MultiPoly& F, const FqContext& ctx, ExecMode mode) {
    require_form(F, 4, "hypersurface form");
    long q = ctx.q(), total = 0;
    for (int one_pos = 3; one_pos >= 0; --one_pos) {
        int fc = one_pos;
        ChartPoly cp = compile_chart(F, ctx, one_pos);
        if (fc == 0) {
            long v = cp.groups.empty() ? 0 : eval_group(cp.groups[0], {}, ctx);
            total += v == 0 ? 1 : 0;
            continue;
        }
        long outer = outer_total(q, fc);
        total += parallel_sum(outer, mode, [&](long idx) {
            std::vector<long> vals(fc - 1, 0);
            decode_outer(idx, q, vals);
            std::vector<long> coefs;
            build_coefs(cp, vals, ctx, coefs);
            long part = 0;
            for (long v = 0; v < q; ++v)
                if (horner(coefs, v, ctx) == 0) ++part;
            return part;
        });
    }
    return total;
}

std::vector<ProjPoint> common_zeros(const std::vector<MultiPoly>& eqs, const FqContext& ctx,
                                    ExecMode mode) {
    if (eqs.empty()) throw DomainError("empty polynomial system");
    size_t arity = eqs.front().ctx().arity();
    if (arity < 2) throw ArityError("projective system needs at least 2 variables");
    for (const auto& e : eqs) require_form(e, arity, "system form");

    int n = static_cast<int>(arity) - 1;
    long q = ctx.q();
    std::vector<std::vector<long>> raw;
    for (int one_pos = n; one_pos >= 0; --one_pos) {
        int fc = one_pos;
        std::vector<ChartPoly> cps;
        cps.reserve(eqs.size());
        for (const auto& e : eqs) cps.push_back(compile_chart(e, ctx, one_pos));
        if (fc == 0) {
            bool allzero = true;
            for (const auto& cp : cps) {
                long v = cp.groups.empty() ? 0 : eval_group(cp.groups[0], {}, ctx);
                if (v != 0) { allzero = false; break; }
            }
            if (allzero) {
                std::vector<long> c(n + 1, 0);
                c[one_pos] = 1;
                raw.push_back(std::move(c));
            }
            continue;
        }
        long outer = outer_total(q, fc);
        parallel_collect(outer, mode, raw, [&](long idx, std::vector<std::vector<long>>& sink) {
            std::vector<long> vals(fc - 1, 0);
            decode_outer(idx, q, vals);
            std::vector<std::vector<long>> coefs(cps.size());
            for (size_t j = 0; j < cps.size(); ++j) build_coefs(cps[j], vals, ctx, coefs[j]);
            for (long v = 0; v < q; ++v) {
                bool allzero = true;
                for (size_t j = 0; j < cps.size(); ++j)
                    if (horner(coefs[j], v, ctx) != 0) { allzero = false; break; }
                if (allzero) sink.push_back(chart_point(vals, v, one_pos, n));
            }
        });
    }
    std::vector<ProjPoint> out;
    out.reserve(raw.size());
    for (auto& c : raw) out.push_back(normalize_point(std::move(c), ctx));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

int fq_rank(std::vector<std::vector<long>> M, const FqContext& ctx) {
    int rows = static_cast<int>(M.size());
    int cols = rows ? static_cast<int>(M[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (M[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(M[r], M[piv]);
        long s = ctx.inv(M[r][c]);
        for (int j = c; j < cols; ++j) M[r][j] = ctx.mul(M[r][j], s);
        for (int i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            long f = M[i][c];
            for (int j = c; j < cols; ++j) M[i][j] = ctx.sub(M[i][j], ctx.mul(f, M[r][j]));
        }
        ++r;
    }
    return r;
}

}  // namespace

std::vector<ProjPoint> singular_search(const std::vector<MultiPoly>& eqs, const FqContext& ctx,
                                       ExecMode mode) {
    if (eqs.empty()) throw DomainError("empty polynomial system");
    if (eqs.size() == 1) {
        // hypersurface: rank drop means every partial vanishes
        std::vector<MultiPoly> system = {eqs.front()};
        for (auto& d : partials(eqs.front()))
            if (!d.is_zero()) system.push_back(std::move(d));
        return common_zeros(system, ctx, mode);
    }
    std::vector<ProjPoint> zs = common_zeros(eqs, ctx, mode);
    std::vector<std::vector<MultiPoly>> jac;
    jac.reserve(eqs.size());
    for (const auto& e : eqs) jac.push_back(partials(e));
    std::vector<ProjPoint> out;
    for (const auto& pt : zs) {
        std::vector<std::vector<long>> M(jac.size());
        for (size_t i = 0; i < jac.size(); ++i) {
            M[i].resize(jac[i].size());
            for (size_t j = 0; j < jac[i].size(); ++j) M[i][j] = eval_mod(jac[i][j], pt.coords, ctx);
        }
        if (fq_rank(std::move(M), ctx) < static_cast<int>(eqs.size())) out.push_back(pt);
    }
    return out;
}

ContainmentResult containment_check(const std::vector<MultiPoly>& curve_eqs,
                                    const std::vector<MultiPoly>& surface_eqs,
                                    const FqContext& ctx) {
    if (surface_eqs.empty()) throw DomainError("empty surface system");
    ContainmentResult res;
    for (const auto& pt : common_zeros(curve_eqs, ctx)) {
        ++res.curve_points;
        for (const auto& s : surface_eqs) {
            if (eval_mod(s, pt.coords, ctx) != 0) {
                res.contained = false;
                if (!res.counterexample) res.counterexample = pt;
                break;
            }
        }
    }
    return res;
}

namespace {

bool proportional(const std::vector<long>& a, const std::vector<long>& b, const FqContext& ctx) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (ctx.mul(a[i], b[j]) != ctx.mul(a[j], b[i])) return false;
    return true;
}

}  // namespace

InvolutionReport involution_check(const std::array<MultiPoly, 4>& maps, const MultiPoly& surface,
                                  const FqContext& ctx) {
    require_form(surface, 4, "surface form");
    long deg = -1;
    for (const auto& m : maps) {
        if (m.ctx().arity() != 4) throw ArityError("map component must have 4 variables");
        if (m.is_zero()) continue;
        long d = 0;
        if (!m.is_homogeneous(&d)) throw DegreeError("map component is not homogeneous");
        if (deg < 0) deg = d;
        if (d != deg) throw DegreeError("map components have unequal degrees");
    }
    if (deg < 0) throw DomainError("map has no nonzero component");

    InvolutionReport rep;
    auto apply = [&](const std::vector<long>& pt) {
        std::vector<long> img(4);
        for (int i = 0; i < 4; ++i) img[i] = eval_mod(maps[i], pt, ctx);
        return img;
    };
    auto zero = [](const std::vector<long>& v) {
        for (long c : v)
            if (c != 0) return false;
        return true;
    };
    for (const auto& pt : common_zeros({surface}, ctx)) {
        ++rep.surface_points;
        std::vector<long> img = apply(pt.coords);
        if (zero(img)) {
            ++rep.base_skipped;
            continue;
        }
        if (eval_mod(surface, img, ctx) != 0) {
            ++rep.image_failures;
            if (!rep.first_failure) rep.first_failure = pt;
            continue;
        }
        std::vector<long> img2 = apply(img);
        if (zero(img2)) {
            ++rep.image_base_skipped;
            continue;
        }
        if (proportional(img2, pt.coords, ctx)) {
            ++rep.checked;
        } else {
            ++rep.identity_failures;
            if (!rep.first_failure) rep.first_failure = pt;
        }
    }
    return rep;
}

std::string InvolutionReport::to_string() const {
    std::ostringstream os;
    os << "points=" << surface_points << " base_skipped=" << base_skipped
       << " image_base_skipped=" << image_base_skipped << " checked=" << checked
       << " image_failures=" << image_failures << " identity_failures=" << identity_failures;
    return os.str();
}

CoverReport double_cover_map_check(const std::array<MultiPoly, 3>& map3, const MultiPoly& branch,
                                   const MultiPoly& surface, const FqContext& ctx) {
    if (ctx.p() == 2) throw FieldError("double cover check needs odd characteristic");
    require_form(surface, 4, "surface form");
    require_form(branch, 3, "branch form");
    for (const auto& m : map3)
        if (m.ctx().arity() != 4) throw ArityError("map component must have 4 variables");

    CoverReport rep;
    for (const auto& pt : common_zeros({surface}, ctx)) {
        ++rep.surface_points;
        std::vector<long> img(3);
        for (int i = 0; i < 3; ++i) img[i] = eval_mod(map3[i], pt.coords, ctx);
        if (img[0] == 0 && img[1] == 0 && img[2] == 0) {
            ++rep.base_skipped;
            continue;
        }
        if (ctx.chi(eval_mod(branch, img, ctx)) == -1) {
            ++rep.failures;
            if (!rep.first_failure) rep.first_failure = pt;
        } else {
            ++rep.checked;
        }
    }
    return rep;
}

std::string CoverReport::to_string() const {
    std::ostringstream os;
    os << "points=" << surface_points << " base_skipped=" << base_skipped
       << " checked=" << checked << " failures=" << failures;
    return os.str();
}

long eval_mod(const MultiPoly& f, const std::vector<long>& point, const FqContext& ctx) {
    if (point.size() != f.ctx().arity()) throw ArityError("point arity mismatch");
    long acc = 0;
    for (const auto& [exps, coef] : f.terms()) {
        long m = ctx.from_int(coef);
        for (size_t i = 0; i < exps.size() && m != 0; ++i) {
            if (exps[i] == 0) continue;
            if (point[i] == 0) { m = 0; break; }
            m = ctx.mul(m, ctx.pow(point[i], exps[i]));
        }
        if (m != 0) acc = ctx.add(acc, m);
    }
    return acc;
}

}  // namespace k3lab

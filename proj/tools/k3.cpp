// Command-line front end: every library entry point reachable from a shell,
// with text output for eyeballing and json output for scripts.  Exit codes:
// 0 all checks pass, 1 a verification failed, 2 bad usage or bad input.
#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "k3lab/claims.hpp"
#include "k3lab/counting.hpp"
#include "k3lab/zeta.hpp"

using json = nlohmann::json;
using namespace k3lab;

namespace {

Int parse_big(const std::string& s) {
    Int v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw ParseError("expected an integer, got '" + s + "'");
    return v;
}

json vec_json(const LatVec& w) { return json{{"u", w.u.get_str()}, {"v", w.v.get_str()}}; }

void emit(const std::string& format, const json& payload, const std::vector<std::string>& lines) {
    if (format == "json") {
        std::cout << payload.dump(2) << "\n";
    } else {
        for (const auto& l : lines) std::cout << l << "\n";
    }
}

// counts file: whitespace-separated N_1 N_2 ..., # starts a comment
std::vector<Int> read_counts(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open counts file " + path);
    std::vector<Int> counts;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream iss(line);
        std::string tok;
        while (iss >> tok) counts.push_back(parse_big(tok));
    }
    if (counts.empty()) throw ParseError("counts file " + path + " has no counts");
    return counts;
}

int run_pell(const std::string& format, const std::string& m_str) {
    Int m = parse_big(m_str);
    auto sols = solve_pell_like(m);
    json out{{"m", m.get_str()}, {"orbit_count", sols.size()}, {"orbits", json::array()}};
    std::vector<std::string> lines;
    lines.push_back("x^2 - 2y^2 = " + m.get_str() + ": " + std::to_string(sols.size()) +
                    " orbit representative(s)");
    for (const auto& s : sols) {
        out["orbits"].push_back(json{{"x", s.x.get_str()}, {"y", s.y.get_str()}});
        lines.push_back("  x=" + s.x.get_str() + " y=" + s.y.get_str());
    }
    emit(format, out, lines);
    return 0;
}

int run_represent(const std::string& format, const std::string& lattice_str,
                  const std::string& n_str, long bound) {
    GramLattice2 L = GramLattice2::parse(lattice_str);
    BinaryForm F = BinaryForm::from_lattice(L);
    Int n = parse_big(n_str);
    RepResult r = represents(F, n, bound);
    json out{{"lattice", L.to_string()}, {"form", F.to_string()}, {"n", n.get_str()},
             {"note", r.note}};
    std::vector<std::string> lines;
    switch (r.verdict) {
        case RepResult::Verdict::witness: {
            out["verdict"] = "witness";
            out["witness"] = json{{"x", r.witness->x.get_str()}, {"y", r.witness->y.get_str()}};
            lines.push_back("represented: q(" + r.witness->x.get_str() + "," +
                            r.witness->y.get_str() + ") = " + n.get_str());
            break;
        }
        case RepResult::Verdict::obstruction: {
            out["verdict"] = "obstruction";
            json cert{{"detail", r.cert->detail}};
            if (r.cert->kind == ObstructionCert::Kind::modular) {
                cert["kind"] = "modular";
                cert["modulus"] = r.cert->modulus.get_str();
                lines.push_back("not represented: impossible mod " + r.cert->modulus.get_str());
            } else {
                cert["kind"] = "factorization";
                json trace = json::array();
                for (const auto& [d, v] : r.cert->divisor_trace)
                    trace.push_back(json::array({d.get_str(), v.get_str()}));
                cert["divisor_trace"] = trace;
                lines.push_back("not represented: " + r.cert->detail);
            }
            out["certificate"] = cert;
            break;
        }
        case RepResult::Verdict::unknown:
            out["verdict"] = "unknown";
            lines.push_back("undecided: " + r.note);
            break;
    }
    lines.push_back("stage: " + r.note);
    emit(format, out, lines);
    return 0;
}

int run_dlist(const std::string& format, long max) {
    auto ds = d_list(max);
    json out{{"max", max}, {"count", ds.size()}, {"d", ds}};
    std::vector<std::string> lines;
    std::string row;
    for (long d : ds) row += (row.empty() ? "" : " ") + std::to_string(d);
    lines.push_back(std::to_string(ds.size()) + " values of d <= " + std::to_string(max) +
                    " with 2 a square mod d:");
    lines.push_back(row);
    emit(format, out, lines);
    return 0;
}

int run_ample_search(const std::string& format, long d) {
    AmpleSearch s = ample_search_2d(d);
    json out{{"d", d}, {"word_length", s.word_length}};
    std::vector<std::string> lines;
    switch (s.status) {
        case AmpleSearch::Status::found:
            out["status"] = "found";
            out["witness"] = vec_json(s.witness);
            lines.push_back("found ample class " + s.witness.to_string() + " of square " +
                            std::to_string(2 * d) + " after " + std::to_string(s.word_length) +
                            " reflection(s)");
            break;
        case AmpleSearch::Status::no_solution:
            out["status"] = "no_solution";
            lines.push_back("no solution: " + s.reason);
            break;
        case AmpleSearch::Status::no_primitive_solution:
            out["status"] = "no_primitive_solution";
            lines.push_back("no primitive solution: " + s.reason);
            break;
    }
    out["reason"] = s.reason;
    emit(format, out, lines);
    return 0;
}

int run_roots(const std::string& format, const std::string& lattice_str, long bound, bool pell) {
    GramLattice2 L = GramLattice2::parse(lattice_str);
    auto rs = roots(L, bound, pell);
    json out{{"lattice", L.to_string()}, {"bound", bound}, {"pell", pell},
             {"count", rs.size()}, {"roots", json::array()}};
    std::vector<std::string> lines;
    lines.push_back(std::to_string(rs.size()) + " square -2 class(es) in " + L.to_string());
    for (const auto& r : rs) {
        out["roots"].push_back(vec_json(r));
        lines.push_back("  " + r.to_string());
    }
    emit(format, out, lines);
    return 0;
}

// which counting model a fixture exposes
std::string count_model(const SurfaceFixture& fx) {
    if (fx.has_poly("sextic")) return "double_cover";
    if (fx.ambient == "p3" && fx.has_poly("surface")) return "hypersurface_p3";
    if (fx.ambient == "p3" && fx.has_poly("f2")) return "nodal_quartic_p3";
    if (!fx.poly_group("surface.").empty()) return "complete_intersection";
    throw DomainError("fixture " + fx.name + " has no countable model");
}

int run_count_points(const std::string& format, const std::string& name, long p, int k,
                     const std::string& mode_str, const std::string& dir) {
    SurfaceFixture fx = load_fixture(name, dir);
    FqContext ctx(p, k);
    ExecMode mode = mode_str == "serial" ? ExecMode::serial : ExecMode::parallel;
    std::string model = count_model(fx);
    long count = 0;
    if (model == "double_cover") {
        count = count_double_cover(fx.poly("sextic"), ctx, mode);
    } else if (model == "hypersurface_p3") {
        count = count_hypersurface_p3(fx.poly("surface"), ctx, mode);
    } else if (model == "nodal_quartic_p3") {
        count = count_hypersurface_p3(nodal_quartic_from(fx), ctx, mode);
    } else {
        count = static_cast<long>(common_zeros(fx.poly_group("surface."), ctx, mode).size());
    }
    json out{{"fixture", fx.name}, {"p", p}, {"k", k}, {"q", ctx.q()},
             {"model", model}, {"mode", mode_str}, {"count", count}};
    emit(format, out,
         {fx.name + " over F_" + std::to_string(ctx.q()) + " (" + model + "): " +
          std::to_string(count) + " points"});
    return 0;
}

int run_zeta(const std::string& format, const std::string& counts_path, long p, long known_rank,
             int sign) {
    auto counts = read_counts(counts_path);
    auto traces = traces_from_counts(p, counts);
    if (traces.size() > 22) traces.resize(22);

    json out{{"p", p}, {"counts_used", counts.size()}, {"traces", json::array()}};
    for (const auto& t : traces) out["traces"].push_back(t.get_str());
    std::vector<std::string> lines;
    for (size_t i = 0; i < traces.size(); ++i)
        lines.push_back("a_" + std::to_string(i + 1) + " = " + traces[i].get_str());

    auto prefix = newton_charpoly(traces);
    if (traces.size() < 11) {
        out["status"] = "partial";
        out["known_coefficients"] = json::array();
        for (const auto& c : prefix) out["known_coefficients"].push_back(c.get_str());
        out["counts_needed"] = 11;
        lines.push_back("only " + std::to_string(counts.size()) +
                        " count(s): need 11 to close the functional equation");
        emit(format, out, lines);
        return 0;
    }

    WeilPolynomial W = apply_functional_equation(p, prefix, sign);
    W.known_algebraic_rank = known_rank;
    out["status"] = "complete";
    out["sign"] = W.sign;
    out["coefficients"] = json::array();
    for (const auto& c : W.coefficients) out["coefficients"].push_back(c.get_str());
    for (size_t i = 0; i < W.coefficients.size(); ++i)
        lines.push_back("c_" + std::to_string(i) + " = " + W.coefficients[i].get_str());
    lines.push_back("functional equation sign: " + std::to_string(W.sign));

    // every supplied count must be reproduced by the completed polynomial
    auto expect = counts_from_weil(W, static_cast<int>(counts.size()));
    for (size_t i = 0; i < counts.size(); ++i) {
        if (expect[i] != counts[i])
            throw InconsistentError("N_" + std::to_string(i + 1) + " = " + counts[i].get_str() +
                                    " but the completed polynomial forces " +
                                    expect[i].get_str());
    }

    if (known_rank > 0) {
        divide_out_algebraic(W.coefficients, p, known_rank);
        out["known_algebraic_rank"] = known_rank;
        lines.push_back("known algebraic rank " + std::to_string(known_rank) +
                        " divides out exactly");
    }
    long bound = picard_upper_bound(W);
    out["picard_upper_bound"] = bound;
    lines.push_back("picard upper bound: " + std::to_string(bound));
    emit(format, out, lines);
    return 0;
}

struct CheckRow {
    std::string name;
    bool ok = false;
    std::string detail;
};

void add_row(std::vector<CheckRow>& rows, const std::string& name, bool ok,
             const std::string& detail) {
    rows.push_back(CheckRow{name, ok, detail});
}

std::array<MultiPoly, 4> group4(const SurfaceFixture& fx, const std::string& prefix) {
    auto g = fx.poly_group(prefix);
    if (g.size() != 4) throw DomainError("fixture group " + prefix + " needs 4 polynomials");
    return {g[0], g[1], g[2], g[3]};
}

std::array<MultiPoly, 3> group3(const SurfaceFixture& fx, const std::string& prefix) {
    auto g = fx.poly_group(prefix);
    if (g.size() != 3) throw DomainError("fixture group " + prefix + " needs 3 polynomials");
    return {g[0], g[1], g[2]};
}

std::vector<CheckRow> verify_x2(const SurfaceFixture& fx) {
    std::vector<CheckRow> rows;
    FqContext ctx(fx.scan_primes.at(0), 1);
    auto sing = singular_search({fx.poly("sextic")}, ctx);
    add_row(rows, "branch-smooth-p" + std::to_string(ctx.p()), sing.empty(),
            std::to_string(sing.size()) + " singular point(s)");
    long rho = -1;
    if (fx.reductions.size() >= 2) {
        rho = compare_reductions(fx.reductions[0].rank, fx.reductions[0].disc_class,
                                 fx.reductions[1].rank, fx.reductions[1].disc_class);
        for (size_t i = 2; i < fx.reductions.size(); ++i)
            rho = std::min(rho, compare_reductions(fx.reductions[0].rank,
                                                   fx.reductions[0].disc_class,
                                                   fx.reductions[i].rank,
                                                   fx.reductions[i].disc_class));
    }
    add_row(rows, "two-prime-descent", rho == 1, "picard rank bound " + std::to_string(rho));
    return rows;
}

std::vector<CheckRow> verify_x4(const SurfaceFixture& fx) {
    std::vector<CheckRow> rows;
    const auto& L = *fx.lattice;
    add_row(rows, "lattice-determinant", L.determinant() == -17, L.determinant().get_str());
    LatVec K = fx.named_class("K");
    add_row(rows, "canonical-embedding-class", L.norm(K) == 8 && is_primitive(K),
            "K" + K.to_string() + " has square " + L.norm(K).get_str());
    add_row(rows, "curve-genus", L.genus_of_class(fx.named_class("C")) == 2,
            "genus " + L.genus_of_class(fx.named_class("C")).get_str());

    FqContext ctx(fx.check_primes.at(0), 1);
    std::string ptag = "-p" + std::to_string(ctx.p());
    const MultiPoly& surface = fx.poly("surface");
    auto sing = singular_search({surface}, ctx);
    add_row(rows, "surface-smooth" + ptag, sing.empty(),
            std::to_string(sing.size()) + " singular point(s)");
    for (const char* curve : {"curve.C.", "curve.D."}) {
        auto res = containment_check(fx.poly_group(curve), {surface}, ctx);
        add_row(rows, std::string(curve) + "contained" + ptag, res.contained,
                std::to_string(res.curve_points) + " curve point(s)" +
                    (res.counterexample ? ", off surface at " + res.counterexample->to_string()
                                        : ""));
    }
    auto inv = involution_check(group4(fx, "inv."), surface, ctx);
    add_row(rows, "involution" + ptag, inv.ok(), inv.to_string());
    auto cov = double_cover_map_check(group3(fx, "cover."), fx.poly("branch"), surface, ctx);
    add_row(rows, "cover-map" + ptag, cov.ok(), cov.to_string());
    return rows;
}

std::vector<CheckRow> verify_ci(const SurfaceFixture& fx, const Int& det,
                                const std::string& curve_prefix) {
    std::vector<CheckRow> rows;
    add_row(rows, "lattice-determinant", fx.lattice->determinant() == det,
            fx.lattice->determinant().get_str());
    FqContext ctx(fx.check_primes.at(0), 1);
    std::string ptag = "-p" + std::to_string(ctx.p());
    auto surface = fx.poly_group("surface.");
    auto sing = singular_search(surface, ctx);
    add_row(rows, "surface-smooth" + ptag, sing.empty(),
            std::to_string(sing.size()) + " singular point(s)");
    auto res = containment_check(fx.poly_group(curve_prefix), surface, ctx);
    add_row(rows, curve_prefix + "contained" + ptag, res.contained,
            std::to_string(res.curve_points) + " curve point(s)" +
                (res.counterexample ? ", off surface at " + res.counterexample->to_string() : ""));
    return rows;
}

std::vector<CheckRow> verify_xprime(const SurfaceFixture& fx) {
    std::vector<CheckRow> rows;
    add_row(rows, "lattice-determinant", fx.lattice->determinant() == -8,
            fx.lattice->determinant().get_str());
    MultiPoly quartic = nodal_quartic_from(fx);
    NodalShape shape = nodal_shape_check(quartic);
    add_row(rows, "nodal-shape", shape.node_at_origin,
            shape.node_at_origin ? "cone determinant " + shape.cone_det.get_str() : shape.reason);
    FqContext ctx(fx.scan_primes.at(0), 1);
    auto sing = singular_search({quartic}, ctx);
    bool only_node = sing.size() == 1 && sing[0].to_string() == "(0:0:0:1)";
    std::string found;
    for (const auto& pt : sing) found += (found.empty() ? "" : " ") + pt.to_string();
    add_row(rows, "singular-locus-p" + std::to_string(ctx.p()), only_node,
            found.empty() ? "no singular points" : found);
    return rows;
}

int run_verify_example(const std::string& format, const std::string& name,
                       const std::string& dir) {
    SurfaceFixture fx = load_fixture(name, dir);
    std::vector<CheckRow> rows;
    if (name == "X2")
        rows = verify_x2(fx);
    else if (name == "X4")
        rows = verify_x4(fx);
    else if (name == "X6")
        rows = verify_ci(fx, Int(-24), "curve.C6.");
    else if (name == "X8")
        rows = verify_ci(fx, Int(-17), "line.D.");
    else if (name == "Xprime")
        rows = verify_xprime(fx);
    else
        throw DomainError("no verification recipe for fixture " + name);

    bool all_ok = true;
    json out{{"fixture", name}, {"checks", json::array()}};
    std::vector<std::string> lines;
    for (const auto& r : rows) {
        all_ok = all_ok && r.ok;
        out["checks"].push_back(json{{"check", r.name}, {"ok", r.ok}, {"detail", r.detail}});
        lines.push_back(std::string(r.ok ? "ok   " : "FAIL ") + r.name + ": " + r.detail);
    }
    out["ok"] = all_ok;
    lines.push_back(all_ok ? "all checks passed" : "some checks FAILED");
    emit(format, out, lines);
    return all_ok ? 0 : 1;
}

int run_h2d_table(const std::string& format, long max) {
    auto rows = h2d_table(max);
    json out{{"max", max}, {"rows", json::array()}};
    std::vector<std::string> lines;
    for (const auto& r : rows) {
        json row{{"d", r.d}, {"h", r.h}, {"rational", r.q_flag}};
        std::string line = "d=" + std::to_string(r.d) + " h=" + std::to_string(r.h) +
                           (r.q_flag ? " rational" : "");
        if (r.witness) {
            row["witness"] = vec_json(*r.witness);
            line += " witness=" + r.witness->to_string();
        }
        out["rows"].push_back(row);
        lines.push_back(line);
    }
    emit(format, out, lines);
    return 0;
}

int run_reproduce_all(const std::string& format, const std::string& dir) {
    auto results = reproduce_all(dir);
    std::cout << (format == "json" ? report_json(results) : report_text(results));
    bool any_fail = false;
    for (const auto& r : results) {
        std::fprintf(stderr, "timing %s %.1f ms\n", r.id.c_str(), r.ms);
        any_fail = any_fail || r.status == ClaimResult::Status::fail;
    }
    return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice arithmetic, point counts and zeta checks for the shipped K3 fixtures"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string m_str;
    auto* c_pell = app.add_subcommand("pell", "orbit representatives of x^2 - 2y^2 = m");
    c_pell->add_option("--m", m_str, "right-hand side")->required();

    std::string lattice_str = "4 5 2", n_str;
    long rep_bound = 1000;
    auto* c_rep = app.add_subcommand("represent", "decide whether the lattice form takes value n");
    c_rep->add_option("--lattice", lattice_str, "gram entries 'a b c'")->required();
    c_rep->add_option("--n", n_str, "target value")->required();
    c_rep->add_option("--bound", rep_bound, "witness search box");

    long dmax = 100;
    auto* c_dlist = app.add_subcommand("dlist", "d <= max with 2 a square mod d");
    c_dlist->add_option("--max", dmax, "upper limit")->required();

    long amp_d = 0;
    auto* c_amp = app.add_subcommand("ample-search",
                                     "primitive ample class of square 2d on the nodal lattice");
    c_amp->add_option("--d", amp_d, "half the square")->required();

    std::string roots_lattice;
    long roots_bound = 10;
    bool roots_pell = false;
    auto* c_roots = app.add_subcommand("roots", "square -2 classes of a rank-2 lattice");
    c_roots->add_option("--lattice", roots_lattice, "gram entries 'a b c'")->required();
    c_roots->add_option("--bound", roots_bound, "coefficient box");
    c_roots->add_flag("--pell", roots_pell, "unit-orbit representatives instead of a box");

    std::string cp_fixture, cp_mode = "parallel", cp_dir;
    long cp_p = 0;
    int cp_k = 1;
    auto* c_count = app.add_subcommand("count-points", "point count of a fixture over F_{p^k}");
    c_count->add_option("--fixture", cp_fixture, "fixture name")->required();
    c_count->add_option("--p", cp_p, "prime")->required();
    c_count->add_option("--k", cp_k, "extension degree");
    c_count->add_option("--mode", cp_mode, "kernel to run")
        ->check(CLI::IsMember({"serial", "parallel"}));
    c_count->add_option("--fixtures", cp_dir, "fixture directory override");

    std::string z_file;
    long z_p = 0, z_rank = 0;
    int z_sign = 0;
    auto* c_zeta = app.add_subcommand(
        "zeta", "frobenius polynomial and picard bound from a point-count file");
    c_zeta->add_option("--counts-file", z_file, "N_1 N_2 ... , # comments allowed")->required();
    c_zeta->add_option("--p", z_p, "prime of reduction")->required();
    c_zeta->add_option("--known-rank", z_rank, "algebraic classes already known");
    c_zeta->add_option("--sign", z_sign, "functional equation sign when undetectable")
        ->check(CLI::IsMember({-1, 0, 1}));

    std::string ve_name, ve_dir;
    auto* c_verify = app.add_subcommand("verify-example", "structural checks for one fixture");
    c_verify->add_option("--name", ve_name, "fixture name")->required();
    c_verify->add_option("--fixtures", ve_dir, "fixture directory override");

    long h2d_max = 100;
    auto* c_h2d = app.add_subcommand("h2d-table", "polarization table with rational flags");
    c_h2d->add_option("--max", h2d_max, "largest d")->required();

    std::string ra_dir;
    auto* c_repro = app.add_subcommand("reproduce-all", "run the whole claim registry");
    c_repro->add_option("--fixtures", ra_dir, "fixture directory override");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*c_pell) return run_pell(format, m_str);
        if (*c_rep) return run_represent(format, lattice_str, n_str, rep_bound);
        if (*c_dlist) return run_dlist(format, dmax);
        if (*c_amp) return run_ample_search(format, amp_d);
        if (*c_roots) return run_roots(format, roots_lattice, roots_bound, roots_pell);
        if (*c_count) return run_count_points(format, cp_fixture, cp_p, cp_k, cp_mode, cp_dir);
        if (*c_zeta) return run_zeta(format, z_file, z_p, z_rank, z_sign);
        if (*c_verify) return run_verify_example(format, ve_name, ve_dir);
        if (*c_h2d) return run_h2d_table(format, h2d_max);
        if (*c_repro) return run_reproduce_all(format, ra_dir);
    } catch (const InconsistentError& e) {
        std::cerr << "inconsistent: " << e.what() << "\n";
        return 1;
    } catch (const NonIntegralError& e) {
        std::cerr << "inconsistent: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

#include "k3lab/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace k3lab {

namespace {

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

long parse_long(const std::string& tok, const std::string& where) {
    try {
        size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(where + ": expected an integer, got '" + tok + "'");
    }
}

Int parse_int(const std::string& tok, const std::string& where) {
    Int v;
    if (tok.empty() || mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
        throw ParseError(where + ": expected an integer, got '" + tok + "'");
    return v;
}

}  // namespace

bool SurfaceFixture::has_poly(const std::string& n) const {
    for (const auto& [pn, p] : polys)
        if (pn == n) return true;
    return false;
}

const MultiPoly& SurfaceFixture::poly(const std::string& n) const {
    for (const auto& [pn, p] : polys)
        if (pn == n) return p;
    throw DomainError("fixture " + name + " has no polynomial named " + n);
}

LatVec SurfaceFixture::named_class(const std::string& n) const {
    for (const auto& [cn, v] : classes)
        if (cn == n) return v;
    throw DomainError("fixture " + name + " has no class named " + n);
}

std::vector<MultiPoly> SurfaceFixture::poly_group(const std::string& prefix) const {
    std::vector<MultiPoly> out;
    for (size_t i = 0;; ++i) {
        std::string n = prefix + std::to_string(i);
        if (!has_poly(n)) break;
        out.push_back(poly(n));
    }
    return out;
}

std::vector<SurfaceFixture> parse_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open fixture file " + path);

    std::vector<SurfaceFixture> out;
    SurfaceFixture* cur = nullptr;
    std::optional<VarContext> vctx;
    std::string line;
    long lineno = 0;

    auto where = [&]() { return path + ":" + std::to_string(lineno); };

    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        std::istringstream iss(line);
        std::string kw;
        if (!(iss >> kw) || kw[0] == '#') continue;

        if (kw == "name") {
            std::string n;
            if (!(iss >> n)) throw ParseError(where() + ": name line needs a value");
            out.emplace_back();
            cur = &out.back();
            cur->name = n;
            vctx.reset();
            continue;
        }
        if (!cur) throw ParseError(where() + ": '" + kw + "' before any name line");

        if (kw == "ambient" || kw == "type") {
            std::string v;
            if (!(iss >> v)) throw ParseError(where() + ": " + kw + " line needs a value");
            (kw == "ambient" ? cur->ambient : cur->type) = v;
        } else if (kw == "lattice") {
            std::string t1;
            if (!(iss >> t1)) throw ParseError(where() + ": lattice line needs entries");
            if (t1 == "rank1") {
                std::string t2;
                if (!(iss >> t2)) throw ParseError(where() + ": rank1 lattice needs a norm");
                cur->rank1_norm = parse_int(t2, where());
            } else {
                std::string t2, t3;
                if (!(iss >> t2 >> t3)) throw ParseError(where() + ": rank-2 lattice needs 3 entries");
                cur->lattice = GramLattice2(parse_int(t1, where()), parse_int(t2, where()),
                                            parse_int(t3, where()));
            }
        } else if (kw == "basis") {
            std::string t;
            while (iss >> t) cur->basis.push_back(t);
            if (cur->basis.size() != 2) throw ParseError(where() + ": basis expects two names");
        } else if (kw == "class") {
            std::string n, u, v;
            if (!(iss >> n >> u >> v)) throw ParseError(where() + ": class line needs name u v");
            cur->classes.emplace_back(n, LatVec{parse_int(u, where()), parse_int(v, where())});
        } else if (kw == "checkprimes" || kw == "scanprimes") {
            auto& dst = kw == "checkprimes" ? cur->check_primes : cur->scan_primes;
            std::string t;
            while (iss >> t) dst.push_back(parse_long(t, where()));
            if (dst.empty()) throw ParseError(where() + ": " + kw + " line needs primes");
        } else if (kw == "reduction") {
            std::string tp, tr, td;
            if (!(iss >> tp >> tr >> td))
                throw ParseError(where() + ": reduction line needs p rank disc");
            cur->reductions.push_back(ReductionRow{parse_long(tp, where()), parse_long(tr, where()),
                                                   parse_int(td, where())});
        } else if (kw == "vars") {
            std::vector<std::string> names;
            std::vector<long> weights;
            std::string t;
            bool in_weights = false;
            while (iss >> t) {
                if (t == "weights") {
                    in_weights = true;
                } else if (in_weights) {
                    weights.push_back(parse_long(t, where()));
                } else {
                    names.push_back(t);
                }
            }
            if (names.empty()) throw ParseError(where() + ": vars line needs names");
            try {
                vctx = VarContext(names, weights);
            } catch (const Error& e) {
                throw ParseError(where() + ": " + e.what());
            }
        } else if (kw == "poly") {
            std::string n;
            if (!(iss >> n)) throw ParseError(where() + ": poly line needs a name");
            if (!vctx) throw ParseError(where() + ": poly before any vars line");
            if (cur->has_poly(n)) throw ParseError(where() + ": duplicate polynomial " + n);
            std::string body;
            std::getline(iss, body);
            size_t start = body.find_first_not_of(' ');
            body = start == std::string::npos ? "" : body.substr(start);
            MultiPoly p;
            try {
                p = MultiPoly::parse(*vctx, body);
            } catch (const Error& e) {
                throw ParseError(where() + ": " + e.what());
            }
            // stored bodies are canonical so the checksum covers exactly
            // what was parsed
            if (p.to_string() != body)
                throw ParseError(where() + ": polynomial body is not in canonical form");
            if (!p.is_homogeneous(nullptr))
                throw ParseError(where() + ": polynomial " + n + " is not homogeneous");
            cur->polys.emplace_back(n, std::move(p));
        } else if (kw == "checksum") {
            std::string n, hex;
            if (!(iss >> n >> hex)) throw ParseError(where() + ": checksum line needs name hex");
            if (!cur->has_poly(n))
                throw ParseError(where() + ": checksum for unknown polynomial " + n);
            std::string got = checksum_hex(cur->poly(n));
            if (got != hex)
                throw ParseError(where() + ": checksum mismatch for " + n + ": stored " + hex +
                                 ", computed " + got);
            cur->checksums[n] = hex;
        } else {
            throw ParseError(where() + ": unknown keyword '" + kw + "'");
        }
    }
    if (out.empty()) throw ParseError(path + ": no fixtures found");
    return out;
}

std::string fixtures_dir() {
    const char* env = std::getenv("K3LAB_FIXTURES");
    if (env && *env) return env;
    std::error_code ec;
    if (std::filesystem::is_directory("fixtures", ec)) return "fixtures";
#ifdef K3LAB_SOURCE_FIXTURES
    return K3LAB_SOURCE_FIXTURES;
#else
    throw DomainError("no fixture directory: set K3LAB_FIXTURES or run beside ./fixtures");
#endif
}

std::vector<SurfaceFixture> load_all_fixtures(const std::string& dir) {
    std::string d = dir.empty() ? fixtures_dir() : dir;
    std::error_code ec;
    if (!std::filesystem::is_directory(d, ec))
        throw DomainError("fixture directory does not exist: " + d);
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(d)) {
        if (entry.path().extension() == ".fix") files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw DomainError("fixture directory has no .fix files: " + d);
    std::vector<SurfaceFixture> out;
    for (const auto& f : files) {
        auto part = parse_fixture_file(f);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

SurfaceFixture load_fixture(const std::string& name, const std::string& dir) {
    for (auto& f : load_all_fixtures(dir))
        if (f.name == name) return f;
    throw DomainError("fixture not registered: " + name);
}

std::vector<H2dRow> h2d_table(long N) {
    if (N < 1) throw DomainError("table size must be positive");
    std::vector<H2dRow> rows;
    rows.reserve(N);
    for (long d = 1; d <= N; ++d) {
        H2dRow row;
        row.d = d;
        row.h = d == 1 ? 1 : 2;
        row.q_flag = d <= 4 || qr2_mod(d).has_value();
        if (row.q_flag && d > 4) {
            AmpleSearch s = ample_search_2d(d);
            if (s.status != AmpleSearch::Status::found)
                throw InconsistentError("flagged d=" + std::to_string(d) +
                                        " has no ample witness: " + s.reason);
            row.witness = s.witness;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace k3lab

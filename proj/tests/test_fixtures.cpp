#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "k3lab/fixtures.hpp"

using namespace k3lab;

namespace {

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / "k3lab_fixture_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_fix(const std::string& stem, const std::string& body) {
    auto path = scratch_dir() / (stem + ".fix");
    std::ofstream out(path);
    out << body;
    return path.string();
}

long term_count(const MultiPoly& p) {
    std::istringstream iss(p.to_string());
    std::string tok;
    long n = 0;
    while (iss >> tok) ++n;
    return n;
}

std::string message_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("registered fixtures load sorted by file with checksums replayed") {
    auto all = load_all_fixtures();
    REQUIRE(all.size() == 5);
    CHECK(all[0].name == "X2");
    CHECK(all[1].name == "X4");
    CHECK(all[2].name == "X6");
    CHECK(all[3].name == "X8");
    CHECK(all[4].name == "Xprime");
    long replayed = 0;
    for (const auto& fx : all) {
        for (const auto& [pn, hex] : fx.checksums) {
            CHECK(checksum_hex(fx.poly(pn)) == hex);
            ++replayed;
        }
    }
    CHECK(replayed == 15);
}

TEST_CASE("double cover fixture carries rank-1 lattice and reduction rows") {
    auto fx = load_fixture("X2");
    CHECK(!fx.lattice.has_value());
    REQUIRE(fx.rank1_norm.has_value());
    CHECK(*fx.rank1_norm == 2);
    CHECK((fx.check_primes == std::vector<long>{5, 11, 13}));
    CHECK((fx.scan_primes == std::vector<long>{5, 11, 13}));
    REQUIRE(fx.reductions.size() == 2);
    CHECK(fx.reductions[0].p == 5);
    CHECK(fx.reductions[0].rank == 2);
    CHECK(fx.reductions[0].disc_class == -1);
    CHECK(fx.reductions[1].p == 13);
    CHECK(fx.reductions[1].rank == 2);
    CHECK(fx.reductions[1].disc_class == -2);
    CHECK(term_count(fx.poly("sextic")) == 26);
    CHECK(fx.checksums.at("sextic") == "0b2227ff8b286a65");
    CHECK(fx.classes.empty());
}

TEST_CASE("quartic fixture exposes classes and polynomial groups") {
    auto fx = load_fixture("X4");
    REQUIRE(fx.lattice.has_value());
    CHECK(*fx.lattice == GramLattice2(4, 5, 2));
    CHECK((fx.basis == std::vector<std::string>{"H", "C"}));
    CHECK(fx.named_class("H") == LatVec(1, 0));
    CHECK(fx.named_class("C") == LatVec(0, 1));
    CHECK(fx.named_class("D") == LatVec(2, -1));
    CHECK(fx.named_class("iD") == LatVec(-2, 9));
    CHECK(fx.named_class("K") == LatVec(3, -1));
    CHECK_THROWS_AS(fx.named_class("nope"), DomainError);
    CHECK(term_count(fx.poly("surface")) == 8);
    CHECK(fx.poly_group("curve.C.").size() == 3);
    CHECK(fx.poly_group("curve.D.").size() == 3);
    CHECK(fx.poly_group("inv.").size() == 4);
    CHECK(fx.poly_group("cover.").size() == 3);
    CHECK(fx.poly_group("zz.").empty());
    CHECK(fx.has_poly("branch"));
    CHECK(fx.has_poly("segre.cprime"));
    CHECK(fx.has_poly("segre.dprime"));
    CHECK(!fx.has_poly("segre.eprime"));
    CHECK_THROWS_AS(fx.poly("nope"), DomainError);
    CHECK((fx.check_primes == std::vector<long>{11, 13}));
    CHECK((fx.scan_primes == std::vector<long>{11}));
}

TEST_CASE("remaining fixtures carry the documented shapes") {
    auto x6 = load_fixture("X6");
    CHECK(*x6.lattice == GramLattice2(6, 6, 2));
    CHECK((x6.basis == std::vector<std::string>{"H", "C6"}));
    CHECK(x6.poly_group("surface.").size() == 2);
    CHECK(x6.poly_group("curve.C6.").size() == 4);
    CHECK((x6.check_primes == std::vector<long>{7, 11, 13}));
    CHECK((x6.scan_primes == std::vector<long>{7, 13}));

    auto x8 = load_fixture("X8");
    CHECK(*x8.lattice == GramLattice2(4, 5, 2));
    CHECK(x8.poly_group("surface.").size() == 3);
    CHECK(x8.poly_group("line.D.").size() == 4);
    CHECK(x8.poly("line.D.0").to_string() == "+1*x1");
    CHECK(x8.poly("line.D.3").to_string() == "+1*x5");

    auto xp = load_fixture("Xprime");
    CHECK(*xp.lattice == GramLattice2(4, 0, -2));
    CHECK((xp.basis == std::vector<std::string>{"H", "e"}));
    CHECK(xp.has_poly("f2"));
    CHECK(xp.has_poly("f3"));
    CHECK(xp.has_poly("f4"));
    CHECK(xp.check_primes.empty());
    CHECK((xp.scan_primes == std::vector<long>{11}));

    CHECK_THROWS_AS(load_fixture("nope"), DomainError);
}

TEST_CASE("parser accepts a full synthetic file and reports both fixtures") {
    std::string body =
        "# synthetic surfaces for parser coverage\n"
        "name Mini\n"
        "ambient p3\n"
        "type quartic\n"
        "lattice 4 5 2\n"
        "basis H C\n"
        "class H 1 0\n"
        "checkprimes 11\n"
        "scanprimes 7 13\n"
        "reduction 5 2 -1\n"
        "vars x y\n"
        "poly f +1*x^2 -1*y^2\n"
        "checksum f d203728413f08a56\n"
        "name Mini2\n"
        "lattice rank1 2\n"
        "vars x y z weights 1 1 3\n"
        "poly g -1*x^3 +1*z\n";
    auto got = parse_fixture_file(write_fix("mini_ok", body));
    REQUIRE(got.size() == 2);
    CHECK(got[0].name == "Mini");
    CHECK(got[0].ambient == "p3");
    CHECK(got[0].type == "quartic");
    CHECK(*got[0].lattice == GramLattice2(4, 5, 2));
    CHECK(got[0].named_class("H") == LatVec(1, 0));
    CHECK((got[0].scan_primes == std::vector<long>{7, 13}));
    CHECK(got[0].reductions.size() == 1);
    CHECK(got[0].checksums.at("f") == "d203728413f08a56");
    CHECK(got[1].name == "Mini2");
    CHECK(*got[1].rank1_norm == 2);
    long wd = 0;
    CHECK(got[1].poly("g").is_homogeneous(&wd));
    CHECK(wd == 3);
}

TEST_CASE("parser rejects malformed files with file and line diagnostics") {
    auto expect_parse_error = [](const std::string& stem, const std::string& body,
                                 const std::string& needle) {
        std::string path = write_fix(stem, body);
        std::string msg = message_of([&] { parse_fixture_file(path); });
        INFO(stem << " -> " << msg);
        CHECK_THROWS_AS(parse_fixture_file(path), ParseError);
        CHECK(msg.find(needle) != std::string::npos);
        CHECK(msg.find(path + ":") != std::string::npos);
    };

    expect_parse_error("bad_keyword", "name A\nfoo bar\n", "unknown keyword");
    expect_parse_error("before_name", "ambient p3\n", "before any name");
    expect_parse_error("poly_no_vars", "name A\npoly f +1*x\n", "poly before any vars");
    expect_parse_error("noncanonical", "name A\nvars x y\npoly f +1*y +1*x\n", "canonical");
    expect_parse_error("checksum_bad",
                       "name A\nvars x y\npoly f +1*x\nchecksum f deadbeefdeadbeef\n",
                       "checksum mismatch");
    expect_parse_error("checksum_unknown", "name A\nvars x y\nchecksum g 00\n",
                       "unknown polynomial");
    expect_parse_error("dup_poly", "name A\nvars x y\npoly f +1*x\npoly f +1*y\n",
                       "duplicate polynomial");
    expect_parse_error("basis_count", "name A\nbasis H\n", "two names");
    expect_parse_error("inhomogeneous", "name A\nvars x y\npoly f +1*x^2 +1*y\n",
                       "not homogeneous");
    expect_parse_error("bad_integer", "name A\nlattice 4 q 2\n", "expected an integer");
    expect_parse_error("class_short", "name A\nclass D 2\n", "class line needs");
    expect_parse_error("empty_file", "# nothing here\n", "no fixtures");
    expect_parse_error("bad_var_poly", "name A\nvars x y\npoly f +1*t\n", "");

    // lattice entries go straight through the Gram constructor
    std::string odd = write_fix("odd_diag", "name A\nlattice 3 1 2\n");
    CHECK_THROWS_AS(parse_fixture_file(odd), OddDiagonalError);

    CHECK_THROWS_AS(parse_fixture_file((scratch_dir() / "missing.fix").string()), ParseError);
}

TEST_CASE("directory loading validates the directory itself") {
    auto empty = scratch_dir() / "empty_dir";
    std::filesystem::create_directories(empty);
    CHECK_THROWS_AS(load_all_fixtures(empty.string()), DomainError);
    CHECK_THROWS_AS(load_all_fixtures((scratch_dir() / "no_such_dir").string()), DomainError);
}

TEST_CASE("fixture directory resolution honors the environment override") {
    auto dir = scratch_dir() / "env_dir";
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "Mini.fix");
        out << "name Mini\nambient p3\nvars x y\npoly f +1*x^2 -1*y^2\n";
    }
    const char* old = std::getenv("K3LAB_FIXTURES");
    std::string saved = old ? old : "";
    setenv("K3LAB_FIXTURES", dir.string().c_str(), 1);
    CHECK(fixtures_dir() == dir.string());
    CHECK(load_fixture("Mini").ambient == "p3");
    CHECK_THROWS_AS(load_fixture("X4"), DomainError);
    if (old)
        setenv("K3LAB_FIXTURES", saved.c_str(), 1);
    else
        unsetenv("K3LAB_FIXTURES");
    CHECK(load_fixture("X4").name == "X4");
}

TEST_CASE("polarization table pairs ranks with rational-construction flags") {
    auto rows = h2d_table(10);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0].d == 1);
    CHECK(rows[0].h == 1);
    CHECK(rows[0].q_flag);
    CHECK(!rows[0].witness.has_value());
    for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].h == 2);
    std::vector<long> flagged;
    for (const auto& r : rows)
        if (r.q_flag) flagged.push_back(r.d);
    CHECK((flagged == std::vector<long>{1, 2, 3, 4, 7}));
    // only searched beyond the tiny degrees
    CHECK(!rows[1].witness.has_value());
    CHECK(!rows[3].witness.has_value());
    REQUIRE(rows[6].witness.has_value());
    CHECK(*rows[6].witness == LatVec(2, 1));
    CHECK_THROWS_AS(h2d_table(0), DomainError);
}

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3lab/chamber.hpp"
#include "k3lab/forms.hpp"
#include "k3lab/lattice.hpp"
#include "k3lab/poly.hpp"

namespace k3lab {

// externally computed reduction data: rank bound and a squarefree
// discriminant square-class representative at one prime
struct ReductionRow {
    long p = 0;
    long rank = 0;
    Int disc_class = 0;
};

struct SurfaceFixture {
    std::string name;
    std::string ambient;  // p3, p4, p5, weighted_p3_1113, p1xp1
    std::string type;
    std::optional<GramLattice2> lattice;  // rank-2 Picard lattice
    std::optional<Int> rank1_norm;        // rank-1 lattice <n>
    std::vector<std::string> basis;
    std::vector<std::pair<std::string, LatVec>> classes;
    std::vector<long> check_primes;  // containment and map checks
    std::vector<long> scan_primes;   // smoothness scans
    std::vector<ReductionRow> reductions;
    std::vector<std::pair<std::string, MultiPoly>> polys;  // file order
    std::map<std::string, std::string> checksums;

    bool has_poly(const std::string& n) const;
    const MultiPoly& poly(const std::string& n) const;
    LatVec named_class(const std::string& n) const;
    // polys named prefix0, prefix1, ... in index order
    std::vector<MultiPoly> poly_group(const std::string& prefix) const;
};

// fixture directory: K3LAB_FIXTURES env var, else ./fixtures, else the
// source-tree copy baked in at build time
std::string fixtures_dir();

// parse one fixture file; errors carry file and line diagnostics, and every
// stored checksum is replayed against the parsed polynomial text
std::vector<SurfaceFixture> parse_fixture_file(const std::string& path);

// all *.fix files in the directory; empty directory is a hard error
std::vector<SurfaceFixture> load_all_fixtures(const std::string& dir = "");

SurfaceFixture load_fixture(const std::string& name, const std::string& dir = "");

struct H2dRow {
    long d = 0;
    long h = 0;        // rank of the generic polarized-lattice overkernel
    bool q_flag = false;  // rational construction available
    std::optional<LatVec> witness;  // ample class found for flagged d > 4
};

// rows for 1 <= d <= N: h is 1 at d=1 and 2 beyond, the flag follows
// d <= 4 or 2 being a square mod d, with an ample witness where searched
std::vector<H2dRow> h2d_table(long N);

}  // namespace k3lab

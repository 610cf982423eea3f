#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "k3lab/fq.hpp"
#include "k3lab/poly.hpp"

namespace k3lab {

// Kernels run data-parallel by default; the serial path is kept as the
// reference implementation and both must produce identical results.
enum class ExecMode { serial, parallel };

// Point of P^n(F_q), coordinates packed field elements, first nonzero
// coordinate scaled to 1.
struct ProjPoint {
    std::vector<long> coords;

    bool operator==(const ProjPoint& o) const { return coords == o.coords; }
    bool operator<(const ProjPoint& o) const { return coords < o.coords; }
    std::string to_string() const;
};

ProjPoint normalize_point(std::vector<long> coords, const FqContext& ctx);

// every point exactly once, normalized; guarded against large q^n
std::vector<ProjPoint> proj_points(const FqContext& ctx, int n);

// number of points of w^2 = f(x,y,z) in P(1,1,1,3), f a plane sextic,
// computed as sum over P^2 of 1 + chi(f); odd characteristic only
long count_double_cover(const MultiPoly& f, const FqContext& ctx,
                        ExecMode mode = ExecMode::parallel);

// points of F = 0 in P^3 for a nonzero homogeneous quartic-or-any-degree F
long count_hypersurface_p3(const MultiPoly& F, const FqContext& ctx,
                           ExecMode mode = ExecMode::parallel);

// common vanishing locus in P^n of nonzero homogeneous forms sharing one
// variable context; result sorted by coordinate tuple
std::vector<ProjPoint> common_zeros(const std::vector<MultiPoly>& eqs, const FqContext& ctx,
                                    ExecMode mode = ExecMode::parallel);

// points where all equations vanish and the Jacobian drops below full rank:
// for one equation this is the classical partials test, for a complete
// intersection the maximal minors of the Jacobian vanish
std::vector<ProjPoint> singular_search(const std::vector<MultiPoly>& eqs, const FqContext& ctx,
                                       ExecMode mode = ExecMode::parallel);

struct ContainmentResult {
    bool contained = true;
    long curve_points = 0;
    std::optional<ProjPoint> counterexample;
};

// every common zero of curve_eqs also satisfies surface_eqs
ContainmentResult containment_check(const std::vector<MultiPoly>& curve_eqs,
                                    const std::vector<MultiPoly>& surface_eqs,
                                    const FqContext& ctx);

struct InvolutionReport {
    long surface_points = 0;
    long base_skipped = 0;        // map undefined at the point
    long image_base_skipped = 0;  // round trip undefined at the image
    long checked = 0;             // full round trips verified
    long image_failures = 0;      // image off the surface
    long identity_failures = 0;   // double image not proportional to the point
    std::optional<ProjPoint> first_failure;

    bool ok() const { return image_failures == 0 && identity_failures == 0; }
    std::string to_string() const;
};

// maps is a projective self-map of P^3 given by four equal-degree forms;
// checks that it preserves surface = 0 and squares to the identity on the
// points where it is defined
InvolutionReport involution_check(const std::array<MultiPoly, 4>& maps, const MultiPoly& surface,
                                  const FqContext& ctx);

struct CoverReport {
    long surface_points = 0;
    long base_skipped = 0;
    long checked = 0;
    long failures = 0;  // chi(branch at image) = -1, no point upstairs
    std::optional<ProjPoint> first_failure;

    bool ok() const { return failures == 0; }
    std::string to_string() const;
};

// for each point of surface = 0 in P^3 where the three map forms do not all
// vanish, the branch sextic evaluated at the image must not be a nonsquare
CoverReport double_cover_map_check(const std::array<MultiPoly, 3>& map3, const MultiPoly& branch,
                                   const MultiPoly& surface, const FqContext& ctx);

// field element of the polynomial evaluated at packed coordinates
long eval_mod(const MultiPoly& f, const std::vector<long>& point, const FqContext& ctx);

}  // namespace k3lab

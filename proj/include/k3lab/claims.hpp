#pragma once

#include <functional>
#include <string>
#include <vector>

#include "k3lab/fixtures.hpp"

namespace k3lab {

struct ClaimResult {
    std::string id;
    std::string title;
    enum class Status { pass, fail, skipped };
    Status status = Status::pass;
    std::string detail;  // deterministic payload, no timings
    double ms = 0.0;     // wall time, reported outside the payload
};

struct ClaimContext {
    const std::vector<SurfaceFixture>& fixtures;
    const SurfaceFixture& fixture(const std::string& name) const;
};

struct Claim {
    std::string id;
    std::string title;
    double budget_ms = 0.0;  // 0 = untimed; exceeding a budget fails the claim
    std::string skip_reason;  // nonempty marks a declared beyond-desk-scale skip
    std::function<std::string(const ClaimContext&)> run;  // payload, throws on failure
};

// fixed-order registry; every entry is exercised by both the acceptance
// binary and the reproduce-all subcommand
const std::vector<Claim>& claim_registry();

// loads fixtures once (hard error if absent), runs every claim, never stops
// on individual failures
std::vector<ClaimResult> reproduce_all(const std::string& fixture_dir = "");

// deterministic report bodies, byte-identical across repeated runs
std::string report_text(const std::vector<ClaimResult>& results);
std::string report_json(const std::vector<ClaimResult>& results);

// lift of the three nodal building blocks into x,y,z,w as f4 + f3 w + f2 w^2
MultiPoly nodal_quartic_from(const SurfaceFixture& fx);

}  // namespace k3lab

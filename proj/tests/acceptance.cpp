// Runs the full claim registry against the shipped fixtures and prints one
// verdict line per claim.  Exit status is nonzero when any claim fails, so
// ctest treats a red claim as a red test.
#include <cstdio>
#include <exception>
#include <string>

#include "k3lab/claims.hpp"

int main() {
    using k3lab::ClaimResult;
    std::vector<ClaimResult> results;
    try {
        results = k3lab::reproduce_all();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "claim run aborted: %s\n", e.what());
        return 2;
    }

    int passed = 0, failed = 0, skipped = 0;
    for (const auto& r : results) {
        const char* tag = "PASS";
        if (r.status == ClaimResult::Status::fail) {
            tag = "FAIL";
            ++failed;
        } else if (r.status == ClaimResult::Status::skipped) {
            tag = "SKIP";
            ++skipped;
        } else {
            ++passed;
        }
        std::printf("%s %s (%.1f ms): %s\n", tag, r.id.c_str(), r.ms, r.detail.c_str());
    }
    std::printf("summary: %d passed, %d failed, %d skipped\n", passed, failed, skipped);
    return failed == 0 ? 0 : 1;
}

// Acceptance gate: every release-blocking system-level check, one line of
// output per criterion. The tolerances live in circumnav::verification.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "circumnav/verification.hpp"

TEST_CASE("acceptance criteria")
{
    const auto results = circumnav::verification::run_all();
    REQUIRE(results.size() == 12);
    for (const auto& r : results) {
        std::printf("[criterion %2d] %s  %s — %s\n", r.id, r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.detail.c_str());
        std::fflush(stdout);
        CAPTURE(r.id);
        CAPTURE(r.name);
        CAPTURE(r.detail);
        CHECK(r.pass);
    }
}

#include "diskcover/maslov.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

using diskcover::FrameLoop;

namespace {

constexpr double pi = std::numbers::pi;

FrameLoop phase_loop(double half_turns, int samples) {
    // 1x1 frames e^{i * half_turns * theta / 2} over theta in [0, 2pi).
    FrameLoop loop;
    loop.n = 1;
    for (int k = 0; k < samples; ++k) {
        double theta = 2.0 * pi * k / samples;
        double phase = half_turns * theta / 2.0;
        loop.samples.push_back({std::complex<double>(std::cos(phase), std::sin(phase))});
    }
    return loop;
}

FrameLoop disk_tangent_frame(int samples) {
    // Tangent frame i * e^{i theta} of the unit-disk boundary.
    FrameLoop loop;
    loop.n = 1;
    for (int k = 0; k < samples; ++k) {
        double theta = 2.0 * pi * k / samples;
        loop.samples.push_back(
            {std::complex<double>(0.0, 1.0) * std::complex<double>(std::cos(theta), std::sin(theta))});
    }
    return loop;
}

} // namespace

TEST_CASE("constant loop has index zero") {
    FrameLoop loop;
    loop.n = 2;
    loop.samples.assign(8, {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}});
    CHECK(diskcover::maslov_index(loop) == 0);
}

TEST_CASE("half-phase loop winds once") {
    // det^2 of e^{i theta / 2} is e^{i theta}: analytic winding 1.
    CHECK(diskcover::maslov_index(phase_loop(1.0, 16)) == 1);
}

TEST_CASE("disk boundary tangent frame has index two") {
    CHECK(diskcover::maslov_index(disk_tangent_frame(16)) == 2);
}

TEST_CASE("refinement invariance") {
    for (int mult : {1, 2, 4})
        CHECK(diskcover::maslov_index(disk_tangent_frame(16 * mult)) == 2);
    for (int mult : {1, 2, 4})
        CHECK(diskcover::maslov_index(phase_loop(3.0, 32 * mult)) == 3);
}

TEST_CASE("additivity under direct sum") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> winding(-3, 3);
    for (int i = 0; i < 20; ++i) {
        int wa = winding(rng), wb = winding(rng);
        FrameLoop a = phase_loop(wa, 64);
        FrameLoop b = phase_loop(wb, 64);
        FrameLoop ab = diskcover::direct_sum(a, b);
        CHECK(diskcover::maslov_index(ab) ==
              diskcover::maslov_index(a) + diskcover::maslov_index(b));
    }
}

TEST_CASE("error paths") {
    FrameLoop degenerate;
    degenerate.n = 1;
    degenerate.samples.assign(4, {std::complex<double>(0.0, 0.0)});
    CHECK_THROWS_AS(diskcover::maslov_index(degenerate), diskcover::DegenerateFrame);

    // Two samples a quarter-turn apart in frame phase: det^2 jumps by pi.
    FrameLoop undersampled;
    undersampled.n = 1;
    undersampled.samples = {{std::complex<double>(1.0, 0.0)}, {std::complex<double>(0.0, 1.0)}};
    CHECK_THROWS_AS(diskcover::maslov_index(undersampled), diskcover::UndersampledLoop);

    FrameLoop malformed;
    malformed.n = 2;
    malformed.samples = {{std::complex<double>(1.0, 0.0)}};
    CHECK_THROWS_AS(diskcover::maslov_index(malformed), std::invalid_argument);
}

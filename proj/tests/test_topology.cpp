#include "diskcover/topology.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using diskcover::TopologicalType;

TEST_CASE("moduli dimensions") {
    // Closed genus-one curve with one marked point: real dimension 2.
    CHECK(diskcover::moduli_dim(TopologicalType::closed(1, 1)) == 2);
    // Open type (1,1) with one boundary mark: dimension 4.
    CHECK(diskcover::moduli_dim(TopologicalType::open(1, 1, 0, {1})) == 4);
    // The disk with three boundary marks is rigid.
    CHECK(diskcover::moduli_dim(TopologicalType::open(0, 1, 0, {3})) == 0);

    CHECK_THROWS_AS(diskcover::moduli_dim(TopologicalType::open(0, 1, 0, {0})),
                    diskcover::UnstableType);
    CHECK_THROWS_AS(diskcover::moduli_dim(TopologicalType::closed(0, 2)),
                    diskcover::UnstableType);
}

TEST_CASE("double genus") {
    CHECK(diskcover::double_genus(TopologicalType::open(1, 1, 0, {0})) == 2);
    CHECK(diskcover::double_genus(TopologicalType::open(4, 1, 0, {0})) == 8);
    CHECK(diskcover::double_genus(TopologicalType::open(0, 1, 0, {0})) == 0);
    CHECK_THROWS_AS(diskcover::double_genus(TopologicalType::closed(2, 0)),
                    diskcover::ClosedType);
}

TEST_CASE("open dimension equals doubled closed dimension") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> small(0, 4);
    for (int i = 0; i < 200; ++i) {
        int g = small(rng);
        int h = 1 + small(rng) % 3;
        int n = small(rng);
        std::vector<int> m(h, 0);
        int total_m = 0;
        for (int& mj : m) {
            mj = small(rng);
            total_m += mj;
        }
        TopologicalType open = TopologicalType::open(g, h, n, m);
        if (!open.stable())
            continue;
        int gd = diskcover::double_genus(open);
        // 3(2g+h-1) - 3 + 2n + sum(m) = 3*gd - 3 + (2n + sum(m)).
        CHECK(diskcover::moduli_dim(open) == 3 * gd - 3 + 2 * n + total_m);
    }
}

TEST_CASE("riemann_roch_index") {
    // Disk linearizations: tangent, normal, full.
    CHECK(diskcover::riemann_roch_index(1, 1, 2) == 3);
    CHECK(diskcover::riemann_roch_index(2, 1, -2) == 0);
    CHECK(diskcover::riemann_roch_index(3, 1, 0) == 3);
    CHECK_THROWS_AS(diskcover::riemann_roch_index(0, 1, 0), std::invalid_argument);
}

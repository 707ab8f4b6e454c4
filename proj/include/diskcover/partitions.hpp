#pragma once

#include "diskcover/topology.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace diskcover {

/// A ghost partition of a bordered type (g,h): a multiset of closed ghost
/// genera plus a multiset of open ghost types (g_i,h_i). Stored in
/// canonical order (closed genera descending, open pairs lexicographically
/// descending); the empty partition is the smooth disk.
struct GhostPartition {
    std::vector<int> closed;                  // each >= 1
    std::vector<std::pair<int, int>> open;    // (g_i,h_i), 2g_i+h_i-1 >= 1
    int target_genus = 0;
    int target_boundaries = 1;

    int r() const { return static_cast<int>(closed.size()); }
    int q() const { return static_cast<int>(open.size()); }

    void canonicalize() {
        std::sort(closed.begin(), closed.end(), std::greater<>());
        std::sort(open.begin(), open.end(), std::greater<>());
    }

    bool valid() const {
        if (target_boundaries < 1)
            return false;
        int genus_sum = 0;
        for (int g : closed) {
            if (g < 1)
                return false;
            genus_sum += g;
        }
        int excess = 0;
        for (auto [g, h] : open) {
            if (g < 0 || h < 1 || 2 * g + h - 1 < 1)
                return false;
            genus_sum += g;
            excess += h - 1;
        }
        return genus_sum == target_genus && 1 + excess == target_boundaries;
    }

    friend bool operator==(const GhostPartition& a, const GhostPartition& b) {
        return std::tie(a.target_genus, a.target_boundaries, a.closed, a.open) ==
               std::tie(b.target_genus, b.target_boundaries, b.closed, b.open);
    }
    friend bool operator<(const GhostPartition& a, const GhostPartition& b) {
        return std::tie(a.target_genus, a.target_boundaries, a.closed, a.open) <
               std::tie(b.target_genus, b.target_boundaries, b.closed, b.open);
    }
};

/// All unordered ghost partitions of (g,h), in canonical order.
inline std::vector<GhostPartition> enumerate_partitions(int g, int h) {
    if (g < 0 || h < 1)
        throw std::invalid_argument("enumerate_partitions: need g >= 0, h >= 1");

    std::vector<GhostPartition> out;
    GhostPartition current;
    current.target_genus = g;
    current.target_boundaries = h;

    // Open parts in weakly decreasing lexicographic order.
    std::function<void(int, int, std::pair<int, int>)> pick_open =
        [&](int genus_left, int excess_left, std::pair<int, int> max_part) {
            if (genus_left == 0 && excess_left == 0) {
                out.push_back(current);
                return;
            }
            for (int gi = std::min(genus_left, max_part.first); gi >= 0; --gi) {
                int h_cap = excess_left + 1;
                if (gi == max_part.first)
                    h_cap = std::min(h_cap, max_part.second);
                for (int hi = h_cap; hi >= 1; --hi) {
                    if (2 * gi + hi - 1 < 1)
                        continue;
                    current.open.emplace_back(gi, hi);
                    pick_open(genus_left - gi, excess_left - (hi - 1), {gi, hi});
                    current.open.pop_back();
                }
            }
        };

    // Closed parts as a weakly decreasing sequence of genera >= 1.
    std::function<void(int, int)> pick_closed = [&](int genus_left, int max_part) {
        pick_open(genus_left, h - 1, {genus_left, h});
        for (int gi = std::min(genus_left, max_part); gi >= 1; --gi) {
            current.closed.push_back(gi);
            pick_closed(genus_left - gi, gi);
            current.closed.pop_back();
        }
    };

    pick_closed(g, g);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// |Aut(lambda)|: product of multiplicity factorials over distinct closed
/// genera and distinct open pairs. Closed genus a and open pair (a,1)
/// count as distinct types.
inline std::uint64_t automorphism_order(const GhostPartition& lambda) {
    auto run_factorials = [](auto first, auto last) {
        std::uint64_t acc = 1;
        auto it = first;
        while (it != last) {
            auto run_end = it;
            std::uint64_t mult = 0;
            while (run_end != last && *run_end == *it) {
                ++run_end;
                ++mult;
            }
            for (std::uint64_t k = 2; k <= mult; ++k)
                acc *= k;
            it = run_end;
        }
        return acc;
    };
    GhostPartition c = lambda;
    c.canonicalize();
    return run_factorials(c.closed.begin(), c.closed.end()) *
           run_factorials(c.open.begin(), c.open.end());
}

/// Real dimension of the cell N_lambda, as the sum over ghost factors of
/// (attachment locus) + (ghost moduli); equals 3*g_double - (2r+q).
inline int cell_dimension(const GhostPartition& lambda) {
    int dim = 0;
    for (int g : lambda.closed)
        dim += 2 + moduli_dim(TopologicalType::closed(g, 1));
    for (auto [g, h] : lambda.open)
        dim += 1 + moduli_dim(TopologicalType::open(g, h, 0, [&] {
                   std::vector<int> m(h, 0);
                   m[0] = 1;
                   return m;
               }()));
    return dim;
}

/// Rank bookkeeping for a cell: obstruction rank 3*g_double, gluing rank
/// 2r+q, and their difference (which matches the cell dimension).
struct CellSummary {
    GhostPartition partition;
    int dim = 0;
    int ob_rank = 0;
    int gluing_rank = 0;
    int obF_rank = 0;
};

inline CellSummary cell_summary(const GhostPartition& lambda) {
    CellSummary s;
    s.partition = lambda;
    s.dim = cell_dimension(lambda);
    for (int g : lambda.closed)
        s.ob_rank += 6 * g;
    for (auto [g, h] : lambda.open)
        s.ob_rank += 3 * (2 * g + h - 1);
    s.gluing_rank = 2 * lambda.r() + lambda.q();
    s.obF_rank = s.ob_rank - s.gluing_rank;
    return s;
}

} // namespace diskcover

#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace diskcover {

struct UnstableType : std::domain_error {
    UnstableType() : std::domain_error("unstable topological type") {}
};

struct ClosedType : std::domain_error {
    ClosedType() : std::domain_error("operation requires a bordered type") {}
};

/// Topological type of a (possibly bordered) domain: genus, number of
/// boundary components, interior marked points, and a per-boundary-component
/// count of boundary marked points. h = 0 means a closed surface.
struct TopologicalType {
    int genus = 0;
    int boundary_components = 0;
    int interior_marks = 0;
    std::vector<int> boundary_marks; // length = boundary_components

    static TopologicalType closed(int g, int n) {
        TopologicalType t;
        t.genus = g;
        t.interior_marks = n;
        return t;
    }

    static TopologicalType open(int g, int h, int n, std::vector<int> m) {
        if (h < 1)
            throw std::invalid_argument("TopologicalType::open: h must be positive");
        if (static_cast<int>(m.size()) != h)
            throw std::invalid_argument("TopologicalType::open: boundary mark vector length != h");
        TopologicalType t;
        t.genus = g;
        t.boundary_components = h;
        t.interior_marks = n;
        t.boundary_marks = std::move(m);
        return t;
    }

    bool is_closed() const { return boundary_components == 0; }

    int total_boundary_marks() const {
        return std::accumulate(boundary_marks.begin(), boundary_marks.end(), 0);
    }

    bool stable() const {
        if (is_closed())
            return 3 * genus - 3 + interior_marks >= 0;
        return 3 * (2 * genus + boundary_components - 1) - 3 + 2 * interior_marks +
                   total_boundary_marks() >= 0;
    }
};

/// Genus of the complex double of a bordered type: 2g + h - 1.
inline int double_genus(const TopologicalType& t) {
    if (t.is_closed())
        throw ClosedType();
    return 2 * t.genus + t.boundary_components - 1;
}

/// Real dimension of the moduli space of domains of type t:
/// 3(2g+h-1) - 3 + 2n + sum(m) for bordered types, 2(3g-3+n) for closed.
inline int moduli_dim(const TopologicalType& t) {
    if (!t.stable())
        throw UnstableType();
    if (t.is_closed())
        return 2 * (3 * t.genus - 3 + t.interior_marks);
    return 3 * double_genus(t) - 3 + 2 * t.interior_marks + t.total_boundary_marks();
}

/// Fredholm index of a real linear Cauchy-Riemann operator on a bundle
/// pair over a bordered surface: rk * chi + mu.
inline int riemann_roch_index(int rank, int euler_char, int maslov) {
    if (rank < 1)
        throw std::invalid_argument("riemann_roch_index: rank must be positive");
    return rank * euler_char + maslov;
}

} // namespace diskcover

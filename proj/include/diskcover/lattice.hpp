#pragma once

#include "diskcover/partitions.hpp"
#include "diskcover/topology.hpp"

#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace diskcover {

struct InvalidConfiguration : std::domain_error {
    explicit InvalidConfiguration(const std::string& what) : std::domain_error(what) {}
};

enum class NodeKind { Interior, Boundary };

/// A vertex of a ghost bubble tree: a closed moduli piece (genus g) or an
/// open piece of type (g,h). Children hang off nodes classified interior
/// or boundary. Closed pieces only carry interior nodes to closed pieces;
/// open pieces may carry interior nodes to closed pieces and boundary
/// nodes to open pieces.
struct BubbleTree {
    bool is_closed = true;
    int genus = 0;
    int boundaries = 0; // meaningful for open pieces
    std::vector<std::pair<NodeKind, BubbleTree>> children;

    static BubbleTree closed_piece(int g) {
        BubbleTree t;
        t.is_closed = true;
        t.genus = g;
        return t;
    }

    static BubbleTree open_piece(int g, int h) {
        BubbleTree t;
        t.is_closed = false;
        t.genus = g;
        t.boundaries = h;
        return t;
    }
};

/// A bubble-tree decoration of the disk describing a cell or a
/// cell-intersection stratum: one attachment record per disk node.
struct Configuration {
    int target_genus = 0;
    int target_boundaries = 1;
    std::vector<std::pair<NodeKind, BubbleTree>> attachments;
};

enum class MoveKind { I, II, III };

inline const char* move_name(MoveKind k) {
    switch (k) {
    case MoveKind::I: return "I";
    case MoveKind::II: return "II";
    default: return "III";
    }
}

struct DegenerationMove {
    MoveKind kind;
    int first = -1;  // index into the canonical closed (I, III) or open (II) list
    int second = -1; // second operand for I and II
};

namespace detail {

struct SmoothedType {
    int genus = 0;
    int boundaries = 0; // 0 for closed trees
};

// Smooths every tree edge and checks per-vertex structure and stability.
// root_mark is the node kind attaching the root to the disk.
inline SmoothedType smooth_tree(const BubbleTree& t, NodeKind root_mark) {
    int interior_marks = 0;
    int boundary_marks = 0;
    SmoothedType total;
    total.genus = t.genus;
    total.boundaries = t.is_closed ? 0 : t.boundaries;

    for (const auto& [kind, child] : t.children) {
        if (kind == NodeKind::Interior) {
            if (!child.is_closed)
                throw InvalidConfiguration("interior node must carry a closed piece");
            auto sub = smooth_tree(child, NodeKind::Interior);
            total.genus += sub.genus;
            ++interior_marks;
        } else {
            if (t.is_closed || child.is_closed)
                throw InvalidConfiguration("boundary node must join two open pieces");
            auto sub = smooth_tree(child, NodeKind::Boundary);
            total.genus += sub.genus;
            total.boundaries += sub.boundaries - 1;
            ++boundary_marks;
        }
    }

    // The node above this vertex (tree edge or disk node) is one mark.
    if (root_mark == NodeKind::Interior)
        ++interior_marks;
    else
        ++boundary_marks;

    if (t.is_closed) {
        if (boundary_marks > 0)
            throw InvalidConfiguration("closed piece attached along a boundary node");
        TopologicalType piece = TopologicalType::closed(t.genus, interior_marks);
        if (!piece.stable())
            throw InvalidConfiguration("unstable closed piece in configuration");
    } else {
        std::vector<int> m(t.boundaries, 0);
        m[0] = boundary_marks;
        TopologicalType piece = TopologicalType::open(t.genus, t.boundaries, interior_marks, m);
        if (!piece.stable())
            throw InvalidConfiguration("unstable open piece in configuration");
    }
    return total;
}

inline int tree_moduli_dim(const BubbleTree& t, NodeKind root_mark) {
    int interior_marks = 0;
    int boundary_marks = 0;
    int dim = 0;
    for (const auto& [kind, child] : t.children) {
        dim += tree_moduli_dim(child, kind);
        if (kind == NodeKind::Interior)
            ++interior_marks;
        else
            ++boundary_marks;
    }
    if (root_mark == NodeKind::Interior)
        ++interior_marks;
    else
        ++boundary_marks;

    if (t.is_closed) {
        dim += moduli_dim(TopologicalType::closed(t.genus, interior_marks));
    } else {
        std::vector<int> m(t.boundaries, 0);
        m[0] = boundary_marks;
        dim += moduli_dim(TopologicalType::open(t.genus, t.boundaries, interior_marks, m));
    }
    return dim;
}

inline int tree_node_params(const BubbleTree& t) {
    int total = 0;
    for (const auto& [kind, child] : t.children)
        total += (kind == NodeKind::Interior ? 2 : 1) + tree_node_params(child);
    return total;
}

} // namespace detail

/// Checks that smoothing all tree edges and disk attachments reproduces
/// the target type and that every piece is stable.
inline void validate(const Configuration& c) {
    int genus = 0;
    int boundary_excess = 0;
    for (const auto& [kind, tree] : c.attachments) {
        if (kind == NodeKind::Interior && !tree.is_closed)
            throw InvalidConfiguration("interior disk node must carry a closed tree");
        if (kind == NodeKind::Boundary && tree.is_closed)
            throw InvalidConfiguration("boundary disk node must carry an open tree");
        auto sub = detail::smooth_tree(tree, kind);
        genus += sub.genus;
        if (kind == NodeKind::Boundary)
            boundary_excess += sub.boundaries - 1;
    }
    if (genus != c.target_genus || 1 + boundary_excess != c.target_boundaries)
        throw InvalidConfiguration("smoothing does not reproduce the target type");
}

/// Real dimension of the stratum described by c: attachment loci (disk or
/// circle position per disk node) plus moduli of every tree vertex.
inline int config_dimension(const Configuration& c) {
    validate(c);
    int dim = 0;
    for (const auto& [kind, tree] : c.attachments) {
        dim += kind == NodeKind::Interior ? 2 : 1;
        dim += detail::tree_moduli_dim(tree, kind);
    }
    return dim;
}

/// Stratum dimension plus one gluing parameter per unsmoothed node
/// (2 interior, 1 boundary, counting disk nodes and tree-internal nodes).
/// ok iff the total equals 3 * (2g + h - 1) of the target.
inline std::pair<int, bool> gluing_audit(const Configuration& c) {
    int total = config_dimension(c);
    for (const auto& [kind, tree] : c.attachments) {
        total += kind == NodeKind::Interior ? 2 : 1;
        total += detail::tree_node_params(tree);
    }
    int expected = 3 * (2 * c.target_genus + c.target_boundaries - 1);
    return {total, total == expected};
}

/// The smooth-cell configuration of a partition: one single-vertex tree
/// per ghost.
inline Configuration cell_config(const GhostPartition& lambda) {
    Configuration c;
    c.target_genus = lambda.target_genus;
    c.target_boundaries = lambda.target_boundaries;
    for (int g : lambda.closed)
        c.attachments.emplace_back(NodeKind::Interior, BubbleTree::closed_piece(g));
    for (auto [g, h] : lambda.open)
        c.attachments.emplace_back(NodeKind::Boundary, BubbleTree::open_piece(g, h));
    return c;
}

/// All partitions reachable from lambda by one basic degeneration:
///   I   two closed ghosts collide (sphere bubble),
///   II  two open ghosts collide (disk bubble),
///   III a closed ghost hits the boundary.
inline std::vector<std::pair<DegenerationMove, GhostPartition>>
basic_degenerations(const GhostPartition& lambda) {
    GhostPartition base = lambda;
    base.canonicalize();
    std::vector<std::pair<DegenerationMove, GhostPartition>> out;
    std::set<std::pair<int, GhostPartition>> seen;

    auto push = [&](DegenerationMove m, GhostPartition p) {
        p.canonicalize();
        if (seen.insert({static_cast<int>(m.kind), p}).second)
            out.emplace_back(m, std::move(p));
    };

    for (int i = 0; i < base.r(); ++i) {
        for (int j = i + 1; j < base.r(); ++j) {
            GhostPartition p = base;
            p.closed[i] += p.closed[j];
            p.closed.erase(p.closed.begin() + j);
            push({MoveKind::I, i, j}, std::move(p));
        }
    }
    for (int i = 0; i < base.q(); ++i) {
        for (int j = i + 1; j < base.q(); ++j) {
            GhostPartition p = base;
            p.open[i] = {p.open[i].first + p.open[j].first,
                         p.open[i].second + p.open[j].second - 1};
            p.open.erase(p.open.begin() + j);
            push({MoveKind::II, i, j}, std::move(p));
        }
    }
    for (int i = 0; i < base.r(); ++i) {
        GhostPartition p = base;
        int g = p.closed[i];
        p.closed.erase(p.closed.begin() + i);
        p.open.emplace_back(g, 1);
        push({MoveKind::III, i, -1}, std::move(p));
    }
    return out;
}

/// The intersection stratum of lambda with the cell it degenerates into
/// under the given move, as an explicit configuration:
///   I   the two closed ghosts hang off a sphere at an interior disk node,
///   II  the two open ghosts hang off a ghost disk at a boundary disk node,
///   III the closed ghost hangs off a ghost disk at a boundary disk node.
inline Configuration collision_config(const GhostPartition& lambda, const DegenerationMove& m) {
    GhostPartition base = lambda;
    base.canonicalize();
    Configuration c;
    c.target_genus = base.target_genus;
    c.target_boundaries = base.target_boundaries;

    std::vector<bool> closed_used(base.closed.size(), false);
    std::vector<bool> open_used(base.open.size(), false);

    switch (m.kind) {
    case MoveKind::I: {
        BubbleTree sphere = BubbleTree::closed_piece(0);
        sphere.children.emplace_back(NodeKind::Interior,
                                     BubbleTree::closed_piece(base.closed.at(m.first)));
        sphere.children.emplace_back(NodeKind::Interior,
                                     BubbleTree::closed_piece(base.closed.at(m.second)));
        closed_used.at(m.first) = closed_used.at(m.second) = true;
        c.attachments.emplace_back(NodeKind::Interior, std::move(sphere));
        break;
    }
    case MoveKind::II: {
        BubbleTree disk = BubbleTree::open_piece(0, 1);
        auto [g1, h1] = base.open.at(m.first);
        auto [g2, h2] = base.open.at(m.second);
        disk.children.emplace_back(NodeKind::Boundary, BubbleTree::open_piece(g1, h1));
        disk.children.emplace_back(NodeKind::Boundary, BubbleTree::open_piece(g2, h2));
        open_used.at(m.first) = open_used.at(m.second) = true;
        c.attachments.emplace_back(NodeKind::Boundary, std::move(disk));
        break;
    }
    case MoveKind::III: {
        BubbleTree disk = BubbleTree::open_piece(0, 1);
        disk.children.emplace_back(NodeKind::Interior,
                                   BubbleTree::closed_piece(base.closed.at(m.first)));
        closed_used.at(m.first) = true;
        c.attachments.emplace_back(NodeKind::Boundary, std::move(disk));
        break;
    }
    }

    for (std::size_t i = 0; i < base.closed.size(); ++i)
        if (!closed_used[i])
            c.attachments.emplace_back(NodeKind::Interior, BubbleTree::closed_piece(base.closed[i]));
    for (std::size_t i = 0; i < base.open.size(); ++i)
        if (!open_used[i])
            c.attachments.emplace_back(NodeKind::Boundary,
                                       BubbleTree::open_piece(base.open[i].first, base.open[i].second));
    return c;
}

/// The degeneration graph of (g,h): vertices are all partitions, edges the
/// basic degeneration pairs.
struct LatticeGraph {
    std::vector<GhostPartition> vertices;
    struct Edge {
        int from;
        int to;
        MoveKind kind;
    };
    std::vector<Edge> edges;
    bool connected = false;
};

inline LatticeGraph lattice_graph(int g, int h) {
    LatticeGraph graph;
    graph.vertices = enumerate_partitions(g, h);
    std::map<GhostPartition, int> index;
    for (int i = 0; i < static_cast<int>(graph.vertices.size()); ++i)
        index[graph.vertices[i]] = i;

    std::set<std::tuple<int, int, int>> seen;
    for (int i = 0; i < static_cast<int>(graph.vertices.size()); ++i) {
        for (const auto& [move, target] : basic_degenerations(graph.vertices[i])) {
            auto it = index.find(target);
            if (it == index.end())
                continue; // cannot happen for valid moves
            int j = it->second;
            int a = std::min(i, j), b = std::max(i, j);
            if (seen.insert({a, b, static_cast<int>(move.kind)}).second)
                graph.edges.push_back({a, b, move.kind});
        }
    }

    // BFS connectivity.
    if (!graph.vertices.empty()) {
        std::vector<std::vector<int>> adj(graph.vertices.size());
        for (const auto& e : graph.edges) {
            adj[e.from].push_back(e.to);
            adj[e.to].push_back(e.from);
        }
        std::vector<bool> visited(graph.vertices.size(), false);
        std::queue<int> frontier;
        frontier.push(0);
        visited[0] = true;
        std::size_t reached = 1;
        while (!frontier.empty()) {
            int v = frontier.front();
            frontier.pop();
            for (int w : adj[v])
                if (!visited[w]) {
                    visited[w] = true;
                    ++reached;
                    frontier.push(w);
                }
        }
        graph.connected = reached == graph.vertices.size();
    }
    return graph;
}

} // namespace diskcover

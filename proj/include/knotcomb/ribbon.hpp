#pragma once

// Ribbon graphs on the Turaev surface.
//
// The all-A (all-B) ribbon graph has one vertex per state circle and one
// edge per crossing. Rotations are read off by walking each state circle and
// recording the crossings in traversal order. Walk directions cannot be
// chosen independently: the saddle at a crossing orients its two smoothing
// arcs, and a circle direction is compatible when A-arcs are crossed
// slot3->slot0 / slot1->slot2 (for B: slot0->slot1 / slot2->slot3). The
// direction assignment is solved as a parity constraint system over the
// circles; the Turaev surface is orientable, so the system is consistent.
//
// Boundary components of a ribbon subgraph are orbits of sigma∘alpha on the
// rotation system restricted to the subgraph; genus follows from Euler data.

#include <vector>

#include "knotcomb/diagram.hpp"
#include "knotcomb/errors.hpp"
#include "knotcomb/tait.hpp"
#include "knotcomb/tree_delta.hpp"

namespace knotcomb {

struct RibbonEnd {
    int edge = 0;
    int end = 0;  // 0 or 1
    friend bool operator==(const RibbonEnd&, const RibbonEnd&) = default;
};

struct RibbonVertex {
    std::vector<RibbonEnd> rotation;  // cyclic
};

struct RibbonEdge {
    int u = 0, v = 0;   // vertex ids of end 0 / end 1
    int crossing = -1;  // -1 for synthetic graphs
};

struct RibbonGraph {
    std::vector<RibbonVertex> vertices;
    std::vector<RibbonEdge> edges;
    Smoothing base = Smoothing::A;  // which state the vertices came from

    int vertex_count() const { return int(vertices.size()); }
    int edge_count() const { return int(edges.size()); }
};

/// Spanning quasi-tree: connected, spanning, exactly one boundary face.
struct QuasiTree {
    std::vector<int> edge_ids;
};

/// Boundary components of the spanning ribbon subgraph on `edge_ids`
/// (isolated vertices contribute one boundary circle each).
inline int ribbon_faces(const RibbonGraph& rg, const std::vector<int>& edge_ids) {
    std::vector<char> in(rg.edges.size(), 0);
    for (int i : edge_ids) {
        require(i >= 0 && i < rg.edge_count(), "ribbon edge id out of range");
        in[std::size_t(i)] = 1;
    }
    // restricted rotations, position lookup per (edge, end)
    std::vector<std::vector<RibbonEnd>> rot(rg.vertices.size());
    std::vector<std::array<std::pair<int, int>, 2>> where(rg.edges.size());
    for (std::size_t v = 0; v < rg.vertices.size(); ++v)
        for (const auto& he : rg.vertices[v].rotation)
            if (in[std::size_t(he.edge)]) {
                where[std::size_t(he.edge)][std::size_t(he.end)] = {int(v), int(rot[v].size())};
                rot[v].push_back(he);
            }
    int faces = 0;
    std::vector<std::vector<char>> seen(rot.size());
    for (std::size_t v = 0; v < rot.size(); ++v) seen[v].assign(rot[v].size(), 0);
    for (std::size_t v0 = 0; v0 < rot.size(); ++v0) {
        if (rot[v0].empty()) {
            ++faces;  // isolated vertex disk
            continue;
        }
        for (std::size_t p0 = 0; p0 < rot[v0].size(); ++p0) {
            if (seen[v0][p0]) continue;
            ++faces;
            int v = int(v0), p = int(p0);
            while (!seen[std::size_t(v)][std::size_t(p)]) {
                seen[std::size_t(v)][std::size_t(p)] = 1;
                RibbonEnd he = rot[std::size_t(v)][std::size_t(p)];
                auto [w, q] = where[std::size_t(he.edge)][std::size_t(1 - he.end)];
                v = w;
                p = (q + 1) % int(rot[std::size_t(w)].size());
            }
        }
    }
    return faces;
}

/// Genus of the spanning ribbon subgraph on `edge_ids`; the subgraph must be
/// connected (an isolated vertex disconnects it unless it is the whole graph).
inline int ribbon_genus(const RibbonGraph& rg, const std::vector<int>& edge_ids) {
    detail::Dsu dsu(rg.vertex_count());
    int ncomp = rg.vertex_count();
    for (int i : edge_ids) {
        require(i >= 0 && i < rg.edge_count(), "ribbon edge id out of range");
        if (dsu.unite(rg.edges[std::size_t(i)].u, rg.edges[std::size_t(i)].v)) --ncomp;
    }
    require(ncomp == 1, "ribbon subgraph is disconnected");
    int f = ribbon_faces(rg, edge_ids);
    int g2 = 2 - rg.vertex_count() + int(edge_ids.size()) - f;
    internal_check(g2 >= 0 && g2 % 2 == 0, "ribbon genus is not a nonnegative integer");
    return g2 / 2;
}

namespace detail {

// A circle passage crosses one smoothing arc of one crossing. `forward` is
// true when the reference walk crossed the arc in its saddle direction.
struct Passage {
    int crossing;
    int arc;  // 0: first smoothing pair, 1: second
    bool forward;
};

inline bool arc_forward(Smoothing base, int from_slot) {
    // saddle directions: A-arcs 3->0 and 1->2; B-arcs 0->1 and 2->3
    if (base == Smoothing::A) return from_slot == 3 || from_slot == 1;
    return from_slot == 0 || from_slot == 2;
}

}  // namespace detail

/// All-A or all-B ribbon graph of a diagram. Edge i corresponds to crossing i.
inline RibbonGraph build_ribbon(const Diagram& d, Smoothing which) {
    const int c = d.crossing_count();
    RibbonGraph rg;
    rg.base = which;
    auto pairs = detail::smoothing_pairs(which);
    auto partner = [&](int slot) {
        for (auto [a, b] : pairs) {
            if (slot == a) return b;
            if (slot == b) return a;
        }
        return -1;
    };
    auto arc_of = [&](int slot) { return (slot == pairs[0][0] || slot == pairs[0][1]) ? 0 : 1; };

    // reference walk of each state circle; records passages in order
    std::vector<char> visited(std::size_t(4 * c), 0);
    std::vector<std::vector<detail::Passage>> circles;
    for (int start = 0; start < 4 * c; ++start) {
        if (visited[std::size_t(start)]) continue;
        std::vector<detail::Passage> walk;
        int cur = start;  // arrival dart
        while (!visited[std::size_t(cur)]) {
            visited[std::size_t(cur)] = 1;
            Dart at = Diagram::dart_of_index(cur);
            int out_slot = partner(at.slot);
            int out = 4 * at.crossing + out_slot;
            visited[std::size_t(out)] = 1;  // reverse-direction arrival
            walk.push_back({at.crossing, arc_of(at.slot), detail::arc_forward(which, at.slot)});
            Dart next = d.other_end(Diagram::dart_of_index(out));
            cur = Diagram::dart_index(next);
        }
        circles.push_back(std::move(walk));
    }
    internal_check(int(circles.size()) ==
                       state_circles(d, constant_state(d, which)),
                   "ribbon: circle walk disagrees with state circle count");

    // locate the two passages of every crossing
    struct EndRef {
        int circle = -1, index = -1;
        bool forward = false;
    };
    std::vector<std::array<EndRef, 2>> ends(static_cast<std::size_t>(c));
    for (std::size_t ci = 0; ci < circles.size(); ++ci)
        for (std::size_t k = 0; k < circles[ci].size(); ++k) {
            const auto& p = circles[ci][k];
            ends[std::size_t(p.crossing)][std::size_t(p.arc)] = {int(ci), int(k), p.forward};
        }

    // solve circle directions: flip[u] xor flip[v] fixed per crossing
    std::vector<int> flip(circles.size(), -1);
    std::vector<std::vector<std::pair<int, int>>> adj(circles.size());  // (other, parity)
    for (int x = 0; x < c; ++x) {
        const auto& e0 = ends[std::size_t(x)][0];
        const auto& e1 = ends[std::size_t(x)][1];
        internal_check(e0.circle >= 0 && e1.circle >= 0, "ribbon: missing passage");
        int parity = (e0.forward == e1.forward) ? 0 : 1;  // 0: same direction
        if (e0.circle == e1.circle) {
            internal_check(parity == 0, "ribbon: twisted loop (nonorientable data)");
            continue;
        }
        adj[std::size_t(e0.circle)].push_back({e1.circle, parity});
        adj[std::size_t(e1.circle)].push_back({e0.circle, parity});
    }
    for (std::size_t root = 0; root < circles.size(); ++root) {
        if (flip[root] >= 0) continue;
        flip[root] = 0;
        std::vector<int> stack{int(root)};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, parity] : adj[std::size_t(u)]) {
                int want = flip[std::size_t(u)] ^ parity;
                if (flip[std::size_t(v)] < 0) {
                    flip[std::size_t(v)] = want;
                    stack.push_back(v);
                } else {
                    internal_check(flip[std::size_t(v)] == want,
                                   "ribbon: direction constraints inconsistent");
                }
            }
        }
    }

    // assemble: vertex rotation = passage order, reversed where flipped
    rg.vertices.resize(circles.size());
    rg.edges.assign(std::size_t(c), RibbonEdge{});
    for (std::size_t ci = 0; ci < circles.size(); ++ci) {
        auto walk = circles[ci];
        if (flip[ci]) std::reverse(walk.begin(), walk.end());
        for (const auto& p : walk)
            rg.vertices[ci].rotation.push_back({p.crossing, p.arc});
    }
    for (int x = 0; x < c; ++x) {
        rg.edges[std::size_t(x)].crossing = x;
        rg.edges[std::size_t(x)].u = ends[std::size_t(x)][0].circle;
        rg.edges[std::size_t(x)].v = ends[std::size_t(x)][1].circle;
    }

    // duality check: the full graph's boundary is the opposite state
    std::vector<int> all(static_cast<std::size_t>(c));
    std::iota(all.begin(), all.end(), 0);
    int other = state_circles(
        d, constant_state(d, which == Smoothing::A ? Smoothing::B : Smoothing::A));
    internal_check(ribbon_faces(rg, all) == other,
                   "ribbon: full-graph boundary count != dual state circles");
    return rg;
}

/// Quasi-tree image of a spanning tree: for the all-A graph, A-edges of T
/// plus B-edges of G\T (and symmetrically for all-B). The result is verified
/// to be a spanning quasi-tree.
inline QuasiTree quasi_map(const TaitGraph& g, const SpanningTree& t, const RibbonGraph& rg) {
    require(int(g.edges.size()) == rg.edge_count(), "tait/ribbon edge sets differ");
    std::vector<char> in_tree(g.edges.size(), 0);
    for (int i : t.edge_ids) in_tree[std::size_t(i)] = 1;
    QuasiTree q;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        bool is_a = g.edges[i].ab == Smoothing::A;
        bool take;
        if (rg.base == Smoothing::A)
            take = is_a ? bool(in_tree[i]) : !in_tree[i];
        else
            take = is_a ? !in_tree[i] : bool(in_tree[i]);
        if (take) q.edge_ids.push_back(g.edges[i].crossing);
    }
    detail::Dsu dsu(rg.vertex_count());
    int ncomp = rg.vertex_count();
    for (int i : q.edge_ids)
        if (dsu.unite(rg.edges[std::size_t(i)].u, rg.edges[std::size_t(i)].v)) --ncomp;
    internal_check(ncomp == 1, "quasi_map: image is not spanning-connected");
    internal_check(ribbon_faces(rg, q.edge_ids) == 1, "quasi_map: image has more than one face");
    return q;
}

/// Genus of the Turaev surface of D, computed two ways (Euler data of the
/// saddle surface, and delta_max - delta_min); hard error on mismatch.
inline int turaev_genus_diagram(const Diagram& d) {
    int chi = s_A(d) - d.crossing_count() + s_B(d);
    int g2 = 2 - chi;
    internal_check(g2 >= 0 && g2 % 2 == 0, "Turaev surface Euler characteristic is odd");
    TaitPair tp = build_tait(d);
    DeltaStats st = delta_extremes(tp.g, d);
    int width = st.delta_max.two_delta - st.delta_min.two_delta;
    internal_check(width % 2 == 0 && width / 2 == g2 / 2,
                   "turaev genus: Euler route and delta route disagree");
    return g2 / 2;
}

}  // namespace knotcomb

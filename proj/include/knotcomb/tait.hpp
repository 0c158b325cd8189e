#pragma once

// Checkerboard coloring and Tait graphs.
//
// Faces of the sphere embedding are 2-colored; the graph G collapses the
// black regions to vertices and turns each crossing into one edge. An edge is
// an A-edge when the A-smoothing separates the two black corners at its
// crossing, a B-edge otherwise, and it carries the crossing's sign. Of the
// two candidate colorings we keep the one with E_B(G) >= E_B(G*); on a tie,
// the graph containing the face with the smallest dart wins.

#include <string>
#include <vector>

#include "knotcomb/diagram.hpp"
#include "knotcomb/errors.hpp"

namespace knotcomb {

struct TaitEdge {
    int u = 0, v = 0;       // vertex ids (u == v for a loop)
    Smoothing ab = Smoothing::A;
    int sign = +1;
    int crossing = 0;       // edge i always comes from crossing i
};

struct TaitGraph {
    int vertex_count = 0;
    std::vector<TaitEdge> edges;
    bool dual = false;              // true for G*
    std::vector<int> face_ids;      // diagram face index per vertex

    bool has_loop() const {
        for (const auto& e : edges)
            if (e.u == e.v) return true;
        return false;
    }
};

struct TaitPair {
    TaitGraph g;       // the convention graph: E_B(g) >= E_B(g_star)
    TaitGraph g_star;
};

/// Face coloring under the selected convention.
struct Checkerboard {
    std::vector<std::vector<Dart>> face_darts;
    std::vector<bool> black;  // per face, after convention selection
};

struct EdgeCounts {
    int e_a = 0, e_b = 0;
    int e_plus = 0, e_minus = 0;
    int e_a_plus = 0, e_a_minus = 0, e_b_plus = 0, e_b_minus = 0;
    int vertices = 0;
};

inline EdgeCounts edge_counts(const TaitGraph& g) {
    EdgeCounts c;
    c.vertices = g.vertex_count;
    for (const auto& e : g.edges) {
        bool a = (e.ab == Smoothing::A);
        bool p = (e.sign > 0);
        (a ? c.e_a : c.e_b)++;
        (p ? c.e_plus : c.e_minus)++;
        if (a && p) c.e_a_plus++;
        if (a && !p) c.e_a_minus++;
        if (!a && p) c.e_b_plus++;
        if (!a && !p) c.e_b_minus++;
    }
    return c;
}

/// Counts over a subgraph given by edge ids; vertex count is taken from g.
inline EdgeCounts edge_counts(const TaitGraph& g, const std::vector<int>& edge_ids) {
    TaitGraph sub;
    sub.vertex_count = g.vertex_count;
    for (int i : edge_ids) sub.edges.push_back(g.edges[std::size_t(i)]);
    return edge_counts(sub);
}

inline bool is_alternating(const TaitGraph& g) { return edge_counts(g).e_a == 0; }

namespace detail {

struct FaceData {
    std::vector<std::vector<Dart>> face_darts;
    std::vector<int> face_of_dart;  // by dart index
    std::vector<int> color;         // 0/1 per face, color 0 = the face containing dart index 0's... (raw)
};

inline FaceData color_faces(const Diagram& d) {
    FaceData fd;
    fd.face_darts = faces(d);
    const int c = d.crossing_count();
    fd.face_of_dart.assign(std::size_t(4 * c), -1);
    for (std::size_t f = 0; f < fd.face_darts.size(); ++f)
        for (Dart dart : fd.face_darts[f])
            fd.face_of_dart[std::size_t(Diagram::dart_index(dart))] = int(f);

    const int nf = int(fd.face_darts.size());
    fd.color.assign(std::size_t(nf), -1);
    fd.color[0] = 0;
    std::vector<int> stack{0};
    // faces sharing an edge get opposite colors; each edge's two darts lie in
    // the faces on its two sides
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nf));
    for (int v = 0; v < c; ++v)
        for (int s = 0; s < 4; ++s) {
            Dart here{v, s};
            Dart there = d.other_end(here);
            if (Diagram::dart_index(here) < Diagram::dart_index(there)) {
                int f1 = fd.face_of_dart[std::size_t(Diagram::dart_index(here))];
                int f2 = fd.face_of_dart[std::size_t(Diagram::dart_index(there))];
                adj[std::size_t(f1)].push_back(f2);
                adj[std::size_t(f2)].push_back(f1);
            }
        }
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int g : adj[std::size_t(f)]) {
            if (fd.color[std::size_t(g)] < 0) {
                fd.color[std::size_t(g)] = 1 - fd.color[std::size_t(f)];
                stack.push_back(g);
            } else {
                internal_check(fd.color[std::size_t(g)] != fd.color[std::size_t(f)],
                               "checkerboard coloring failed (malformed map)");
            }
        }
    }

    return fd;
}

// Face at the corner between slots (i, i+1): the face orbit containing dart
// (v, i+1).
inline int corner_face(const FaceData& fd, int v, int slot) {
    return fd.face_of_dart[std::size_t(4 * v + (slot + 1) % 4)];
}

inline TaitGraph graph_for_color(const Diagram& d, const FaceData& fd, int col) {
    TaitGraph g;
    std::vector<int> vid(fd.face_darts.size(), -1);
    for (std::size_t f = 0; f < fd.face_darts.size(); ++f)
        if (fd.color[f] == col) {
            vid[f] = g.vertex_count++;
            g.face_ids.push_back(int(f));
        }
    const int c = d.crossing_count();
    for (int v = 0; v < c; ++v) {
        int c30 = corner_face(fd, v, 3), c12 = corner_face(fd, v, 1);
        int c01 = corner_face(fd, v, 0), c23 = corner_face(fd, v, 2);
        internal_check(fd.color[std::size_t(c30)] == fd.color[std::size_t(c12)] &&
                           fd.color[std::size_t(c01)] == fd.color[std::size_t(c23)] &&
                           fd.color[std::size_t(c30)] != fd.color[std::size_t(c01)],
                       "opposite corners must share a color");
        TaitEdge e;
        e.sign = d.signs[std::size_t(v)];
        e.crossing = v;
        if (fd.color[std::size_t(c30)] == col) {
            // the A-smoothing separates these two corners
            e.ab = Smoothing::A;
            e.u = vid[std::size_t(c30)];
            e.v = vid[std::size_t(c12)];
        } else {
            e.ab = Smoothing::B;
            e.u = vid[std::size_t(c01)];
            e.v = vid[std::size_t(c23)];
        }
        g.edges.push_back(e);
    }
    return g;
}

}  // namespace detail

/// Both Tait graphs, convention-ordered: E_B(g) >= E_B(g_star).
inline TaitPair build_tait(const Diagram& d) {
    auto fd = detail::color_faces(d);
    TaitGraph g0 = detail::graph_for_color(d, fd, 0);
    TaitGraph g1 = detail::graph_for_color(d, fd, 1);
    internal_check(g0.vertex_count + g1.vertex_count == d.crossing_count() + 2,
                   "V(G) + V(G*) != F");
    int eb0 = edge_counts(g0).e_b, eb1 = edge_counts(g1).e_b;
    int keep;  // color kept as G
    if (eb0 != eb1) {
        keep = eb0 > eb1 ? 0 : 1;
    } else {
        // tie-break: the graph containing the face with the smallest dart,
        // ordered by (label, crossing, slot)
        int best_dart = -1;
        std::array<int, 3> best_key{};
        for (int v = 0; v < d.crossing_count(); ++v)
            for (int s = 0; s < 4; ++s) {
                std::array<int, 3> key{d.crossings[std::size_t(v)][s], v, s};
                if (best_dart < 0 || key < best_key) {
                    best_key = key;
                    best_dart = 4 * v + s;
                }
            }
        keep = fd.color[std::size_t(fd.face_of_dart[std::size_t(best_dart)])];
    }
    TaitPair pair;
    pair.g = (keep == 0) ? std::move(g0) : std::move(g1);
    pair.g_star = (keep == 0) ? std::move(g1) : std::move(g0);
    pair.g_star.dual = true;

    // duality sanity: same crossing, opposite A/B, same sign
    for (int i = 0; i < d.crossing_count(); ++i) {
        const auto& e = pair.g.edges[std::size_t(i)];
        const auto& f = pair.g_star.edges[std::size_t(i)];
        internal_check(e.crossing == i && f.crossing == i && e.ab != f.ab && e.sign == f.sign,
                       "tait duality violated");
    }
    internal_check(edge_counts(pair.g).e_plus == d.n_plus(), "E+(G) != n+(D)");
    return pair;
}

/// The face 2-coloring under the selected convention (black = vertices of G).
inline Checkerboard checkerboard(const Diagram& d) {
    auto fd = detail::color_faces(d);
    TaitPair pair = build_tait(d);
    // recover which raw color became black
    int black_color = fd.color[std::size_t(pair.g.face_ids.front())];
    Checkerboard cb;
    cb.face_darts = std::move(fd.face_darts);
    cb.black.reserve(fd.color.size());
    for (int c : fd.color) cb.black.push_back(c == black_color);
    return cb;
}

/// DOT export, for documentation and debugging.
inline std::string to_dot(const TaitGraph& g, const std::string& name = "tait") {
    std::string out = "graph " + name + " {\n";
    for (int v = 0; v < g.vertex_count; ++v)
        out += "  v" + std::to_string(v) + ";\n";
    for (const auto& e : g.edges) {
        out += "  v" + std::to_string(e.u) + " -- v" + std::to_string(e.v) + " [label=\"" +
               (e.ab == Smoothing::A ? "A" : "B") + (e.sign > 0 ? "+" : "-") + std::to_string(e.crossing) +
               "\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace knotcomb

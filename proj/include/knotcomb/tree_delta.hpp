#pragma once

// Spanning trees of the Tait graph and their delta-gradings.
//
// delta is a half-integer; 2*delta is stored as an exact int everywhere.
// Three formulations are computed for every tree and must agree:
//   2d = E_B(T) - E_A(T) + E+(G) - E_B(G)
//   2d = E_B(T) - E_A(T) - E-(G) + E_A(G)
//   d  = E_B(T) + (E+(G) - E-(G) - E_B(G) + E_A(G) - 2(V-1)) / 4
// together with the knot Floer form
//   2d = E_B+(T) + E_A+(G\T) - E_A-(T) - E_B-(G\T).
//
// Extremes never enumerate: delta is monotone in E_B(T), so a max/min-weight
// spanning tree (weight 1 on B-edges) realizes delta_max/delta_min, and both
// are cross-checked against the closed forms
//   2 delta_min = s_B(D) - E-(G) - 1,   2 delta_max = 1 + E+(G) - s_A(D).

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "knotcomb/diagram.hpp"
#include "knotcomb/errors.hpp"
#include "knotcomb/exact.hpp"
#include "knotcomb/tait.hpp"

namespace knotcomb {

struct SpanningTree {
    std::vector<int> edge_ids;  // sorted
};

struct DeltaValue {
    int two_delta = 0;
    friend auto operator<=>(const DeltaValue&, const DeltaValue&) = default;
};

struct DeltaStats {
    DeltaValue delta_min, delta_max;
    std::optional<std::map<int, long long>> distribution;  // 2*delta -> tree count
    long long tree_count = 0;
};

constexpr long long kDefaultTreeCap = 1000000;

namespace detail {

inline void check_spanning_tree(const TaitGraph& g, const SpanningTree& t) {
    require(int(t.edge_ids.size()) == g.vertex_count - 1, "not a spanning tree: wrong size");
    Dsu dsu(g.vertex_count);
    for (int i : t.edge_ids) {
        require(i >= 0 && i < int(g.edges.size()), "tree edge id out of range");
        const auto& e = g.edges[std::size_t(i)];
        require(dsu.unite(e.u, e.v), "not a spanning tree: cycle");
    }
}

}  // namespace detail

/// Number of spanning trees by the matrix-tree theorem (exact).
inline long long spanning_tree_count(const TaitGraph& g) {
    const int n = g.vertex_count;
    if (n == 1) return 1;
    IntMatrix lap(std::size_t(n - 1), std::vector<long long>(std::size_t(n - 1), 0));
    for (const auto& e : g.edges) {
        if (e.u == e.v) continue;
        int u = e.u - 1, v = e.v - 1;  // delete vertex 0
        if (u >= 0) lap[std::size_t(u)][std::size_t(u)]++;
        if (v >= 0) lap[std::size_t(v)][std::size_t(v)]++;
        if (u >= 0 && v >= 0) {
            lap[std::size_t(u)][std::size_t(v)]--;
            lap[std::size_t(v)][std::size_t(u)]--;
        }
    }
    BigInt det = determinant(lap);
    internal_check(det >= 0 && det <= BigInt(9223372036854775807LL),
                   "tree count out of long long range");
    return det.convert_to<long long>();
}

/// Emit every spanning tree exactly once (contraction/deletion on a DSU:
/// already-contracted edges act as loops and are skipped, bridges force the
/// include branch). Deterministic by edge id. Throws CapExceeded when more
/// than `cap` trees exist.
inline long long enumerate_spanning_trees(const TaitGraph& g, long long cap,
                                          const std::function<void(const SpanningTree&)>& visit) {
    require(cap >= 1, "cap must be >= 1");
    const int n = g.vertex_count;
    const int m = int(g.edges.size());
    long long count = 0;
    std::vector<int> chosen;
    std::function<void(int, detail::Dsu, int)> rec = [&](int pos, detail::Dsu dsu, int ncomp) {
        if (ncomp == 1) {
            ++count;
            if (count > cap) throw CapExceeded(cap);
            SpanningTree t;
            t.edge_ids = chosen;  // already ascending
            visit(t);
            return;
        }
        // first edge not yet a loop under the current contraction
        while (pos < m && dsu.find(g.edges[std::size_t(pos)].u) == dsu.find(g.edges[std::size_t(pos)].v))
            ++pos;
        if (pos == m) return;
        const auto& e = g.edges[std::size_t(pos)];

        // include
        {
            detail::Dsu next = dsu;
            next.unite(e.u, e.v);
            chosen.push_back(pos);
            rec(pos + 1, std::move(next), ncomp - 1);
            chosen.pop_back();
        }
        // exclude, unless e is a bridge of what remains
        {
            detail::Dsu probe = dsu;
            int comps = ncomp;
            for (int i = pos + 1; i < m; ++i)
                if (probe.unite(g.edges[std::size_t(i)].u, g.edges[std::size_t(i)].v)) --comps;
            if (comps == 1) rec(pos + 1, std::move(dsu), ncomp);
        }
    };
    rec(0, detail::Dsu(n), n);
    return count;
}

/// 2*delta of a spanning tree in the reduced Khovanov convention; all three
/// formulations are evaluated and must agree.
inline DeltaValue delta_kh(const TaitGraph& g, const SpanningTree& t) {
    detail::check_spanning_tree(g, t);
    EdgeCounts cg = edge_counts(g);
    EdgeCounts ct = edge_counts(g, t.edge_ids);
    int eq1 = ct.e_b - ct.e_a + cg.e_plus - cg.e_b;
    int eq2 = ct.e_b - ct.e_a - cg.e_minus + cg.e_a;
    int base4 = 4 * ct.e_b + (cg.e_plus - cg.e_minus - cg.e_b + cg.e_a - 2 * (g.vertex_count - 1));
    internal_check(base4 % 2 == 0 && eq1 == eq2 && eq1 == base4 / 2,
                   "delta formulations disagree");
    return {eq1};
}

/// 2*delta in the knot Floer convention; equals delta_kh on every tree.
inline DeltaValue delta_hfk(const TaitGraph& g, const SpanningTree& t) {
    detail::check_spanning_tree(g, t);
    EdgeCounts cg = edge_counts(g);
    EdgeCounts ct = edge_counts(g, t.edge_ids);
    int comp_a_plus = cg.e_a_plus - ct.e_a_plus;    // E_A+(G \ T)
    int comp_b_minus = cg.e_b_minus - ct.e_b_minus; // E_B-(G \ T)
    return {ct.e_b_plus + comp_a_plus - ct.e_a_minus - comp_b_minus};
}

namespace detail {

/// Spanning tree maximizing (maximize=true) or minimizing the B-edge count,
/// by greedy matroid optimization.
inline SpanningTree extreme_tree(const TaitGraph& g, bool maximize_b) {
    std::vector<int> order(g.edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        bool ba = g.edges[std::size_t(a)].ab == Smoothing::B;
        bool bb = g.edges[std::size_t(b)].ab == Smoothing::B;
        if (ba != bb) return maximize_b ? ba : !ba;
        return a < b;
    });
    Dsu dsu(g.vertex_count);
    SpanningTree t;
    for (int i : order) {
        const auto& e = g.edges[std::size_t(i)];
        if (e.u != e.v && dsu.unite(e.u, e.v)) t.edge_ids.push_back(i);
    }
    require(int(t.edge_ids.size()) == g.vertex_count - 1, "graph is disconnected");
    std::sort(t.edge_ids.begin(), t.edge_ids.end());
    return t;
}

}  // namespace detail

/// delta_min/delta_max by matroid greedy, cross-checked against the closed
/// forms; a mismatch is an internal error.
inline DeltaStats delta_extremes(const TaitGraph& g, const Diagram& d) {
    DeltaStats st;
    st.delta_max = delta_kh(g, detail::extreme_tree(g, true));
    st.delta_min = delta_kh(g, detail::extreme_tree(g, false));
    EdgeCounts cg = edge_counts(g);
    int lo_closed = s_B(d) - cg.e_minus - 1;
    int hi_closed = 1 + cg.e_plus - s_A(d);
    internal_check(st.delta_min.two_delta == lo_closed && st.delta_max.two_delta == hi_closed,
                   "delta extremes disagree with closed forms (convention bug)");
    internal_check(st.delta_min <= st.delta_max, "delta_min > delta_max");
    st.tree_count = spanning_tree_count(g);
    return st;
}

/// Full 2*delta histogram over all spanning trees (enumeration, capped).
inline DeltaStats delta_distribution(const TaitGraph& g, const Diagram& d,
                                     long long cap = kDefaultTreeCap) {
    DeltaStats st = delta_extremes(g, d);
    std::map<int, long long> hist;
    long long n = enumerate_spanning_trees(
        g, cap, [&](const SpanningTree& t) { hist[delta_kh(g, t).two_delta]++; });
    internal_check(n == st.tree_count, "enumeration count != matrix-tree count");
    internal_check(!hist.empty() && hist.begin()->first == st.delta_min.two_delta &&
                       hist.rbegin()->first == st.delta_max.two_delta,
                   "histogram support != delta extremes");
    st.distribution = std::move(hist);
    return st;
}

}  // namespace knotcomb

#pragma once

// Shared test fixtures and test-side oracles.
//
// The oracles here are deliberately independent of the library paths they
// check: circle counts are re-derived by orbit walking (the library uses
// union-find), and ribbon boundary counts are re-derived from mixed Kauffman
// states (the library walks restricted rotation systems).

#include <map>
#include <string>
#include <vector>

#include "knotcomb/knotcomb.hpp"

namespace corpus {

using namespace knotcomb;

inline const char* kTrefoilPD = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)";
inline const char* kFig8PD = "X(6,1,7,2),X(2,5,3,6),X(8,4,1,3),X(4,8,5,7)";
inline const char* kSixOnePD =
    "X(9,12,10,1),X(1,8,2,9),X(7,2,8,3),X(3,6,4,7),X(11,5,12,4),X(5,11,6,10)";
inline const char* kEightOnePD =
    "X(13,16,14,1),X(1,12,2,13),X(11,2,12,3),X(3,10,4,11),X(9,4,10,5),X(5,8,6,9),"
    "X(15,7,16,6),X(7,15,8,14)";

inline Diagram trefoil() { return parse_pd(kTrefoilPD); }
inline Diagram fig8() { return parse_pd(kFig8PD); }
inline Diagram six_one() { return parse_pd(kSixOnePD); }
inline Diagram eight_one() { return parse_pd(kEightOnePD); }

inline Diagram torus2(int n) {  // closure of sigma1^n, T(2,n)
    BraidWord w;
    w.strands = 2;
    for (int i = 0; i < std::abs(n); ++i) w.letters.push_back(n > 0 ? 1 : -1);
    return braid_closure(w);
}

inline Diagram torus3(int k) {  // closure of (sigma1 sigma2)^k, T(3,k)
    BraidWord w;
    w.strands = 3;
    for (int i = 0; i < std::abs(k); ++i) {
        if (k > 0) {
            w.letters.push_back(1);
            w.letters.push_back(2);
        } else {
            w.letters.push_back(-2);
            w.letters.push_back(-1);
        }
    }
    return braid_closure(w);
}

inline Diagram fig8_braid() { return braid_closure({3, {1, -2, 1, -2}}); }
inline Diagram unknot2() { return braid_closure({3, {1, -2}}); }

// 10-crossing positive 3-braid diagram of 10_124 whose checkerboard graph has
// two A-edges and eight B-edges (closure of s1^3 s2 s1^5 s2)
inline Diagram ten_124() { return braid_closure({3, {1, 1, 1, 2, 1, 1, 1, 1, 1, 2}}); }

/// Insert an R1 kink on strand `edge`: the tail keeps `edge`, the loop
/// becomes edge+1, the old head occurrence becomes edge+2.
inline Diagram add_kink(const Diagram& d, int edge, bool positive) {
    Diagram out;
    for (int v = 0; v < d.crossing_count(); ++v) {
        const auto& q = d.crossings[std::size_t(v)];
        int sgn = d.signs[std::size_t(v)];
        PDCrossing nq{};
        for (int s = 0; s < 4; ++s) {
            int x = q[s];
            bool incoming = (s == 0) || (sgn > 0 && s == 1) || (sgn < 0 && s == 3);
            if (x == edge && incoming)
                x = edge + 2;
            else if (x > edge)
                x += 2;
            nq.darts[std::size_t(s)] = x;
        }
        out.crossings.push_back(nq);
    }
    if (positive)
        out.crossings.push_back({edge, edge + 1, edge + 1, edge + 2});
    else
        out.crossings.push_back({edge, edge + 2, edge + 1, edge + 1});
    out.finish("add_kink");
    return out;
}

struct Entry {
    std::string name;
    Diagram d;
    bool alternating;
};

/// Diagrams driven through every identity suite.
inline const std::vector<Entry>& all() {
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> v;
        v.push_back({"trefoil", trefoil(), true});
        v.push_back({"mirror trefoil", mirror(trefoil()), true});
        v.push_back({"figure-eight", fig8(), true});
        v.push_back({"figure-eight braid", fig8_braid(), true});
        v.push_back({"6_1", six_one(), true});
        v.push_back({"8_1", eight_one(), true});
        v.push_back({"T(2,5)", torus2(5), true});
        v.push_back({"T(2,7)", torus2(7), true});
        v.push_back({"T(2,9)", torus2(9), true});
        v.push_back({"T(2,-3)", torus2(-3), true});
        v.push_back({"T(2,-5)", torus2(-5), true});
        v.push_back({"2-crossing unknot", unknot2(), true});
        v.push_back({"T(3,2) braid", torus3(2), false});
        v.push_back({"T(3,4) braid", torus3(4), false});
        v.push_back({"T(3,5) braid", torus3(5), false});
        v.push_back({"10_124", ten_124(), false});
        v.push_back({"trefoil + kink", add_kink(trefoil(), 2, true), false});
        v.push_back({"trefoil - kink", add_kink(trefoil(), 2, false), false});
        v.push_back({"6_1 + kink", add_kink(six_one(), 5, true), true});  // the kink lands as a B-loop
        return v;
    }();
    return entries;
}

/// Larger diagrams for the non-enumerating suites.
inline const std::vector<Entry>& large() {
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> v;
        v.push_back({"T(3,7) braid", torus3(7), false});
        v.push_back({"T(3,8) braid", torus3(8), false});
        v.push_back({"T(3,-5) braid", torus3(-5), false});
        return v;
    }();
    return entries;
}

// ---------------------------------------------------------------------------
// independent oracles

/// Circle count by explicit orbit walking (independent of the union-find
/// implementation in state_circles).
inline int trace_circles(const Diagram& d, const KauffmanState& st) {
    const int c = d.crossing_count();
    auto partner = [&](int v, int slot) {
        bool a = st.choice[std::size_t(v)] == Smoothing::A;
        static const int apart[4] = {3, 2, 1, 0};
        static const int bpart[4] = {1, 0, 3, 2};
        return a ? apart[slot] : bpart[slot];
    };
    std::vector<char> seen(std::size_t(4 * c), 0);
    int circles = 0;
    for (int start = 0; start < 4 * c; ++start) {
        if (seen[std::size_t(start)]) continue;
        ++circles;
        int cur = start;
        while (!seen[std::size_t(cur)]) {
            seen[std::size_t(cur)] = 1;
            Dart at = Diagram::dart_of_index(cur);
            int out = 4 * at.crossing + partner(at.crossing, at.slot);
            seen[std::size_t(out)] = 1;
            cur = Diagram::dart_index(d.other_end(Diagram::dart_of_index(out)));
        }
    }
    return circles;
}

/// Boundary components of the ribbon subgraph of the all-A (all-B) graph with
/// edge set S, via the transition rule: flipping a crossing's smoothing is the
/// boundary surgery that attaching its band performs.
inline int mixed_state_faces(const Diagram& d, Smoothing base, const std::vector<int>& s) {
    KauffmanState st = constant_state(d, base);
    Smoothing other = base == Smoothing::A ? Smoothing::B : Smoothing::A;
    for (int i : s) st.choice[std::size_t(i)] = other;
    return state_circles(d, st);
}

inline std::vector<int> all_edges(int c) {
    std::vector<int> v(static_cast<std::size_t>(c));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

/// Collect every spanning tree (small graphs only).
inline std::vector<SpanningTree> all_trees(const TaitGraph& g, long long cap = 100000) {
    std::vector<SpanningTree> out;
    enumerate_spanning_trees(g, cap, [&](const SpanningTree& t) { out.push_back(t); });
    return out;
}

}  // namespace corpus

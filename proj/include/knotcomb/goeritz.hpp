#pragma once

// Goeritz matrix, exact signature, and the Gordon-Litherland correction.
//
// For the Tait graph G with vertices v_0..v_n, the full symmetric form has
//   g_ij = #(B-edges between v_i and v_j) - #(A-edges between v_i and v_j)
// off the diagonal and g_ii = -sum_{j != i} g_ij; the Goeritz matrix deletes
// one vertex's row and column. The correction term is mu(D) =
// E_A+(G) - E_B-(G), and sigma(K) = sigma(Goeritz) - mu(D).
//
// The matrix signature is computed as exact inertia by symmetric congruence
// over rationals (zero diagonal pivots handled by the symmetric row+column
// addition trick); no floating point anywhere.

#include <vector>

#include "knotcomb/diagram.hpp"
#include "knotcomb/errors.hpp"
#include "knotcomb/exact.hpp"
#include "knotcomb/tait.hpp"

namespace knotcomb {

struct GoeritzData {
    IntMatrix matrix;  // (V-1) x (V-1), symmetric
    int mu = 0;
    int deleted_vertex = 0;
};

struct MatrixSignature {
    int plus = 0, minus = 0, zero = 0;
    int signature() const { return plus - minus; }
};

inline GoeritzData goeritz_matrix(const TaitGraph& g, int deleted_vertex = 0) {
    require(!g.has_loop(),
            "goeritz_matrix: Tait graph has a loop edge (run r1_reduce first)");
    require(0 <= deleted_vertex && deleted_vertex < g.vertex_count,
            "goeritz_matrix: deleted vertex out of range");
    const int n = g.vertex_count;
    std::vector<std::vector<long long>> full(std::size_t(n), std::vector<long long>(std::size_t(n), 0));
    for (const auto& e : g.edges) {
        long long w = (e.ab == Smoothing::B) ? 1 : -1;
        full[std::size_t(e.u)][std::size_t(e.v)] += w;
        full[std::size_t(e.v)][std::size_t(e.u)] += w;
    }
    for (int i = 0; i < n; ++i) {
        long long s = 0;
        for (int j = 0; j < n; ++j)
            if (j != i) s += full[std::size_t(i)][std::size_t(j)];
        full[std::size_t(i)][std::size_t(i)] = -s;
    }
    GoeritzData out;
    out.deleted_vertex = deleted_vertex;
    for (int i = 0; i < n; ++i) {
        if (i == deleted_vertex) continue;
        std::vector<long long> row;
        row.reserve(std::size_t(n) - 1);
        for (int j = 0; j < n; ++j)
            if (j != deleted_vertex) row.push_back(full[std::size_t(i)][std::size_t(j)]);
        out.matrix.push_back(std::move(row));
    }
    EdgeCounts c = edge_counts(g);
    out.mu = c.e_a_plus - c.e_b_minus;
    return out;
}

/// Exact inertia (sigma_+, sigma_-, sigma_0) by congruence diagonalization.
inline MatrixSignature matrix_signature(const IntMatrix& m) {
    require(is_symmetric(m), "matrix_signature: matrix is not symmetric");
    const int n = int(m.size());
    std::vector<std::vector<BigRational>> a(static_cast<std::size_t>(n),
                                            std::vector<BigRational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[std::size_t(i)][std::size_t(j)] = m[std::size_t(i)][std::size_t(j)];
    MatrixSignature sig;
    int k = 0;
    while (k < n) {
        int p = -1;
        for (int r = k; r < n; ++r)
            if (a[std::size_t(r)][std::size_t(r)] != 0) {
                p = r;
                break;
            }
        if (p < 0) {
            // all remaining diagonal entries are zero; find an off-diagonal
            int r = -1, s = -1;
            for (int i = k; i < n && r < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (a[std::size_t(i)][std::size_t(j)] != 0) {
                        r = i;
                        s = j;
                        break;
                    }
            if (r < 0) {
                sig.zero += n - k;
                break;
            }
            // row r += row s, col r += col s makes a[r][r] = 2 a[r][s] != 0
            for (int j = 0; j < n; ++j) a[std::size_t(r)][std::size_t(j)] += a[std::size_t(s)][std::size_t(j)];
            for (int i = 0; i < n; ++i) a[std::size_t(i)][std::size_t(r)] += a[std::size_t(i)][std::size_t(s)];
            p = r;
        }
        if (p != k) {
            std::swap(a[std::size_t(p)], a[std::size_t(k)]);
            for (int i = 0; i < n; ++i)
                std::swap(a[std::size_t(i)][std::size_t(p)], a[std::size_t(i)][std::size_t(k)]);
        }
        BigRational piv = a[std::size_t(k)][std::size_t(k)];
        if (piv > 0)
            ++sig.plus;
        else
            ++sig.minus;
        for (int r = k + 1; r < n; ++r) {
            BigRational f = a[std::size_t(r)][std::size_t(k)] / piv;
            if (f == 0) continue;
            for (int j = k; j < n; ++j)
                a[std::size_t(r)][std::size_t(j)] -= f * a[std::size_t(k)][std::size_t(j)];
            for (int i = k; i < n; ++i)
                a[std::size_t(i)][std::size_t(r)] -= f * a[std::size_t(k)][std::size_t(i)];
        }
        ++k;
    }
    internal_check(sig.plus + sig.minus + sig.zero == n, "inertia does not sum to dimension");
    return sig;
}

/// R1 reduction: repeatedly remove kinks (crossings whose Tait edge is a loop
/// in G or G*, i.e. a strand label repeated at cyclically consecutive slots).
/// Throws UnknotReduced when the last crossing would be removed.
inline Diagram r1_reduce(const Diagram& d) {
    Diagram cur = d;
    for (;;) {
        const int c = cur.crossing_count();
        int kink = -1, loop_label = 0;
        for (int v = 0; v < c && kink < 0; ++v) {
            const auto& q = cur.crossings[std::size_t(v)];
            for (int s = 0; s < 4; ++s)
                if (q[s] == q[(s + 1) % 4]) {
                    kink = v;
                    loop_label = q[s];
                    break;
                }
        }
        if (kink < 0) return cur;
        if (c == 1) throw UnknotReduced();
        // the strand runs p -> loop -> loop -> q; merge q into p
        int p = 0, q = 0;
        {
            std::vector<int> others;
            for (int x : cur.crossings[std::size_t(kink)].darts)
                if (x != loop_label) others.push_back(x);
            internal_check(others.size() == 2 && others[0] != others[1], "r1: bad kink");
            p = std::min(others[0], others[1]);
            q = std::max(others[0], others[1]);
        }
        std::vector<PDCrossing> quads;
        quads.reserve(std::size_t(c) - 1);
        for (int v = 0; v < c; ++v) {
            if (v == kink) continue;
            PDCrossing nq = cur.crossings[std::size_t(v)];
            for (auto& x : nq.darts)
                if (x == q) x = p;
            quads.push_back(nq);
        }
        // renumber the surviving labels in increasing order; the cyclic
        // traversal order is preserved, so succession survives
        std::vector<int> labels;
        for (const auto& nq : quads)
            for (int x : nq.darts) labels.push_back(x);
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        std::vector<int> renum(std::size_t(2 * c) + 1, 0);
        for (std::size_t i = 0; i < labels.size(); ++i) renum[std::size_t(labels[i])] = int(i) + 1;
        Diagram next;
        for (auto& nq : quads) {
            for (auto& x : nq.darts) x = renum[std::size_t(x)];
            next.crossings.push_back(nq);
        }
        next.finish("r1_reduce");
        cur = std::move(next);
    }
}

/// Exact knot signature via Gordon-Litherland: sigma(Goeritz) - mu(D).
/// The diagram must already be loop-free (reduced); the vanishing determinant
/// of a non-knot is rejected.
inline int knot_signature(const Diagram& d, int deleted_vertex = 0) {
    TaitPair tp = build_tait(d);
    GoeritzData gz = goeritz_matrix(tp.g, deleted_vertex);
    require(determinant(gz.matrix) != 0, "knot_signature: det = 0 (input is not a knot)");
    MatrixSignature ms = matrix_signature(gz.matrix);
    internal_check(ms.zero == 0, "knot_signature: singular Goeritz matrix after det check");
    return ms.signature() - gz.mu;
}

/// Traczyk's shortcut for reduced alternating diagrams; both expressions are
/// evaluated and must agree.
inline int traczyk_signature(const Diagram& d) {
    TaitPair tp = build_tait(d);
    require(is_alternating(tp.g), "traczyk_signature: diagram is not alternating");
    require(!tp.g.has_loop() && !tp.g_star.has_loop(),
            "traczyk_signature: diagram is not reduced");
    int first = s_A(d) - d.n_plus() - 1;
    int second = 1 + d.n_minus() - s_B(d);
    internal_check(first == second, "traczyk expressions disagree");
    return first;
}

}  // namespace knotcomb

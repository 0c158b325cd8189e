#pragma once

// Oriented knot diagrams as combinatorial maps.
//
// A diagram is stored PD-style: one quadruple of strand labels per crossing,
// in cyclic dart order starting at the incoming under-strand. Labels run
// 1..2c along the knot's orientation, so the label following the incoming
// under-strand is its value + 1 (wrapping 2c -> 1). A crossing is positive
// when slot 3 = slot 1 + 1 and negative when slot 1 = slot 3 + 1.
//
// Smoothing conventions, fixed once and used everywhere:
//   A-smoothing joins dart slots (0,3) and (1,2),
//   B-smoothing joins dart slots (0,1) and (2,3).
// With these, the orientation state (A at positive crossings, B at negative
// ones) is the Seifert state, and the standard trefoil code
// X(1,4,2,5),X(3,6,4,1),X(5,2,6,3) has s_A = 2 and s_B = 3.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotcomb/errors.hpp"

namespace knotcomb {

enum class Smoothing : std::uint8_t { A, B };

/// One crossing, four strand labels in cyclic dart order; slot 0 is the
/// incoming under-strand.
struct PDCrossing {
    std::array<int, 4> darts;
    int operator[](int slot) const { return darts[std::size_t(slot)]; }
};

struct Dart {
    int crossing = 0;
    int slot = 0;
    friend bool operator==(const Dart&, const Dart&) = default;
};

class Diagram {
public:
    std::vector<PDCrossing> crossings;
    std::vector<int> signs;  // +1 / -1 per crossing

    int crossing_count() const { return int(crossings.size()); }
    int edge_count() const { return 2 * crossing_count(); }

    int n_plus() const {
        int k = 0;
        for (int s : signs) k += (s > 0);
        return k;
    }
    int n_minus() const { return crossing_count() - n_plus(); }
    int writhe() const { return n_plus() - n_minus(); }

    /// The other occurrence of the strand label at `d`.
    Dart other_end(Dart d) const { return alpha_[std::size_t(dart_index(d))]; }

    static Dart dart_of_index(int i) { return {i / 4, i % 4}; }
    static int dart_index(Dart d) { return 4 * d.crossing + d.slot; }

    void finish(const char* context);  // validates and builds the dart involution

private:
    std::vector<Dart> alpha_;
};

struct KauffmanState {
    std::vector<Smoothing> choice;  // one entry per crossing
};

/// Braid word on `strands` strands; letter k > 0 means sigma_k, k < 0 its inverse.
struct BraidWord {
    int strands = 0;
    std::vector<int> letters;
};

namespace detail {

inline int succ(int label, int n) { return label % n + 1; }

inline std::array<std::array<int, 2>, 2> smoothing_pairs(Smoothing s) {
    if (s == Smoothing::A) return {{{0, 3}, {1, 2}}};
    return {{{0, 1}, {2, 3}}};
}

// Tiny union-find over 0..n-1.
class Dsu {
public:
    explicit Dsu(int n) : parent_(std::size_t(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[std::size_t(x)] != x) {
            parent_[std::size_t(x)] = parent_[std::size_t(parent_[std::size_t(x)])];
            x = parent_[std::size_t(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::size_t(a)] = b;
        return true;
    }
    int components(int n) {
        int k = 0;
        for (int i = 0; i < n; ++i) k += (find(i) == i);
        return k;
    }

private:
    std::vector<int> parent_;
};

}  // namespace detail

inline void Diagram::finish(const char* context) {
    const int c = crossing_count();
    const std::string ctx(context);
    require(c >= 1, ctx + ": empty diagram");
    const int n = 2 * c;

    std::vector<int> count(std::size_t(n) + 1, 0);
    for (const auto& q : crossings)
        for (int x : q.darts) {
            require(1 <= x && x <= n,
                    ctx + ": label " + std::to_string(x) + " out of range 1.." + std::to_string(n));
            ++count[std::size_t(x)];
        }
    for (int x = 1; x <= n; ++x)
        require(count[std::size_t(x)] == 2, ctx + ": label " + std::to_string(x) + " appears " +
                                                std::to_string(count[std::size_t(x)]) +
                                                " times (expected 2)");

    signs.assign(std::size_t(c), 0);
    for (int v = 0; v < c; ++v) {
        const auto& q = crossings[std::size_t(v)];
        require(q[2] == detail::succ(q[0], n),
                ctx + ": under-strand succession violated at crossing " + std::to_string(v));
        int sign;
        if (c == 1) {
            // With only two labels the b/d succession test is ambiguous; the
            // position of the loop decides the kink's handedness.
            sign = (q[0] == q[3] || q[1] == q[2]) ? +1 : -1;
        } else if (q[3] == detail::succ(q[1], n)) {
            sign = +1;
        } else if (q[1] == detail::succ(q[3], n)) {
            sign = -1;
        } else {
            throw InputError(ctx + ": over-strand succession violated at crossing " +
                             std::to_string(v));
        }
        signs[std::size_t(v)] = sign;
    }

    // connectivity of the underlying 4-valent graph
    {
        detail::Dsu dsu(c);
        std::vector<int> first(std::size_t(n) + 1, -1);
        for (int v = 0; v < c; ++v)
            for (int x : crossings[std::size_t(v)].darts) {
                if (first[std::size_t(x)] < 0)
                    first[std::size_t(x)] = v;
                else
                    dsu.unite(first[std::size_t(x)], v);
            }
        require(dsu.components(c) == 1, ctx + ": diagram is disconnected");
    }

    // dart involution (edge ends)
    alpha_.assign(std::size_t(4 * c), Dart{});
    {
        std::vector<int> first(std::size_t(n) + 1, -1);
        for (int v = 0; v < c; ++v)
            for (int s = 0; s < 4; ++s) {
                int x = crossings[std::size_t(v)][s];
                int id = 4 * v + s;
                if (first[std::size_t(x)] < 0) {
                    first[std::size_t(x)] = id;
                } else {
                    int j = first[std::size_t(x)];
                    alpha_[std::size_t(id)] = dart_of_index(j);
                    alpha_[std::size_t(j)] = Dart{v, s};
                }
            }
    }

    // sphere embedding: V - E + F = 2 with V = c, E = 2c
    int face_count = 0;
    {
        std::vector<char> seen(std::size_t(4 * c), 0);
        for (int start = 0; start < 4 * c; ++start) {
            if (seen[std::size_t(start)]) continue;
            ++face_count;
            int d = start;
            while (!seen[std::size_t(d)]) {
                seen[std::size_t(d)] = 1;
                Dart o = alpha_[std::size_t(d)];
                d = 4 * o.crossing + (o.slot + 1) % 4;
            }
        }
    }
    require(face_count == c + 2, ctx + ": face count " + std::to_string(face_count) +
                                     " != c + 2 (not a planar knot map)");
}

/// Faces of the sphere embedding as dart cycles: orbits of sigma∘alpha where
/// sigma advances one slot in the stored cyclic order.
inline std::vector<std::vector<Dart>> faces(const Diagram& d) {
    const int c = d.crossing_count();
    std::vector<std::vector<Dart>> out;
    std::vector<char> seen(std::size_t(4 * c), 0);
    for (int start = 0; start < 4 * c; ++start) {
        if (seen[std::size_t(start)]) continue;
        std::vector<Dart> orbit;
        int cur = start;
        while (!seen[std::size_t(cur)]) {
            seen[std::size_t(cur)] = 1;
            orbit.push_back(Diagram::dart_of_index(cur));
            Dart o = d.other_end(Diagram::dart_of_index(cur));
            cur = 4 * o.crossing + (o.slot + 1) % 4;
        }
        out.push_back(std::move(orbit));
    }
    return out;
}

/// Circle count of the smoothed diagram under a Kauffman state.
inline int state_circles(const Diagram& d, const KauffmanState& state) {
    const int c = d.crossing_count();
    require(int(state.choice.size()) == c, "state length != crossing count");
    detail::Dsu dsu(2 * c + 1);
    for (int v = 0; v < c; ++v) {
        auto pairs = detail::smoothing_pairs(state.choice[std::size_t(v)]);
        const auto& x = d.crossings[std::size_t(v)];
        dsu.unite(x[pairs[0][0]], x[pairs[0][1]]);
        dsu.unite(x[pairs[1][0]], x[pairs[1][1]]);
    }
    int circles = 0;
    for (int lab = 1; lab <= 2 * c; ++lab) circles += (dsu.find(lab) == lab);
    return circles;
}

inline KauffmanState constant_state(const Diagram& d, Smoothing s) {
    return {std::vector<Smoothing>(std::size_t(d.crossing_count()), s)};
}

/// A at positive crossings, B at negative ones: the Seifert state.
inline KauffmanState oriented_state(const Diagram& d) {
    KauffmanState st;
    st.choice.reserve(d.signs.size());
    for (int s : d.signs) st.choice.push_back(s > 0 ? Smoothing::A : Smoothing::B);
    return st;
}

inline int s_A(const Diagram& d) { return state_circles(d, constant_state(d, Smoothing::A)); }
inline int s_B(const Diagram& d) { return state_circles(d, constant_state(d, Smoothing::B)); }

/// Parse a comma-separated list of quadruples `X(a,b,c,d)`.
inline Diagram parse_pd(std::string_view text) {
    Diagram d;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() &&
               (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r'))
            ++i;
    };
    auto context_at = [&](std::size_t pos) {
        return std::string(text.substr(pos, std::min<std::size_t>(12, text.size() - pos)));
    };
    skip_ws();
    require(i < text.size(), "parse_pd: empty diagram");
    while (true) {
        skip_ws();
        std::size_t token_start = i;
        require(i < text.size() && (text[i] == 'X' || text[i] == 'x'),
                "parse_pd: expected 'X' at '" + context_at(i) + "'");
        ++i;
        skip_ws();
        require(i < text.size() && text[i] == '(',
                "parse_pd: expected '(' at '" + context_at(token_start) + "'");
        ++i;
        PDCrossing q{};
        for (int k = 0; k < 4; ++k) {
            skip_ws();
            std::size_t num_start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            require(i > num_start, "parse_pd: expected number at '" + context_at(num_start) + "'");
            q.darts[std::size_t(k)] = std::atoi(std::string(text.substr(num_start, i - num_start)).c_str());
            skip_ws();
            if (k < 3) {
                require(i < text.size() && text[i] == ',',
                        "parse_pd: expected ',' in '" + context_at(token_start) + "'");
                ++i;
            }
        }
        require(i < text.size() && text[i] == ')',
                "parse_pd: expected ')' in '" + context_at(token_start) + "'");
        ++i;
        d.crossings.push_back(q);
        skip_ws();
        if (i == text.size()) break;
        require(text[i] == ',',
                "parse_pd: expected ',' between crossings at '" + context_at(i) + "'");
        ++i;
        skip_ws();
        require(i < text.size(), "parse_pd: trailing ','");
    }
    d.finish("parse_pd");
    return d;
}

inline std::string pd_string(const Diagram& d) {
    std::string out;
    for (std::size_t v = 0; v < d.crossings.size(); ++v) {
        if (v) out += ',';
        const auto& q = d.crossings[v];
        out += "X(" + std::to_string(q[0]) + ',' + std::to_string(q[1]) + ',' +
               std::to_string(q[2]) + ',' + std::to_string(q[3]) + ')';
    }
    return out;
}

/// Trace closure of a braid word. Crossing signs equal letter signs; the
/// closure must be a knot (induced permutation a single cycle).
inline Diagram braid_closure(const BraidWord& w) {
    require(w.strands >= 2, "braid_closure: need at least 2 strands");
    require(!w.letters.empty(), "braid_closure: empty word");
    for (int L : w.letters)
        require(L != 0 && std::abs(L) < w.strands,
                "braid_closure: letter index " + std::to_string(L) + " out of range for " +
                    std::to_string(w.strands) + " strands");

    {
        std::vector<int> perm(static_cast<std::size_t>(w.strands));
        std::iota(perm.begin(), perm.end(), 0);
        for (int L : w.letters) {
            int i = std::abs(L) - 1;
            std::swap(perm[std::size_t(i)], perm[std::size_t(i) + 1]);
        }
        int len = 0, x = 0;
        do {
            x = perm[std::size_t(x)];
            ++len;
        } while (x != 0);
        require(len == w.strands,
                "braid_closure: closure is a link (permutation is not a single cycle)");
    }

    const int c = int(w.letters.size());
    std::vector<int> pos(static_cast<std::size_t>(w.strands));
    std::iota(pos.begin(), pos.end(), 1);
    int next_id = w.strands + 1;
    std::vector<std::array<int, 4>> quads;
    std::vector<int> signs;
    quads.reserve(std::size_t(c));
    for (int L : w.letters) {
        int i = std::abs(L) - 1;
        int bl = pos[std::size_t(i)], br = pos[std::size_t(i) + 1];
        int tl = next_id++, tr = next_id++;
        if (L > 0) {
            quads.push_back({bl, br, tr, tl});  // under-strand enters bottom-left
            signs.push_back(+1);
        } else {
            quads.push_back({br, tr, tl, bl});  // under-strand enters bottom-right
            signs.push_back(-1);
        }
        pos[std::size_t(i)] = tl;
        pos[std::size_t(i) + 1] = tr;
    }
    // closure: merge each strand's top edge with its bottom edge
    std::vector<int> rep(static_cast<std::size_t>(next_id));
    std::iota(rep.begin(), rep.end(), 0);
    auto root = [&](int x) {
        while (rep[std::size_t(x)] != x) x = rep[std::size_t(x)];
        return x;
    };
    for (int j = 0; j < w.strands; ++j) {
        int a = root(pos[std::size_t(j)]), b = root(j + 1);
        if (a != b) rep[std::size_t(a)] = b;
    }
    for (auto& q : quads)
        for (int& x : q) x = root(x);

    // walk the knot and relabel edges 1..2c in traversal order; continuation
    // is slot0 -> slot2 for the under-strand and over-in -> over-out
    std::vector<std::vector<std::pair<int, int>>> ends(static_cast<std::size_t>(next_id));
    for (int v = 0; v < c; ++v)
        for (int s = 0; s < 4; ++s) ends[std::size_t(quads[std::size_t(v)][std::size_t(s)])].emplace_back(v, s);
    std::vector<int> label(std::size_t(next_id), 0);
    int cur = quads[0][0];
    for (int step = 1; step <= 2 * c; ++step) {
        internal_check(label[std::size_t(cur)] == 0, "braid_closure: edge revisited");
        label[std::size_t(cur)] = step;
        int cont = -1;
        for (auto [v, s] : ends[std::size_t(cur)]) {
            const auto& q = quads[std::size_t(v)];
            if (s == 0) {
                cont = q[2];
                break;
            }
            if (signs[std::size_t(v)] > 0 && s == 1) {
                cont = q[3];
                break;
            }
            if (signs[std::size_t(v)] < 0 && s == 3) {
                cont = q[1];
                break;
            }
        }
        internal_check(cont >= 0, "braid_closure: traversal stuck");
        cur = cont;
    }
    Diagram d;
    d.crossings.reserve(std::size_t(c));
    for (const auto& q : quads) {
        PDCrossing pc{};
        for (int s = 0; s < 4; ++s) pc.darts[std::size_t(s)] = label[std::size_t(q[std::size_t(s)])];
        d.crossings.push_back(pc);
    }
    d.finish("braid_closure");
    internal_check(d.signs == signs, "braid_closure: derived signs disagree with letters");
    return d;
}

/// Parse whitespace-separated braid tokens: `s1`, `s2^-1`, or `S1` (capital =
/// inverse).
inline BraidWord parse_braid(std::string_view text, int strands) {
    require(strands >= 2, "parse_braid: need at least 2 strands");
    BraidWord w;
    w.strands = strands;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\n' &&
               text[i] != '\r')
            ++i;
        std::string tok(text.substr(start, i - start));
        require(tok[0] == 's' || tok[0] == 'S', "parse_braid: bad token '" + tok + "'");
        bool capital = (tok[0] == 'S');
        std::size_t k = 1, num_start = 1;
        while (k < tok.size() && tok[k] >= '0' && tok[k] <= '9') ++k;
        require(k > num_start, "parse_braid: bad token '" + tok + "'");
        int idx = std::atoi(tok.substr(num_start, k - num_start).c_str());
        bool suffix = false;
        if (k < tok.size()) {
            require(tok.substr(k) == "^-1", "parse_braid: bad token '" + tok + "'");
            suffix = true;
        }
        require(!(capital && suffix), "parse_braid: doubly inverted token '" + tok + "'");
        require(idx >= 1 && idx < strands,
                "parse_braid: generator index " + std::to_string(idx) + " out of range for " +
                    std::to_string(strands) + " strands");
        w.letters.push_back((capital || suffix) ? -idx : idx);
    }
    require(!w.letters.empty(), "parse_braid: empty word");
    return w;
}

/// Mirror image: over/under swapped at every crossing, all signs negated.
/// Each quadruple is rotated so the old over-strand's incoming dart becomes
/// slot 0.
inline Diagram mirror(const Diagram& d) {
    Diagram m;
    m.crossings.reserve(d.crossings.size());
    for (std::size_t v = 0; v < d.crossings.size(); ++v) {
        const auto& q = d.crossings[v];
        PDCrossing r{};
        if (d.signs[v] > 0)
            r.darts = {q[1], q[2], q[3], q[0]};
        else
            r.darts = {q[3], q[0], q[1], q[2]};
        m.crossings.push_back(r);
    }
    m.finish("mirror");
    for (std::size_t v = 0; v < d.crossings.size(); ++v)
        internal_check(m.signs[v] == -d.signs[v], "mirror: sign did not negate");
    return m;
}

}  // namespace knotcomb

#pragma once

// Closed-form invariants for closed 3-braids in Murasugi normal form
// (sigma1 sigma2)^{3n} * w, where w is one of
//   type 1:  sigma1^{a_1} sigma2^{-b_1} ... sigma1^{a_k} sigma2^{-b_k},  a_i, b_i > 0
//   type 2:  sigma2^k
//   type 3:  sigma1^m sigma2^{-1},  m in {-1, -2, -3}.
//
// Type 2 and type 3 with m = -2 close to links. A type 3 knot is the torus
// knot T(3, 3n-1) for m = -1 and T(3, 3n-2) for m = -3 (move sigma2^{-1}
// across the central full twists and cancel).
//
// Closed forms (all exact integers):
//   Erle:    sigma(K_n) = -4n - sum(a_i - b_i)                  (type 1 knots)
//   Greene:  s(K_n) = 6n - 2 - sigma(K_0) for n > 0, -sigma(K_0) for n = 0,
//            6n + 2 - sigma(K_0) for n < 0; and 2 tau = s.
//   Torus:   2 tau(T(3,k)) = s(T(3,k)) = 2k - 2, and with k = 6k' + l,
//            l in {1,2,4,5}: sigma(T(3,k)) = -8k' - 2l + 2 (mirror for k < 0).

#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotcomb/diagram.hpp"
#include "knotcomb/errors.hpp"

namespace knotcomb {

enum class NormalFormType { type1, type2, type3 };

struct MurasugiNormalForm {
    int n = 0;
    NormalFormType type = NormalFormType::type1;
    std::vector<std::pair<int, int>> pairs;  // type 1: (a_i, b_i), all > 0
    int k = 0;                               // type 2
    int m = 0;                               // type 3: -1, -2, or -3

    static MurasugiNormalForm type1_form(int n, std::vector<std::pair<int, int>> pairs) {
        MurasugiNormalForm nf;
        nf.n = n;
        nf.type = NormalFormType::type1;
        nf.pairs = std::move(pairs);
        require(!nf.pairs.empty(), "type 1 normal form needs at least one pair");
        for (auto [a, b] : nf.pairs)
            require(a > 0 && b > 0, "type 1 exponents must be positive");
        return nf;
    }
    static MurasugiNormalForm type2_form(int n, int k) {
        MurasugiNormalForm nf;
        nf.n = n;
        nf.type = NormalFormType::type2;
        nf.k = k;
        return nf;
    }
    static MurasugiNormalForm type3_form(int n, int m) {
        MurasugiNormalForm nf;
        nf.n = n;
        nf.type = NormalFormType::type3;
        nf.m = m;
        require(m == -1 || m == -2 || m == -3, "type 3 exponent must be -1, -2 or -3");
        return nf;
    }
};

struct TorusParams {
    int k = 0;  // the (3, k) torus knot
};

struct TorusInvariants {
    int two_tau = 0;
    int s = 0;
    int sigma = 0;
};

/// Exact Turaev genus when known, otherwise the two-element candidate set.
struct TuraevGenusStatement {
    std::optional<int> exact;
    std::optional<std::pair<int, int>> candidates;  // {n-1, n}
};

enum class ClosureKind { knot, link };

/// The literal braid word (sigma1 sigma2)^{3n} * w.
inline BraidWord normal_form_word(const MurasugiNormalForm& nf) {
    BraidWord w;
    w.strands = 3;
    if (nf.n >= 0) {
        for (int i = 0; i < 3 * nf.n; ++i) {
            w.letters.push_back(1);
            w.letters.push_back(2);
        }
    } else {
        for (int i = 0; i < -3 * nf.n; ++i) {
            w.letters.push_back(-2);
            w.letters.push_back(-1);
        }
    }
    switch (nf.type) {
        case NormalFormType::type1:
            for (auto [a, b] : nf.pairs) {
                for (int i = 0; i < a; ++i) w.letters.push_back(1);
                for (int i = 0; i < b; ++i) w.letters.push_back(-2);
            }
            break;
        case NormalFormType::type2:
            for (int i = 0; i < std::abs(nf.k); ++i) w.letters.push_back(nf.k > 0 ? 2 : -2);
            break;
        case NormalFormType::type3:
            for (int i = 0; i < -nf.m; ++i) w.letters.push_back(-1);
            w.letters.push_back(-2);
            break;
    }
    require(!w.letters.empty(), "normal form gives an empty word");
    return w;
}

inline ClosureKind classify(const MurasugiNormalForm& nf) {
    if (nf.type == NormalFormType::type2) return ClosureKind::link;
    if (nf.type == NormalFormType::type3) return nf.m == -2 ? ClosureKind::link : ClosureKind::knot;
    // type 1: check the closure permutation
    int p[3] = {0, 1, 2};
    for (int letter : normal_form_word(nf).letters) {
        int i = std::abs(letter) - 1;
        std::swap(p[i], p[i + 1]);
    }
    int len = 0, x = 0;
    do {
        x = p[x];
        ++len;
    } while (x != 0);
    return len == 3 ? ClosureKind::knot : ClosureKind::link;
}

inline int erle_signature(const MurasugiNormalForm& nf) {
    require(nf.type == NormalFormType::type1, "erle_signature needs a type 1 form");
    require(classify(nf) == ClosureKind::knot, "erle_signature: closure is a link");
    int sum = 0;
    for (auto [a, b] : nf.pairs) sum += a - b;
    return -4 * nf.n - sum;
}

/// Greene's s (= 2 tau) for a type 1 knot closure.
inline int greene_s(const MurasugiNormalForm& nf) {
    require(nf.type == NormalFormType::type1, "greene_s needs a type 1 form");
    require(classify(nf) == ClosureKind::knot, "greene_s: closure is a link");
    int sigma0 = 0;
    for (auto [a, b] : nf.pairs) sigma0 -= a - b;  // Erle with n = 0
    if (nf.n > 0) return 6 * nf.n - 2 - sigma0;
    if (nf.n == 0) return -sigma0;
    return 6 * nf.n + 2 - sigma0;
}

inline TorusInvariants torus_invariants(const TorusParams& p) {
    require(p.k % 3 != 0, "T(3,k) with 3 | k is a link");
    int k = std::abs(p.k);
    TorusInvariants ti;
    ti.two_tau = ti.s = 2 * k - 2;
    int kp = 0, l = k;
    while (l > 5 || l == 3) {  // l must land in {1,2,4,5}
        l -= 6;
        ++kp;
    }
    internal_check(l == 1 || l == 2 || l == 4 || l == 5, "torus decomposition failed");
    internal_check(k == 6 * kp + l, "torus decomposition failed");
    ti.sigma = -8 * kp - 2 * l + 2;
    if (p.k < 0) {
        ti.two_tau = -ti.two_tau;
        ti.s = -ti.s;
        ti.sigma = -ti.sigma;
    }
    return ti;
}

/// Exact Turaev genus of T(3,k): 2k' for k = 6k'+l with l in {1,2}, and
/// 2k'+1 for l in {4,5}.
inline int torus_turaev_genus(const TorusParams& p) {
    require(p.k % 3 != 0, "T(3,k) with 3 | k is a link");
    int k = std::abs(p.k);
    int kp = 0, l = k;
    while (l > 5 || l == 3) {
        l -= 6;
        ++kp;
    }
    return (l == 1 || l == 2) ? 2 * kp : 2 * kp + 1;
}

/// The torus knot closed by a type 3 normal form.
inline TorusParams type3_torus(const MurasugiNormalForm& nf) {
    require(nf.type == NormalFormType::type3 && nf.m != -2, "not a type 3 knot form");
    return {nf.m == -1 ? 3 * nf.n - 1 : 3 * nf.n - 2};
}

inline TuraevGenusStatement turaev_genus_statements(const MurasugiNormalForm& nf) {
    TuraevGenusStatement st;
    if (nf.type == NormalFormType::type3 && nf.m != -2) {
        st.exact = torus_turaev_genus(type3_torus(nf));
        return st;
    }
    if (nf.type == NormalFormType::type1 && nf.n > 0 && classify(nf) == ClosureKind::knot) {
        st.candidates = {nf.n - 1, nf.n};
        return st;
    }
    return st;  // out of scope: both fields empty
}

/// Parse the CLI normal-form syntax, e.g.
///   n=1; type=1; pairs=(2,1),(3,3)
///   n=0; type=2; k=4
///   n=2; type=3; m=-1
inline MurasugiNormalForm parse_normal_form(std::string_view text) {
    auto fail = [&](const std::string& why) -> void {
        throw InputError("parse_normal_form: " + why + " in '" + std::string(text) + "'");
    };
    std::optional<int> n, type, k, m;
    std::vector<std::pair<int, int>> pairs;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto read_int = [&]() -> int {
        skip();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == start) fail("expected integer");
        return std::atoi(std::string(text.substr(start, i - start)).c_str());
    };
    while (true) {
        skip();
        if (i >= text.size()) break;
        std::size_t ks = i;
        while (i < text.size() && text[i] != '=') ++i;
        if (i >= text.size()) fail("expected 'key=value'");
        std::string key(text.substr(ks, i - ks));
        while (!key.empty() && key.back() == ' ') key.pop_back();
        ++i;  // '='
        if (key == "n")
            n = read_int();
        else if (key == "type")
            type = read_int();
        else if (key == "k")
            k = read_int();
        else if (key == "m")
            m = read_int();
        else if (key == "pairs") {
            while (true) {
                skip();
                if (i >= text.size() || text[i] != '(') fail("expected '(' in pairs");
                ++i;
                int a = read_int();
                skip();
                if (i >= text.size() || text[i] != ',') fail("expected ',' in pair");
                ++i;
                int b = read_int();
                skip();
                if (i >= text.size() || text[i] != ')') fail("expected ')' in pair");
                ++i;
                pairs.emplace_back(a, b);
                skip();
                if (i < text.size() && text[i] == ',') {
                    ++i;
                    continue;
                }
                break;
            }
        } else
            fail("unknown key '" + key + "'");
        skip();
        if (i < text.size()) {
            if (text[i] != ';') fail("expected ';'");
            ++i;
        }
    }
    if (!n || !type) fail("need n= and type=");
    switch (*type) {
        case 1:
            if (pairs.empty()) fail("type 1 needs pairs=");
            return MurasugiNormalForm::type1_form(*n, std::move(pairs));
        case 2:
            if (!k) fail("type 2 needs k=");
            return MurasugiNormalForm::type2_form(*n, *k);
        case 3:
            if (!m) fail("type 3 needs m=");
            return MurasugiNormalForm::type3_form(*n, *m);
        default:
            fail("type must be 1, 2 or 3");
    }
    return {};  // unreachable
}

}  // namespace knotcomb

#pragma once

// Diagram-level bounds on the concordance invariants and the Turaev genus.
//
// The interval [s_B - n_- - 1, 1 + n_+ - s_A] contains each of 2*tau(K),
// s(K) and -sigma(K); its width is twice the Turaev genus of the diagram.
// All arithmetic is on doubled invariants, in integers.

#include <cstdlib>
#include <optional>

#include "knotcomb/diagram.hpp"
#include "knotcomb/errors.hpp"
#include "knotcomb/tait.hpp"

namespace knotcomb {

struct ConcordanceInterval {
    int lower = 0, upper = 0;  // bounds on the doubled invariants
};

struct TuraevLowerBound {
    int from_tau_sigma = 0;  // |tau + sigma/2|
    int from_s_sigma = 0;    // |s + sigma| / 2
    int from_tau_s = 0;      // |tau - s/2|
    int best = 0;
};

inline ConcordanceInterval concordance_interval(const Diagram& d) {
    ConcordanceInterval iv;
    iv.lower = s_B(d) - d.n_minus() - 1;
    iv.upper = 1 + d.n_plus() - s_A(d);
    internal_check(iv.lower <= iv.upper, "concordance interval is empty");
    return iv;
}

/// Lower bounds for the Turaev genus from (2*tau, s, sigma). All inputs are
/// even for a knot; odd input is rejected.
inline TuraevLowerBound turaev_lower_bound(int two_tau, int s, int sigma) {
    require(two_tau % 2 == 0, "turaev_lower_bound: 2*tau must be even");
    require(s % 2 == 0, "turaev_lower_bound: s is even for knots");
    require(sigma % 2 == 0, "turaev_lower_bound: sigma is even for knots");
    TuraevLowerBound b;
    b.from_tau_sigma = std::abs(two_tau + sigma) / 2;
    b.from_s_sigma = std::abs(s + sigma) / 2;
    b.from_tau_s = std::abs(two_tau - s) / 2;
    b.best = std::max({b.from_tau_sigma, b.from_s_sigma, b.from_tau_s});
    return b;
}

/// Unknotting-number lower bound: when s_B - E^-(G) - 1 >= 0 it is at most
/// 2u(K), and symmetrically for s_A - E^+(G) - 1. Returns the stronger
/// applicable bound on u (rounded up), or nothing when neither applies.
inline std::optional<int> unknotting_lower_bound(const Diagram& d, const TaitGraph& g) {
    EdgeCounts c = edge_counts(g);
    int e1 = s_B(d) - c.e_minus - 1;
    int e2 = s_A(d) - c.e_plus - 1;
    std::optional<int> out;
    auto fold = [&](int expr) {
        if (expr < 0) return;
        int u = (expr + 1) / 2;  // ceil(expr / 2)
        if (!out || u > *out) out = u;
    };
    fold(e1);
    fold(e2);
    return out;
}

}  // namespace knotcomb

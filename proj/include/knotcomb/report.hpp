#pragma once

// Pipeline orchestration: run every invariant on a diagram and collect an
// InvariantReport, serializable as canonical JSON (schema 1). All numbers are
// exact integers; half-integral invariants are stored doubled.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "knotcomb/bounds.hpp"
#include "knotcomb/braid3.hpp"
#include "knotcomb/diagram.hpp"
#include "knotcomb/goeritz.hpp"
#include "knotcomb/ribbon.hpp"
#include "knotcomb/tait.hpp"
#include "knotcomb/tree_delta.hpp"

namespace knotcomb {

struct SigmaResult {
    int value = 0;
    std::string method;  // "goeritz", "traczyk", or "unknot"
};

struct TauS {
    int two_tau = 0;
    int s = 0;
    std::string provenance;  // "supplied" or "derived_3braid"
};

struct SigmaCrossCheck {
    int formula = 0;
    int pipeline = 0;
    bool match = false;
};

struct InvariantReport {
    int crossings = 0;
    int n_plus = 0, n_minus = 0;
    int s_a = 0, s_b = 0;
    int faces = 0;
    EdgeCounts tait_g, tait_g_star;
    int two_delta_min = 0, two_delta_max = 0;
    std::optional<std::map<int, long long>> delta_histogram;
    long long tree_count = 0;
    int turaev_diagram_genus = 0;
    SigmaResult sigma;
    ConcordanceInterval interval;
    std::optional<TauS> tau_s;
    std::optional<TuraevLowerBound> turaev_lb;
    std::optional<int> unknotting_lb;
    std::optional<TuraevGenusStatement> g_t_statement;
    std::optional<SigmaCrossCheck> cross_check;
    std::vector<std::string> warnings;
};

struct ReportOptions {
    bool histogram = false;
    long long max_trees = kDefaultTreeCap;
    std::optional<int> supplied_tau;  // tau itself (integer)
    std::optional<int> supplied_s;
};

/// Signature leg of the pipeline: R1-reduce if needed, then Traczyk (with the
/// Goeritz cross-check) on reduced alternating diagrams, Goeritz otherwise.
inline SigmaResult signature_leg(const Diagram& d, std::vector<std::string>& warnings) {
    Diagram reduced = d;
    bool was_reduced = false;
    try {
        reduced = r1_reduce(d);
        was_reduced = reduced.crossing_count() != d.crossing_count();
    } catch (const UnknotReduced&) {
        warnings.push_back("diagram reduces to the trivial unknot; sigma = 0");
        return {0, "unknot"};
    }
    if (was_reduced)
        warnings.push_back("signature computed after removing " +
                           std::to_string(d.crossing_count() - reduced.crossing_count()) +
                           " R1 kink(s)");
    TaitPair tp = build_tait(reduced);
    if (is_alternating(tp.g) && !tp.g.has_loop() && !tp.g_star.has_loop()) {
        int t = traczyk_signature(reduced);
        internal_check(t == knot_signature(reduced),
                       "Traczyk and Goeritz signatures disagree on an alternating diagram");
        return {t, "traczyk"};
    }
    return {knot_signature(reduced), "goeritz"};
}

inline InvariantReport analyze_diagram(const Diagram& d, const ReportOptions& opt = {}) {
    InvariantReport r;
    r.crossings = d.crossing_count();
    r.n_plus = d.n_plus();
    r.n_minus = d.n_minus();
    r.s_a = s_A(d);
    r.s_b = s_B(d);
    r.faces = d.crossing_count() + 2;

    TaitPair tp = build_tait(d);
    r.tait_g = edge_counts(tp.g);
    r.tait_g_star = edge_counts(tp.g_star);

    DeltaStats st = opt.histogram ? delta_distribution(tp.g, d, opt.max_trees)
                                  : delta_extremes(tp.g, d);
    r.two_delta_min = st.delta_min.two_delta;
    r.two_delta_max = st.delta_max.two_delta;
    r.delta_histogram = st.distribution;
    r.tree_count = st.tree_count;

    r.turaev_diagram_genus = turaev_genus_diagram(d);

    r.sigma = signature_leg(d, r.warnings);

    r.interval = concordance_interval(d);
    internal_check(r.interval.lower == r.two_delta_min && r.interval.upper == r.two_delta_max,
                   "concordance interval != delta range");
    internal_check(r.interval.lower <= -r.sigma.value && -r.sigma.value <= r.interval.upper,
                   "-sigma escaped the concordance interval");

    r.unknotting_lb = unknotting_lower_bound(d, tp.g);

    if (opt.supplied_tau || opt.supplied_s) {
        require(opt.supplied_tau && opt.supplied_s,
                "supply both tau and s (or neither) to evaluate the genus bounds");
        TauS ts;
        ts.two_tau = 2 * *opt.supplied_tau;
        ts.s = *opt.supplied_s;
        ts.provenance = "supplied";
        r.tau_s = ts;
        r.turaev_lb = turaev_lower_bound(ts.two_tau, ts.s, r.sigma.value);
        if (ts.two_tau < r.interval.lower || ts.two_tau > r.interval.upper ||
            ts.s < r.interval.lower || ts.s > r.interval.upper)
            r.warnings.push_back("supplied tau/s fall outside the diagram's concordance interval");
    }
    return r;
}

/// Report for the 0-crossing unknot (the CLI's trivial path; parse_pd itself
/// rejects empty diagrams).
inline InvariantReport unknot_report() {
    InvariantReport r;
    r.s_a = r.s_b = 1;
    r.faces = 2;
    r.tait_g.vertices = 1;
    r.tait_g_star.vertices = 1;
    r.sigma = {0, "unknot"};
    r.tree_count = 1;
    r.warnings.push_back("trivial unknot (0 crossings): all invariants vanish");
    return r;
}

/// Closed-form + pipeline report for a Murasugi normal form. With `verify`,
/// a formula/pipeline signature mismatch is a hard (exit-2 style) error.
inline InvariantReport braid3_report(const MurasugiNormalForm& nf, bool verify,
                                     const ReportOptions& opt = {}) {
    require(classify(nf) == ClosureKind::knot, "braid3: closure is a link");
    int sigma_formula, s_formula;
    std::string method;
    if (nf.type == NormalFormType::type1) {
        sigma_formula = erle_signature(nf);
        s_formula = greene_s(nf);
        method = "erle";
    } else {
        TorusInvariants ti = torus_invariants(type3_torus(nf));
        sigma_formula = ti.sigma;
        s_formula = ti.s;
        method = "torus";
    }
    InvariantReport r = analyze_diagram(braid_closure(normal_form_word(nf)), opt);
    SigmaCrossCheck cc{sigma_formula, r.sigma.value, sigma_formula == r.sigma.value};
    if (verify) {
        r.cross_check = cc;
        internal_check(cc.match, "braid3 verify: Erle/torus signature " +
                                     std::to_string(cc.formula) + " != pipeline signature " +
                                     std::to_string(cc.pipeline));
    }
    r.sigma = {sigma_formula, method};
    r.tau_s = TauS{s_formula, s_formula, "derived_3braid"};  // 2 tau = s here
    r.turaev_lb = turaev_lower_bound(s_formula, s_formula, sigma_formula);
    internal_check(r.interval.lower <= s_formula && s_formula <= r.interval.upper,
                   "braid3: s escaped the concordance interval");
    r.g_t_statement = turaev_genus_statements(nf);
    if (r.g_t_statement->exact)
        internal_check(*r.g_t_statement->exact >= r.turaev_lb->best,
                       "braid3: Turaev genus below its lower bound");
    return r;
}

/// Report for T(3,k) given directly by k.
inline InvariantReport torus_report(int k, bool verify, const ReportOptions& opt = {}) {
    require(k % 3 != 0 && k != 0, "torus_report: T(3,k) needs k not divisible by 3");
    TorusInvariants ti = torus_invariants({k});
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
    InvariantReport r = analyze_diagram(braid_closure(w), opt);
    SigmaCrossCheck cc{ti.sigma, r.sigma.value, ti.sigma == r.sigma.value};
    if (verify) {
        r.cross_check = cc;
        internal_check(cc.match, "torus verify: formula signature " + std::to_string(cc.formula) +
                                     " != pipeline signature " + std::to_string(cc.pipeline));
    }
    r.sigma = {ti.sigma, "torus"};
    r.tau_s = TauS{ti.two_tau, ti.s, "derived_3braid"};
    r.turaev_lb = turaev_lower_bound(ti.two_tau, ti.s, ti.sigma);
    TuraevGenusStatement st;
    st.exact = torus_turaev_genus({k});
    r.g_t_statement = st;
    return r;
}

// ---------------------------------------------------------------------------
// serialization

using json = nlohmann::ordered_json;

inline json to_json(const EdgeCounts& c) {
    json j;
    j["vertices"] = c.vertices;
    j["e_a"] = c.e_a;
    j["e_b"] = c.e_b;
    j["e_plus"] = c.e_plus;
    j["e_minus"] = c.e_minus;
    j["e_a_plus"] = c.e_a_plus;
    j["e_a_minus"] = c.e_a_minus;
    j["e_b_plus"] = c.e_b_plus;
    j["e_b_minus"] = c.e_b_minus;
    return j;
}

inline json to_json(const InvariantReport& r) {
    json j;
    j["schema"] = 1;
    j["crossings"] = r.crossings;
    j["n_plus"] = r.n_plus;
    j["n_minus"] = r.n_minus;
    j["s_a"] = r.s_a;
    j["s_b"] = r.s_b;
    j["faces"] = r.faces;
    j["tait_g"] = to_json(r.tait_g);
    j["tait_g_star"] = to_json(r.tait_g_star);
    j["two_delta_min"] = r.two_delta_min;
    j["two_delta_max"] = r.two_delta_max;
    if (r.delta_histogram) {
        json h = json::object();
        for (auto [k, v] : *r.delta_histogram) h[std::to_string(k)] = v;
        j["delta_histogram"] = h;
    }
    j["tree_count"] = r.tree_count;
    j["turaev_diagram_genus"] = r.turaev_diagram_genus;
    j["sigma"] = {{"value", r.sigma.value}, {"method", r.sigma.method}};
    j["concordance_interval"] = {{"lower", r.interval.lower}, {"upper", r.interval.upper}};
    if (r.tau_s)
        j["tau_s"] = {{"two_tau", r.tau_s->two_tau},
                      {"s", r.tau_s->s},
                      {"provenance", r.tau_s->provenance}};
    if (r.turaev_lb)
        j["turaev_lower_bound"] = {{"from_tau_sigma", r.turaev_lb->from_tau_sigma},
                                   {"from_s_sigma", r.turaev_lb->from_s_sigma},
                                   {"from_tau_s", r.turaev_lb->from_tau_s},
                                   {"best", r.turaev_lb->best}};
    if (r.unknotting_lb) j["unknotting_lower_bound"] = *r.unknotting_lb;
    if (r.g_t_statement) {
        json g = json::object();
        if (r.g_t_statement->exact) g["exact"] = *r.g_t_statement->exact;
        if (r.g_t_statement->candidates)
            g["candidates"] = {r.g_t_statement->candidates->first,
                               r.g_t_statement->candidates->second};
        j["g_t_statement"] = g;
    }
    if (r.cross_check)
        j["cross_check"] = {{"formula_sigma", r.cross_check->formula},
                            {"pipeline_sigma", r.cross_check->pipeline},
                            {"match", r.cross_check->match}};
    j["warnings"] = r.warnings;
    return j;
}

inline std::string half_string(int doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

/// Human-readable table; no stability guarantee (JSON is the contract).
inline std::string to_table(const InvariantReport& r) {
    std::string out;
    auto line = [&](const std::string& k, const std::string& v) {
        out += "  " + k;
        out.append(k.size() < 26 ? 26 - k.size() : 1, ' ');
        out += v + "\n";
    };
    line("crossings", std::to_string(r.crossings) + "  (" + std::to_string(r.n_plus) + "+ " +
                          std::to_string(r.n_minus) + "-)");
    line("state circles s_A / s_B", std::to_string(r.s_a) + " / " + std::to_string(r.s_b));
    line("faces", std::to_string(r.faces));
    line("tait G", "V=" + std::to_string(r.tait_g.vertices) + " E_A=" +
                       std::to_string(r.tait_g.e_a) + " E_B=" + std::to_string(r.tait_g.e_b));
    line("tait G*", "V=" + std::to_string(r.tait_g_star.vertices) + " E_A=" +
                        std::to_string(r.tait_g_star.e_a) + " E_B=" +
                        std::to_string(r.tait_g_star.e_b));
    line("spanning trees", std::to_string(r.tree_count));
    line("delta range", half_string(r.two_delta_min) + " .. " + half_string(r.two_delta_max));
    if (r.delta_histogram) {
        std::string h;
        for (auto [k, v] : *r.delta_histogram)
            h += (h.empty() ? "" : "  ") + half_string(k) + ":" + std::to_string(v);
        line("delta histogram", h);
    }
    line("turaev genus (diagram)", std::to_string(r.turaev_diagram_genus));
    line("signature", std::to_string(r.sigma.value) + "  [" + r.sigma.method + "]");
    line("2tau/s/-sigma interval",
         "[" + std::to_string(r.interval.lower) + ", " + std::to_string(r.interval.upper) + "]");
    if (r.tau_s)
        line("2tau = s", std::to_string(r.tau_s->two_tau) + " / " + std::to_string(r.tau_s->s) +
                             "  [" + r.tau_s->provenance + "]");
    if (r.turaev_lb)
        line("turaev genus >=", std::to_string(r.turaev_lb->best) + "  (|tau+sigma/2|=" +
                                    std::to_string(r.turaev_lb->from_tau_sigma) + " |s+sigma|/2=" +
                                    std::to_string(r.turaev_lb->from_s_sigma) + " |tau-s/2|=" +
                                    std::to_string(r.turaev_lb->from_tau_s) + ")");
    if (r.g_t_statement) {
        if (r.g_t_statement->exact) line("turaev genus (knot)", std::to_string(*r.g_t_statement->exact));
        if (r.g_t_statement->candidates)
            line("turaev genus (knot)", std::to_string(r.g_t_statement->candidates->first) + " or " +
                                            std::to_string(r.g_t_statement->candidates->second));
    }
    if (r.unknotting_lb) line("unknotting number >=", std::to_string(*r.unknotting_lb));
    if (r.cross_check)
        line("sigma cross-check", std::to_string(r.cross_check->formula) + " (formula) vs " +
                                      std::to_string(r.cross_check->pipeline) + " (pipeline): " +
                                      (r.cross_check->match ? "match" : "MISMATCH"));
    for (const auto& w : r.warnings) out += "  warning: " + w + "\n";
    return out;
}

}  // namespace knotcomb

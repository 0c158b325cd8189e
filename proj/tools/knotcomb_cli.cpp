// knotcomb command-line front end.
//
// Subcommands:
//   analyze  full invariant report for a PD code or braid word
//   braid3   closed-form 3-braid invariants (Murasugi normal form or --torus)
//   trees    spanning-tree delta histogram
//
// Exit codes: 0 success, 1 input error, 2 internal cross-check failure.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "knotcomb/knotcomb.hpp"

namespace {

std::string read_stdin() {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

struct InputArgs {
    std::string pd;
    std::string braid;
    int strands = 0;
    CLI::Option* pd_opt = nullptr;
    CLI::Option* braid_opt = nullptr;
};

void add_input_flags(CLI::App* cmd, InputArgs& in) {
    in.pd_opt = cmd->add_option(
        "--pd", in.pd, "PD code, e.g. \"X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)\"; '-' reads stdin");
    in.braid_opt = cmd->add_option("--braid", in.braid, "braid word, e.g. \"s1 s2^-1 s1 s2^-1\"");
    cmd->add_option("--strands", in.strands, "strand count for --braid");
}

bool is_blank(const std::string& s) {
    for (char c : s)
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') return false;
    return true;
}

// empty optional: trivial unknot requested via a blank PD string
std::optional<knotcomb::Diagram> load_diagram(const InputArgs& in) {
    bool have_pd = in.pd_opt && in.pd_opt->count() > 0;
    bool have_braid = in.braid_opt && in.braid_opt->count() > 0;
    knotcomb::require(have_pd != have_braid, "provide exactly one of --pd or --braid");
    if (have_pd) {
        std::string text = in.pd == "-" ? read_stdin() : in.pd;
        if (is_blank(text)) return std::nullopt;
        return knotcomb::parse_pd(text);
    }
    knotcomb::require(in.strands >= 2, "--braid requires --strands");
    return knotcomb::braid_closure(knotcomb::parse_braid(in.braid, in.strands));
}

void emit(const knotcomb::InvariantReport& r, bool as_json) {
    if (as_json)
        std::cout << knotcomb::to_json(r).dump(2) << "\n";
    else
        std::cout << knotcomb::to_table(r);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial knot-diagram invariants"};
    app.require_subcommand(1);

    InputArgs analyze_in, trees_in;
    bool as_json = false;
    bool histogram = false;
    long long max_trees = knotcomb::kDefaultTreeCap;
    std::optional<int> tau, s_val;

    auto* analyze = app.add_subcommand("analyze", "full invariant report for a diagram");
    add_input_flags(analyze, analyze_in);
    analyze->add_flag("--json", as_json, "machine-readable JSON output");
    analyze->add_flag("--histogram", histogram, "include the full delta histogram");
    analyze->add_option("--max-trees", max_trees, "spanning-tree cap for --histogram");
    int tau_arg = 0, s_arg = 0;
    auto* tau_opt = analyze->add_option("--tau", tau_arg, "externally known tau(K)");
    auto* s_opt = analyze->add_option("--s", s_arg, "externally known s(K) (even)");

    auto* braid3 = app.add_subcommand("braid3", "closed-form 3-braid invariants");
    std::string nf_text;
    int torus_k = 0;
    bool verify = false;
    braid3->add_option("normal-form", nf_text,
                       "Murasugi normal form, e.g. \"n=1; type=1; pairs=(2,1)\"");
    auto* torus_opt = braid3->add_option("--torus", torus_k, "the (3,k) torus knot");
    braid3->add_flag("--verify", verify, "cross-check the closed form against the diagram pipeline");
    braid3->add_flag("--json", as_json, "machine-readable JSON output");

    auto* trees = app.add_subcommand("trees", "spanning-tree delta histogram");
    add_input_flags(trees, trees_in);
    trees->add_option("--max-trees", max_trees, "spanning-tree cap");
    trees->add_flag("--json", as_json, "machine-readable JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        knotcomb::ReportOptions opt;
        opt.histogram = histogram;
        opt.max_trees = max_trees;
        if (*tau_opt) tau = tau_arg;
        if (*s_opt) s_val = s_arg;
        opt.supplied_tau = tau;
        opt.supplied_s = s_val;

        if (app.got_subcommand(analyze)) {
            auto d = load_diagram(analyze_in);
            emit(d ? knotcomb::analyze_diagram(*d, opt) : knotcomb::unknot_report(), as_json);
        } else if (app.got_subcommand(braid3)) {
            knotcomb::InvariantReport r;
            if (*torus_opt) {
                knotcomb::require(nf_text.empty(), "give either a normal form or --torus, not both");
                r = knotcomb::torus_report(torus_k, verify);
            } else {
                knotcomb::require(!nf_text.empty(), "braid3 needs a normal form or --torus");
                r = knotcomb::braid3_report(knotcomb::parse_normal_form(nf_text), verify);
            }
            emit(r, as_json);
        } else if (app.got_subcommand(trees)) {
            auto d = load_diagram(trees_in);
            knotcomb::require(d.has_value(), "trees: empty diagram");
            opt.histogram = true;
            knotcomb::InvariantReport r = knotcomb::analyze_diagram(*d, opt);
            if (as_json) {
                emit(r, true);
            } else {
                for (auto [k, v] : *r.delta_histogram)
                    std::cout << "  2delta = " << k << "  (delta = " << knotcomb::half_string(k)
                              << "): " << v << " tree(s)\n";
                std::cout << "  total " << r.tree_count << " tree(s); extremes "
                          << knotcomb::half_string(r.two_delta_min) << " .. "
                          << knotcomb::half_string(r.two_delta_max)
                          << " match the closed forms\n";
            }
        }
    } catch (const knotcomb::InternalError& e) {
        std::cerr << "internal cross-check failure: " << e.what() << "\n";
        return 2;
    } catch (const knotcomb::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

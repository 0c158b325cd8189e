#include <catch_amalgamated.hpp>

#include "corpus.hpp"

using namespace knotcomb;

TEST_CASE("trefoil report end to end") {
    InvariantReport r = analyze_diagram(corpus::trefoil());
    CHECK(r.crossings == 3);
    CHECK(r.s_a == 2);
    CHECK(r.s_b == 3);
    CHECK(r.n_plus == 3);
    CHECK(r.sigma.value == -2);
    CHECK(r.sigma.method == "traczyk");
    CHECK(r.interval.lower == 2);
    CHECK(r.interval.upper == 2);
    CHECK(r.turaev_diagram_genus == 0);
    CHECK(r.tree_count == 3);
    CHECK(r.unknotting_lb.has_value());
    CHECK(*r.unknotting_lb == 1);
    CHECK(r.warnings.empty());
    CHECK_FALSE(r.delta_histogram.has_value());
}

TEST_CASE("histogram option") {
    ReportOptions opt;
    opt.histogram = true;
    InvariantReport r = analyze_diagram(corpus::ten_124(), opt);
    REQUIRE(r.delta_histogram.has_value());
    CHECK(*r.delta_histogram == std::map<int, long long>{{6, 15}, {8, 16}});
    // cap errors surface as CapExceeded
    opt.max_trees = 2;
    CHECK_THROWS_AS(analyze_diagram(corpus::trefoil(), opt), CapExceeded);
}

TEST_CASE("kinked diagrams reduce inside the signature leg") {
    Diagram kinked = corpus::add_kink(corpus::trefoil(), 2, true);
    InvariantReport r = analyze_diagram(kinked);
    CHECK(r.crossings == 4);              // diagram-level stats are unreduced
    CHECK(r.sigma.value == -2);           // signature is computed after reduction
    REQUIRE_FALSE(r.warnings.empty());
    CHECK(r.warnings[0].find("R1") != std::string::npos);
}

TEST_CASE("diagrams that reduce to the unknot") {
    InvariantReport r = analyze_diagram(corpus::unknot2());
    CHECK(r.sigma.value == 0);
    CHECK(r.sigma.method == "unknot");
    CHECK(r.interval.lower == 0);
    CHECK(r.interval.upper == 0);
}

TEST_CASE("supplied tau and s activate the genus bound") {
    ReportOptions opt;
    opt.supplied_tau = 1;
    opt.supplied_s = 2;
    InvariantReport r = analyze_diagram(corpus::trefoil(), opt);
    REQUIRE(r.tau_s.has_value());
    CHECK(r.tau_s->two_tau == 2);
    CHECK(r.tau_s->provenance == "supplied");
    REQUIRE(r.turaev_lb.has_value());
    CHECK(r.turaev_lb->best == 0);  // alternating: all three bounds vanish
    CHECK(r.warnings.empty());

    // values outside the interval earn a warning
    opt.supplied_tau = 5;
    opt.supplied_s = 10;
    InvariantReport bad = analyze_diagram(corpus::trefoil(), opt);
    REQUIRE_FALSE(bad.warnings.empty());

    ReportOptions half;
    half.supplied_tau = 1;
    CHECK_THROWS_AS(analyze_diagram(corpus::trefoil(), half), InputError);
}

TEST_CASE("unknot report") {
    InvariantReport r = unknot_report();
    CHECK(r.crossings == 0);
    CHECK(r.sigma.value == 0);
    CHECK(r.interval.lower == 0);
    CHECK(r.interval.upper == 0);
    CHECK(r.s_a == 1);
    CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("braid3 reports") {
    // positive trefoil as sigma1^3 sigma2^-1
    InvariantReport r = braid3_report(parse_normal_form("n=0; type=1; pairs=(3,1)"), true);
    CHECK(r.sigma.value == -2);
    CHECK(r.sigma.method == "erle");
    REQUIRE(r.cross_check.has_value());
    CHECK(r.cross_check->match);
    REQUIRE(r.tau_s.has_value());
    CHECK(r.tau_s->two_tau == 2);
    CHECK(r.tau_s->s == 2);
    CHECK(r.tau_s->provenance == "derived_3braid");
    REQUIRE(r.turaev_lb.has_value());
    CHECK(r.turaev_lb->best == 0);

    InvariantReport t = torus_report(7, true);
    CHECK(t.sigma.value == -8);
    CHECK(t.tau_s->s == 12);
    CHECK(t.turaev_lb->best == 2);
    REQUIRE(t.g_t_statement.has_value());
    CHECK(*t.g_t_statement->exact == 2);

    CHECK_THROWS_AS(braid3_report(parse_normal_form("n=0; type=2; k=4"), false), InputError);
    CHECK_THROWS_AS(torus_report(6, false), InputError);

    InvariantReport n3 = braid3_report(parse_normal_form("n=3; type=1; pairs=(1,1)"), true);
    REQUIRE(n3.g_t_statement.has_value());
    REQUIRE(n3.g_t_statement->candidates.has_value());
    CHECK(n3.g_t_statement->candidates->first == 2);
    CHECK(n3.g_t_statement->candidates->second == 3);
}

TEST_CASE("JSON round-trips byte-identically") {
    auto check_roundtrip = [](const InvariantReport& r) {
        std::string s1 = to_json(r).dump(2);
        json parsed = json::parse(s1);
        CHECK(parsed.dump(2) == s1);
    };
    check_roundtrip(analyze_diagram(corpus::trefoil()));
    ReportOptions opt;
    opt.histogram = true;
    check_roundtrip(analyze_diagram(corpus::ten_124(), opt));
    check_roundtrip(braid3_report(parse_normal_form("n=1; type=1; pairs=(1,1)"), true));
    check_roundtrip(unknot_report());
}

TEST_CASE("JSON carries only integers for the invariants") {
    json j = to_json(analyze_diagram(corpus::ten_124()));
    CHECK(j["schema"] == 1);
    CHECK(j["two_delta_min"].is_number_integer());
    CHECK(j["two_delta_max"].is_number_integer());
    CHECK(j["sigma"]["value"].is_number_integer());
    CHECK(j["sigma"]["value"] == -8);
    CHECK(j["concordance_interval"]["lower"] == 6);
    CHECK(j["concordance_interval"]["upper"] == 8);
    CHECK(j["tait_g"]["e_a"] == 2);
    CHECK(j["tait_g"]["e_b"] == 8);
    CHECK_FALSE(j.contains("tau_s"));
    CHECK(j.contains("warnings"));
}

TEST_CASE("table output mentions the headline numbers") {
    std::string t = to_table(analyze_diagram(corpus::trefoil()));
    CHECK(t.find("signature") != std::string::npos);
    CHECK(t.find("-2") != std::string::npos);
    CHECK(t.find("[2, 2]") != std::string::npos);
    // half-integer rendering
    CHECK(half_string(3) == "3/2");
    CHECK(half_string(4) == "2");
    CHECK(half_string(-3) == "-3/2");
}

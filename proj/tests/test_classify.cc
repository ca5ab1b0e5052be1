#include "oracles.hh"

#include <ctl/canonical.hh>
#include <ctl/classify.hh>
#include <ctl/graph6.hh>
#include <ctl/named_graphs.hh>
#include <ctl/report_json.hh>
#include <ctl/verify.hh>

#include <doctest.h>

using namespace ctl;

namespace
{
    auto family_forms(const Graph & h) -> std::set<std::string>
    {
        std::set<std::string> out;
        for (const auto & m : decomposition_family(h))
            out.insert(canonical_form(m));
        return out;
    }

    auto form(const Graph & g) -> std::string { return canonical_form(g); }
}

TEST_CASE("threshold values")
{
    CHECK(theta(3) == Rational(0));
    CHECK(theta(4) == Rational(1, 2));
    CHECK(lambda(3) == Rational(1, 3));
    CHECK(lambda(4) == Rational(3, 5));
    CHECK(lambda(5) == Rational(5, 7));
    CHECK(pi(3) == Rational(1, 2));
    CHECK(pi(4) == Rational(2, 3));
    for (std::size_t r = 3; r <= 12; ++r) {
        CHECK(theta(r) < lambda(r));
        CHECK(lambda(r) < pi(r));
    }
    for (auto c : {ThresholdClass::bipartite, ThresholdClass::theta, ThresholdClass::lambda, ThresholdClass::pi})
        CHECK(threshold_class_from_string(to_string(c)) == c);
}

TEST_CASE("decomposition family examples")
{
    CHECK(family_forms(graphs::complete(3)) == std::set<std::string>{form(graphs::complete(2))});
    CHECK(family_forms(graphs::octahedron()) == std::set<std::string>{form(graphs::cycle(4))});
    auto c5 = family_forms(graphs::cycle(5));
    CHECK(c5 == std::set<std::string>{form(graphs::path(4)), form(disjoint_union(graphs::complete(2), Graph(1)))});
}

TEST_CASE("decomposition family agrees with brute-force class pairs")
{
    auto lines = oracle::corpus_lines();
    for (std::size_t i = 0; i < lines.size(); i += 37) {
        auto h = parse_graph6(lines[i]);
        if (h.order() > 7)
            continue;
        auto r = oracle::chromatic_number(h);
        if (r < 3) {
            CHECK_THROWS_AS(decomposition_family(h), std::invalid_argument);
            continue;
        }
        std::set<std::string> expected;
        for (const auto & classes : oracle::partitions(h, r))
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = a + 1; b < r; ++b) {
                    std::vector<int> keep = classes[a];
                    keep.insert(keep.end(), classes[b].begin(), classes[b].end());
                    expected.insert(form(h.induced(VertexSet::from(h.order(), keep))));
                }
        CHECK(family_forms(h) == expected);
    }
}

TEST_CASE("forest in the decomposition family")
{
    CHECK(has_forest_in_decomposition(graphs::complete(3)));
    CHECK_FALSE(has_forest_in_decomposition(graphs::octahedron()));
    auto ico = has_forest_in_decomposition(graphs::icosahedron());
    REQUIRE(ico);
    CHECK(ico->coloring.colours() == 4);
    CHECK(is_valid_coloring(graphs::icosahedron(), ico->coloring));
}

TEST_CASE("near-acyclic examples")
{
    auto c5 = is_near_acyclic(graphs::cycle(5));
    REQUIRE(c5);
    CHECK(c5->removed_sets.empty());
    CHECK_FALSE(is_near_acyclic(graphs::complete(3)));
    CHECK(is_near_acyclic(graphs::dodecahedron()));
    CHECK_FALSE(is_near_acyclic(graphs::complete(4)));
    CHECK_FALSE(is_near_acyclic(graphs::cycle(6)));
}

TEST_CASE("r-near-acyclic examples")
{
    auto w = is_r_near_acyclic(graphs::cycle(7));
    REQUIRE(w);
    CHECK(w->removed_sets.empty());
    CHECK_FALSE(is_r_near_acyclic(graphs::icosahedron()));
    CHECK_FALSE(is_r_near_acyclic(graphs::complete(4)));
    // W5 plus an apex: C5 joined to K2 is 5-chromatic and 5-near-acyclic
    auto h = join(graphs::cycle(5), graphs::complete(2));
    auto hw = is_r_near_acyclic(h);
    REQUIRE(hw);
    CHECK(hw->removed_sets.size() == 2);
}

TEST_CASE("K4 is not 4-near-acyclic by exhaustive search over U")
{
    auto k4 = graphs::complete(4);
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
        std::vector<int> keep, u;
        for (int v = 0; v < 4; ++v)
            (mask >> v & 1 ? u : keep).push_back(v);
        if (u.size() > 1)
            continue;
        CHECK_FALSE(oracle::near_acyclic(k4.induced(VertexSet::from(4, keep))));
    }
}

TEST_CASE("chromatic threshold examples")
{
    struct Case
    {
        Graph h;
        std::size_t chi;
        ThresholdClass tag;
        Rational value;
    };
    std::vector<Case> cases{
        {graphs::complete(3), 3, ThresholdClass::lambda, Rational(1, 3)},
        {graphs::cycle(5), 3, ThresholdClass::theta, Rational(0)},
        {graphs::octahedron(), 3, ThresholdClass::pi, Rational(1, 2)},
        {graphs::complete(4), 4, ThresholdClass::lambda, Rational(3, 5)},
        {graphs::complete(5), 5, ThresholdClass::lambda, Rational(5, 7)},
        {graphs::icosahedron(), 4, ThresholdClass::lambda, Rational(3, 5)},
        {graphs::dodecahedron(), 3, ThresholdClass::theta, Rational(0)},
        {graphs::cycle(6), 2, ThresholdClass::bipartite, Rational(0)},
        {Graph(3), 1, ThresholdClass::bipartite, Rational(0)},
    };
    for (const auto & c : cases) {
        auto report = chromatic_threshold(c.h);
        CHECK(report.chi == c.chi);
        CHECK(report.class_tag == c.tag);
        CHECK(report.threshold == c.value);
        auto check = check_threshold_witness(c.h, report);
        CHECK_MESSAGE(check.pass, emit_graph6(c.h));
    }
}

TEST_CASE("theta reports carry a forest witness too")
{
    for (const auto & h : {graphs::cycle(5), graphs::dodecahedron(), graphs::cycle(9), join(graphs::cycle(5), graphs::complete(1))}) {
        auto report = chromatic_threshold(h);
        REQUIRE(report.class_tag == ThresholdClass::theta);
        REQUIRE(report.near_acyclic_witness);
        REQUIRE(report.forest_witness);
        CHECK(has_forest_in_decomposition(h));
        const auto & fw = *report.forest_witness;
        auto a = fw.coloring.classes[fw.pair.first], b = fw.coloring.classes[fw.pair.second];
        a.insert(a.end(), b.begin(), b.end());
        CHECK(is_acyclic(h.induced(VertexSet::from(h.order(), a))));
    }
}

TEST_CASE("tree-class condition agrees with the odd-cycle form")
{
    for (const auto & s : oracle::corpus_lines()) {
        auto h = parse_graph6(s);
        if (h.order() > 7 || oracle::chromatic_number(h) != 3)
            continue;
        std::size_t n = h.order();
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            VertexSet set(n);
            for (std::size_t v = 0; v < n; ++v)
                if (mask >> v & 1)
                    set.set(v);
            auto tc = tree_class_condition(h, set);
            if (! tc)
                continue;
            CHECK(*tc == odd_cycle_oracle(h, set, n).empty());
        }
    }
}

TEST_CASE("near-acyclic search agrees with the oracle on small graphs")
{
    for (const auto & s : oracle::corpus_lines()) {
        auto h = parse_graph6(s);
        if (h.order() > 7 || ! is_connected(h) || oracle::chromatic_number(h) != 3)
            continue;
        auto ours = is_near_acyclic(h);
        REQUIRE_MESSAGE(ours.has_value() == oracle::near_acyclic(h), s);
    }
}

TEST_CASE("classification is invariant under relabelling")
{
    Rng rng(31);
    auto lines = oracle::corpus_lines();
    for (int trial = 0; trial < 200; ++trial) {
        auto h = parse_graph6(lines[rng.below(lines.size())]);
        std::vector<int> perm(h.order());
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        auto a = chromatic_threshold(h), b = chromatic_threshold(relabel(h, perm));
        CHECK(a.class_tag == b.class_tag);
        CHECK(a.threshold == b.threshold);
        CHECK(check_threshold_witness(h, a).pass);
    }
}

TEST_CASE("forest witness from a near-acyclic witness is a valid colouring")
{
    auto h = join(graphs::cycle(5), graphs::complete(1));
    auto w = is_r_near_acyclic(h);
    REQUIRE(w);
    auto fw = forest_witness_from(h, *w);
    CHECK(is_valid_coloring(h, fw.coloring));
    CHECK(fw.coloring.colours() == 4);
}

TEST_CASE("report JSON round trip")
{
    for (const auto & h : {graphs::complete(3), graphs::cycle(5), graphs::octahedron(), graphs::icosahedron(), graphs::cycle(4)}) {
        auto report = chromatic_threshold(h);
        auto j = report_to_json(report, true);
        CHECK(j["schema"] == "ctl/1");
        auto back = report_from_json(nlohmann::json::parse(j.dump()));
        CHECK(back.chi == report.chi);
        CHECK(back.class_tag == report.class_tag);
        CHECK(back.threshold == report.threshold);
        CHECK(back.forest_witness.has_value() == report.forest_witness.has_value());
        CHECK(back.near_acyclic_witness.has_value() == report.near_acyclic_witness.has_value());
        CHECK(check_threshold_witness(h, back).pass);
        CHECK(report_to_json(back, true) == j);
    }
    auto j = report_to_json(chromatic_threshold(graphs::complete(4)), false);
    CHECK(j["threshold"]["num"] == 3);
    CHECK(j["threshold"]["den"] == 5);
    CHECK_FALSE(j.contains("witnesses"));
    CHECK_THROWS_AS(report_from_json(nlohmann::json::parse(R"({"schema":"ctl/1"})")), std::invalid_argument);
}

TEST_CASE("rational JSON keeps big values exact")
{
    Rational big(BigInt("123456789012345678901234567890"), BigInt(7));
    auto j = rational_to_json(big);
    CHECK(j["num"].is_string());
    CHECK(rational_from_json(j) == big);
    CHECK(rational_from_json(rational_to_json(Rational(-2, 6))) == Rational(-1, 3));
}

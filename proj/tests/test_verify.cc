#include "oracles.hh"

#include <ctl/classify.hh>
#include <ctl/constructions.hh>
#include <ctl/graph6.hh>
#include <ctl/named_graphs.hh>
#include <ctl/verify.hh>

#include <doctest.h>

using namespace ctl;

TEST_CASE("subgraph examples")
{
    auto k4 = graphs::complete(4);
    auto e = contains_subgraph(k4, graphs::complete(3));
    REQUIRE(e);
    CHECK(is_valid_embedding(k4, graphs::complete(3), *e));
    CHECK_FALSE(contains_subgraph(graphs::petersen(), graphs::complete(3)));
    CHECK(scan_triangles(graphs::petersen()) == 0);
    auto c5 = contains_subgraph(graphs::petersen(), graphs::cycle(5));
    REQUIRE(c5);
    CHECK(is_valid_embedding(graphs::petersen(), graphs::cycle(5), *c5));
    CHECK_FALSE(contains_subgraph(graphs::cycle(5), graphs::cycle(6)));
    CHECK(contains_subgraph(graphs::cycle(5), Graph()));
}

TEST_CASE("embedding validation")
{
    auto host = graphs::cycle(5);
    auto pat = graphs::path(3);
    CHECK(is_valid_embedding(host, pat, {{0, 1, 2}}));
    CHECK_FALSE(is_valid_embedding(host, pat, {{0, 2, 1}}));
    CHECK_FALSE(is_valid_embedding(host, pat, {{0, 1, 0}}));
    CHECK_FALSE(is_valid_embedding(host, pat, {{0, 1}}));
    CHECK_FALSE(is_valid_embedding(host, pat, {{0, 1, 7}}));
}

TEST_CASE("subgraph search agrees with the naive oracle")
{
    auto lines = oracle::corpus_lines();
    std::vector<Graph> hosts, patterns;
    for (const auto & s : lines) {
        auto g = parse_graph6(s);
        if (g.order() <= 4)
            patterns.push_back(g);
        if (g.order() <= 7)
            hosts.push_back(g);
    }
    REQUIRE(patterns.size() == 1 + 2 + 4 + 11);
    for (std::size_t i = 0; i < hosts.size(); i += 3)
        for (const auto & p : patterns) {
            auto ours = contains_subgraph(hosts[i], p);
            REQUIRE(ours.has_value() == oracle::contains(hosts[i], p));
            if (ours)
                CHECK(is_valid_embedding(hosts[i], p, *ours));
        }
}

TEST_CASE("subgraph search on larger patterns")
{
    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        auto host = oracle::random_graph(8, 1, 2, rng);
        auto pattern = oracle::random_graph(6, 1, 2, rng);
        auto ours = contains_subgraph(host, pattern);
        REQUIRE(ours.has_value() == oracle::contains(host, pattern));
        if (ours)
            CHECK(is_valid_embedding(host, pattern, *ours));
    }
}

TEST_CASE("forest embedding examples")
{
    auto e = embed_forest(graphs::complete(4), graphs::star(3));
    REQUIRE(e);
    CHECK(is_valid_embedding(graphs::complete(4), graphs::star(3), *e));
    auto p = embed_forest(graphs::cycle(5), graphs::path(5));
    REQUIRE(p);
    CHECK(is_valid_embedding(graphs::cycle(5), graphs::path(5), *p));
    CHECK_FALSE(embed_forest(graphs::cycle(5), graphs::star(3)));
    CHECK_THROWS_AS(embed_forest(graphs::complete(5), graphs::cycle(3)), std::invalid_argument);
}

TEST_CASE("forest embedding on dense random hosts")
{
    Rng rng(43);
    std::size_t dense = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto host = oracle::random_graph(30, 1, 2, rng);
        // a random 5-vertex forest: a random tree with some edges dropped
        auto tree = oracle::random_tree(5, rng);
        std::vector<Edge> kept;
        for (auto edge : tree.edges())
            if (rng.below(4))
                kept.push_back(edge);
        Graph f(5, kept);
        auto e = embed_forest(host, f);
        REQUIRE(e);
        CHECK(is_valid_embedding(host, f, *e));
        if (host.size() >= 5 * 30) {
            ++dense;
            CHECK(embed_forest_greedy(host, f));
        }
    }
    CHECK(dense > 150);
}

TEST_CASE("greedy forest embedding meets the edge-count guarantee")
{
    Rng rng(47);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t k = 1 + rng.below(8);
        std::size_t n = k + 1 + rng.below(40);
        auto host = oracle::random_graph(n, 1 + rng.below(3), 3, rng);
        auto f = oracle::random_tree(k, rng);
        if (host.size() < k * n)
            continue;
        auto e = embed_forest_greedy(host, f);
        REQUIRE(e);
        CHECK(is_valid_embedding(host, f, *e));
    }
}

TEST_CASE("odd cycle oracle examples")
{
    auto c5 = graphs::cycle(5);
    CHECK(odd_cycle_oracle(c5, VertexSet::from(5, {0, 2}), 5).empty());
    auto one = odd_cycle_oracle(c5, VertexSet::from(5, {3}), 5);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == std::vector<int>{0, 1, 2, 3, 4});
    auto k4 = odd_cycle_oracle(graphs::complete(4), VertexSet(4), 4);
    CHECK(k4.size() == 4);
    for (const auto & c : k4)
        CHECK(c.size() == 3);
    CHECK(odd_cycle_oracle(graphs::complete(4), VertexSet(4), 2).empty());
}

TEST_CASE("odd cycle oracle against a plain cycle enumeration")
{
    Rng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_graph(3 + rng.below(5), 1, 2, rng);
        VertexSet s(g.order());
        for (std::size_t v = 0; v < g.order(); ++v)
            if (rng.below(3) == 0)
                s.set(v);
        std::set<std::vector<int>> expected;
        for (const auto & c : oracle::cycles(g)) {
            std::size_t hits = 0;
            for (int v : c)
                hits += s.test(v);
            if (c.size() % 2 == 1 && hits <= 1)
                expected.insert(c);
        }
        auto got = odd_cycle_oracle(g, s, g.order());
        CHECK(std::set<std::vector<int>>(got.begin(), got.end()) == expected);
        CHECK(got.size() == expected.size());
    }
}

TEST_CASE("triangles and common neighbours")
{
    CHECK(scan_triangles(graphs::complete(4)) == 4);
    auto c5 = graphs::cycle(5);
    CHECK(common_neighbors(c5, VertexSet::from(5, {0, 1})).empty());
    CHECK(common_neighbors(c5, VertexSet::from(5, {0, 2})).members() == std::vector<int>{1});
    CHECK(common_neighbors(c5, VertexSet(5)).count() == 5);
    Rng rng(59);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = oracle::random_graph(2 + rng.below(14), 1, 2, rng);
        CHECK(scan_triangles(g) == oracle::triangles(g));
    }
}

TEST_CASE("hajnal triangles follow the Kneser count")
{
    // Kn(2m+k,m) contains a triangle exactly when three disjoint m-sets fit into 2m+k points
    for (auto [k, l, m] : std::vector<std::array<std::size_t, 3>>{{1, 3, 1}, {2, 4, 1}, {1, 5, 2}, {3, 7, 2}, {2, 6, 2}}) {
        auto g = hajnal(k, l, m);
        std::size_t n = 2 * m + k;
        std::size_t expected = oracle::binomial(n, m) * oracle::binomial(n - m, m) * oracle::binomial(n - 2 * m, m) / 6;
        CHECK(scan_triangles(g) == expected);
        CHECK(scan_triangles(g) == oracle::triangles(g));
    }
}

TEST_CASE("witness checker accepts classify output on the corpus")
{
    auto lines = oracle::corpus_lines();
    for (std::size_t i = 0; i < lines.size(); i += 17) {
        auto h = parse_graph6(lines[i]);
        auto report = chromatic_threshold(h);
        auto check = check_threshold_witness(h, report);
        CHECK_MESSAGE(check.pass, lines[i]);
    }
}

TEST_CASE("witness checker rejects mutated reports")
{
    SUBCASE("vertex moved out of S")
    {
        auto h = graphs::cycle(7);
        auto report = chromatic_threshold(h);
        REQUIRE(report.near_acyclic_witness);
        auto & w = *report.near_acyclic_witness;
        REQUIRE_FALSE(w.s_set.empty());
        w.s_set.pop_back();
        auto check = check_threshold_witness(h, report);
        CHECK_FALSE(check.pass);
        CHECK_FALSE(check.violations.empty());
    }
    SUBCASE("threshold numerator perturbed")
    {
        auto h = graphs::complete(4);
        auto report = chromatic_threshold(h);
        report.threshold = Rational(report.threshold.num() + 1, report.threshold.den());
        auto check = check_threshold_witness(h, report);
        CHECK_FALSE(check.pass);
    }
    SUBCASE("wrong chromatic number")
    {
        auto h = graphs::cycle(5);
        auto report = chromatic_threshold(h);
        report.chi = 4;
        CHECK_FALSE(check_threshold_witness(h, report).pass);
    }
    SUBCASE("class downgraded")
    {
        auto h = graphs::complete(3);
        auto report = chromatic_threshold(h);
        report.class_tag = ThresholdClass::pi;
        report.threshold = pi(3);
        report.forest_witness.reset();
        CHECK_FALSE(check_threshold_witness(h, report).pass);
    }
    SUBCASE("class upgraded with a forged witness")
    {
        auto h = graphs::complete(3);
        auto report = chromatic_threshold(h);
        report.class_tag = ThresholdClass::theta;
        report.threshold = theta(3);
        report.near_acyclic_witness = NearAcyclicWitness{{}, {0}, *forest_decomposition(h.without(VertexSet::from(3, {0})))};
        CHECK_FALSE(check_threshold_witness(h, report).pass);
    }
    SUBCASE("broken colouring")
    {
        auto h = graphs::icosahedron();
        auto report = chromatic_threshold(h);
        REQUIRE(report.forest_witness);
        auto & classes = report.forest_witness->coloring.classes;
        classes[0].push_back(classes[1].back());
        classes[1].pop_back();
        CHECK_FALSE(check_threshold_witness(h, report).pass);
    }
    SUBCASE("extra witness on a pi report")
    {
        auto h = graphs::octahedron();
        auto report = chromatic_threshold(h);
        report.forest_witness = ForestWitness{*is_k_colorable(h, 3), {0, 1}};
        CHECK_FALSE(check_threshold_witness(h, report).pass);
    }
}

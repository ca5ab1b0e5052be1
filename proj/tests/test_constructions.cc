#include "oracles.hh"

#include <ctl/canonical.hh>
#include <ctl/chromatic.hh>
#include <ctl/classify.hh>
#include <ctl/constructions.hh>
#include <ctl/graph6.hh>
#include <ctl/named_graphs.hh>
#include <ctl/verify.hh>

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ctl;

namespace
{
    auto edges(std::size_t count) -> std::vector<Graph> { return std::vector<Graph>(count, graphs::path(2)); }

    auto label_set(const Graph & g, const std::string & prefix) -> VertexSet
    {
        VertexSet s(g.order());
        for (std::size_t v = 0; v < g.order(); ++v)
            if (g.label(v).rfind(prefix, 0) == 0)
                s.set(v);
        return s;
    }

    auto set_bits(const std::string & label) -> std::vector<int>
    {
        // "S{1,3}:c" -> {1,3}
        std::vector<int> out;
        auto open = label.find('{'), close = label.find('}');
        std::string inner = label.substr(open + 1, close - open - 1);
        std::size_t pos = 0;
        while (pos < inner.size()) {
            auto comma = inner.find(',', pos);
            if (comma == std::string::npos)
                comma = inner.size();
            out.push_back(std::stoi(inner.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return out;
    }

    auto all_odd_cycles_meet_twice(const Graph & g, const VertexSet & w, std::size_t max_len) -> bool
    {
        // odd cycles of length at most max_len meeting w at most once
        return odd_cycle_oracle(g, w, max_len).empty();
    }
}

TEST_CASE("zykov vertex count")
{
    auto z = zykov(edges(2), 3, 1);
    CHECK(z.order() == 8);
    for (std::size_t l = 1; l <= 5; ++l)
        for (std::size_t r = 3; r <= 6; ++r)
            for (std::size_t t = 1; t <= 3; ++t) {
                auto g = zykov(edges(l), r, t);
                CHECK(g.order() == ((std::size_t{1} << l) + r - 3) * t + 2 * l);
                CHECK(zykov_order(edges(l), r, t) == g.order());
            }
    // general trees: tree vertices count individually
    std::vector<Graph> mixed{graphs::path(3), graphs::star(3), Graph(1)};
    CHECK(zykov(mixed, 4, 2).order() == (8 + 1) * 2 + 3 + 4 + 1);
}

TEST_CASE("zykov on a matching")
{
    // l single edges with r = 3, t = 1: a matching plus one apex per choice of endpoints
    for (std::size_t l = 1; l <= 4; ++l) {
        auto z = zykov(edges(l), 3, 1);
        CHECK(scan_triangles(z) == 0);
        CHECK(z.size() == l + (std::size_t{1} << l) * l);
        CHECK(chromatic_number(z) == (l == 1 ? 2 : 3));
    }
    CHECK(isomorphic(zykov(edges(1), 3, 1), graphs::path(4)));
}

TEST_CASE("zykov structure from labels")
{
    std::vector<Graph> trees{graphs::path(3), graphs::star(3)};
    for (std::size_t r : {3, 4, 5}) {
        auto z = zykov(trees, r, 2);
        REQUIRE(z.has_labels());
        auto tree_part = label_set(z, "T");
        VertexSet a1 = label_set(z, "T1A"), b1 = label_set(z, "T1B"), a2 = label_set(z, "T2A"), b2 = label_set(z, "T2B");
        CHECK(tree_part.count() == 3 + 4);
        for (std::size_t v = 0; v < z.order(); ++v) {
            const auto & name = z.label(v);
            if (name.rfind("S'", 0) == 0) {
                // joined to everything outside its own block
                auto block = label_set(z, name.substr(0, name.find(':') + 1));
                CHECK(z.degree(v) == z.order() - block.count());
            }
            else if (name.rfind("S{", 0) == 0) {
                auto members = set_bits(name);
                VertexSet want(z.order());
                want |= std::find(members.begin(), members.end(), 1) != members.end() ? a1 : b1;
                want |= std::find(members.begin(), members.end(), 2) != members.end() ? a2 : b2;
                CHECK((z.neighbours(v) & tree_part) == want);
                auto others = z.neighbours(v) - tree_part;
                CHECK(others == label_set(z, "S'"));
            }
        }
    }
    auto z = zykov(trees, 3, 1);
    CHECK(label_set(z, "S{}").count() == 1);
    CHECK(label_set(z, "S{1,2}").count() == 1);
}

TEST_CASE("zykov graphs are r-near-acyclic")
{
    for (std::size_t r : {3, 4})
        for (std::size_t l = 2; l <= 3; ++l) {
            auto z = zykov(edges(l), r, 1);
            auto report = chromatic_threshold(z);
            CHECK(report.chi == r);
            CHECK(report.class_tag == ThresholdClass::theta);
            CHECK(check_threshold_witness(z, report).pass);
        }
}

TEST_CASE("zykov preconditions")
{
    CHECK_THROWS_AS(zykov({}, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(zykov(edges(1), 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(zykov(edges(1), 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(zykov({graphs::cycle(3)}, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(zykov({Graph(2)}, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(zykov(edges(13), 3, 1), SizingError);
}

TEST_CASE("kneser examples")
{
    auto p = kneser(5, 2);
    CHECK(p.order() == 10);
    CHECK(p.size() == 15);
    for (int v = 0; v < 10; ++v)
        CHECK(p.degree(v) == 3);
    CHECK(isomorphic(p, graphs::petersen()));
    CHECK(p.label(0) == "{1,2}");

    auto m = kneser(4, 2);
    CHECK(m.order() == 6);
    CHECK(m.size() == 3);
    for (std::size_t k = 1; k <= 4; ++k) {
        auto g = kneser(2 * k, k);
        CHECK(g.size() * 2 == g.order());
        CHECK(chromatic_number(g) == 2);
    }
}

TEST_CASE("kneser regularity and disjointness")
{
    for (std::size_t n = 2; n <= 9; ++n)
        for (std::size_t k = 1; 2 * k <= n; ++k) {
            auto g = kneser(n, k);
            CHECK(g.order() == oracle::binomial(n, k));
            for (std::size_t v = 0; v < g.order(); ++v)
                REQUIRE(g.degree(v) == oracle::binomial(n - k, k));
            if (g.order() <= 40) {
                for (std::size_t u = 0; u < g.order(); ++u)
                    for (std::size_t v = u + 1; v < g.order(); ++v) {
                        auto a = set_bits(g.label(u)), b = set_bits(g.label(v));
                        bool disjoint = std::none_of(a.begin(), a.end(), [&](int x) { return std::find(b.begin(), b.end(), x) != b.end(); });
                        CHECK(g.adjacent(u, v) == disjoint);
                    }
            }
        }
    CHECK_THROWS_AS(kneser(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(kneser(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(kneser(40, 20), SizingError);
}

TEST_CASE("hajnal order and structure")
{
    auto g = hajnal(1, 3, 1);
    CHECK(g.order() == 12);
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t m = 1; m <= 3; ++m)
            for (std::size_t l = 2 * m + k; 3 * l + oracle::binomial(2 * m + k, m) <= 200; l += 2 * m + k) {
                auto h = hajnal(k, l, m);
                CHECK(h.order() == 3 * l + oracle::binomial(2 * m + k, m));
                auto a = label_set(h, "A"), b = label_set(h, "B"), kn = label_set(h, "K");
                CHECK(a.count() == 2 * l);
                CHECK(b.count() == l);
                CHECK(h.is_independent(a));
                CHECK(h.is_independent(b));
                // Kneser vertex S sees exactly the parts A_j with j in S
                kn.for_each([&](std::size_t v) {
                    CHECK((h.neighbours(v) & b).empty());
                    CHECK((h.neighbours(v) & a).count() == m * (2 * l / (2 * m + k)));
                });
                if (m > k)
                    CHECK(scan_triangles(h) == 0);
            }
    CHECK_THROWS_AS(hajnal(1, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(hajnal(1, 3, 0), std::invalid_argument);
}

TEST_CASE("hajnal with m > k is triangle-free with the stated chromatic bound")
{
    auto h = hajnal(1, 5, 2);
    CHECK(scan_triangles(h) == 0);
    CHECK(chromatic_number(h) >= 3);
}

TEST_CASE("sphere points and angle comparisons")
{
    auto north = sphere_point({0, 0, 1}), south = sphere_point({0, 0, -1}), east = sphere_point({1, 0, 0});
    CHECK(angle_at_least(north, south, Angle{Rational(1)}));
    CHECK(angle_at_least(north, east, Angle{Rational(1, 2)}));
    CHECK_FALSE(angle_below(north, east, Angle{Rational(1, 2)}));
    CHECK(angle_below(north, east, Angle{Rational(1, 2) + Rational(1, 1000)}));
    CHECK_FALSE(angle_at_least(north, east, Angle{Rational(1, 2) + Rational(1, 1000)}));

    Rng rng(61);
    for (int trial = 0; trial < 500; ++trial) {
        auto x = random_sphere_point(2, rng), y = random_sphere_point(2, rng);
        double norm = 0, dot = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            norm += std::pow(x.coords[i] / 1e9, 2);
            dot += x.coords[i] / 1e9 * (y.coords[i] / 1e9);
        }
        CHECK(std::abs(norm - 1) < 1e-8);
        double angle = std::acos(std::clamp(dot, -1.0, 1.0)) / std::numbers::pi;
        Rational t(BigInt(rng.below(1000)), BigInt(1000));
        // away from the boundary, the exact test agrees with floating point
        if (std::abs(angle - t.to_double()) > 1e-6) {
            CHECK(angle_at_least(x, y, Angle{t}) == (angle >= t.to_double()));
            CHECK(angle_below(x, y, Angle{t}) == (angle < t.to_double()));
        }
        CHECK(angle_at_least(x, y, Angle{t}) != angle_below(x, y, Angle{t}));
    }
}

TEST_CASE("cap fraction")
{
    CHECK(std::abs(cap_fraction(2, std::numbers::pi / 2) - 0.5) < 1e-9);
    CHECK(std::abs(cap_fraction(2, std::numbers::pi) - 1) < 1e-9);
    // on S^2 a cap of angle a covers (1 - cos a)/2
    for (double a : {0.1, 0.7, 1.3, 2.9})
        CHECK(std::abs(cap_fraction(2, a) - (1 - std::cos(a)) / 2) < 1e-9);
    // on the circle it is a/pi
    CHECK(std::abs(cap_fraction(1, 0.9) - 0.9 / std::numbers::pi) < 1e-9);
}

TEST_CASE("borsuk sample examples")
{
    auto two = borsuk_graph({sphere_point({0, 1}), sphere_point({0, -1})}, Angle{Rational(1, 100)});
    CHECK(two.size() == 1);
    auto none = borsuk_sample(2, Angle{Rational(1, 1000000)}, 10, 3);
    CHECK(none.graph.size() == 0);

    // on the circle with eps = pi/10 there is no odd cycle shorter than 11
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto s = borsuk_sample(1, Angle{Rational(1, 10)}, 60, seed);
        auto og = odd_girth(s.graph);
        if (og)
            CHECK(*og >= 11);
        for (auto [u, v] : s.graph.edges())
            CHECK(angle_at_least(s.points[u], s.points[v], Angle{Rational(9, 10)}));
    }
}

TEST_CASE("borsuk sampling is deterministic")
{
    auto a = borsuk_sample(2, Angle{Rational(1, 20)}, 50, 9);
    auto b = borsuk_sample(2, Angle{Rational(1, 20)}, 50, 9);
    CHECK(a.points == b.points);
    CHECK(emit_graph6(a.graph) == emit_graph6(b.graph));
    CHECK(points_csv(a.points) == points_csv(b.points));
    auto c = borsuk_sample(2, Angle{Rational(1, 20)}, 50, 10);
    CHECK_FALSE(a.points == c.points);
}

TEST_CASE("borsuk-hajnal structure")
{
    BorsukHajnalParams p;
    p.w_size = 2;
    p.u_points = 0;
    auto tiny = borsuk_hajnal(p);
    CHECK(tiny.graph.order() == 3);
    CHECK(tiny.graph.size() == 2);

    p.k = 2;
    p.eps = Angle{Rational(1, 60)};
    p.delta = Angle{Rational(1, 15)};
    p.w_size = 10;
    p.u_points = 20;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        p.seed = seed;
        auto bh = borsuk_hajnal(p);
        const auto & g = bh.graph;
        CHECK(g.is_independent(bh.w_part()));
        CHECK(g.is_independent(bh.x_part()));
        bh.w_part().for_each([&](std::size_t w) { CHECK(bh.x_part().is_subset_of(g.neighbours(w))); });
        bh.u_part().for_each([&](std::size_t u) {
            CHECK((g.neighbours(u) & bh.x_part()).empty());
            for (std::size_t i = 0; i < bh.w_count; ++i) {
                bool want = angle_below(bh.u[bh.phi[u]], bh.w[i], Angle{Rational(1, 2) - p.delta.turns_of_pi});
                CHECK(g.adjacent(u, bh.u_count + i) == want);
            }
        });
        CHECK(all_odd_cycles_meet_twice(g, bh.w_part(), 9) == true);

        for (std::size_t r : {4, 5}) {
            auto bhr = borsuk_hajnal_r(r, p);
            CHECK(bhr.graph.order() == g.order() + (r - 3) * p.w_size);
            CHECK(bhr.graph.induced(bhr.u_part() | bhr.w_part() | bhr.x_part()) == g);
            for (std::size_t i = 0; i < r - 3; ++i)
                bhr.y_part(i).for_each([&](std::size_t y) {
                    CHECK(bhr.graph.degree(y) == g.order() + (r - 4) * p.w_size);
                    CHECK(bhr.graph.label(y)[0] == 'Y');
                });
        }
        CHECK(borsuk_hajnal_r(3, p).graph == g);
    }
}

TEST_CASE("borsuk-hajnal with a supplied base")
{
    BorsukHajnalParams p;
    p.eps = Angle{Rational(1, 10)};
    p.delta = Angle{Rational(1, 20)};
    p.w_size = 4;
    auto n = sphere_point({0, 0, 1}), s = sphere_point({0, 0, -1});
    // a path of length 3 folded onto two antipodal points
    p.base = BorsukBase{{n, s}, graphs::path(4), {0, 1, 0, 1}};
    auto bh = borsuk_hajnal(p);
    CHECK(bh.u_count == 4);
    CHECK(bh.graph.induced(bh.u_part()) == graphs::path(4));
    CHECK(bh.graph.neighbours(0).intersection_count(bh.w_part()) == bh.graph.neighbours(2).intersection_count(bh.w_part()));

    p.base = BorsukBase{{n, sphere_point({1, 0, 0})}, graphs::path(2), {0, 1}};
    CHECK_THROWS_AS(borsuk_hajnal(p), std::invalid_argument);
    p.base = BorsukBase{{n, s}, graphs::path(2), {0}};
    CHECK_THROWS_AS(borsuk_hajnal(p), std::invalid_argument);
    p.base.reset();
    p.w_size = 3;
    CHECK_THROWS_AS(borsuk_hajnal(p), std::invalid_argument);
}

TEST_CASE("erdos graphs")
{
    auto c7 = erdos_graph(3, 7, Deadline(), 0);
    CHECK(isomorphic(c7.graph, graphs::cycle(7)));
    CHECK(c7.girth == 7u);
    CHECK(chromatic_number(c7.graph) == 3);

    auto g44 = erdos_graph(4, 4, Deadline(), 0);
    CHECK(chromatic_number(g44.graph) == 4);
    CHECK(girth(g44.graph) >= 4u);
    CHECK(isomorphic(g44.graph, graphs::grotzsch()));

    auto k2 = erdos_graph(2, 9, Deadline(), 0);
    CHECK(k2.graph.order() == 2);
    CHECK(k2.graph.size() == 1);
    CHECK_FALSE(k2.girth);

    auto c = erdos_graph(3, 8, Deadline(), 0);
    CHECK(c.graph.order() == 9);

    auto searched = erdos_graph(4, 5, Deadline(std::chrono::seconds(60)), 1);
    CHECK(searched.source == "search");
    CHECK_FALSE(is_k_colorable(searched.graph, 3));
    CHECK(girth(searched.graph) >= 5u);
    CHECK(emit_graph6(erdos_graph(4, 5, Deadline(), 1).graph) == emit_graph6(searched.graph));
}

TEST_CASE("pi witness")
{
    auto g = pi_witness(graphs::octahedron(), 3, Deadline(), 0);
    CHECK(g.order() == 14);
    CHECK(min_degree(g) == 7);
    CHECK(min_degree_fraction(g) == Rational(1, 2));
    CHECK(chromatic_number(g) >= 3);
    CHECK_FALSE(contains_subgraph(g, graphs::octahedron()));
    CHECK(g.induced(VertexSet::from(14, {0, 1, 2, 3, 4, 5, 6})) == graphs::cycle(7));
    CHECK_THROWS_AS(pi_witness(graphs::complete(3), 3, Deadline(), 0), std::invalid_argument);
    CHECK_THROWS_AS(pi_witness(graphs::cycle(4), 3, Deadline(), 0), std::invalid_argument);
}

TEST_CASE("theta witness")
{
    auto g = theta_witness(graphs::icosahedron(), 3, Deadline(), 0);
    CHECK(g.order() == 26);
    CHECK(min_degree(g) == 13);
    CHECK(min_degree_fraction(g) == Rational(1, 2));
    CHECK(chromatic_number(g) >= 3);

    auto r3 = theta_witness(graphs::cycle(5), 3, Deadline(), 0);
    CHECK(isomorphic(r3, graphs::cycle(7)));
    CHECK(min_degree_fraction(r3) >= theta(3));
}

TEST_CASE("lambda parameters")
{
    auto lp = lambda_parameters(3, 2, Rational(1, 10), 8);
    // cap of polar angle pi/2 - delta covers 9/20 of S^2: (1 - sin delta)/2 = 9/20
    double delta = std::asin(0.1) / std::numbers::pi;
    CHECK(lp.delta.turns_of_pi.to_double() <= delta);
    CHECK(lp.delta.turns_of_pi.to_double() > delta - 2e-6);
    CHECK(lp.eps.turns_of_pi == lp.delta.turns_of_pi / Rational(4));
    CHECK(lp.w_size % 2 == 0);
    CHECK(lp.w_size == 38);
    CHECK(lambda_parameters(4, 2, Rational(1, 10), 6).w_size == 20);
    CHECK_THROWS_AS(lambda_parameters(3, 2, Rational(0), 8), std::invalid_argument);
}

TEST_CASE("lambda witness degree event")
{
    LambdaWitnessParams p;
    p.seed = 4;
    auto lw = lambda_witness(graphs::complete(3), p, Deadline());
    CHECK(lw.degree_event);
    CHECK(lw.target == Rational(1, 3) - Rational(1, 10));
    CHECK(lw.min_degree_fraction == min_degree_fraction(lw.instance.graph));
    auto need = (Rational(1, 2) - p.nu) * Rational(static_cast<std::int64_t>(lw.instance.w_count));
    lw.instance.u_part().for_each([&](std::size_t u) {
        CHECK(Rational(static_cast<std::int64_t>(lw.instance.graph.neighbours(u).intersection_count(lw.instance.w_part()))) >= need);
    });
    CHECK_THROWS_AS(lambda_witness(graphs::cycle(5), p, Deadline()), std::invalid_argument);
}

TEST_CASE("random construction")
{
    auto f = graphs::cycle(7);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto rc = random_construction(3, 60, Rational(3, 10), f, seed);
        CHECK(is_valid_embedding(rc.graph, f, Embedding{rc.planted}));
        CHECK(contains_subgraph(rc.graph, f));
        CHECK(scan_triangles(rc.graph) == 0);
        CHECK(rc.parts.size() == 2);
        for (const auto & part : rc.parts) {
            auto inside = rc.graph.induced(part);
            CHECK(inside.size() == (part.test(rc.planted[0]) ? f.size() : 0));
        }
    }
    auto rc4 = random_construction(4, 45, Rational(1, 2), graphs::cycle(5), 1);
    CHECK(rc4.parts.size() == 3);
    CHECK(rc4.parts[0].count() == 15);
    CHECK(emit_graph6(random_construction(4, 45, Rational(1, 2), graphs::cycle(5), 1).graph) == emit_graph6(rc4.graph));
    CHECK_THROWS_AS(random_construction(3, 10, Rational(1, 2), graphs::cycle(7), 0), std::invalid_argument);
    CHECK_THROWS_AS(random_construction(3, 60, Rational(1), f, 0), std::invalid_argument);
}

TEST_CASE("recipes round trip and reproduce")
{
    std::vector<ConstructionRecipe> recipes{
        {Family::zykov, {{"edges", 2}, {"r", 3}, {"t", 1}}, std::nullopt},
        {Family::zykov, {{"trees", nlohmann::json::array({"P4", "K1,3"})}, {"r", 4}, {"t", 2}}, std::nullopt},
        {Family::kneser, {{"n", 5}, {"k", 2}}, std::nullopt},
        {Family::hajnal, {{"k", 1}, {"l", 5}, {"m", 2}}, std::nullopt},
        {Family::borsuk, {{"k", 2}, {"eps", "1/20"}, {"points", 40}}, 3},
        {Family::borsuk_hajnal, {{"k", 2}, {"eps", "1/50"}, {"delta", "1/20"}, {"w_size", 6}, {"u_points", 10}}, 5},
        {Family::borsuk_hajnal_r, {{"r", 4}, {"k", 2}, {"eps", "1/50"}, {"delta", "1/20"}, {"w_size", 6}, {"u_points", 10}}, 5},
        {Family::erdos, {{"k", 4}, {"l", 4}}, 0},
        {Family::pi_witness, {{"h", "K2,2,2"}, {"c", 3}}, 0},
        {Family::theta_witness, {{"h", "C5"}, {"c", 3}}, 0},
        {Family::lambda_witness, {{"h", "K3"}, {"k", 2}, {"nu", "1/10"}, {"u_points", 8}}, 2},
        {Family::random_construction, {{"r", 3}, {"n", 40}, {"p", "3/10"}, {"f", "C5"}}, 7},
    };
    for (const auto & recipe : recipes) {
        auto j = recipe.to_json();
        CHECK(j["schema"] == "ctl/1");
        auto back = ConstructionRecipe::from_json(nlohmann::json::parse(j.dump()));
        CHECK(back.family == recipe.family);
        CHECK(back.params == recipe.params);
        CHECK(back.seed == recipe.seed);
        auto a = construct(recipe), b = construct(back);
        CHECK(emit_graph6(a.graph) == emit_graph6(b.graph));
        CHECK(a.verified == b.verified);
        CHECK(a.verified["order"] == a.graph.order());
        for (const auto & [key, value] : a.verified.items())
            CHECK_MESSAGE(! a.reported.contains(key), key);
        CHECK(family_from_string(to_string(recipe.family)) == recipe.family);
    }
}

TEST_CASE("recipe validation")
{
    CHECK_THROWS_AS(ConstructionRecipe::from_json({{"schema", "ctl/1"}, {"family", "BORSUK"}, {"params", {{"k", 2}}}}), std::invalid_argument);
    CHECK_THROWS_AS(ConstructionRecipe::from_json({{"schema", "ctl/1"}, {"family", "KNESER"}, {"params", {{"n", 5}, {"k", 2}}}, {"seed", 1}}),
        std::invalid_argument);
    CHECK_THROWS_AS(ConstructionRecipe::from_json({{"schema", "ctl/1"}, {"family", "NOPE"}, {"params", nlohmann::json::object()}}),
        std::invalid_argument);
    CHECK_THROWS_AS(construct({Family::kneser, {{"n", 5}}, std::nullopt}), std::invalid_argument);
    CHECK_THROWS_AS(construct({Family::hajnal, {{"k", 1}, {"l", 4}, {"m", 1}}, std::nullopt}), std::invalid_argument);
    CHECK_THROWS_AS(construct({Family::pi_witness, {{"h", "not a graph!"}, {"c", 3}}, 0}), std::invalid_argument);
    CHECK(is_randomized(Family::borsuk));
    CHECK_FALSE(is_randomized(Family::kneser));
}

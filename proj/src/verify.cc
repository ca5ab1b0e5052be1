#include <ctl/chromatic.hh>
#include <ctl/verify.hh>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace ctl
{
    auto is_valid_embedding(const Graph & host, const Graph & pattern, const Embedding & e) -> bool
    {
        if (e.map.size() != pattern.order())
            return false;
        std::set<int> images;
        for (int x : e.map)
            if (x < 0 || static_cast<size_t>(x) >= host.order() || ! images.insert(x).second)
                return false;
        for (auto [u, v] : pattern.edges())
            if (! host.adjacent(e.map[u], e.map[v]))
                return false;
        return true;
    }

    namespace
    {
        auto ball2_size(const Graph & g, int v) -> size_t
        {
            VertexSet ball = g.neighbours(v);
            g.neighbours(v).for_each([&](size_t w) { ball |= g.neighbours(static_cast<int>(w)); });
            ball.set(v);
            return ball.count();
        }

        auto neighbour_degrees(const Graph & g, int v) -> vector<size_t>
        {
            vector<size_t> out;
            g.neighbours(v).for_each([&](size_t w) { out.push_back(g.degree(static_cast<int>(w))); });
            std::sort(out.rbegin(), out.rend());
            return out;
        }
    }

    auto contains_subgraph(const Graph & host, const Graph & pattern, const Deadline & deadline) -> optional<Embedding>
    {
        size_t np = pattern.order(), nh = host.order();
        if (np == 0)
            return Embedding{};
        if (np > nh || pattern.size() > host.size())
            return std::nullopt;

        // search order: most already-ordered neighbours, then highest degree, then index
        vector<int> order;
        vector<bool> placed(np, false);
        vector<size_t> links(np, 0);
        for (size_t step = 0; step < np; ++step) {
            int best = -1;
            for (size_t v = 0; v < np; ++v) {
                if (placed[v])
                    continue;
                int iv = static_cast<int>(v);
                if (best == -1 || links[v] > links[best] || (links[v] == links[best] && pattern.degree(iv) > pattern.degree(best)))
                    best = iv;
            }
            placed[best] = true;
            order.push_back(best);
            pattern.neighbours(best).for_each([&](size_t w) { ++links[w]; });
        }

        vector<size_t> host_ball(nh);
        vector<vector<size_t>> host_nd(nh);
        for (size_t x = 0; x < nh; ++x) {
            host_ball[x] = ball2_size(host, static_cast<int>(x));
            host_nd[x] = neighbour_degrees(host, static_cast<int>(x));
        }

        vector<VertexSet> domain(np, VertexSet(nh));
        for (size_t p = 0; p < np; ++p) {
            int ip = static_cast<int>(p);
            size_t ball = ball2_size(pattern, ip);
            auto nd = neighbour_degrees(pattern, ip);
            for (size_t x = 0; x < nh; ++x) {
                if (host.degree(static_cast<int>(x)) < pattern.degree(ip) || host_ball[x] < ball)
                    continue;
                bool dominated = true;
                for (size_t i = 0; i < nd.size() && dominated; ++i)
                    dominated = nd[i] <= host_nd[x][i];
                if (dominated)
                    domain[p].set(x);
            }
            if (domain[p].empty())
                return std::nullopt;
        }

        // earlier neighbours of each position
        vector<int> position(np);
        for (size_t i = 0; i < np; ++i)
            position[order[i]] = static_cast<int>(i);
        vector<vector<int>> earlier(np);
        for (size_t i = 0; i < np; ++i)
            pattern.neighbours(order[i]).for_each([&](size_t w) {
                if (position[w] < static_cast<int>(i))
                    earlier[i].push_back(static_cast<int>(w));
            });

        Deadline local = deadline;
        Embedding e;
        e.map.assign(np, -1);
        VertexSet used(nh);

        std::function<bool(size_t)> extend = [&](size_t depth) -> bool {
            if (depth == np)
                return true;
            local.tick("subgraph search");
            int p = order[depth];
            VertexSet candidates = domain[p] - used;
            for (int q : earlier[depth])
                candidates &= host.neighbours(e.map[q]);
            for (size_t x = candidates.first(); x < nh; x = candidates.find_next(x + 1)) {
                e.map[p] = static_cast<int>(x);
                used.set(x);
                if (extend(depth + 1))
                    return true;
                used.reset(x);
            }
            e.map[p] = -1;
            return false;
        };

        if (! extend(0))
            return std::nullopt;
        return e;
    }

    auto embed_forest_greedy(const Graph & host, const Graph & f) -> optional<Embedding>
    {
        auto trees = forest_decomposition(f);
        if (! trees)
            throw std::invalid_argument("embed_forest needs an acyclic pattern");
        size_t k = f.order();
        if (k == 0)
            return Embedding{};

        // core of minimum degree at least k
        VertexSet core = host.all_vertices();
        vector<size_t> deg(host.order());
        for (size_t v = 0; v < host.order(); ++v)
            deg[v] = host.degree(static_cast<int>(v));
        vector<int> stack;
        for (size_t v = 0; v < host.order(); ++v)
            if (deg[v] < k)
                stack.push_back(static_cast<int>(v));
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (! core.test(v))
                continue;
            core.reset(v);
            host.neighbours(v).for_each([&](size_t w) {
                if (core.test(w) && deg[w]-- == k)
                    stack.push_back(static_cast<int>(w));
            });
        }
        if (core.count() <= k)
            return std::nullopt;

        Embedding e;
        e.map.assign(k, -1);
        VertexSet used(host.order());
        for (const auto & t : trees->trees) {
            // parent-first order from the tree's least vertex
            vector<int> queue{t.vertices.front()};
            vector<int> parent(f.order(), -1);
            for (size_t i = 0; i < queue.size(); ++i) {
                int u = queue[i];
                VertexSet options = core - used;
                if (parent[u] != -1)
                    options &= host.neighbours(e.map[parent[u]]);
                size_t x = options.first();
                if (x >= host.order())
                    return std::nullopt;
                e.map[u] = static_cast<int>(x);
                used.set(x);
                f.neighbours(u).for_each([&](size_t w) {
                    if (static_cast<int>(w) != parent[u]) {
                        parent[w] = u;
                        queue.push_back(static_cast<int>(w));
                    }
                });
            }
        }
        return e;
    }

    auto embed_forest(const Graph & host, const Graph & f, const Deadline & deadline) -> optional<Embedding>
    {
        if (auto e = embed_forest_greedy(host, f))
            return e;
        return contains_subgraph(host, f, deadline);
    }

    auto scan_triangles(const Graph & g) -> size_t
    {
        size_t count = 0;
        for (auto [u, v] : g.edges()) {
            VertexSet common = g.neighbours(u) & g.neighbours(v);
            for (size_t w = common.find_next(static_cast<size_t>(v) + 1); w < g.order(); w = common.find_next(w + 1))
                ++count;
        }
        return count;
    }

    auto common_neighbors(const Graph & g, const VertexSet & x) -> VertexSet
    {
        VertexSet out = g.all_vertices();
        x.for_each([&](size_t v) { out &= g.neighbours(static_cast<int>(v)); });
        return out;
    }

    auto odd_cycle_oracle(const Graph & h, const VertexSet & s, size_t max_len, const Deadline & deadline) -> vector<vector<int>>
    {
        vector<vector<int>> out;
        size_t n = h.order();
        Deadline local = deadline;
        vector<int> path;
        VertexSet on_path(n);

        std::function<void(int, size_t)> walk = [&](int start, size_t hits) {
            local.tick("odd cycle enumeration");
            int last = path.back();
            if (path.size() >= 3 && path.size() % 2 == 1 && h.adjacent(last, start) && path[1] < last)
                out.push_back(path);
            if (path.size() == max_len)
                return;
            h.neighbours(last).for_each([&](size_t w) {
                if (static_cast<int>(w) <= start || on_path.test(w))
                    return;
                size_t more = hits + (s.test(w) ? 1 : 0);
                if (more > 1)
                    return;
                path.push_back(static_cast<int>(w));
                on_path.set(w);
                walk(start, more);
                on_path.reset(w);
                path.pop_back();
            });
        };

        for (size_t v = 0; v < n; ++v) {
            path = {static_cast<int>(v)};
            on_path.set(v);
            walk(static_cast<int>(v), s.test(v) ? 1 : 0);
            on_path.reset(v);
        }
        return out;
    }

    namespace
    {
        /// Connected components of g restricted to within, each sorted, by DFS.
        auto components(const Graph & g, const VertexSet & within) -> vector<vector<int>>
        {
            vector<vector<int>> out;
            VertexSet left = within;
            for (size_t root = left.first(); root < g.order(); root = left.first()) {
                vector<int> comp, stack{static_cast<int>(root)};
                left.reset(root);
                while (! stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    comp.push_back(u);
                    (g.neighbours(u) & left).for_each([&](size_t w) {
                        left.reset(w);
                        stack.push_back(static_cast<int>(w));
                    });
                }
                std::sort(comp.begin(), comp.end());
                out.push_back(std::move(comp));
            }
            return out;
        }

        auto induced_edge_count(const Graph & g, const VertexSet & within) -> size_t
        {
            size_t twice = 0;
            within.for_each([&](size_t v) { twice += g.neighbours(static_cast<int>(v)).intersection_count(within); });
            return twice / 2;
        }

        auto acyclic_on(const Graph & g, const VertexSet & within) -> bool
        {
            return induced_edge_count(g, within) + components(g, within).size() == within.count();
        }

        auto list(const vector<int> & v) -> string
        {
            string s = "{";
            for (size_t i = 0; i < v.size(); ++i)
                s += (i ? "," : "") + std::to_string(v[i]);
            return s + "}";
        }

        /// Partition-into-independent-classes check written out directly.
        auto check_coloring(const Graph & h, const Coloring & c, size_t chi, const string & where, WitnessCheck & out) -> bool
        {
            size_t n = h.order();
            vector<int> owner(n, -1);
            bool ok = true;
            for (size_t i = 0; i < c.classes.size(); ++i) {
                if (c.classes[i].empty()) {
                    out.fail(where + ": class " + std::to_string(i) + " is empty");
                    ok = false;
                }
                for (int v : c.classes[i]) {
                    if (v < 0 || static_cast<size_t>(v) >= n) {
                        out.fail(where + ": vertex " + std::to_string(v) + " out of range");
                        return false;
                    }
                    if (owner[v] != -1) {
                        out.fail(where + ": vertex " + std::to_string(v) + " in two classes");
                        ok = false;
                    }
                    owner[v] = static_cast<int>(i);
                }
            }
            for (size_t v = 0; v < n; ++v)
                if (owner[v] == -1) {
                    out.fail(where + ": vertex " + std::to_string(v) + " uncoloured");
                    ok = false;
                }
            if (! ok)
                return false;
            for (auto [u, v] : h.edges())
                if (owner[u] == owner[v]) {
                    out.fail(where + ": edge " + std::to_string(u) + "-" + std::to_string(v) + " inside class " + std::to_string(owner[u]));
                    ok = false;
                }
            if (c.classes.size() != chi) {
                out.fail(where + ": " + std::to_string(c.classes.size()) + " classes, expected " + std::to_string(chi));
                ok = false;
            }
            return ok;
        }

        auto check_forest_witness(const Graph & h, const ForestWitness & fw, size_t chi, WitnessCheck & out) -> void
        {
            if (! check_coloring(h, fw.coloring, chi, "forest_witness.coloring", out))
                return;
            auto [i, j] = fw.pair;
            int k = static_cast<int>(fw.coloring.classes.size());
            if (i < 0 || j < 0 || i >= k || j >= k || i == j) {
                out.fail("forest_witness.pair: invalid class indices");
                return;
            }
            VertexSet both = VertexSet::from(h.order(), fw.coloring.classes[i]) | VertexSet::from(h.order(), fw.coloring.classes[j]);
            if (! acyclic_on(h, both))
                out.fail("forest_witness.pair: classes " + std::to_string(i) + " and " + std::to_string(j) + " induce a cycle");
        }

        auto check_near_acyclic(const Graph & h, const NearAcyclicWitness & w, size_t chi, const Deadline & deadline, WitnessCheck & out) -> void
        {
            size_t n = h.order();
            if (w.removed_sets.size() + 3 != chi)
                out.fail("near_acyclic.removed_sets: " + std::to_string(w.removed_sets.size()) + " sets, expected r-3 = " + std::to_string(chi - 3));

            VertexSet taken(n);
            auto claim = [&](const vector<int> & set, const string & name) -> VertexSet {
                VertexSet s(n);
                for (int v : set) {
                    if (v < 0 || static_cast<size_t>(v) >= n) {
                        out.fail(name + ": vertex " + std::to_string(v) + " out of range");
                        continue;
                    }
                    if (taken.test(v))
                        out.fail(name + ": vertex " + std::to_string(v) + " also in another set");
                    taken.set(v);
                    s.set(v);
                }
                for (auto [a, b] : h.edges())
                    if (s.test(a) && s.test(b))
                        out.fail(name + ": not independent (edge " + std::to_string(a) + "-" + std::to_string(b) + ")");
                return s;
            };

            VertexSet removed(n);
            for (size_t i = 0; i < w.removed_sets.size(); ++i)
                removed |= claim(w.removed_sets[i], "near_acyclic.removed_sets[" + std::to_string(i) + "]");
            VertexSet s = claim(w.s_set, "near_acyclic.s_set");
            VertexSet rest = h.all_vertices() - taken;

            if (! acyclic_on(h, rest)) {
                out.fail("near_acyclic.forest: the remainder after removing all sets contains a cycle");
                return;
            }

            // recorded trees must be exactly the components, with proper sides
            auto comps = components(h, rest);
            std::set<vector<int>> actual(comps.begin(), comps.end()), recorded;
            vector<int> side(n, -1);
            for (size_t t = 0; t < w.forest.trees.size(); ++t) {
                const auto & tree = w.forest.trees[t];
                auto verts = tree.vertices;
                std::sort(verts.begin(), verts.end());
                recorded.insert(verts);
                vector<int> both = tree.side_a;
                both.insert(both.end(), tree.side_b.begin(), tree.side_b.end());
                std::sort(both.begin(), both.end());
                if (both != verts)
                    out.fail("near_acyclic.forest.trees[" + std::to_string(t) + "]: sides do not partition the tree " + list(verts));
                for (int v : tree.side_a)
                    if (v >= 0 && static_cast<size_t>(v) < n)
                        side[v] = 0;
                for (int v : tree.side_b)
                    if (v >= 0 && static_cast<size_t>(v) < n)
                        side[v] = 1;
                auto edges = tree.edges;
                for (auto & [a, b] : edges)
                    if (a > b)
                        std::swap(a, b);
                std::sort(edges.begin(), edges.end());
                vector<Edge> induced;
                for (auto [a, b] : h.edges())
                    if (std::binary_search(verts.begin(), verts.end(), a) && std::binary_search(verts.begin(), verts.end(), b))
                        induced.emplace_back(a, b);
                if (edges != induced)
                    out.fail("near_acyclic.forest.trees[" + std::to_string(t) + "]: edge list differs from the induced edges");
            }
            if (actual != recorded) {
                out.fail("near_acyclic.forest: recorded trees are not the components of the remainder");
                return;
            }
            for (auto [a, b] : h.edges())
                if (rest.test(a) && rest.test(b) && side[a] == side[b])
                    out.fail("near_acyclic.forest: edge " + std::to_string(a) + "-" + std::to_string(b) + " joins one side of its tree");

            if (! out.pass)
                return;

            // tree-class condition
            for (size_t t = 0; t < w.forest.trees.size(); ++t) {
                VertexSet a = VertexSet::from(n, w.forest.trees[t].side_a), b = VertexSet::from(n, w.forest.trees[t].side_b);
                s.for_each([&](size_t x) {
                    const auto & nx = h.neighbours(static_cast<int>(x));
                    if (nx.intersects(a) && nx.intersects(b))
                        out.fail("near_acyclic: S vertex " + std::to_string(x) + " sees both sides of tree " + std::to_string(t));
                });
            }

            if (out.pass) {
                size_t rest_chi = chromatic_number(h.without(removed), deadline);
                if (rest_chi != 3)
                    out.fail("near_acyclic: graph minus removed sets has chromatic number " + std::to_string(rest_chi) + ", expected 3");
            }
        }

        /// All proper colourings with exactly k classes, by plain restricted-growth recursion.
        template <typename F>
        auto brute_colourings(const Graph & h, size_t k, const Deadline & deadline, F && f) -> bool
        {
            size_t n = h.order();
            vector<int> colour(n, -1);
            std::function<bool(size_t, size_t)> go = [&](size_t v, size_t used) -> bool {
                deadline.tick("witness check enumeration");
                if (v == n)
                    return used == k ? f(colour) : true;
                for (size_t c = 0; c < std::min(used + 1, k); ++c) {
                    bool clash = false;
                    for (size_t u = 0; u < v && ! clash; ++u)
                        clash = colour[u] == static_cast<int>(c) && h.adjacent(static_cast<int>(u), static_cast<int>(v));
                    if (clash)
                        continue;
                    colour[v] = static_cast<int>(c);
                    if (! go(v + 1, std::max(used, c + 1)))
                        return false;
                }
                colour[v] = -1;
                return true;
            };
            return go(0, 0);
        }

        auto brute_forest_in_family(const Graph & h, size_t chi, const Deadline & deadline) -> bool
        {
            bool found = false;
            brute_colourings(h, chi, deadline, [&](const vector<int> & colour) {
                for (size_t i = 0; i < chi && ! found; ++i)
                    for (size_t j = i + 1; j < chi && ! found; ++j) {
                        VertexSet both(h.order());
                        for (size_t v = 0; v < h.order(); ++v)
                            if (colour[v] == static_cast<int>(i) || colour[v] == static_cast<int>(j))
                                both.set(v);
                        found = acyclic_on(h, both);
                    }
                return ! found;
            });
            return found;
        }

        /// r-near-acyclicity from the odd-cycle form of the definition: labels U_1..U_{r-3}, S, forest;
        /// the forest must be acyclic and every odd cycle of H - U must meet S twice.
        auto brute_r_near_acyclic(const Graph & h, size_t chi, const Deadline & deadline) -> bool
        {
            size_t n = h.order(), removed = chi - 3;
            vector<int> label(n, -1); // 0 forest, 1 S, 2+i U_i
            bool found = false;
            std::function<void(size_t, size_t)> go = [&](size_t v, size_t used) {
                if (found)
                    return;
                deadline.tick("witness check enumeration");
                if (v == n) {
                    VertexSet forest(n), s(n), u(n);
                    for (size_t x = 0; x < n; ++x)
                        (label[x] == 0 ? forest : label[x] == 1 ? s : u).set(x);
                    if (! acyclic_on(h, forest))
                        return;
                    Graph rest = h.without(u);
                    VertexSet s_rest(rest.order());
                    size_t idx = 0;
                    for (size_t x = 0; x < n; ++x)
                        if (! u.test(x)) {
                            if (s.test(x))
                                s_rest.set(idx);
                            ++idx;
                        }
                    found = odd_cycle_oracle(rest, s_rest, rest.order(), deadline).empty();
                    return;
                }
                for (int l = 0; l < static_cast<int>(2 + std::min(removed, used + 1)); ++l) {
                    if (l >= 1) {
                        bool clash = false;
                        for (size_t x = 0; x < v && ! clash; ++x)
                            clash = label[x] == l && h.adjacent(static_cast<int>(x), static_cast<int>(v));
                        if (clash)
                            continue;
                    }
                    label[v] = l;
                    go(v + 1, l >= 2 ? std::max(used, static_cast<size_t>(l - 1)) : used);
                }
                label[v] = -1;
            };
            go(0, 0);
            return found;
        }
    }

    auto check_threshold_witness(const Graph & h, const ThresholdReport & report, const WitnessCheckOptions & options,
        const Deadline & deadline) -> WitnessCheck
    {
        WitnessCheck out;
        Deadline local = deadline;
        size_t chi = chromatic_number(h, local);
        if (chi != report.chi) {
            out.fail("chi: report says " + std::to_string(report.chi) + ", recomputed " + std::to_string(chi));
            return out;
        }

        bool bipartite = chi <= 2;
        if (bipartite != (report.class_tag == ThresholdClass::bipartite))
            out.fail("class: " + to_string(report.class_tag) + " is inconsistent with chi = " + std::to_string(chi));

        Rational expected = threshold_value(report.class_tag, chi);
        if (report.threshold != expected)
            out.fail("threshold: report says " + report.threshold.to_string() + ", " + to_string(report.class_tag) + " with r = " +
                std::to_string(chi) + " gives " + expected.to_string());
        if (! out.pass || bipartite)
            return out;

        bool exhaustive = h.order() <= options.exhaustive_limit;
        switch (report.class_tag) {
        case ThresholdClass::theta:
            if (! report.near_acyclic_witness)
                out.fail("near_acyclic: THETA report carries no near-acyclic witness");
            else
                check_near_acyclic(h, *report.near_acyclic_witness, chi, local, out);
            if (report.forest_witness)
                check_forest_witness(h, *report.forest_witness, chi, out);
            break;

        case ThresholdClass::lambda:
            if (report.near_acyclic_witness)
                out.fail("near_acyclic: LAMBDA report must not carry a near-acyclic witness");
            if (! report.forest_witness)
                out.fail("forest_witness: LAMBDA report carries no forest witness");
            else
                check_forest_witness(h, *report.forest_witness, chi, out);
            if (exhaustive) {
                if (brute_r_near_acyclic(h, chi, local))
                    out.fail("class: graph is r-near-acyclic, so LAMBDA is wrong");
            }
            else
                out.notes.push_back("not r-near-acyclic: unchecked above " + std::to_string(options.exhaustive_limit) + " vertices");
            break;

        case ThresholdClass::pi:
            if (report.near_acyclic_witness || report.forest_witness)
                out.fail("witnesses: PI report must carry no witnesses");
            if (exhaustive) {
                if (brute_forest_in_family(h, chi, local))
                    out.fail("class: a forest lies in the decomposition family, so PI is wrong");
            }
            else
                out.notes.push_back("no forest in decomposition family: unchecked above " + std::to_string(options.exhaustive_limit) + " vertices");
            break;

        case ThresholdClass::bipartite:
            break;
        }
        return out;
    }
}

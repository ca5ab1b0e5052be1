#include <ctl/chromatic.hh>
#include <ctl/classify.hh>
#include <ctl/constructions.hh>
#include <ctl/graph6.hh>
#include <ctl/named_graphs.hh>
#include <ctl/report_json.hh>
#include <ctl/rng.hh>
#include <ctl/verify.hh>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

using nlohmann::json;
using std::size_t;
using std::string;
using std::vector;

namespace ctl
{
    namespace
    {
        auto require(bool condition, const string & what) -> void
        {
            if (! condition)
                throw std::invalid_argument(what);
        }

        auto check_cap(size_t n, const string & what) -> void
        {
            if (n > max_vertices)
                throw SizingError(what + " would have " + std::to_string(n) + " vertices, above the cap of " + std::to_string(max_vertices));
        }

        /// C(n, k), saturating at max_vertices + 1.
        auto binomial_capped(size_t n, size_t k) -> size_t
        {
            if (k > n)
                return 0;
            k = std::min(k, n - k);
            BigInt c = 1;
            for (size_t i = 1; i <= k; ++i) {
                c = c * (n - k + i) / i;
                if (c > max_vertices)
                    return max_vertices + 1;
            }
            return static_cast<size_t>(c);
        }

        auto full_set(size_t cap) -> VertexSet
        {
            VertexSet s(cap);
            s.set_all();
            return s;
        }

        auto range_set(size_t cap, size_t from, size_t count) -> VertexSet
        {
            VertexSet s(cap);
            for (size_t i = 0; i < count; ++i)
                s.set(from + i);
            return s;
        }

        auto subset_label(const vector<int> & members) -> string
        {
            string s = "{";
            for (size_t i = 0; i < members.size(); ++i)
                s += (i ? "," : "") + std::to_string(members[i]);
            return s + "}";
        }

        /// k-subsets of {0..n-1} in colex order.
        auto colex_subsets(size_t n, size_t k) -> vector<vector<int>>
        {
            vector<vector<int>> out;
            vector<int> c(k);
            for (size_t i = 0; i < k; ++i)
                c[i] = static_cast<int>(i);
            while (true) {
                out.push_back(c);
                if (k == 0)
                    break;
                size_t i = 0;
                while (i + 1 < k && c[i] + 1 == c[i + 1])
                    ++i;
                if (i + 1 == k && static_cast<size_t>(c[i]) + 1 >= n)
                    break;
                ++c[i];
                for (size_t j = 0; j < i; ++j)
                    c[j] = static_cast<int>(j);
            }
            return out;
        }

        /// Complete balanced multipartite shell with g' replacing the first class.
        auto shell(const Graph & gp, size_t classes) -> Graph
        {
            size_t n0 = gp.order();
            check_cap(classes * n0, "multipartite shell");
            GraphBuilder b(classes * n0);
            for (auto [u, v] : gp.edges())
                b.add_edge(u, v);
            for (size_t i = 0; i < classes; ++i)
                for (size_t j = i + 1; j < classes; ++j)
                    b.join(range_set(classes * n0, i * n0, n0), range_set(classes * n0, j * n0, n0));
            for (size_t v = 0; v < n0; ++v)
                b.set_label(static_cast<int>(v), "G':" + std::to_string(v));
            for (size_t i = 1; i < classes; ++i)
                for (size_t v = 0; v < n0; ++v)
                    b.set_label(static_cast<int>(i * n0 + v), "V" + std::to_string(i + 1) + ":" + std::to_string(v));
            return std::move(b).build();
        }

        /// Length of a shortest cycle and a vertex on it, or nullopt if acyclic.
        // true iff dist(u, v) <= d
        auto within_distance(const vector<vector<int>> & adj, int u, int v, size_t d) -> bool
        {
            vector<int> dist(adj.size(), -1), queue{u};
            dist[u] = 0;
            for (size_t i = 0; i < queue.size(); ++i) {
                int x = queue[i];
                if (static_cast<size_t>(dist[x]) >= d)
                    continue;
                for (int y : adj[x])
                    if (dist[y] < 0) {
                        if (y == v)
                            return true;
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
            }
            return false;
        }

        /// Repeatedly drops vertices of degree below d.
        auto peel_below(const Graph & g, size_t d) -> Graph
        {
            VertexSet drop(g.order());
            vector<size_t> deg(g.order());
            vector<int> stack;
            for (size_t v = 0; v < g.order(); ++v) {
                deg[v] = g.degree(static_cast<int>(v));
                if (deg[v] < d)
                    stack.push_back(static_cast<int>(v));
            }
            while (! stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                if (drop.test(v))
                    continue;
                drop.set(v);
                g.neighbours(v).for_each([&](size_t w) {
                    if (! drop.test(w) && deg[w]-- == d)
                        stack.push_back(static_cast<int>(w));
                });
            }
            return g.without(drop);
        }
    }

    auto zykov_order(const vector<Graph> & trees, size_t r, size_t t) -> size_t
    {
        require(! trees.empty(), "zykov needs at least one tree");
        require(r >= 3, "zykov needs r >= 3");
        require(t >= 1, "zykov needs t >= 1");
        if (trees.size() > 12)
            throw SizingError("zykov with more than 12 trees exceeds the vertex cap");
        size_t n = ((size_t{1} << trees.size()) + r - 3) * t;
        for (const auto & tree : trees)
            n += tree.order();
        return n;
    }

    auto zykov(const vector<Graph> & trees, size_t r, size_t t) -> Graph
    {
        size_t n = zykov_order(trees, r, t);
        check_cap(n, "Zykov graph");
        size_t l = trees.size();

        GraphBuilder b(n);
        vector<VertexSet> side_a, side_b;
        size_t offset = 0;
        for (size_t j = 0; j < l; ++j) {
            auto d = forest_decomposition(trees[j]);
            require(trees[j].order() >= 1 && d && d->trees.size() == 1, "zykov tree " + std::to_string(j + 1) + " is not a tree");
            const auto & tree = d->trees.front();
            VertexSet a(n), bb(n);
            for (int v : tree.side_a) {
                a.set(offset + v);
                b.set_label(static_cast<int>(offset + v), "T" + std::to_string(j + 1) + "A:" + std::to_string(v));
            }
            for (int v : tree.side_b) {
                bb.set(offset + v);
                b.set_label(static_cast<int>(offset + v), "T" + std::to_string(j + 1) + "B:" + std::to_string(v));
            }
            for (auto [u, v] : tree.edges)
                b.add_edge(static_cast<int>(offset + u), static_cast<int>(offset + v));
            side_a.push_back(a);
            side_b.push_back(bb);
            offset += trees[j].order();
        }

        for (size_t mask = 0; mask < (size_t{1} << l); ++mask) {
            vector<int> members;
            VertexSet seen(n);
            for (size_t j = 0; j < l; ++j) {
                if (mask >> j & 1) {
                    members.push_back(static_cast<int>(j + 1));
                    seen |= side_a[j];
                }
                else
                    seen |= side_b[j];
            }
            VertexSet block = range_set(n, offset, t);
            b.join(block, seen);
            for (size_t c = 0; c < t; ++c)
                b.set_label(static_cast<int>(offset + c), "S" + subset_label(members) + ":" + std::to_string(c));
            offset += t;
        }

        for (size_t j = 0; j + 3 < r; ++j) {
            VertexSet block = range_set(n, offset, t);
            b.join(block, full_set(n) - block);
            for (size_t c = 0; c < t; ++c)
                b.set_label(static_cast<int>(offset + c), "S'" + std::to_string(j + 1) + ":" + std::to_string(c));
            offset += t;
        }
        return std::move(b).build();
    }

    auto kneser(size_t n, size_t k) -> Graph
    {
        require(k >= 1 && n >= 2 * k, "kneser needs n >= 2k >= 2");
        size_t count = binomial_capped(n, k);
        check_cap(count, "Kneser graph");
        auto subsets = colex_subsets(n, k);
        vector<VertexSet> sets;
        for (const auto & s : subsets)
            sets.push_back(VertexSet::from(n, s));

        GraphBuilder b(count);
        for (size_t i = 0; i < count; ++i) {
            vector<int> one_based;
            for (int x : subsets[i])
                one_based.push_back(x + 1);
            b.set_label(static_cast<int>(i), subset_label(one_based));
            for (size_t j = i + 1; j < count; ++j)
                if (! sets[i].intersects(sets[j]))
                    b.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
        return std::move(b).build();
    }

    auto hajnal(size_t k, size_t l, size_t m) -> Graph
    {
        require(m >= 1, "hajnal needs m >= 1");
        require(l >= 1, "hajnal needs l >= 1");
        size_t parts = 2 * m + k;
        require(l % parts == 0, "hajnal needs 2m+k to divide l");
        size_t kn = binomial_capped(parts, m);
        check_cap(kn + 3 * l, "Hajnal graph");

        Graph kg = kneser(parts, m);
        size_t n = kg.order() + 3 * l, a0 = kg.order(), b0 = a0 + 2 * l, piece = 2 * l / parts;
        GraphBuilder b(n);
        for (auto [u, v] : kg.edges())
            b.add_edge(u, v);
        b.join(range_set(n, a0, 2 * l), range_set(n, b0, l));

        auto subsets = colex_subsets(parts, m);
        for (size_t s = 0; s < subsets.size(); ++s) {
            b.set_label(static_cast<int>(s), "K" + kg.label(static_cast<int>(s)));
            for (int j : subsets[s])
                b.join(range_set(n, s, 1), range_set(n, a0 + j * piece, piece));
        }
        for (size_t i = 0; i < 2 * l; ++i)
            b.set_label(static_cast<int>(a0 + i), "A" + std::to_string(i / piece + 1) + ":" + std::to_string(i % piece));
        for (size_t i = 0; i < l; ++i)
            b.set_label(static_cast<int>(b0 + i), "B:" + std::to_string(i));
        return std::move(b).build();
    }

    auto borsuk_sample(size_t k, const Angle & eps, size_t n_points, std::uint64_t seed) -> BorsukSample
    {
        require(k >= 1, "borsuk needs k >= 1");
        require(eps.turns_of_pi > Rational(0) && eps.turns_of_pi < Rational(1, 2), "borsuk needs 0 < eps < pi/2");
        require(n_points >= 2, "borsuk needs at least two points");
        check_cap(n_points, "Borsuk sample");
        Rng rng(seed);
        BorsukSample out;
        for (size_t i = 0; i < n_points; ++i)
            out.points.push_back(random_sphere_point(k, rng));
        out.graph = borsuk_graph(out.points, eps);
        return out;
    }

    auto BorsukHajnal::u_part() const -> VertexSet { return range_set(graph.order(), 0, u_count); }
    auto BorsukHajnal::w_part() const -> VertexSet { return range_set(graph.order(), u_count, w_count); }
    auto BorsukHajnal::x_part() const -> VertexSet { return range_set(graph.order(), u_count + w_count, x_count); }
    auto BorsukHajnal::y_part(size_t i) const -> VertexSet
    {
        return range_set(graph.order(), u_count + w_count + x_count + i * w_count, w_count);
    }

    auto borsuk_hajnal(const BorsukHajnalParams & p) -> BorsukHajnal
    {
        return borsuk_hajnal_r(3, p);
    }

    auto borsuk_hajnal_r(size_t r, const BorsukHajnalParams & p) -> BorsukHajnal
    {
        require(r >= 3, "borsuk_hajnal_r needs r >= 3");
        require(p.k >= 1, "borsuk_hajnal needs k >= 1");
        require(p.w_size % 2 == 0, "borsuk_hajnal needs an even w_size");
        require(p.eps.turns_of_pi > Rational(0) && p.eps.turns_of_pi < Rational(1, 2), "borsuk_hajnal needs 0 < eps < pi/2");
        require(p.delta.turns_of_pi > Rational(0) && p.delta.turns_of_pi < Rational(1, 2), "borsuk_hajnal needs 0 < delta < pi/2");

        BorsukHajnal out;
        Rng root(p.seed);
        Graph b_prime;
        if (p.base) {
            const auto & base = *p.base;
            require(base.phi.size() == base.b_prime.order(), "phi must map every vertex of B'");
            for (const auto & x : base.u)
                require(x.coords.size() == p.k + 1, "U points must lie on S^k");
            for (int x : base.phi)
                require(x >= 0 && static_cast<size_t>(x) < base.u.size(), "phi maps outside U");
            Angle wide{Rational(1) - p.eps.turns_of_pi};
            for (auto [a, c] : base.b_prime.edges())
                require(angle_at_least(base.u[base.phi[a]], base.u[base.phi[c]], wide),
                    "phi is not a homomorphism into the Borsuk graph (edge " + std::to_string(a) + "-" + std::to_string(c) + ")");
            out.u = base.u;
            out.phi = base.phi;
            b_prime = base.b_prime;
        }
        else {
            Rng urng = root.fork(0);
            for (size_t i = 0; i < p.u_points; ++i)
                out.u.push_back(random_sphere_point(p.k, urng));
            b_prime = borsuk_graph(out.u, p.eps);
            out.phi.resize(out.u.size());
            for (size_t i = 0; i < out.u.size(); ++i)
                out.phi[i] = static_cast<int>(i);
        }

        Rng wrng = root.fork(1 + p.w_stream);
        for (size_t i = 0; i < p.w_size; ++i)
            out.w.push_back(random_sphere_point(p.k, wrng));

        out.u_count = b_prime.order();
        out.w_count = p.w_size;
        out.x_count = p.w_size / 2;
        out.y_sets = r - 3;
        size_t n = out.u_count + out.w_count + out.x_count + out.y_sets * out.w_count;
        check_cap(n, "Borsuk-Hajnal graph");

        GraphBuilder b(n);
        for (auto [u, v] : b_prime.edges())
            b.add_edge(u, v);
        size_t w0 = out.u_count, x0 = w0 + out.w_count, y0 = x0 + out.x_count;
        b.join(range_set(n, w0, out.w_count), range_set(n, x0, out.x_count));
        Angle cap{Rational(1, 2) - p.delta.turns_of_pi};
        for (size_t u = 0; u < out.u_count; ++u)
            for (size_t i = 0; i < out.w_count; ++i)
                if (angle_below(out.u[out.phi[u]], out.w[i], cap))
                    b.add_edge(static_cast<int>(u), static_cast<int>(w0 + i));
        VertexSet everything = full_set(n);
        for (size_t i = 0; i < out.y_sets; ++i) {
            VertexSet y = range_set(n, y0 + i * out.w_count, out.w_count);
            b.join(y, everything - y);
        }

        for (size_t i = 0; i < out.u_count; ++i)
            b.set_label(static_cast<int>(i), "U:" + std::to_string(i));
        for (size_t i = 0; i < out.w_count; ++i)
            b.set_label(static_cast<int>(w0 + i), "W:" + std::to_string(i));
        for (size_t i = 0; i < out.x_count; ++i)
            b.set_label(static_cast<int>(x0 + i), "X:" + std::to_string(i));
        for (size_t j = 0; j < out.y_sets; ++j)
            for (size_t i = 0; i < out.w_count; ++i)
                b.set_label(static_cast<int>(y0 + j * out.w_count + i), "Y" + std::to_string(j + 1) + ":" + std::to_string(i));
        out.graph = std::move(b).build();
        return out;
    }

    auto erdos_graph(size_t k, size_t l, const Deadline & deadline, std::uint64_t seed) -> ErdosGraph
    {
        require(k >= 2, "erdos_graph needs k >= 2");
        require(l >= 3, "erdos_graph needs l >= 3");

        auto certify = [&](Graph g, string source) -> std::optional<ErdosGraph> {
            auto gi = girth(g);
            if (gi && *gi < l)
                return std::nullopt;
            if (is_k_colorable(g, k - 1, deadline))
                return std::nullopt;
            return ErdosGraph{std::move(g), k, gi, std::move(source)};
        };

        std::optional<std::pair<Graph, string>> entry;
        if (k == 2)
            entry = std::pair{graphs::path(2), string("catalog:K2")};
        else if (k == 3) {
            size_t len = l % 2 ? l : l + 1;
            entry = std::pair{graphs::cycle(len), "catalog:C" + std::to_string(len)};
        }
        else if (l <= 4 && k <= 5) {
            Graph g = graphs::cycle(5);
            for (size_t chi = 3; chi < k; ++chi)
                g = graphs::mycielski(g);
            entry = std::pair{g, "catalog:mycielski^" + std::to_string(k - 2) + "(K2)"};
        }
        if (entry) {
            auto e = certify(entry->first, entry->second);
            if (! e)
                throw std::logic_error("catalog entry " + entry->second + " failed verification");
            return *e;
        }

        // random girth-preserving process: add edges in random order unless they close a cycle
        // shorter than l, then keep the (k-1)-core and certify it
        Rng rng(seed);
        for (size_t attempt = 0;; ++attempt) {
            deadline.check("Erdos graph search");
            size_t n = std::min<size_t>(400, 16 + 8 * attempt);
            vector<Edge> order;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    order.emplace_back(static_cast<int>(i), static_cast<int>(j));
            rng.shuffle(order);
            vector<vector<int>> adj(n);
            vector<Edge> kept;
            for (auto [u, v] : order) {
                deadline.tick("Erdos graph search");
                if (! within_distance(adj, u, v, l - 2)) {
                    adj[u].push_back(v);
                    adj[v].push_back(u);
                    kept.emplace_back(u, v);
                }
            }
            Graph g = peel_below(Graph(n, kept), k - 1);
            if (g.order() < k)
                continue;
            if (auto e = certify(g, "search"))
                return *e;
        }
    }

    auto pi_witness(const Graph & h, size_t c, const Deadline & deadline, std::uint64_t seed) -> Graph
    {
        size_t r = chromatic_number(h, deadline);
        require(r >= 3, "pi_witness needs chi(h) >= 3");
        require(! has_forest_in_decomposition(h, deadline), "pi_witness needs a decomposition family without a forest");
        require(c >= 2, "pi_witness needs c >= 2");
        auto gp = erdos_graph(c, h.order() + 1, deadline, seed);
        return shell(gp.graph, r - 1);
    }

    auto theta_witness(const Graph & h, size_t c, const Deadline & deadline, std::uint64_t seed) -> Graph
    {
        size_t r = chromatic_number(h, deadline);
        require(r >= 3, "theta_witness needs chi(h) >= 3");
        require(c >= 2, "theta_witness needs c >= 2");
        auto gp = erdos_graph(c, h.order() + 1, deadline, seed);
        return shell(gp.graph, r - 2);
    }

    auto lambda_parameters(size_t r, size_t k, const Rational & nu, size_t u_points) -> LambdaParameters
    {
        require(r >= 3, "lambda_witness needs r >= 3");
        require(k >= 1, "lambda_witness needs k >= 1");
        require(nu > Rational(0) && nu < Rational(1), "lambda_witness needs 0 < nu < 1");

        double want = 0.5 - nu.to_double() / 2, lo = 0, hi = std::numbers::pi / 2;
        for (int i = 0; i < 100; ++i) {
            double mid = (lo + hi) / 2;
            (cap_fraction(k, mid) < want ? lo : hi) = mid;
        }
        double delta_turns = 0.5 - hi / std::numbers::pi;
        auto micro = static_cast<std::int64_t>(std::floor(delta_turns * 1e6));
        require(micro >= 1, "nu too small: delta rounds to zero");

        LambdaParameters out;
        out.delta = Angle{Rational(BigInt(micro), BigInt(1'000'000))};
        out.eps = Angle{out.delta.turns_of_pi / Rational(static_cast<std::int64_t>(2 * k))};

        auto two_r = static_cast<std::int64_t>(2 * r);
        Rational lhs_coef = Rational(two_r - 5, 2) - nu;
        Rational frac = Rational(two_r - 5, two_r - 3) - nu;
        Rational u0(static_cast<std::int64_t>(u_points));
        for (std::int64_t w = 2;; w += 2) {
            Rational ww(w);
            if (lhs_coef * ww >= frac * (Rational(two_r - 3, 2) * ww + u0)) {
                out.w_size = static_cast<size_t>(w);
                break;
            }
        }
        return out;
    }

    auto lambda_witness(const Graph & h, const LambdaWitnessParams & p, const Deadline & deadline) -> LambdaWitness
    {
        size_t r = chromatic_number(h, deadline);
        require(r >= 3, "lambda_witness needs chi(h) >= 3");
        require(! find_r_near_acyclic_witness(h, r, deadline), "lambda_witness needs h not r-near-acyclic");

        LambdaWitness out;
        out.parameters = lambda_parameters(r, p.k, p.nu, p.u_points);
        BorsukHajnalParams bp;
        bp.k = p.k;
        bp.eps = out.parameters.eps;
        bp.delta = out.parameters.delta;
        bp.w_size = out.parameters.w_size;
        bp.u_points = p.u_points;
        bp.seed = p.seed;

        Rational need = (Rational(1, 2) - p.nu) * Rational(static_cast<std::int64_t>(bp.w_size));
        for (size_t s = 0; s <= p.max_resamples; ++s) {
            deadline.check("lambda witness sampling");
            bp.w_stream = s;
            out.instance = borsuk_hajnal_r(r, bp);
            VertexSet w = out.instance.w_part();
            bool ok = true;
            for (size_t u = 0; u < out.instance.u_count && ok; ++u)
                ok = Rational(static_cast<std::int64_t>(out.instance.graph.neighbours(static_cast<int>(u)).intersection_count(w))) >= need;
            if (ok) {
                out.degree_event = true;
                break;
            }
            out.resamples = s + 1;
        }
        out.min_degree_fraction = min_degree_fraction(out.instance.graph);
        auto two_r = static_cast<std::int64_t>(2 * r);
        out.target = Rational(two_r - 5, two_r - 3) - p.nu;
        return out;
    }

    auto random_construction(size_t r, size_t n, const Rational & p, const Graph & f, std::uint64_t seed) -> RandomConstruction
    {
        require(r >= 3, "random_construction needs r >= 3");
        require(p > Rational(0) && p < Rational(1), "random_construction needs 0 < p < 1");
        check_cap(n, "random construction");
        size_t parts = r - 1;
        require(n >= parts, "random_construction needs n >= r-1");

        RandomConstruction out;
        vector<int> part_of(n);
        size_t start = 0;
        for (size_t i = 0; i < parts; ++i) {
            size_t len = n / parts + (i < n % parts ? 1 : 0);
            out.parts.push_back(range_set(n, start, len));
            for (size_t v = start; v < start + len; ++v)
                part_of[v] = static_cast<int>(i);
            start += len;
        }
        require(f.order() <= out.parts[0].count(), "random_construction: f does not fit inside a part");

        Rng rng(seed);
        GraphBuilder b(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (rng.bernoulli(p) && part_of[i] != part_of[j])
                    b.add_edge(static_cast<int>(i), static_cast<int>(j));

        vector<int> v1 = out.parts[0].members();
        rng.shuffle(v1);
        out.planted.assign(v1.begin(), v1.begin() + static_cast<std::ptrdiff_t>(f.order()));
        for (auto [u, v] : f.edges())
            b.add_edge(out.planted[u], out.planted[v]);

        VertexSet outside = full_set(n) - out.parts[0];
        for (size_t i = 0; i < out.planted.size(); ++i)
            for (size_t j = i + 1; j < out.planted.size(); ++j) {
                int u = out.planted[i], v = out.planted[j];
                for (size_t w = 0; w < n; ++w)
                    if (outside.test(w) && b.has_edge(u, static_cast<int>(w)) && b.has_edge(v, static_cast<int>(w))) {
                        b.remove_edge(u, static_cast<int>(w));
                        b.remove_edge(v, static_cast<int>(w));
                    }
            }
        for (size_t v = 0; v < n; ++v)
            b.set_label(static_cast<int>(v), "V" + std::to_string(part_of[v] + 1) + ":" + std::to_string(v));
        out.graph = std::move(b).build();
        return out;
    }

    namespace
    {
        constexpr std::pair<Family, const char *> family_names[] = {
            {Family::zykov, "ZYKOV"},
            {Family::kneser, "KNESER"},
            {Family::hajnal, "HAJNAL"},
            {Family::borsuk, "BORSUK"},
            {Family::borsuk_hajnal, "BORSUK_HAJNAL"},
            {Family::borsuk_hajnal_r, "BORSUK_HAJNAL_R"},
            {Family::erdos, "ERDOS"},
            {Family::pi_witness, "PI_WITNESS"},
            {Family::theta_witness, "THETA_WITNESS"},
            {Family::lambda_witness, "LAMBDA_WITNESS"},
            {Family::random_construction, "RANDOM_CONSTRUCTION"},
        };
    }

    auto to_string(Family f) -> string
    {
        for (auto [family, name] : family_names)
            if (family == f)
                return name;
        throw std::logic_error("unknown family");
    }

    auto family_from_string(std::string_view s) -> std::optional<Family>
    {
        for (auto [family, name] : family_names)
            if (s == name)
                return family;
        return std::nullopt;
    }

    auto is_randomized(Family f) -> bool
    {
        switch (f) {
        case Family::zykov:
        case Family::kneser:
        case Family::hajnal:
            return false;
        default:
            return true;
        }
    }

    auto ConstructionRecipe::to_json() const -> json
    {
        json j{{"schema", "ctl/1"}, {"family", ctl::to_string(family)}, {"params", params}};
        if (seed)
            j["seed"] = *seed;
        return j;
    }

    auto ConstructionRecipe::from_json(const json & j) -> ConstructionRecipe
    {
        require(j.is_object() && j.contains("family") && j["family"].is_string(), "recipe needs a string 'family'");
        auto f = family_from_string(j["family"].get<string>());
        require(f.has_value(), "unknown family '" + j["family"].get<string>() + "'");
        ConstructionRecipe r;
        r.family = *f;
        if (j.contains("params")) {
            require(j["params"].is_object(), "recipe 'params' must be an object");
            r.params = j["params"];
        }
        if (j.contains("seed")) {
            require(j["seed"].is_number_unsigned() || (j["seed"].is_number_integer() && j["seed"].get<std::int64_t>() >= 0),
                "recipe 'seed' must be a non-negative integer");
            r.seed = j["seed"].get<std::uint64_t>();
        }
        require(r.seed.has_value() == is_randomized(r.family),
            is_randomized(r.family) ? "family " + ctl::to_string(r.family) + " needs a seed" : "family " + ctl::to_string(r.family) + " takes no seed");
        return r;
    }

    namespace
    {
        auto param(const json & params, const string & key) -> const json &
        {
            require(params.contains(key), "missing parameter '" + key + "'");
            return params[key];
        }

        auto size_param(const json & params, const string & key) -> size_t
        {
            const auto & v = param(params, key);
            require(v.is_number_integer() && v.get<std::int64_t>() >= 0, "parameter '" + key + "' must be a non-negative integer");
            return v.get<size_t>();
        }

        auto size_param(const json & params, const string & key, size_t fallback) -> size_t
        {
            return params.contains(key) ? size_param(params, key) : fallback;
        }

        auto rational_param(const json & params, const string & key) -> Rational
        {
            const auto & v = param(params, key);
            if (v.is_number_integer())
                return Rational(v.get<std::int64_t>());
            require(v.is_string(), "parameter '" + key + "' must be a fraction string such as \"1/10\"");
            try {
                return Rational::parse(v.get<string>());
            }
            catch (const std::exception & e) {
                throw std::invalid_argument("parameter '" + key + "': " + e.what());
            }
        }

        auto graph_from_text(const string & text, const string & key) -> Graph
        {
            if (auto g = graphs::by_name(text))
                return *g;
            try {
                return parse_graph_line(text);
            }
            catch (const std::exception & e) {
                throw std::invalid_argument("parameter '" + key + "': neither a known name nor graph6 (" + e.what() + ")");
            }
        }

        auto graph_param(const json & params, const string & key) -> Graph
        {
            const auto & v = param(params, key);
            require(v.is_string(), "parameter '" + key + "' must be a graph name or graph6 string");
            return graph_from_text(v.get<string>(), key);
        }

        auto basic_properties(const Graph & g, json & verified) -> void
        {
            verified["order"] = g.order();
            verified["size"] = g.size();
            if (g.order() > 0) {
                verified["min_degree"] = min_degree(g);
                verified["min_degree_fraction"] = rational_to_json(min_degree_fraction(g));
            }
        }

        auto h_free(const Graph & g, const Graph & h, const Deadline & deadline, json & verified, json & reported) -> void
        {
            try {
                verified["h_free"] = ! contains_subgraph(g, h, deadline).has_value();
            }
            catch (const BudgetExceeded &) {
                reported["h_free"] = "unchecked: time budget exceeded";
            }
        }

        auto bh_properties(const BorsukHajnal & bh, json & verified, json & reported) -> void
        {
            const Graph & g = bh.graph;
            verified["w_independent"] = g.is_independent(bh.w_part());
            verified["x_independent"] = g.is_independent(bh.x_part());
            bool y_ok = true;
            for (size_t i = 0; i < bh.y_sets; ++i)
                y_ok = y_ok && g.is_independent(bh.y_part(i));
            verified["y_independent"] = y_ok;
            size_t wx = 0, ux = 0;
            bh.w_part().for_each([&](size_t w) { wx += g.neighbours(static_cast<int>(w)).intersection_count(bh.x_part()); });
            bh.u_part().for_each([&](size_t u) { ux += g.neighbours(static_cast<int>(u)).intersection_count(bh.x_part()); });
            verified["wx_complete"] = wx == bh.w_count * bh.x_count;
            verified["ux_edges"] = ux;
            reported["parts"] = {{"U", bh.u_count}, {"W", bh.w_count}, {"X", bh.x_count}, {"Y_sets", bh.y_sets}};
            reported["chromatic_bound"] = "not asserted for finite samples";
        }

        auto bh_params(const json & params, std::uint64_t seed) -> BorsukHajnalParams
        {
            BorsukHajnalParams p;
            p.k = size_param(params, "k");
            p.eps = Angle{rational_param(params, "eps")};
            p.delta = Angle{rational_param(params, "delta")};
            p.w_size = size_param(params, "w_size");
            p.u_points = size_param(params, "u_points");
            p.seed = seed;
            return p;
        }
    }

    auto construct(const ConstructionRecipe & recipe, const Deadline & deadline) -> Construction
    {
        Construction out;
        const json & params = recipe.params;
        std::uint64_t seed = recipe.seed.value_or(0);
        auto & verified = out.verified;
        auto & reported = out.reported;

        switch (recipe.family) {
        case Family::zykov: {
            vector<Graph> trees;
            if (params.contains("trees")) {
                require(params["trees"].is_array(), "parameter 'trees' must be a list");
                for (const auto & t : params["trees"]) {
                    require(t.is_string(), "each tree must be a graph name or graph6 string");
                    trees.push_back(graph_from_text(t.get<string>(), "trees"));
                }
            }
            else
                trees.assign(size_param(params, "edges"), graphs::path(2));
            size_t r = size_param(params, "r"), t = size_param(params, "t");
            out.graph = zykov(trees, r, t);
            verified["order_formula"] = out.graph.order() == zykov_order(trees, r, t);
            break;
        }
        case Family::kneser: {
            size_t n = size_param(params, "n"), k = size_param(params, "k");
            out.graph = kneser(n, k);
            size_t want = binomial_capped(n - k, k);
            bool regular = true;
            for (size_t v = 0; v < out.graph.order(); ++v)
                regular = regular && out.graph.degree(static_cast<int>(v)) == want;
            verified["regular_of_degree_binomial"] = regular;
            reported["chromatic_number_by_theorem"] = n - 2 * k + 2;
            break;
        }
        case Family::hajnal: {
            size_t k = size_param(params, "k"), l = size_param(params, "l"), m = size_param(params, "m");
            out.graph = hajnal(k, l, m);
            verified["triangles"] = scan_triangles(out.graph);
            verified["order_formula"] = out.graph.order() == 3 * l + binomial_capped(2 * m + k, m);
            break;
        }
        case Family::borsuk: {
            auto s = borsuk_sample(size_param(params, "k"), Angle{rational_param(params, "eps")}, size_param(params, "points"), seed);
            out.graph = s.graph;
            out.points = s.points;
            auto og = odd_girth(out.graph);
            verified["odd_girth"] = og ? json(*og) : json("infinite");
            break;
        }
        case Family::borsuk_hajnal:
        case Family::borsuk_hajnal_r: {
            size_t r = recipe.family == Family::borsuk_hajnal ? 3 : size_param(params, "r");
            auto bh = borsuk_hajnal_r(r, bh_params(params, seed));
            out.graph = bh.graph;
            out.points = bh.u;
            out.points.insert(out.points.end(), bh.w.begin(), bh.w.end());
            bh_properties(bh, verified, reported);
            break;
        }
        case Family::erdos: {
            auto e = erdos_graph(size_param(params, "k"), size_param(params, "l"), deadline, seed);
            out.graph = e.graph;
            verified["chromatic_number_at_least"] = e.chi_at_least;
            verified["girth"] = e.girth ? json(*e.girth) : json("infinite");
            reported["source"] = e.source;
            break;
        }
        case Family::pi_witness:
        case Family::theta_witness: {
            Graph h = graph_param(params, "h");
            size_t c = size_param(params, "c");
            bool pi = recipe.family == Family::pi_witness;
            out.graph = pi ? pi_witness(h, c, deadline, seed) : theta_witness(h, c, deadline, seed);
            size_t r = chromatic_number(h, deadline);
            Rational want = pi ? Rational(static_cast<std::int64_t>(r - 2), static_cast<std::int64_t>(r - 1))
                               : Rational(static_cast<std::int64_t>(r - 3), static_cast<std::int64_t>(r - 2));
            verified["degree_formula"] = min_degree_fraction(out.graph) == want;
            verified["chromatic_number_at_least"] = c;
            h_free(out.graph, h, deadline, verified, reported);
            reported["r"] = r;
            break;
        }
        case Family::lambda_witness: {
            Graph h = graph_param(params, "h");
            LambdaWitnessParams p;
            p.k = size_param(params, "k");
            if (params.contains("nu"))
                p.nu = rational_param(params, "nu");
            p.u_points = size_param(params, "u_points", p.u_points);
            p.seed = seed;
            auto lw = lambda_witness(h, p, deadline);
            out.graph = lw.instance.graph;
            out.points = lw.instance.u;
            out.points.insert(out.points.end(), lw.instance.w.begin(), lw.instance.w.end());
            bh_properties(lw.instance, verified, reported);
            verified["degree_event"] = lw.degree_event;
            verified["meets_target"] = lw.min_degree_fraction >= lw.target;
            reported["target"] = rational_to_json(lw.target);
            reported["delta_over_pi"] = lw.parameters.delta.turns_of_pi.to_string();
            reported["eps_over_pi"] = lw.parameters.eps.turns_of_pi.to_string();
            reported["w_size"] = lw.parameters.w_size;
            reported["resamples"] = lw.resamples;
            break;
        }
        case Family::random_construction: {
            Graph f = graph_param(params, "f");
            auto rc = random_construction(size_param(params, "r"), size_param(params, "n"), rational_param(params, "p"), f, seed);
            out.graph = rc.graph;
            verified["planted_f_present"] = is_valid_embedding(rc.graph, f, Embedding{rc.planted});
            std::set<Edge> f_edges;
            for (auto [a, b] : f.edges())
                f_edges.insert(std::minmax(rc.planted[a], rc.planted[b]));
            size_t stray = 0;
            for (const auto & part : rc.parts)
                for (auto [u, v] : rc.graph.edges())
                    if (part.test(u) && part.test(v) && ! f_edges.count(std::minmax(u, v)))
                        ++stray;
            verified["intra_part_edges_outside_f"] = stray;
            verified["triangles"] = scan_triangles(rc.graph);
            break;
        }
        }
        basic_properties(out.graph, verified);
        return out;
    }
}

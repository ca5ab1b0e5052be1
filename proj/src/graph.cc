#include <ctl/graph.hh>

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace ctl
{
    namespace
    {
        auto check_order(size_t n) -> void
        {
            if (n > max_vertices)
                throw SizingError("graph on " + std::to_string(n) + " vertices exceeds the cap of " + std::to_string(max_vertices));
        }
    }

    GraphBuilder::GraphBuilder(size_t n)
    {
        check_order(n);
        _adj.assign(n, VertexSet(n));
        _labels.assign(n, string{});
    }

    auto GraphBuilder::add_edge(int u, int v) -> void
    {
        if (u == v)
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || static_cast<size_t>(u) >= _adj.size() || static_cast<size_t>(v) >= _adj.size())
            throw std::out_of_range("edge endpoint out of range");
        _adj[u].set(v);
        _adj[v].set(u);
    }

    auto GraphBuilder::remove_edge(int u, int v) -> void
    {
        _adj[u].reset(v);
        _adj[v].reset(u);
    }

    auto GraphBuilder::set_label(int v, string label) -> void
    {
        _labels[v] = std::move(label);
        _labelled = true;
    }

    auto GraphBuilder::join(const VertexSet & a, const VertexSet & b) -> void
    {
        a.for_each([&](size_t u) { _adj[u] |= b; });
        b.for_each([&](size_t v) { _adj[v] |= a; });
    }

    auto GraphBuilder::build() && -> Graph
    {
        Graph g;
        g._adj = std::move(_adj);
        g._degree.resize(g._adj.size());
        size_t twice = 0;
        for (size_t v = 0; v < g._adj.size(); ++v) {
            g._degree[v] = g._adj[v].count();
            twice += g._degree[v];
        }
        g._edge_count = twice / 2;
        if (_labelled)
            g._labels = std::move(_labels);
        return g;
    }

    Graph::Graph(size_t n) : Graph(std::move(GraphBuilder(n)).build()) {}

    Graph::Graph(size_t n, const vector<Edge> & edges)
    {
        GraphBuilder b(n);
        for (auto [u, v] : edges)
            b.add_edge(u, v);
        *this = std::move(b).build();
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> out;
        out.reserve(_edge_count);
        for (size_t u = 0; u < order(); ++u)
            _adj[u].for_each([&](size_t v) {
                if (u < v)
                    out.emplace_back(static_cast<int>(u), static_cast<int>(v));
            });
        return out;
    }

    auto Graph::label(int v) const -> const string &
    {
        static const string none;
        return _labels.empty() ? none : _labels[v];
    }

    auto Graph::all_vertices() const -> VertexSet
    {
        VertexSet s(order());
        s.set_all();
        return s;
    }

    auto Graph::induced(const VertexSet & keep) const -> Graph
    {
        auto members = keep.members();
        vector<int> index(order(), -1);
        for (size_t i = 0; i < members.size(); ++i)
            index[members[i]] = static_cast<int>(i);
        GraphBuilder b(members.size());
        for (size_t i = 0; i < members.size(); ++i) {
            _adj[members[i]].for_each([&](size_t w) {
                if (index[w] > static_cast<int>(i))
                    b.add_edge(static_cast<int>(i), index[w]);
            });
            if (has_labels())
                b.set_label(static_cast<int>(i), _labels[members[i]]);
        }
        return std::move(b).build();
    }

    auto Graph::without(const VertexSet & drop) const -> Graph
    {
        return induced(all_vertices() - drop);
    }

    auto Graph::is_independent(const VertexSet & s) const -> bool
    {
        bool ok = true;
        s.for_each([&](size_t v) { ok = ok && ! _adj[v].intersects(s); });
        return ok;
    }

    auto min_degree(const Graph & g) -> size_t
    {
        size_t best = std::numeric_limits<size_t>::max();
        for (size_t v = 0; v < g.order(); ++v)
            best = std::min(best, g.degree(static_cast<int>(v)));
        return g.order() == 0 ? 0 : best;
    }

    auto min_degree_fraction(const Graph & g) -> Rational
    {
        if (g.order() == 0)
            throw std::domain_error("minimum degree fraction of the empty graph");
        return {BigInt(min_degree(g)), BigInt(g.order())};
    }

    namespace
    {
        constexpr int unseen = -1;

        /// BFS from root; calls on_edge(u, w, dist) for each non-tree edge seen from u.
        template <typename F>
        auto bfs_non_tree_edges(const Graph & g, int root, vector<int> & dist, vector<int> & parent, F && on_edge) -> void
        {
            std::fill(dist.begin(), dist.end(), unseen);
            std::fill(parent.begin(), parent.end(), unseen);
            std::queue<int> q;
            dist[root] = 0;
            q.push(root);
            while (! q.empty()) {
                int u = q.front();
                q.pop();
                g.neighbours(u).for_each([&](size_t ws) {
                    int w = static_cast<int>(ws);
                    if (dist[w] == unseen) {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        q.push(w);
                    }
                    else if (parent[u] != w)
                        on_edge(u, w, dist);
                });
            }
        }
    }

    auto girth(const Graph & g) -> optional<size_t>
    {
        size_t n = g.order();
        size_t best = std::numeric_limits<size_t>::max();
        vector<int> dist(n), parent(n);
        for (size_t s = 0; s < n; ++s)
            bfs_non_tree_edges(g, static_cast<int>(s), dist, parent, [&](int u, int w, const vector<int> & d) {
                best = std::min(best, static_cast<size_t>(d[u] + d[w] + 1));
            });
        if (best == std::numeric_limits<size_t>::max())
            return std::nullopt;
        return best;
    }

    auto odd_girth(const Graph & g) -> optional<size_t>
    {
        size_t n = g.order();
        size_t best = std::numeric_limits<size_t>::max();
        vector<int> dist(n), parent(n);
        for (size_t s = 0; s < n; ++s)
            bfs_non_tree_edges(g, static_cast<int>(s), dist, parent, [&](int u, int w, const vector<int> & d) {
                if (d[u] == d[w])
                    best = std::min(best, static_cast<size_t>(2 * d[u] + 1));
            });
        if (best == std::numeric_limits<size_t>::max())
            return std::nullopt;
        return best;
    }

    auto is_acyclic(const Graph & g) -> bool
    {
        return forest_decomposition(g).has_value();
    }

    auto is_connected(const Graph & g) -> bool
    {
        if (g.order() == 0)
            return true;
        VertexSet seen(g.order()), frontier(g.order());
        seen.set(0);
        frontier.set(0);
        while (frontier.any()) {
            VertexSet next(g.order());
            frontier.for_each([&](size_t v) { next |= g.neighbours(static_cast<int>(v)); });
            next.subtract(seen);
            seen |= next;
            frontier = std::move(next);
        }
        return seen.count() == g.order();
    }

    auto is_bipartite(const Graph & g) -> bool
    {
        return ! odd_girth(g).has_value();
    }

    auto forest_decomposition(const Graph & g) -> optional<ForestDecomposition>
    {
        return forest_decomposition(g, g.all_vertices());
    }

    auto forest_decomposition(const Graph & g, const VertexSet & within) -> optional<ForestDecomposition>
    {
        ForestDecomposition out;
        vector<int> side(g.order(), unseen);
        for (size_t root = within.first(); root < g.order(); root = within.find_next(root + 1)) {
            if (side[root] != unseen)
                continue;
            Tree t;
            size_t degree_sum = 0;
            std::queue<int> q;
            side[root] = 0;
            q.push(static_cast<int>(root));
            while (! q.empty()) {
                int u = q.front();
                q.pop();
                t.vertices.push_back(u);
                (side[u] == 0 ? t.side_a : t.side_b).push_back(u);
                VertexSet nbrs = g.neighbours(u) & within;
                degree_sum += nbrs.count();
                nbrs.for_each([&](size_t w) {
                    if (side[w] == unseen) {
                        side[w] = 1 - side[u];
                        q.push(static_cast<int>(w));
                    }
                    if (static_cast<size_t>(u) < w)
                        t.edges.emplace_back(u, static_cast<int>(w));
                });
            }
            if (degree_sum / 2 != t.vertices.size() - 1)
                return std::nullopt;
            std::sort(t.vertices.begin(), t.vertices.end());
            std::sort(t.side_a.begin(), t.side_a.end());
            std::sort(t.side_b.begin(), t.side_b.end());
            std::sort(t.edges.begin(), t.edges.end());
            out.trees.push_back(std::move(t));
        }
        return out;
    }

    auto degeneracy(const Graph & g) -> Degeneracy
    {
        size_t n = g.order();
        vector<size_t> deg(n);
        vector<bool> removed(n, false);
        for (size_t v = 0; v < n; ++v)
            deg[v] = g.degree(static_cast<int>(v));

        Degeneracy out;
        vector<int> peel;
        peel.reserve(n);
        for (size_t step = 0; step < n; ++step) {
            size_t best = n;
            for (size_t v = 0; v < n; ++v)
                if (! removed[v] && (best == n || deg[v] < deg[best]))
                    best = v;
            out.value = std::max(out.value, deg[best]);
            removed[best] = true;
            peel.push_back(static_cast<int>(best));
            g.neighbours(static_cast<int>(best)).for_each([&](size_t w) {
                if (! removed[w])
                    --deg[w];
            });
        }
        out.order.assign(peel.rbegin(), peel.rend());
        return out;
    }

    auto blow_up(const Graph & g, const vector<size_t> & sizes) -> Graph
    {
        if (sizes.size() != g.order())
            throw std::invalid_argument("blow_up needs one size per vertex");
        vector<size_t> first(g.order() + 1, 0);
        for (size_t v = 0; v < g.order(); ++v)
            first[v + 1] = first[v] + sizes[v];
        if (first.back() > max_vertices)
            throw SizingError("blow-up would have " + std::to_string(first.back()) + " vertices");

        GraphBuilder b(first.back());
        for (size_t v = 0; v < g.order(); ++v)
            for (size_t c = 0; c < sizes[v]; ++c) {
                string origin = g.has_labels() ? g.label(static_cast<int>(v)) : std::to_string(v);
                b.set_label(static_cast<int>(first[v] + c), origin + "/" + std::to_string(c));
            }
        for (auto [u, v] : g.edges())
            for (size_t i = first[u]; i < first[u + 1]; ++i)
                for (size_t j = first[v]; j < first[v + 1]; ++j)
                    b.add_edge(static_cast<int>(i), static_cast<int>(j));
        return std::move(b).build();
    }

    namespace
    {
        auto union_of(const Graph & g, const Graph & h, bool cross) -> Graph
        {
            size_t n = g.order(), m = h.order();
            GraphBuilder b(n + m);
            for (auto [u, v] : g.edges())
                b.add_edge(u, v);
            for (auto [u, v] : h.edges())
                b.add_edge(static_cast<int>(n) + u, static_cast<int>(n) + v);
            if (cross)
                for (size_t u = 0; u < n; ++u)
                    for (size_t v = 0; v < m; ++v)
                        b.add_edge(static_cast<int>(u), static_cast<int>(n + v));
            if (g.has_labels() || h.has_labels()) {
                for (size_t u = 0; u < n; ++u)
                    b.set_label(static_cast<int>(u), g.label(static_cast<int>(u)));
                for (size_t v = 0; v < m; ++v)
                    b.set_label(static_cast<int>(n + v), h.label(static_cast<int>(v)));
            }
            return std::move(b).build();
        }
    }

    auto join(const Graph & g, const Graph & h) -> Graph
    {
        return union_of(g, h, true);
    }

    auto disjoint_union(const Graph & g, const Graph & h) -> Graph
    {
        return union_of(g, h, false);
    }

    auto complete_multipartite(const vector<size_t> & sizes) -> Graph
    {
        if (sizes.empty())
            throw std::invalid_argument("complete_multipartite needs at least one part");
        size_t n = 0;
        for (auto s : sizes)
            n += s;
        check_order(n);
        vector<int> part;
        for (size_t p = 0; p < sizes.size(); ++p)
            part.insert(part.end(), sizes[p], static_cast<int>(p));
        GraphBuilder b(n);
        for (size_t u = 0; u < n; ++u)
            for (size_t v = u + 1; v < n; ++v)
                if (part[u] != part[v])
                    b.add_edge(static_cast<int>(u), static_cast<int>(v));
        return std::move(b).build();
    }

    auto to_dot(const Graph & g) -> string
    {
        std::ostringstream out;
        out << "graph G {\n";
        for (size_t v = 0; v < g.order(); ++v) {
            out << "  " << v;
            if (g.has_labels() && ! g.label(static_cast<int>(v)).empty())
                out << " [label=\"" << g.label(static_cast<int>(v)) << "\"]";
            out << ";\n";
        }
        for (auto [u, v] : g.edges())
            out << "  " << u << " -- " << v << ";\n";
        out << "}\n";
        return out.str();
    }
}

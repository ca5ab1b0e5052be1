#include <ctl/canonical.hh>
#include <ctl/graph6.hh>

#include <algorithm>
#include <map>
#include <optional>

using std::size_t;
using std::string;
using std::vector;

namespace ctl
{
    namespace
    {
        /// Ordered partition: cell[v] is the index of v's cell, cells numbered 0..cells-1.
        struct Partition
        {
            vector<int> cell;
            int cells = 0;
        };

        /// Splits cells by neighbour counts into every cell until stable. Splitting keeps the
        /// relative order of existing cells, so the result is an isomorphism-invariant refinement.
        auto refine(const Graph & g, Partition p) -> Partition
        {
            size_t n = g.order();
            while (true) {
                vector<vector<int>> signature(n);
                for (size_t v = 0; v < n; ++v) {
                    auto & s = signature[v];
                    s.assign(static_cast<size_t>(p.cells) + 1, 0);
                    s[0] = p.cell[v];
                    g.neighbours(static_cast<int>(v)).for_each([&](size_t w) { ++s[1 + p.cell[w]]; });
                }
                vector<int> byrank(n);
                for (size_t v = 0; v < n; ++v)
                    byrank[v] = static_cast<int>(v);
                std::sort(byrank.begin(), byrank.end(), [&](int a, int b) { return signature[a] < signature[b]; });
                Partition next;
                next.cell.assign(n, 0);
                for (size_t i = 0; i < n; ++i) {
                    if (i > 0 && signature[byrank[i]] != signature[byrank[i - 1]])
                        ++next.cells;
                    next.cell[byrank[i]] = next.cells;
                }
                next.cells = n == 0 ? 0 : next.cells + 1;
                if (next.cells == p.cells)
                    return next;
                p = std::move(next);
            }
        }

        auto individualise(Partition p, int v) -> Partition
        {
            int c = p.cell[v];
            for (auto & x : p.cell)
                if (x > c)
                    ++x;
            for (size_t u = 0; u < p.cell.size(); ++u)
                if (p.cell[u] == c && static_cast<int>(u) != v)
                    p.cell[u] = c + 1;
            ++p.cells;
            return p;
        }

        struct Search
        {
            const Graph & g;
            const Deadline & deadline;
            std::optional<string> best;
            vector<int> best_order;

            auto leaf(const Partition & p) -> void
            {
                vector<int> order(g.order());
                for (size_t v = 0; v < g.order(); ++v)
                    order[p.cell[v]] = static_cast<int>(v);
                string form = emit_graph6(relabel(g, order));
                if (! best || form < *best) {
                    best = std::move(form);
                    best_order = std::move(order);
                }
            }

            auto twins(int u, int v) const -> bool
            {
                VertexSet a = g.neighbours(u), b = g.neighbours(v);
                a.reset(v);
                b.reset(u);
                return a == b;
            }

            auto run(const Partition & p) -> void
            {
                deadline.tick("canonical labelling");
                if (p.cells == static_cast<int>(g.order())) {
                    leaf(p);
                    return;
                }
                // target: first non-singleton cell
                vector<int> size(p.cells, 0);
                for (int c : p.cell)
                    ++size[c];
                int target = 0;
                while (size[target] == 1)
                    ++target;

                vector<int> tried;
                for (size_t v = 0; v < g.order(); ++v) {
                    if (p.cell[v] != target)
                        continue;
                    // swapping twins is an automorphism fixing p, so their subtrees agree
                    bool twin = std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, static_cast<int>(v)); });
                    if (twin)
                        continue;
                    tried.push_back(static_cast<int>(v));
                    run(refine(g, individualise(p, static_cast<int>(v))));
                }
            }
        };
    }

    auto relabel(const Graph & g, const vector<int> & order) -> Graph
    {
        vector<int> position(g.order());
        for (size_t i = 0; i < order.size(); ++i)
            position[order[i]] = static_cast<int>(i);
        GraphBuilder b(g.order());
        for (auto [u, v] : g.edges())
            b.add_edge(position[u], position[v]);
        if (g.has_labels())
            for (size_t i = 0; i < order.size(); ++i)
                b.set_label(static_cast<int>(i), g.label(order[i]));
        return std::move(b).build();
    }

    auto canonical_order(const Graph & g, const Deadline & deadline) -> vector<int>
    {
        if (g.order() == 0)
            return {};
        Deadline local = deadline;
        Search s{g, local, std::nullopt, {}};
        Partition unit;
        unit.cell.assign(g.order(), 0);
        unit.cells = 1;
        s.run(refine(g, unit));
        return s.best_order;
    }

    auto canonical_form(const Graph & g, const Deadline & deadline) -> string
    {
        return emit_graph6(relabel(g, canonical_order(g, deadline)));
    }

    auto isomorphic(const Graph & g, const Graph & h) -> bool
    {
        if (g.order() != h.order() || g.size() != h.size())
            return false;
        return canonical_form(g) == canonical_form(h);
    }
}

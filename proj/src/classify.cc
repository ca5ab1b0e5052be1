#include <ctl/canonical.hh>
#include <ctl/classify.hh>
#include <ctl/graph6.hh>

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace ctl
{
    auto to_string(ThresholdClass c) -> string
    {
        switch (c) {
        case ThresholdClass::bipartite: return "BIPARTITE";
        case ThresholdClass::theta: return "THETA";
        case ThresholdClass::lambda: return "LAMBDA";
        case ThresholdClass::pi: return "PI";
        }
        return "?";
    }

    auto threshold_class_from_string(std::string_view s) -> optional<ThresholdClass>
    {
        for (auto c : {ThresholdClass::bipartite, ThresholdClass::theta, ThresholdClass::lambda, ThresholdClass::pi})
            if (to_string(c) == s)
                return c;
        return std::nullopt;
    }

    auto theta(size_t r) -> Rational { return {BigInt(r) - 3, BigInt(r) - 2}; }
    auto lambda(size_t r) -> Rational { return {2 * BigInt(r) - 5, 2 * BigInt(r) - 3}; }
    auto pi(size_t r) -> Rational { return {BigInt(r) - 2, BigInt(r) - 1}; }

    auto threshold_value(ThresholdClass c, size_t r) -> Rational
    {
        switch (c) {
        case ThresholdClass::bipartite: return Rational(0);
        case ThresholdClass::theta: return theta(r);
        case ThresholdClass::lambda: return lambda(r);
        case ThresholdClass::pi: return pi(r);
        }
        throw std::logic_error("unknown threshold class");
    }

    namespace
    {
        auto require_chi_at_least_three(size_t chi, const char * what) -> void
        {
            if (chi < 3)
                throw std::invalid_argument(string(what) + " needs a graph with chromatic number at least 3");
        }

        /// Union-find over forest vertices that tracks each vertex's side within its tree and
        /// supports undo. No path compression, so every union can be rolled back exactly.
        class ParityForest
        {
        public:
            explicit ParityForest(size_t n) : _parent(n), _parity(n, 0), _rank(n, 0)
            {
                for (size_t v = 0; v < n; ++v)
                    _parent[v] = static_cast<int>(v);
            }

            auto find(int v) const -> std::pair<int, int>
            {
                int parity = 0;
                while (_parent[v] != v) {
                    parity ^= _parity[v];
                    v = _parent[v];
                }
                return {v, parity};
            }

            /// Joins the trees of adjacent vertices a and b.
            auto unite(int a, int b) -> void
            {
                auto [ra, pa] = find(a);
                auto [rb, pb] = find(b);
                if (_rank[ra] > _rank[rb]) {
                    std::swap(ra, rb);
                    std::swap(pa, pb);
                }
                _parent[ra] = rb;
                _parity[ra] = pa ^ pb ^ 1;
                bool bumped = _rank[ra] == _rank[rb];
                if (bumped)
                    ++_rank[rb];
                _history.push_back({ra, rb, bumped});
            }

            auto mark() const -> size_t { return _history.size(); }

            auto rollback(size_t to) -> void
            {
                while (_history.size() > to) {
                    auto [ra, rb, bumped] = _history.back();
                    _history.pop_back();
                    _parent[ra] = ra;
                    _parity[ra] = 0;
                    if (bumped)
                        --_rank[rb];
                }
            }

        private:
            struct Step
            {
                int child, root;
                bool bumped;
            };
            vector<int> _parent;
            vector<int> _parity;
            vector<int> _rank;
            vector<Step> _history;
        };

        /// Assigns every vertex one of: forest, S, or one of r-3 removed independent sets,
        /// pruning on independence, forest cycles, and S vertices seeing both sides of a tree.
        class NearAcyclicSearch
        {
        public:
            static constexpr int unassigned = -1, forest = 0, in_s = 1;

            NearAcyclicSearch(const Graph & h, size_t removed, const Deadline & deadline) :
                _h(h),
                _removed(removed),
                _deadline(deadline),
                _label(h.order(), unassigned),
                _sets(removed + 2, VertexSet(h.order())),
                _trees(h.order())
            {
                build_order();
            }

            auto run() -> optional<NearAcyclicWitness>
            {
                if (! search(0, 0))
                    return std::nullopt;
                NearAcyclicWitness w;
                for (size_t i = 0; i < _removed; ++i)
                    w.removed_sets.push_back(_sets[2 + i].members());
                w.s_set = _sets[in_s].members();
                w.forest = *forest_decomposition(_h, _sets[forest]);
                return w;
            }

        private:
            auto build_order() -> void
            {
                size_t n = _h.order();
                vector<bool> seen(n, false);
                while (_order.size() < n) {
                    int root = -1;
                    for (size_t v = 0; v < n; ++v)
                        if (! seen[v] && (root == -1 || _h.degree(static_cast<int>(v)) > _h.degree(root)))
                            root = static_cast<int>(v);
                    std::queue<int> q;
                    q.push(root);
                    seen[root] = true;
                    while (! q.empty()) {
                        int u = q.front();
                        q.pop();
                        _order.push_back(u);
                        _h.neighbours(u).for_each([&](size_t w) {
                            if (! seen[w]) {
                                seen[w] = true;
                                q.push(static_cast<int>(w));
                            }
                        });
                    }
                }
            }

            /// No S vertex has forest neighbours on both sides of one tree.
            auto s_vertex_ok(int s) const -> bool
            {
                vector<std::pair<int, int>> sides;
                bool ok = true;
                (_h.neighbours(s) & _sets[forest]).for_each([&](size_t w) {
                    if (! ok)
                        return;
                    auto rp = _trees.find(static_cast<int>(w));
                    for (auto & seen : sides)
                        if (seen.first == rp.first && seen.second != rp.second)
                            ok = false;
                    sides.push_back(rp);
                });
                return ok;
            }

            auto try_forest(int v) -> bool
            {
                bool ok = true;
                (_h.neighbours(v) & _sets[forest]).for_each([&](size_t w) {
                    if (! ok)
                        return;
                    if (_trees.find(v).first == _trees.find(static_cast<int>(w)).first)
                        ok = false;
                    else
                        _trees.unite(v, static_cast<int>(w));
                });
                if (! ok)
                    return false;
                _sets[forest].set(v);
                // merging trees can create a conflict for any S vertex, not only v's neighbours
                bool classes_ok = true;
                _sets[in_s].for_each([&](size_t s) {
                    if (classes_ok)
                        classes_ok = s_vertex_ok(static_cast<int>(s));
                });
                if (! classes_ok)
                    _sets[forest].reset(v);
                return classes_ok;
            }

            auto search(size_t depth, size_t removed_used) -> bool
            {
                if (depth == _order.size())
                    return true;
                _deadline.tick("near-acyclic search");
                int v = _order[depth];
                const auto & nv = _h.neighbours(v);

                size_t mark = _trees.mark();
                if (try_forest(v)) {
                    _label[v] = forest;
                    if (search(depth + 1, removed_used))
                        return true;
                    _sets[forest].reset(v);
                    _label[v] = unassigned;
                }
                _trees.rollback(mark);

                if (! nv.intersects(_sets[in_s])) {
                    _sets[in_s].set(v);
                    _label[v] = in_s;
                    if (s_vertex_ok(v) && search(depth + 1, removed_used))
                        return true;
                    _sets[in_s].reset(v);
                    _label[v] = unassigned;
                }

                size_t limit = std::min(_removed, removed_used + 1);
                for (size_t i = 0; i < limit; ++i) {
                    auto & u = _sets[2 + i];
                    if (nv.intersects(u))
                        continue;
                    u.set(v);
                    _label[v] = 2 + static_cast<int>(i);
                    if (search(depth + 1, std::max(removed_used, i + 1)))
                        return true;
                    u.reset(v);
                    _label[v] = unassigned;
                }
                return false;
            }

            const Graph & _h;
            size_t _removed;
            Deadline _deadline;
            vector<int> _order;
            vector<int> _label;
            vector<VertexSet> _sets;
            ParityForest _trees;
        };
    }

    auto find_r_near_acyclic_witness(const Graph & h, size_t chi, const Deadline & deadline) -> optional<NearAcyclicWitness>
    {
        if (chi < 3)
            return std::nullopt;
        auto w = NearAcyclicSearch(h, chi - 3, deadline).run();
        if (w) {
            VertexSet removed(h.order());
            for (const auto & u : w->removed_sets)
                for (int v : u)
                    removed.set(v);
            if (chromatic_number(h.without(removed), deadline) != 3)
                throw std::logic_error("near-acyclic remainder is not 3-chromatic; chromatic number was wrong");
        }
        return w;
    }

    auto tree_class_condition(const Graph & h, const VertexSet & s) -> optional<bool>
    {
        if (! h.is_independent(s))
            return std::nullopt;
        auto forest = forest_decomposition(h, h.all_vertices() - s);
        if (! forest)
            return std::nullopt;
        for (const auto & t : forest->trees) {
            VertexSet a = VertexSet::from(h.order(), t.side_a), b = VertexSet::from(h.order(), t.side_b);
            bool clash = false;
            s.for_each([&](size_t x) {
                const auto & nx = h.neighbours(static_cast<int>(x));
                clash = clash || (nx.intersects(a) && nx.intersects(b));
            });
            if (clash)
                return false;
        }
        return true;
    }

    auto is_near_acyclic(const Graph & h, const Deadline & deadline) -> optional<NearAcyclicWitness>
    {
        if (chromatic_number(h, deadline) != 3)
            return std::nullopt;
        return find_r_near_acyclic_witness(h, 3, deadline);
    }

    auto is_r_near_acyclic(const Graph & h, const Deadline & deadline) -> optional<NearAcyclicWitness>
    {
        size_t chi = chromatic_number(h, deadline);
        require_chi_at_least_three(chi, "is_r_near_acyclic");
        return find_r_near_acyclic_witness(h, chi, deadline);
    }

    auto forest_witness_from(const Graph & h, const NearAcyclicWitness & w) -> ForestWitness
    {
        Coloring c;
        for (const auto & u : w.removed_sets)
            c.classes.push_back(u);
        c.classes.push_back(w.s_set);
        vector<int> a, b;
        for (const auto & t : w.forest.trees) {
            a.insert(a.end(), t.side_a.begin(), t.side_a.end());
            b.insert(b.end(), t.side_b.begin(), t.side_b.end());
        }
        if (a.empty() || b.empty())
            throw std::logic_error("near-acyclic witness has an edgeless forest; the graph is not r-chromatic");
        c.classes.push_back(a);
        c.classes.push_back(b);
        c.canonicalise();
        auto colour = c.colour_of(h.order());
        ForestWitness out;
        out.pair = std::minmax(colour[a.front()], colour[b.front()]);
        out.coloring = std::move(c);
        return out;
    }

    namespace
    {
        template <typename F>
        auto for_each_class_pair(const Graph & h, size_t chi, const Deadline & deadline, F && f) -> void
        {
            auto cursor = color_class_partitions(h, chi, deadline);
            while (auto c = cursor.next()) {
                vector<VertexSet> sets;
                for (const auto & cls : c->classes)
                    sets.push_back(VertexSet::from(h.order(), cls));
                for (size_t i = 0; i < sets.size(); ++i)
                    for (size_t j = i + 1; j < sets.size(); ++j)
                        if (! f(*c, static_cast<int>(i), static_cast<int>(j), sets[i] | sets[j]))
                            return;
            }
        }
    }

    auto decomposition_family(const Graph & h, const Deadline & deadline) -> vector<Graph>
    {
        size_t chi = chromatic_number(h, deadline);
        require_chi_at_least_three(chi, "decomposition_family");
        std::set<string> forms;
        for_each_class_pair(h, chi, deadline, [&](const Coloring &, int, int, const VertexSet & both) {
            forms.insert(canonical_form(h.induced(both), deadline));
            return true;
        });
        vector<Graph> out;
        for (const auto & f : forms)
            out.push_back(parse_graph6(f));
        return out;
    }

    namespace
    {
        auto forest_in_decomposition(const Graph & h, size_t chi, const Deadline & deadline) -> optional<ForestWitness>
        {
            optional<ForestWitness> found;
            for_each_class_pair(h, chi, deadline, [&](const Coloring & c, int i, int j, const VertexSet & both) {
                if (forest_decomposition(h, both)) {
                    found = ForestWitness{c, {i, j}};
                    return false;
                }
                return true;
            });
            return found;
        }
    }

    auto has_forest_in_decomposition(const Graph & h, const Deadline & deadline) -> optional<ForestWitness>
    {
        size_t chi = chromatic_number(h, deadline);
        require_chi_at_least_three(chi, "has_forest_in_decomposition");
        return forest_in_decomposition(h, chi, deadline);
    }

    auto chromatic_threshold(const Graph & h, const Deadline & deadline) -> ThresholdReport
    {
        if (h.order() == 0)
            throw std::invalid_argument("chromatic_threshold needs at least one vertex");

        auto stage = [&](const char * name, auto && body) {
            try {
                return body();
            }
            catch (const BudgetExceeded & e) {
                throw BudgetExceeded(string(name) + " (" + e.stage() + ")");
            }
        };

        ThresholdReport report;
        report.chi = stage("chromatic number", [&] { return chromatic_number(h, deadline); });
        if (report.chi <= 2) {
            report.class_tag = ThresholdClass::bipartite;
            report.threshold = Rational(0);
            return report;
        }

        report.near_acyclic_witness = stage("r-near-acyclicity", [&] { return find_r_near_acyclic_witness(h, report.chi, deadline); });
        if (report.near_acyclic_witness) {
            report.class_tag = ThresholdClass::theta;
            report.forest_witness = forest_witness_from(h, *report.near_acyclic_witness);
        }
        else {
            report.forest_witness = stage("decomposition family", [&] { return forest_in_decomposition(h, report.chi, deadline); });
            report.class_tag = report.forest_witness ? ThresholdClass::lambda : ThresholdClass::pi;
        }
        report.threshold = threshold_value(report.class_tag, report.chi);
        return report;
    }
}

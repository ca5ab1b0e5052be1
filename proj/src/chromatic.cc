#include <ctl/chromatic.hh>

#include <algorithm>
#include <functional>

using std::optional;
using std::size_t;
using std::vector;

namespace ctl
{
    auto Coloring::canonicalise() -> void
    {
        for (auto & c : classes)
            std::sort(c.begin(), c.end());
        classes.erase(std::remove_if(classes.begin(), classes.end(), [](const auto & c) { return c.empty(); }), classes.end());
        std::sort(classes.begin(), classes.end(), [](const auto & a, const auto & b) { return a.front() < b.front(); });
    }

    auto Coloring::colour_of(size_t n) const -> vector<int>
    {
        vector<int> out(n, -1);
        for (size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c])
                out[v] = static_cast<int>(c);
        return out;
    }

    auto is_valid_coloring(const Graph & g, const Coloring & c) -> bool
    {
        vector<int> seen(g.order(), 0);
        int previous_front = -1;
        for (const auto & cls : c.classes) {
            if (cls.empty() || cls.front() <= previous_front || ! std::is_sorted(cls.begin(), cls.end()))
                return false;
            previous_front = cls.front();
            VertexSet s(g.order());
            for (int v : cls) {
                if (v < 0 || static_cast<size_t>(v) >= g.order() || seen[v]++)
                    return false;
                s.set(v);
            }
            if (! g.is_independent(s))
                return false;
        }
        return std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; });
    }

    namespace
    {
        auto from_colours(const vector<int> & colour, size_t k) -> Coloring
        {
            Coloring c;
            c.classes.resize(k);
            for (size_t v = 0; v < colour.size(); ++v)
                c.classes[colour[v]].push_back(static_cast<int>(v));
            c.canonicalise();
            return c;
        }

        /// Saturation bookkeeping shared by greedy and exact DSATUR.
        class Dsatur
        {
        public:
            Dsatur(const Graph & g, size_t k) :
                _g(g), _k(k), _colour(g.order(), -1), _forbid(g.order() * k, 0), _sat(g.order(), 0)
            {
            }

            auto colour() const -> const vector<int> & { return _colour; }

            /// Uncoloured vertex of maximum saturation, ties by degree then index; -1 if none.
            auto pick() const -> int
            {
                int best = -1;
                for (size_t v = 0; v < _g.order(); ++v) {
                    if (_colour[v] != -1)
                        continue;
                    if (best == -1 || _sat[v] > _sat[best] || (_sat[v] == _sat[best] && _g.degree(static_cast<int>(v)) > _g.degree(best)))
                        best = static_cast<int>(v);
                }
                return best;
            }

            auto allowed(int v, size_t c) const -> bool { return _forbid[v * _k + c] == 0; }

            /// Colours v with c; returns false if some uncoloured neighbour is left with no colour.
            auto assign(int v, size_t c) -> bool
            {
                _colour[v] = static_cast<int>(c);
                bool ok = true;
                _g.neighbours(v).for_each([&](size_t w) {
                    if (_forbid[w * _k + c]++ == 0)
                        if (++_sat[w] == _k && _colour[w] == -1)
                            ok = false;
                });
                return ok;
            }

            auto unassign(int v) -> void
            {
                size_t c = static_cast<size_t>(_colour[v]);
                _colour[v] = -1;
                _g.neighbours(v).for_each([&](size_t w) {
                    if (--_forbid[w * _k + c] == 0)
                        --_sat[w];
                });
            }

        private:
            const Graph & _g;
            size_t _k;
            vector<int> _colour;
            vector<int> _forbid;
            vector<size_t> _sat;
        };
    }

    auto greedy_coloring(const Graph & g) -> Coloring
    {
        size_t n = g.order();
        Dsatur d(g, std::max<size_t>(n, 1));
        size_t used = 0;
        for (int v = d.pick(); v != -1; v = d.pick()) {
            size_t c = 0;
            while (! d.allowed(v, c))
                ++c;
            d.assign(v, c);
            used = std::max(used, c + 1);
        }
        return from_colours(d.colour(), used);
    }

    auto clique_lower_bound(const Graph & g, const Deadline & deadline) -> size_t
    {
        constexpr size_t node_cap = 200000;
        size_t best = g.order() > 0 ? 1 : 0, nodes = 0;
        Deadline local = deadline;

        std::function<void(size_t, VertexSet, VertexSet)> expand = [&](size_t depth, VertexSet p, VertexSet x) {
            if (++nodes > node_cap)
                return;
            local.tick("clique bound");
            if (p.empty()) {
                best = std::max(best, depth);
                return;
            }
            if (depth + p.count() <= best)
                return;
            // pivot: vertex of p ∪ x with most neighbours in p
            VertexSet px = p | x;
            size_t pivot = px.first(), pivot_hits = 0;
            px.for_each([&](size_t u) {
                size_t hits = g.neighbours(static_cast<int>(u)).intersection_count(p);
                if (hits > pivot_hits) {
                    pivot = u;
                    pivot_hits = hits;
                }
            });
            VertexSet candidates = p - g.neighbours(static_cast<int>(pivot));
            candidates.for_each([&](size_t v) {
                const auto & nv = g.neighbours(static_cast<int>(v));
                expand(depth + 1, p & nv, x & nv);
                p.reset(v);
                x.set(v);
            });
        };

        if (g.order() > 0)
            expand(0, g.all_vertices(), VertexSet(g.order()));
        return best;
    }

    auto is_k_colorable(const Graph & g, size_t k, const Deadline & deadline) -> optional<Coloring>
    {
        size_t n = g.order();
        if (n == 0)
            return Coloring{};
        if (k == 0)
            return std::nullopt;
        if (k >= n) {
            Coloring c;
            for (size_t v = 0; v < n; ++v)
                c.classes.push_back({static_cast<int>(v)});
            return c;
        }

        Deadline local = deadline;
        Dsatur d(g, k);
        size_t coloured = 0;

        std::function<bool(size_t)> search = [&](size_t used) -> bool {
            if (coloured == n)
                return true;
            local.tick("k-colourability");
            int v = d.pick();
            size_t limit = std::min(k, used + 1);
            for (size_t c = 0; c < limit; ++c) {
                if (! d.allowed(v, c))
                    continue;
                bool ok = d.assign(v, c);
                ++coloured;
                if (ok && search(std::max(used, c + 1)))
                    return true;
                --coloured;
                d.unassign(v);
            }
            return false;
        };

        if (! search(0))
            return std::nullopt;
        return from_colours(d.colour(), k);
    }

    auto chromatic_number(const Graph & g, const Deadline & deadline) -> size_t
    {
        if (g.order() == 0)
            return 0;
        size_t upper = greedy_coloring(g).colours();
        size_t lower = clique_lower_bound(g, deadline);
        for (size_t k = lower; k < upper; ++k)
            if (is_k_colorable(g, k, deadline))
                return k;
        return upper;
    }

    struct PartitionCursor::State
    {
        Graph g;
        size_t k;
        Deadline deadline;
        size_t n;
        vector<VertexSet> classes;
        vector<int> assigned;
        vector<size_t> next_choice;
        size_t used = 0;
        size_t pos = 0;
        bool started = false;
        bool done = false;

        auto unassign(size_t v) -> void
        {
            int c = assigned[v];
            classes[c].reset(v);
            assigned[v] = -1;
            if (static_cast<size_t>(c) + 1 == used && classes[c].empty())
                --used;
        }

        /// Every vertex after v still has somewhere to go.
        auto forward_ok(size_t v) const -> bool
        {
            if (used < k)
                return true;
            for (size_t u = v + 1; u < n; ++u) {
                const auto & nu = g.neighbours(static_cast<int>(u));
                bool any = false;
                for (size_t c = 0; c < used && ! any; ++c)
                    any = ! classes[c].intersects(nu);
                if (! any)
                    return false;
            }
            return true;
        }
    };

    PartitionCursor::PartitionCursor(const Graph & g, size_t k, Deadline deadline) :
        _state(std::make_unique<State>(State{g, k, deadline, g.order(), vector<VertexSet>(k, VertexSet(g.order())),
            vector<int>(g.order(), -1), vector<size_t>(g.order() + 1, 0)}))
    {
    }

    PartitionCursor::~PartitionCursor() = default;
    PartitionCursor::PartitionCursor(PartitionCursor &&) noexcept = default;
    auto PartitionCursor::operator=(PartitionCursor &&) noexcept -> PartitionCursor & = default;

    auto PartitionCursor::next() -> optional<Coloring>
    {
        auto & s = *_state;
        if (s.done)
            return std::nullopt;
        if (s.n == 0 || s.k == 0 || s.k > s.n) {
            s.done = true;
            if (s.n == 0 && s.k == 0)
                return Coloring{};
            return std::nullopt;
        }

        if (s.started) {
            // resume by backtracking from the last emitted leaf
            s.pos = s.n - 1;
            s.unassign(s.pos);
        }
        s.started = true;

        while (true) {
            s.deadline.tick("colour-class enumeration");
            if (s.pos == s.n) {
                Coloring c;
                for (size_t i = 0; i < s.k; ++i)
                    c.classes.push_back(s.classes[i].members());
                return c;
            }

            bool placed = false;
            size_t v = s.pos;
            size_t limit = std::min(s.used + 1, s.k);
            for (size_t c = s.next_choice[v]; c < limit; ++c) {
                if (c < s.used && s.classes[c].intersects(s.g.neighbours(static_cast<int>(v))))
                    continue;
                size_t used_after = std::max(s.used, c + 1);
                if (s.k - used_after > s.n - v - 1)
                    continue;
                s.classes[c].set(v);
                s.assigned[v] = static_cast<int>(c);
                size_t saved_used = s.used;
                s.used = used_after;
                if (! s.forward_ok(v)) {
                    s.classes[c].reset(v);
                    s.assigned[v] = -1;
                    s.used = saved_used;
                    continue;
                }
                s.next_choice[v] = c + 1;
                s.next_choice[v + 1] = 0;
                ++s.pos;
                placed = true;
                break;
            }
            if (placed)
                continue;

            s.next_choice[v] = 0;
            if (v == 0) {
                s.done = true;
                return std::nullopt;
            }
            s.pos = v - 1;
            s.unassign(s.pos);
        }
    }

    auto color_class_partitions(const Graph & g, size_t k, Deadline deadline) -> PartitionCursor
    {
        return PartitionCursor(g, k, deadline);
    }
}

#include <ctl/named_graphs.hh>

#include <charconv>
#include <vector>

using std::size_t;
using std::string_view;
using std::vector;

namespace ctl::graphs
{
    auto empty(size_t n) -> Graph
    {
        return Graph(n);
    }

    auto complete(size_t n) -> Graph
    {
        return complete_multipartite(vector<size_t>(n, 1));
    }

    auto cycle(size_t n) -> Graph
    {
        if (n < 3)
            throw std::invalid_argument("a cycle needs at least 3 vertices");
        vector<Edge> e;
        for (size_t i = 0; i < n; ++i)
            e.emplace_back(static_cast<int>(i), static_cast<int>((i + 1) % n));
        return Graph(n, e);
    }

    auto path(size_t n) -> Graph
    {
        vector<Edge> e;
        for (size_t i = 0; i + 1 < n; ++i)
            e.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
        return Graph(n, e);
    }

    auto star(size_t leaves) -> Graph
    {
        vector<Edge> e;
        for (size_t i = 1; i <= leaves; ++i)
            e.emplace_back(0, static_cast<int>(i));
        return Graph(leaves + 1, e);
    }

    auto complete_bipartite(size_t a, size_t b) -> Graph
    {
        return complete_multipartite({a, b});
    }

    auto petersen() -> Graph
    {
        vector<Edge> e;
        for (int i = 0; i < 5; ++i) {
            e.emplace_back(i, (i + 1) % 5);
            e.emplace_back(5 + i, 5 + (i + 2) % 5);
            e.emplace_back(i, 5 + i);
        }
        return Graph(10, e);
    }

    auto octahedron() -> Graph
    {
        return complete_multipartite({2, 2, 2});
    }

    auto dodecahedron() -> Graph
    {
        // LCF notation [10, 7, 4, -4, -7, 10, -4, 7, -7, 4]^2
        const int lcf[] = {10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
        constexpr int n = 20;
        GraphBuilder b(n);
        for (int i = 0; i < n; ++i) {
            b.add_edge(i, (i + 1) % n);
            b.add_edge(i, ((i + lcf[i % 10]) % n + n) % n);
        }
        return std::move(b).build();
    }

    auto icosahedron() -> Graph
    {
        // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom
        GraphBuilder b(12);
        for (int i = 0; i < 5; ++i) {
            int up = 1 + i, up_next = 1 + (i + 1) % 5;
            int lo = 6 + i, lo_next = 6 + (i + 1) % 5;
            b.add_edge(0, up);
            b.add_edge(11, lo);
            b.add_edge(up, up_next);
            b.add_edge(lo, lo_next);
            b.add_edge(up, lo);
            b.add_edge(up, lo_next);
        }
        return std::move(b).build();
    }

    auto mycielski(const Graph & g) -> Graph
    {
        int n = static_cast<int>(g.order());
        GraphBuilder b(2 * g.order() + 1);
        for (auto [u, v] : g.edges()) {
            b.add_edge(u, v);
            b.add_edge(u, n + v);
            b.add_edge(n + u, v);
        }
        for (int i = 0; i < n; ++i)
            b.add_edge(n + i, 2 * n);
        return std::move(b).build();
    }

    auto grotzsch() -> Graph
    {
        return mycielski(cycle(5));
    }

    namespace
    {
        auto parse_count(string_view s) -> std::optional<size_t>
        {
            size_t v = 0;
            auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || end != s.data() + s.size() || s.empty())
                return std::nullopt;
            return v;
        }
    }

    auto by_name(string_view name) -> std::optional<Graph>
    {
        if (name == "petersen")
            return petersen();
        if (name == "octahedron")
            return octahedron();
        if (name == "dodecahedron")
            return dodecahedron();
        if (name == "icosahedron")
            return icosahedron();
        if (name == "grotzsch")
            return grotzsch();
        if (name.size() >= 2 && (name[0] == 'K' || name[0] == 'C' || name[0] == 'P')) {
            auto rest = name.substr(1);
            if (rest.find(',') != string_view::npos) {
                if (name[0] != 'K')
                    return std::nullopt;
                vector<size_t> parts;
                while (true) {
                    auto comma = rest.find(',');
                    auto n = parse_count(rest.substr(0, comma));
                    if (! n)
                        return std::nullopt;
                    parts.push_back(*n);
                    if (comma == string_view::npos)
                        break;
                    rest = rest.substr(comma + 1);
                }
                return complete_multipartite(parts);
            }
            auto n = parse_count(rest);
            if (! n)
                return std::nullopt;
            if (name[0] == 'K')
                return complete(*n);
            if (name[0] == 'C')
                return *n >= 3 ? std::optional<Graph>(cycle(*n)) : std::nullopt;
            return path(*n);
        }
        return std::nullopt;
    }
}

#include <ctl/canonical.hh>
#include <ctl/enumerate.hh>
#include <ctl/graph6.hh>

#include <set>
#include <string>

using std::size_t;
using std::string;
using std::vector;

namespace ctl
{
    auto all_graphs(size_t n) -> vector<Graph>
    {
        if (n > 10)
            throw SizingError("graph enumeration is limited to 10 vertices");

        std::set<string> level{emit_graph6(Graph(0))};
        for (size_t m = 1; m <= n; ++m) {
            std::set<string> next;
            for (const auto & code : level) {
                Graph g = parse_graph6(code);
                for (size_t mask = 0; mask < (size_t{1} << (m - 1)); ++mask) {
                    GraphBuilder b(m);
                    for (auto [u, v] : g.edges())
                        b.add_edge(u, v);
                    for (size_t u = 0; u + 1 < m; ++u)
                        if ((mask >> u) & 1)
                            b.add_edge(static_cast<int>(u), static_cast<int>(m - 1));
                    next.insert(canonical_form(std::move(b).build()));
                }
            }
            level = std::move(next);
        }

        vector<Graph> out;
        out.reserve(level.size());
        for (const auto & code : level)
            out.push_back(parse_graph6(code));
        return out;
    }
}

// Writes one graph6 line per isomorphism class of graphs on 1..N vertices (default 8).
#include <ctl/enumerate.hh>
#include <ctl/graph6.hh>

#include <cstdlib>
#include <iostream>

auto main(int argc, char ** argv) -> int
{
    std::size_t max_n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 8;
    if (max_n < 1 || max_n > 9) {
        std::cerr << "usage: make-corpus [N], 1 <= N <= 9\n";
        return 2;
    }
    for (std::size_t n = 1; n <= max_n; ++n)
        for (const auto & g : ctl::all_graphs(n))
            std::cout << ctl::emit_graph6(g) << '\n';
}

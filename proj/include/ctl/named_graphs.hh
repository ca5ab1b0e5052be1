#pragma once

#include <ctl/graph.hh>

#include <optional>
#include <string>
#include <string_view>

namespace ctl::graphs
{
    auto empty(std::size_t n) -> Graph;
    auto complete(std::size_t n) -> Graph;
    auto cycle(std::size_t n) -> Graph;
    auto path(std::size_t n) -> Graph;
    auto star(std::size_t leaves) -> Graph;
    auto complete_bipartite(std::size_t a, std::size_t b) -> Graph;

    /// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    auto petersen() -> Graph;
    auto octahedron() -> Graph;
    auto dodecahedron() -> Graph;
    auto icosahedron() -> Graph;

    /// Mycielskian of g: vertices of g, their shadows, and one apex.
    auto mycielski(const Graph & g) -> Graph;

    /// Mycielski(C5): 11 vertices, triangle-free, 4-chromatic.
    auto grotzsch() -> Graph;

    /// Looks up a graph by name: K3, C5, P4, K1,3, K2,2,2, petersen, dodecahedron, icosahedron, octahedron, grotzsch.
    auto by_name(std::string_view name) -> std::optional<Graph>;
}

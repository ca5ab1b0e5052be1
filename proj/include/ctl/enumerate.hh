#pragma once

#include <ctl/graph.hh>

#include <cstddef>
#include <vector>

namespace ctl
{
    /// One representative of every isomorphism class of graphs on n vertices, in canonical form,
    /// sorted by graph6 string. Built by vertex extension with canonical-form deduplication.
    auto all_graphs(std::size_t n) -> std::vector<Graph>;
}

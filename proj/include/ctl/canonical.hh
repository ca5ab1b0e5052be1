#pragma once

#include <ctl/budget.hh>
#include <ctl/graph.hh>

#include <string>
#include <vector>

namespace ctl
{
    /// Vertex order under which g takes its canonical form: position i of the result is the
    /// original vertex placed at i. Individualisation-refinement over an ordered equitable
    /// partition, keeping the lexicographically least graph6 leaf; twins are explored once.
    auto canonical_order(const Graph & g, const Deadline & deadline = Deadline::unlimited()) -> std::vector<int>;

    /// graph6 string of g relabelled by canonical_order. Equal iff the graphs are isomorphic.
    auto canonical_form(const Graph & g, const Deadline & deadline = Deadline::unlimited()) -> std::string;

    auto relabel(const Graph & g, const std::vector<int> & order) -> Graph;

    auto isomorphic(const Graph & g, const Graph & h) -> bool;
}

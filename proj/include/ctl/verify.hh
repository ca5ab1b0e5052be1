#pragma once

#include <ctl/budget.hh>
#include <ctl/classify.hh>
#include <ctl/graph.hh>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ctl
{
    /// Injective map from pattern vertices to host vertices carrying every pattern edge onto a host edge.
    struct Embedding
    {
        std::vector<int> map;
    };

    auto is_valid_embedding(const Graph & host, const Graph & pattern, const Embedding & e) -> bool;

    /// Non-induced subgraph search: pattern vertices in connectivity order seeded by degree,
    /// host candidates filtered by degree, neighbour-degree dominance and 2-ball size.
    auto contains_subgraph(const Graph & host, const Graph & pattern, const Deadline & deadline = Deadline()) -> std::optional<Embedding>;

    /// Embeds a forest. Guaranteed to succeed when e(host) ≥ v(f)·v(host): peel to the core of
    /// minimum degree ≥ v(f), then place tree vertices greedily parent-first. Below that threshold
    /// it falls back to contains_subgraph.
    auto embed_forest(const Graph & host, const Graph & f, const Deadline & deadline = Deadline()) -> std::optional<Embedding>;

    /// Greedy part of embed_forest only; absent when the min-degree core is too small.
    auto embed_forest_greedy(const Graph & host, const Graph & f) -> std::optional<Embedding>;

    struct WitnessCheck
    {
        bool pass = true;
        std::vector<std::string> violations;
        std::vector<std::string> notes;

        auto fail(std::string why) -> void
        {
            pass = false;
            violations.push_back(std::move(why));
        }
    };

    struct WitnessCheckOptions
    {
        /// Negative claims (no r-near-acyclic partition, no forest in M(H)) are re-derived by an
        /// independent brute force only up to this many vertices; above it they are noted as unchecked.
        std::size_t exhaustive_limit = 12;
    };

    /// Re-validates every report invariant from the definitions, sharing no search code with classify.
    auto check_threshold_witness(const Graph & h, const ThresholdReport & report, const WitnessCheckOptions & options = {},
        const Deadline & deadline = Deadline()) -> WitnessCheck;

    /// Odd cycles of length ≤ max_len meeting s in at most one vertex, each once, as vertex
    /// sequences starting at their least vertex with the smaller neighbour second.
    auto odd_cycle_oracle(const Graph & h, const VertexSet & s, std::size_t max_len, const Deadline & deadline = Deadline())
        -> std::vector<std::vector<int>>;

    auto scan_triangles(const Graph & g) -> std::size_t;

    auto common_neighbors(const Graph & g, const VertexSet & x) -> VertexSet;
}

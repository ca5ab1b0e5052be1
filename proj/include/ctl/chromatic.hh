#pragma once

#include <ctl/budget.hh>
#include <ctl/graph.hh>

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace ctl
{
    /// A proper colouring as a set partition: nonempty independent classes ordered by smallest member.
    struct Coloring
    {
        std::vector<std::vector<int>> classes;

        /// Puts classes (and their members) into canonical order.
        auto canonicalise() -> void;

        auto colours() const -> std::size_t { return classes.size(); }

        /// Class index of each vertex.
        auto colour_of(std::size_t n) const -> std::vector<int>;

        auto operator==(const Coloring &) const -> bool = default;
    };

    /// True iff c partitions V(g) into nonempty independent classes in canonical order.
    auto is_valid_coloring(const Graph & g, const Coloring & c) -> bool;

    /// Size of a largest clique found by a capped pivoting search; always a lower bound on χ.
    auto clique_lower_bound(const Graph & g, const Deadline & deadline = Deadline()) -> std::size_t;

    /// DSATUR greedy colouring, an upper bound on χ.
    auto greedy_coloring(const Graph & g) -> Coloring;

    /// Exact χ by branch and bound between the clique and greedy bounds.
    auto chromatic_number(const Graph & g, const Deadline & deadline = Deadline()) -> std::size_t;

    /// A k-colouring of g if one exists. Exact (DSATUR backtracking).
    auto is_k_colorable(const Graph & g, std::size_t k, const Deadline & deadline = Deadline()) -> std::optional<Coloring>;

    /// Lazily enumerates every partition of V(g) into exactly k nonempty independent sets, each once.
    class PartitionCursor
    {
    public:
        PartitionCursor(const Graph & g, std::size_t k, Deadline deadline = Deadline());
        ~PartitionCursor();
        PartitionCursor(PartitionCursor &&) noexcept;
        auto operator=(PartitionCursor &&) noexcept -> PartitionCursor &;

        auto next() -> std::optional<Coloring>;

    private:
        struct State;
        std::unique_ptr<State> _state;
    };

    auto color_class_partitions(const Graph & g, std::size_t k, Deadline deadline = Deadline()) -> PartitionCursor;
}

#pragma once

#include <ctl/rational.hh>
#include <ctl/vertex_set.hh>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ctl
{
    /// Largest vertex count any graph may have.
    inline constexpr std::size_t max_vertices = 4096;

    /// Raised when a graph (usually a generated one) would exceed max_vertices.
    class SizingError : public std::length_error
    {
    public:
        using std::length_error::length_error;
    };

    using Edge = std::pair<int, int>;

    class Graph;

    /// Mutable staging area; the only way to produce a Graph with edges.
    class GraphBuilder
    {
    public:
        explicit GraphBuilder(std::size_t n);

        auto size() const -> std::size_t { return _adj.size(); }
        auto add_edge(int u, int v) -> void;
        auto remove_edge(int u, int v) -> void;
        auto has_edge(int u, int v) const -> bool { return _adj[u].test(v); }
        auto set_label(int v, std::string label) -> void;

        /// Adds all edges between a and b (which must be disjoint).
        auto join(const VertexSet & a, const VertexSet & b) -> void;

        auto build() && -> Graph;

    private:
        std::vector<VertexSet> _adj;
        std::vector<std::string> _labels;
        bool _labelled = false;
    };

    /// Simple undirected graph on vertices 0..n-1. Immutable once built.
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(std::size_t n);
        Graph(std::size_t n, const std::vector<Edge> & edges);

        auto order() const -> std::size_t { return _adj.size(); }
        auto size() const -> std::size_t { return _edge_count; }

        auto adjacent(int u, int v) const -> bool { return _adj[u].test(v); }
        auto neighbours(int v) const -> const VertexSet & { return _adj[v]; }
        auto degree(int v) const -> std::size_t { return _degree[v]; }

        auto edges() const -> std::vector<Edge>;

        auto has_labels() const -> bool { return ! _labels.empty(); }
        auto label(int v) const -> const std::string &;
        auto labels() const -> const std::vector<std::string> & { return _labels; }

        auto all_vertices() const -> VertexSet;

        /// Induced subgraph on keep, vertices renumbered in increasing order. Labels carry over.
        auto induced(const VertexSet & keep) const -> Graph;
        auto without(const VertexSet & drop) const -> Graph;

        auto is_independent(const VertexSet & s) const -> bool;

        auto operator==(const Graph & other) const -> bool { return _adj == other._adj; }

    private:
        friend class GraphBuilder;
        std::vector<VertexSet> _adj;
        std::vector<std::size_t> _degree;
        std::vector<std::string> _labels;
        std::size_t _edge_count = 0;
    };

    /// One component of a forest: its vertices, its unique proper 2-colouring, and its edges.
    struct Tree
    {
        std::vector<int> vertices;
        std::vector<int> side_a; ///< contains the smallest vertex
        std::vector<int> side_b;
        std::vector<Edge> edges;
    };

    struct ForestDecomposition
    {
        std::vector<Tree> trees;
    };

    auto min_degree(const Graph & g) -> std::size_t;
    auto min_degree_fraction(const Graph & g) -> Rational;

    /// Shortest cycle length, or nullopt when the graph is acyclic.
    auto girth(const Graph & g) -> std::optional<std::size_t>;

    /// Shortest odd cycle length, or nullopt when the graph is bipartite.
    auto odd_girth(const Graph & g) -> std::optional<std::size_t>;

    auto is_acyclic(const Graph & g) -> bool;
    auto is_connected(const Graph & g) -> bool;
    auto is_bipartite(const Graph & g) -> bool;

    /// Trees of g if g is a forest; isolated vertices become one-vertex trees.
    auto forest_decomposition(const Graph & g) -> std::optional<ForestDecomposition>;

    /// Same, restricted to the subgraph induced by within; tree vertices keep their indices in g.
    auto forest_decomposition(const Graph & g, const VertexSet & within) -> std::optional<ForestDecomposition>;

    struct Degeneracy
    {
        std::size_t value = 0;
        /// Each vertex has at most value neighbours earlier in this order.
        std::vector<int> order;
    };

    auto degeneracy(const Graph & g) -> Degeneracy;

    /// Replaces v by an independent set of sizes[v] vertices; labels record the origin vertex.
    auto blow_up(const Graph & g, const std::vector<std::size_t> & sizes) -> Graph;

    /// Disjoint union plus every edge between the two sides.
    auto join(const Graph & g, const Graph & h) -> Graph;

    auto disjoint_union(const Graph & g, const Graph & h) -> Graph;

    auto complete_multipartite(const std::vector<std::size_t> & sizes) -> Graph;

    /// Graphviz rendering for inspection only.
    auto to_dot(const Graph & g) -> std::string;
}

#pragma once

#include <ctl/budget.hh>
#include <ctl/graph.hh>
#include <ctl/rational.hh>
#include <ctl/sphere.hh>

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ctl
{
    /// Modified Zykov graph Z_ℓ^{r,t}(T_1..T_ℓ). Vertex order: tree vertices (tree by tree, original
    /// order), then the blown-up apex sets S_I for I as bitmask 0..2^ℓ-1, then S'_1..S'_{r-3}.
    /// Labels: "T<j>A:<v>" / "T<j>B:<v>", "S{<I>}:<c>", "S'<j>:<c>" (1-based j and members of I).
    auto zykov(const std::vector<Graph> & trees, std::size_t r, std::size_t t) -> Graph;

    auto zykov_order(const std::vector<Graph> & trees, std::size_t r, std::size_t t) -> std::size_t;

    /// Kn(n,k): k-subsets of {1..n} in colex order, labelled "{a,b,...}", joined when disjoint.
    auto kneser(std::size_t n, std::size_t k) -> Graph;

    /// H(k,ℓ,m): Kn(2m+k,m) first, then A (2ℓ vertices, parts A_1.. consecutive), then B (ℓ vertices).
    auto hajnal(std::size_t k, std::size_t l, std::size_t m) -> Graph;

    struct BorsukSample
    {
        Graph graph;
        std::vector<SpherePoint> points;
    };

    auto borsuk_sample(std::size_t k, const Angle & eps, std::size_t n_points, std::uint64_t seed) -> BorsukSample;

    /// A graph B' with a homomorphism phi into the Borsuk graph on the points u.
    struct BorsukBase
    {
        std::vector<SpherePoint> u;
        Graph b_prime;
        std::vector<int> phi;
    };

    struct BorsukHajnalParams
    {
        std::size_t k = 2;
        Angle eps{Rational(1, 100)};
        Angle delta{Rational(1, 20)};
        std::size_t w_size = 2;
        std::size_t u_points = 0;
        std::uint64_t seed = 0;
        /// Selects an independent draw of W for the same U'.
        std::uint64_t w_stream = 0;
        /// Caller-supplied (B', phi); when absent, B' is a fresh Borsuk sample and phi the identity.
        std::optional<BorsukBase> base;
    };

    /// BH_r with vertex order U', W, X, Y_1..Y_{r-3}; labels "U:i", "W:i", "X:i", "Y<j>:i".
    struct BorsukHajnal
    {
        Graph graph;
        std::vector<SpherePoint> u;
        std::vector<int> phi;
        std::vector<SpherePoint> w;
        std::size_t u_count = 0, w_count = 0, x_count = 0, y_sets = 0;

        auto u_part() const -> VertexSet;
        auto w_part() const -> VertexSet;
        auto x_part() const -> VertexSet;
        auto y_part(std::size_t i) const -> VertexSet;
    };

    auto borsuk_hajnal(const BorsukHajnalParams & p) -> BorsukHajnal;
    auto borsuk_hajnal_r(std::size_t r, const BorsukHajnalParams & p) -> BorsukHajnal;

    struct ErdosGraph
    {
        Graph graph;
        std::size_t chi_at_least = 0;     ///< verified: graph is not (chi_at_least-1)-colourable
        std::optional<std::size_t> girth; ///< exact
        std::string source;               ///< "catalog:<name>" or "search"
    };

    /// A graph with χ ≥ k and girth ≥ l, both verified exactly before returning. Throws
    /// BudgetExceeded if nothing verified turns up in time.
    auto erdos_graph(std::size_t k, std::size_t l, const Deadline & deadline, std::uint64_t seed) -> ErdosGraph;

    /// G' followed by the other classes of a complete balanced multipartite shell, each of size |G'|.
    /// pi_witness uses r-1 classes and needs no forest in M(h); theta_witness uses r-2 classes.
    auto pi_witness(const Graph & h, std::size_t c, const Deadline & deadline, std::uint64_t seed) -> Graph;
    auto theta_witness(const Graph & h, std::size_t c, const Deadline & deadline, std::uint64_t seed) -> Graph;

    struct LambdaParameters
    {
        Angle delta;
        Angle eps;
        std::size_t w_size = 0;
    };

    /// δ with the cap of polar angle π/2 − δ covering a (1/2 − ν/2)-fraction of S^k (rounded down
    /// to a multiple of π/10^6), ε = δ/(2k), and the least even |W| meeting the degree inequality.
    auto lambda_parameters(std::size_t r, std::size_t k, const Rational & nu, std::size_t u_points) -> LambdaParameters;

    struct LambdaWitnessParams
    {
        std::size_t k = 2;
        Rational nu{1, 10};
        std::size_t u_points = 8;
        std::uint64_t seed = 0;
        std::size_t max_resamples = 10000;
    };

    struct LambdaWitness
    {
        BorsukHajnal instance;
        LambdaParameters parameters;
        std::size_t resamples = 0;    ///< W draws rejected before the degree event held
        bool degree_event = false;    ///< every U' vertex has ≥ (1/2 − ν)|W| neighbours in W
        Rational min_degree_fraction; ///< achieved
        Rational target;              ///< (2r−5)/(2r−3) − ν
    };

    auto lambda_witness(const Graph & h, const LambdaWitnessParams & p, const Deadline & deadline) -> LambdaWitness;

    struct RandomConstruction
    {
        Graph graph;
        std::vector<int> planted; ///< image of each vertex of f
        std::vector<VertexSet> parts;
    };

    auto random_construction(std::size_t r, std::size_t n, const Rational & p, const Graph & f, std::uint64_t seed)
        -> RandomConstruction;

    enum class Family
    {
        zykov,
        kneser,
        hajnal,
        borsuk,
        borsuk_hajnal,
        borsuk_hajnal_r,
        erdos,
        pi_witness,
        theta_witness,
        lambda_witness,
        random_construction
    };

    auto to_string(Family f) -> std::string;
    auto family_from_string(std::string_view s) -> std::optional<Family>;
    auto is_randomized(Family f) -> bool;

    struct ConstructionRecipe
    {
        Family family = Family::kneser;
        nlohmann::json params = nlohmann::json::object();
        std::optional<std::uint64_t> seed;

        auto to_json() const -> nlohmann::json;
        static auto from_json(const nlohmann::json & j) -> ConstructionRecipe;
    };

    /// Output of a recipe. "verified" holds properties recomputed exactly on the output graph;
    /// "reported" holds parameters and targets that were not checked.
    struct Construction
    {
        Graph graph;
        nlohmann::json verified = nlohmann::json::object();
        nlohmann::json reported = nlohmann::json::object();
        std::vector<SpherePoint> points;
    };

    /// Runs a recipe. Invalid parameters raise std::invalid_argument naming the violated condition.
    auto construct(const ConstructionRecipe & recipe, const Deadline & deadline = Deadline()) -> Construction;
}

#pragma once

#include <ctl/budget.hh>
#include <ctl/chromatic.hh>
#include <ctl/graph.hh>
#include <ctl/rational.hh>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ctl
{
    enum class ThresholdClass
    {
        bipartite,
        theta,  ///< (r-3)/(r-2): H is r-near-acyclic
        lambda, ///< (2r-5)/(2r-3): a forest in the decomposition family, not r-near-acyclic
        pi      ///< (r-2)/(r-1): no forest in the decomposition family
    };

    auto to_string(ThresholdClass c) -> std::string;
    auto threshold_class_from_string(std::string_view s) -> std::optional<ThresholdClass>;

    /// The threshold value attached to class c for an r-chromatic graph.
    auto threshold_value(ThresholdClass c, std::size_t r) -> Rational;

    auto theta(std::size_t r) -> Rational;
    auto lambda(std::size_t r) -> Rational;
    auto pi(std::size_t r) -> Rational;

    /// Independent sets U_1..U_{r-3} and S, plus the forest left after removing them, such that
    /// no vertex of S has neighbours on both sides of one tree.
    struct NearAcyclicWitness
    {
        std::vector<std::vector<int>> removed_sets;
        std::vector<int> s_set;
        ForestDecomposition forest;
    };

    /// An r-colouring and two of its classes whose union induces a forest.
    struct ForestWitness
    {
        Coloring coloring;
        std::pair<int, int> pair{0, 1};
    };

    struct ThresholdReport
    {
        std::size_t chi = 0;
        ThresholdClass class_tag = ThresholdClass::bipartite;
        Rational threshold;
        std::optional<ForestWitness> forest_witness;
        std::optional<NearAcyclicWitness> near_acyclic_witness;
    };

    /// Class-pair subgraphs over all χ(h)-colourings, one per isomorphism class, in canonical form.
    auto decomposition_family(const Graph & h, const Deadline & deadline = Deadline()) -> std::vector<Graph>;

    /// First colouring (in enumeration order) with a class pair inducing a forest, if any.
    auto has_forest_in_decomposition(const Graph & h, const Deadline & deadline = Deadline()) -> std::optional<ForestWitness>;

    /// For an independent s with h − s a forest: true iff no vertex of s has neighbours on both
    /// sides of one tree. Absent when s is not independent or h − s has a cycle.
    auto tree_class_condition(const Graph & h, const VertexSet & s) -> std::optional<bool>;

    /// Near-acyclicity test. Absent whenever χ(h) ≠ 3.
    auto is_near_acyclic(const Graph & h, const Deadline & deadline = Deadline()) -> std::optional<NearAcyclicWitness>;

    /// r-near-acyclicity test for r = χ(h) ≥ 3.
    auto is_r_near_acyclic(const Graph & h, const Deadline & deadline = Deadline()) -> std::optional<NearAcyclicWitness>;

    /// Same search with a known chromatic number; absent when chi < 3.
    auto find_r_near_acyclic_witness(const Graph & h, std::size_t chi, const Deadline & deadline) -> std::optional<NearAcyclicWitness>;

    /// The r-colouring implied by a near-acyclic witness: U_1..U_{r-3}, S, and the two forest sides.
    auto forest_witness_from(const Graph & h, const NearAcyclicWitness & w) -> ForestWitness;

    /// Exact chromatic threshold with witnesses. BudgetExceeded names the sub-test that ran out.
    auto chromatic_threshold(const Graph & h, const Deadline & deadline = Deadline()) -> ThresholdReport;
}

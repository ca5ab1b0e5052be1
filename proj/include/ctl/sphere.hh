#pragma once

#include <ctl/graph.hh>
#include <ctl/rational.hh>
#include <ctl/rng.hh>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ctl
{
    /// Fixed-point coordinates scale.
    inline constexpr std::int64_t sphere_scale = 1'000'000'000;

    /// A point of S^k stored as k+1 integers in units of 1e-9. The norm is 1 up to the rounding
    /// of each coordinate, i.e. within sqrt(k+1)/2 · 1e-9.
    struct SpherePoint
    {
        std::vector<std::int64_t> coords;

        auto dimension() const -> std::size_t { return coords.size() - 1; }
        auto operator==(const SpherePoint &) const -> bool = default;
    };

    /// A point drawn uniformly from S^k (cube rejection, then normalisation).
    auto random_sphere_point(std::size_t k, Rng & rng) -> SpherePoint;

    /// Builds a point from real coordinates, normalising first.
    auto sphere_point(const std::vector<double> & coords) -> SpherePoint;

    /// An angle given as a rational multiple of π, so that recipes stay exact.
    struct Angle
    {
        Rational turns_of_pi;

        auto radians() const -> double;
    };

    /// True iff the angle between x and y is at least a, compared as cos∠(x,y) ≤ cos(a) with
    /// cos(a) rounded to 1e-9 and the rest exact.
    auto angle_at_least(const SpherePoint & x, const SpherePoint & y, const Angle & a) -> bool;

    /// True iff the angle between x and y is strictly below a (same rounding rule).
    auto angle_below(const SpherePoint & x, const SpherePoint & y, const Angle & a) -> bool;

    /// Borsuk graph on the given points: xy is an edge iff ∠(x,y) ≥ π − eps.
    auto borsuk_graph(const std::vector<SpherePoint> & points, const Angle & eps) -> Graph;

    /// Fraction of S^k covered by a polar cap of the given angle, by numerical integration.
    auto cap_fraction(std::size_t k, double polar_angle) -> double;

    /// Points as CSV rows "index,x0,x1,...", coordinates in decimal.
    auto points_csv(const std::vector<SpherePoint> & points) -> std::string;
}

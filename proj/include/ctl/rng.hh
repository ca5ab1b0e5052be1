#pragma once

#include <ctl/rational.hh>

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ctl
{
    /// Counter-based generator: the i-th output is a fixed mix of (key, i), so a stream depends on
    /// nothing but its seed. Uniform helpers are written here rather than taken from <random>,
    /// whose distributions are allowed to differ between standard libraries.
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : _key(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

        auto next() -> std::uint64_t { return mix(_key + 0x9e3779b97f4a7c15ULL * ++_counter); }

        /// Independent stream for a named sub-task.
        auto fork(std::uint64_t stream) const -> Rng { return Rng(_key ^ mix(stream + 0x3c6ef372fe94f82bULL)); }

        /// Uniform in [0, bound), by rejection.
        auto below(std::uint64_t bound) -> std::uint64_t
        {
            if (bound == 0)
                throw std::invalid_argument("Rng::below(0)");
            std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
            std::uint64_t x;
            do
                x = next();
            while (x >= limit);
            return x % bound;
        }

        /// Uniform in [0, 1) with 53 random bits.
        auto unit() -> double { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

        /// True with exactly probability p, for 0 ≤ p ≤ 1 with a denominator below 2^64.
        auto bernoulli(const Rational & p) -> bool
        {
            if (p.den() > BigInt(UINT64_MAX))
                throw std::invalid_argument("probability denominator too large");
            auto den = static_cast<std::uint64_t>(p.den());
            auto num = static_cast<std::uint64_t>(p.num());
            return below(den) < num;
        }

        template <typename T>
        auto shuffle(std::vector<T> & v) -> void
        {
            for (std::size_t i = v.size(); i > 1; --i)
                std::swap(v[i - 1], v[below(i)]);
        }

    private:
        static auto mix(std::uint64_t z) -> std::uint64_t
        {
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            return z ^ (z >> 31);
        }

        std::uint64_t _key;
        std::uint64_t _counter = 0;
    };
}

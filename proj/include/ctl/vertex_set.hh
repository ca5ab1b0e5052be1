#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ctl
{
    /// Fixed-capacity set of vertex indices backed by 64-bit words.
    class VertexSet
    {
    public:
        VertexSet() = default;
        explicit VertexSet(std::size_t capacity) :
            _capacity(capacity),
            _words((capacity + 63) / 64, 0)
        {
        }

        auto capacity() const -> std::size_t { return _capacity; }

        auto set(std::size_t v) -> void { _words[v >> 6] |= (std::uint64_t{1} << (v & 63)); }
        auto reset(std::size_t v) -> void { _words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
        auto test(std::size_t v) const -> bool { return (_words[v >> 6] >> (v & 63)) & 1; }

        auto set_all() -> void
        {
            for (auto & w : _words)
                w = ~std::uint64_t{0};
            trim();
        }

        auto clear() -> void
        {
            for (auto & w : _words)
                w = 0;
        }

        auto count() const -> std::size_t
        {
            std::size_t c = 0;
            for (auto w : _words)
                c += std::popcount(w);
            return c;
        }

        auto empty() const -> bool
        {
            for (auto w : _words)
                if (w)
                    return false;
            return true;
        }

        auto any() const -> bool { return ! empty(); }

        auto intersects(const VertexSet & other) const -> bool
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (_words[i] & other._words[i])
                    return true;
            return false;
        }

        auto intersection_count(const VertexSet & other) const -> std::size_t
        {
            std::size_t c = 0;
            for (std::size_t i = 0; i < _words.size(); ++i)
                c += std::popcount(_words[i] & other._words[i]);
            return c;
        }

        auto is_subset_of(const VertexSet & other) const -> bool
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (_words[i] & ~other._words[i])
                    return false;
            return true;
        }

        auto operator&=(const VertexSet & other) -> VertexSet &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= other._words[i];
            return *this;
        }

        auto operator|=(const VertexSet & other) -> VertexSet &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] |= other._words[i];
            return *this;
        }

        /// Removes every member of other.
        auto subtract(const VertexSet & other) -> VertexSet &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= ~other._words[i];
            return *this;
        }

        friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
        friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
        friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a.subtract(b); }

        auto operator==(const VertexSet & other) const -> bool = default;

        /// Smallest member at or after from, or capacity() if none.
        auto find_next(std::size_t from) const -> std::size_t
        {
            if (from >= _capacity)
                return _capacity;
            std::size_t wi = from >> 6;
            std::uint64_t w = _words[wi] & (~std::uint64_t{0} << (from & 63));
            while (true) {
                if (w)
                    return (wi << 6) + std::countr_zero(w);
                if (++wi >= _words.size())
                    return _capacity;
                w = _words[wi];
            }
        }

        auto first() const -> std::size_t { return find_next(0); }

        template <typename F>
        auto for_each(F && f) const -> void
        {
            for (std::size_t wi = 0; wi < _words.size(); ++wi) {
                std::uint64_t w = _words[wi];
                while (w) {
                    f((wi << 6) + std::countr_zero(w));
                    w &= w - 1;
                }
            }
        }

        auto members() const -> std::vector<int>
        {
            std::vector<int> out;
            out.reserve(count());
            for_each([&](std::size_t v) { out.push_back(static_cast<int>(v)); });
            return out;
        }

        static auto from(std::size_t capacity, const std::vector<int> & members) -> VertexSet
        {
            VertexSet s(capacity);
            for (int v : members)
                s.set(static_cast<std::size_t>(v));
            return s;
        }

        auto words() const -> const std::vector<std::uint64_t> & { return _words; }

    private:
        auto trim() -> void
        {
            if (_capacity & 63)
                _words.back() &= (std::uint64_t{1} << (_capacity & 63)) - 1;
        }

        std::size_t _capacity = 0;
        std::vector<std::uint64_t> _words;
    };
}

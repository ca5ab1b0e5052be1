#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace ctl
{
    using BigInt = boost::multiprecision::cpp_int;

    /// Exact fraction, always in lowest terms with a positive denominator.
    class Rational
    {
    public:
        Rational() = default;
        Rational(std::int64_t value) : _num(value), _den(1) {}
        Rational(BigInt num, BigInt den);

        auto num() const -> const BigInt & { return _num; }
        auto den() const -> const BigInt & { return _den; }

        auto operator+(const Rational & o) const -> Rational { return {_num * o._den + o._num * _den, _den * o._den}; }
        auto operator-(const Rational & o) const -> Rational { return {_num * o._den - o._num * _den, _den * o._den}; }
        auto operator*(const Rational & o) const -> Rational { return {_num * o._num, _den * o._den}; }
        auto operator/(const Rational & o) const -> Rational;
        auto operator-() const -> Rational { return {-_num, _den}; }

        auto operator==(const Rational & o) const -> bool { return _num == o._num && _den == o._den; }
        auto operator<=>(const Rational & o) const -> std::strong_ordering;

        auto to_double() const -> double;

        /// "num/den", or just "num" when den = 1.
        auto to_string() const -> std::string;

        /// Display-only decimal rendering with the given number of fractional digits (truncated).
        auto to_decimal(int digits = 6) const -> std::string;

        /// Accepts "a", "a/b", and finite decimals such as "0.3" or "-1.25"; exact in every case.
        static auto parse(std::string_view text) -> Rational;

    private:
        BigInt _num = 0;
        BigInt _den = 1;
    };

    inline auto operator<<(std::ostream & os, const Rational & q) -> std::ostream & { return os << q.to_string(); }
}

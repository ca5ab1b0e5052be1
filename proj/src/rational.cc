#include <ctl/rational.hh>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>

using std::string;
using std::string_view;

namespace ctl
{
    Rational::Rational(BigInt num, BigInt den) :
        _num(std::move(num)),
        _den(std::move(den))
    {
        if (_den == 0)
            throw std::domain_error("rational with zero denominator");
        if (_den < 0) {
            _num = -_num;
            _den = -_den;
        }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(_num), _den);
        if (g > 1) {
            _num /= g;
            _den /= g;
        }
    }

    auto Rational::operator/(const Rational & o) const -> Rational
    {
        if (o._num == 0)
            throw std::domain_error("rational division by zero");
        return {_num * o._den, _den * o._num};
    }

    auto Rational::operator<=>(const Rational & o) const -> std::strong_ordering
    {
        BigInt lhs = _num * o._den, rhs = o._num * _den;
        if (lhs < rhs)
            return std::strong_ordering::less;
        if (lhs > rhs)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    auto Rational::to_double() const -> double
    {
        using Float = boost::multiprecision::cpp_bin_float_double;
        return static_cast<double>(Float(_num) / Float(_den));
    }

    auto Rational::to_string() const -> string
    {
        if (_den == 1)
            return _num.str();
        return _num.str() + "/" + _den.str();
    }

    auto Rational::to_decimal(int digits) const -> string
    {
        BigInt a = boost::multiprecision::abs(_num);
        BigInt whole = a / _den, rem = a % _den;
        string out = (_num < 0 ? "-" : "") + whole.str();
        if (digits > 0) {
            out += '.';
            for (int i = 0; i < digits; ++i) {
                rem *= 10;
                out += static_cast<char>('0' + static_cast<int>(rem / _den));
                rem %= _den;
            }
        }
        return out;
    }

    namespace
    {
        auto parse_integer(string_view s) -> BigInt
        {
            if (s.empty())
                throw std::invalid_argument("empty integer");
            std::size_t i = 0;
            bool negative = false;
            if (s[0] == '-' || s[0] == '+') {
                negative = s[0] == '-';
                i = 1;
            }
            if (i == s.size())
                throw std::invalid_argument("integer has no digits");
            BigInt v = 0;
            for (; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9')
                    throw std::invalid_argument("invalid digit in '" + string(s) + "'");
                v = v * 10 + (s[i] - '0');
            }
            return negative ? BigInt(-v) : v;
        }
    }

    auto Rational::parse(string_view text) -> Rational
    {
        if (auto slash = text.find('/'); slash != string_view::npos)
            return {parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1))};

        if (auto dot = text.find('.'); dot != string_view::npos) {
            string digits(text.substr(0, dot));
            string frac(text.substr(dot + 1));
            if (frac.empty() || frac.find_first_not_of("0123456789") != string::npos)
                throw std::invalid_argument("invalid decimal '" + string(text) + "'");
            if (digits.empty() || digits == "-" || digits == "+")
                digits += "0";
            bool negative = ! digits.empty() && digits[0] == '-';
            BigInt whole = boost::multiprecision::abs(parse_integer(digits));
            BigInt scale = 1;
            for (std::size_t i = 0; i < frac.size(); ++i)
                scale *= 10;
            BigInt num = whole * scale + parse_integer(frac);
            return {negative ? BigInt(-num) : num, scale};
        }

        return {parse_integer(text), 1};
    }
}

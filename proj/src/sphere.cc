#include <ctl/sphere.hh>

#include <cmath>
#include <numbers>
#include <stdexcept>

using std::size_t;
using std::vector;

namespace ctl
{
    namespace
    {
        auto fixed(double x) -> std::int64_t { return std::llround(x * static_cast<double>(sphere_scale)); }

        auto dot(const SpherePoint & x, const SpherePoint & y) -> BigInt
        {
            if (x.coords.size() != y.coords.size())
                throw std::invalid_argument("sphere points of different dimension");
            __int128 s = 0;
            for (size_t i = 0; i < x.coords.size(); ++i)
                s += static_cast<__int128>(x.coords[i]) * y.coords[i];
            bool negative = s < 0;
            unsigned __int128 m = negative ? -static_cast<unsigned __int128>(s) : static_cast<unsigned __int128>(s);
            BigInt out = static_cast<std::uint64_t>(m >> 64);
            out <<= 64;
            out += static_cast<std::uint64_t>(m);
            return negative ? BigInt(-out) : out;
        }

        auto norm2(const SpherePoint & x) -> BigInt { return dot(x, x); }

        /// Sign of cos∠(x,y) − c/scale, exactly: -1, 0 or 1.
        auto compare_cos(const SpherePoint & x, const SpherePoint & y, std::int64_t c) -> int
        {
            BigInt d = dot(x, y);
            // cos∠ = d / (|x||y|); compare d·scale with c·|x||y| by signs, then squares
            BigInt lhs = d * sphere_scale;
            int sign_l = lhs > 0 ? 1 : lhs < 0 ? -1 : 0;
            int sign_r = c > 0 ? 1 : c < 0 ? -1 : 0;
            if (sign_l != sign_r)
                return sign_l > sign_r ? 1 : -1;
            if (sign_l == 0)
                return 0;
            BigInt l2 = lhs * lhs, r2 = BigInt(c) * c * norm2(x) * norm2(y);
            int mag = l2 > r2 ? 1 : l2 < r2 ? -1 : 0;
            return sign_l > 0 ? mag : -mag;
        }
    }

    auto sphere_point(const vector<double> & coords) -> SpherePoint
    {
        double n = 0;
        for (double c : coords)
            n += c * c;
        n = std::sqrt(n);
        if (coords.size() < 2 || ! (n > 0))
            throw std::invalid_argument("sphere point needs at least two coordinates and nonzero norm");
        SpherePoint p;
        for (double c : coords)
            p.coords.push_back(fixed(c / n));
        return p;
    }

    auto random_sphere_point(size_t k, Rng & rng) -> SpherePoint
    {
        vector<double> v(k + 1);
        while (true) {
            double n = 0;
            for (auto & c : v) {
                c = 2 * rng.unit() - 1;
                n += c * c;
            }
            if (n <= 1 && n > 1e-4)
                return sphere_point(v);
        }
    }

    auto Angle::radians() const -> double { return turns_of_pi.to_double() * std::numbers::pi; }

    auto angle_at_least(const SpherePoint & x, const SpherePoint & y, const Angle & a) -> bool
    {
        return compare_cos(x, y, fixed(std::cos(a.radians()))) <= 0;
    }

    auto angle_below(const SpherePoint & x, const SpherePoint & y, const Angle & a) -> bool
    {
        return compare_cos(x, y, fixed(std::cos(a.radians()))) > 0;
    }

    auto borsuk_graph(const vector<SpherePoint> & points, const Angle & eps) -> Graph
    {
        if (points.size() > max_vertices)
            throw SizingError("Borsuk sample larger than the vertex cap");
        Angle wide{Rational(1) - eps.turns_of_pi};
        GraphBuilder b(points.size());
        for (size_t i = 0; i < points.size(); ++i)
            for (size_t j = i + 1; j < points.size(); ++j)
                if (angle_at_least(points[i], points[j], wide))
                    b.add_edge(static_cast<int>(i), static_cast<int>(j));
        return std::move(b).build();
    }

    auto cap_fraction(size_t k, double polar_angle) -> double
    {
        // area element of S^k in the polar angle is proportional to sin^(k-1)
        auto integral = [k](double upper) {
            constexpr int steps = 20000;
            double h = upper / steps, s = 0;
            for (int i = 0; i <= steps; ++i) {
                double w = (i == 0 || i == steps) ? 1 : (i % 2 ? 4 : 2);
                s += w * std::pow(std::sin(i * h), static_cast<double>(k) - 1);
            }
            return s * h / 3;
        };
        if (k == 0)
            throw std::invalid_argument("cap_fraction needs k >= 1");
        return integral(polar_angle) / integral(std::numbers::pi);
    }

    auto points_csv(const vector<SpherePoint> & points) -> std::string
    {
        std::string out;
        for (size_t i = 0; i < points.size(); ++i) {
            out += std::to_string(i);
            for (auto c : points[i].coords)
                out += "," + Rational(BigInt(c), BigInt(sphere_scale)).to_decimal(9);
            out += "\n";
        }
        return out;
    }
}

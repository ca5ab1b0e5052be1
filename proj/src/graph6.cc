#include <ctl/graph6.hh>

using std::size_t;
using std::string;
using std::string_view;

namespace ctl
{
    namespace
    {
        constexpr int bias = 63;

        auto data_byte(string_view text, size_t pos) -> int
        {
            if (pos >= text.size())
                throw ParseError(pos, "unexpected end of data");
            auto c = static_cast<unsigned char>(text[pos]);
            if (c < 63 || c > 126)
                throw ParseError(pos, "byte " + std::to_string(c) + " outside 63..126");
            return c - bias;
        }

        /// Reads N(n); returns n and advances pos past it.
        auto read_order(string_view text, size_t & pos) -> size_t
        {
            size_t start = pos;
            int first = data_byte(text, pos);
            if (first < 63) {
                ++pos;
                return static_cast<size_t>(first);
            }
            size_t n = 0;
            if (pos + 1 < text.size() && text[pos + 1] == 126) {
                pos += 2;
                for (int i = 0; i < 6; ++i)
                    n = (n << 6) | static_cast<size_t>(data_byte(text, pos++));
            }
            else {
                ++pos;
                for (int i = 0; i < 3; ++i)
                    n = (n << 6) | static_cast<size_t>(data_byte(text, pos++));
            }
            if (n > max_vertices)
                throw ParseError(start, "vertex count " + std::to_string(n) + " exceeds the cap of " + std::to_string(max_vertices));
            return n;
        }

        auto write_order(string & out, size_t n) -> void
        {
            if (n < 63)
                out.push_back(static_cast<char>(n + bias));
            else if (n < 258048) {
                out.push_back(126);
                for (int shift = 12; shift >= 0; shift -= 6)
                    out.push_back(static_cast<char>(((n >> shift) & 63) + bias));
            }
            else {
                out.push_back(126);
                out.push_back(126);
                for (int shift = 30; shift >= 0; shift -= 6)
                    out.push_back(static_cast<char>(((n >> shift) & 63) + bias));
            }
        }

        auto strip_header(string_view text, string_view header, size_t & pos) -> void
        {
            if (text.substr(0, header.size()) == header)
                pos = header.size();
        }
    }

    auto parse_graph6(string_view text) -> Graph
    {
        size_t pos = 0;
        strip_header(text, ">>graph6<<", pos);
        size_t n = read_order(text, pos);
        size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
        size_t bytes = (bits + 5) / 6;

        GraphBuilder b(n);
        size_t k = 0, row = 0, col = 1;
        for (size_t i = 0; i < bytes; ++i) {
            int byte = data_byte(text, pos + i);
            for (int bit = 5; bit >= 0; --bit, ++k) {
                bool set = (byte >> bit) & 1;
                if (k >= bits) {
                    if (set)
                        throw ParseError(pos + i, "nonzero padding bit");
                    continue;
                }
                // column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
                if (set)
                    b.add_edge(static_cast<int>(row), static_cast<int>(col));
                if (++row == col) {
                    row = 0;
                    ++col;
                }
            }
        }
        if (pos + bytes != text.size())
            throw ParseError(pos + bytes, "trailing bytes after graph6 data");
        return std::move(b).build();
    }

    auto emit_graph6(const Graph & g) -> string
    {
        size_t n = g.order();
        string out;
        write_order(out, n);
        int acc = 0, filled = 0;
        for (size_t j = 1; j < n; ++j)
            for (size_t i = 0; i < j; ++i) {
                acc = (acc << 1) | (g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
                if (++filled == 6) {
                    out.push_back(static_cast<char>(acc + bias));
                    acc = 0;
                    filled = 0;
                }
            }
        if (filled > 0)
            out.push_back(static_cast<char>((acc << (6 - filled)) + bias));
        return out;
    }

    auto parse_sparse6(string_view text) -> Graph
    {
        size_t pos = 0;
        strip_header(text, ">>sparse6<<", pos);
        if (pos >= text.size() || text[pos] != ':')
            throw ParseError(pos, "sparse6 data must start with ':'");
        ++pos;
        size_t n = read_order(text, pos);

        int k = 0;
        while ((size_t{1} << k) < n)
            ++k;

        GraphBuilder b(n);
        size_t v = 0;
        int byte = 0, remaining = 0;
        size_t byte_pos = pos;
        auto next_bit = [&]() -> int {
            if (remaining == 0) {
                if (byte_pos >= text.size())
                    return -1;
                byte = data_byte(text, byte_pos++);
                remaining = 6;
            }
            --remaining;
            return (byte >> remaining) & 1;
        };

        while (true) {
            int bflag = next_bit();
            if (bflag < 0)
                break;
            size_t x = 0;
            bool complete = true;
            for (int i = 0; i < k; ++i) {
                int bit = next_bit();
                if (bit < 0) {
                    complete = false;
                    break;
                }
                x = (x << 1) | static_cast<size_t>(bit);
            }
            if (! complete)
                break;
            if (bflag)
                ++v;
            if (v >= n)
                break;
            if (x > v)
                v = x;
            else {
                if (x == v)
                    throw ParseError(byte_pos - 1, "loop at vertex " + std::to_string(v));
                b.add_edge(static_cast<int>(x), static_cast<int>(v));
            }
        }
        return std::move(b).build();
    }

    auto parse_graph_line(string_view text) -> Graph
    {
        if (text.substr(0, 11) == ">>sparse6<<" || (! text.empty() && text[0] == ':'))
            return parse_sparse6(text);
        return parse_graph6(text);
    }
}

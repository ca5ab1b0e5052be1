#pragma once

#include <ctl/graph.hh>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ctl
{
    /// A malformed graph6/sparse6 encoding, with the byte offset of the first problem.
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(std::size_t offset, const std::string & what) :
            std::runtime_error("byte " + std::to_string(offset) + ": " + what),
            _offset(offset)
        {
        }

        auto offset() const -> std::size_t { return _offset; }

    private:
        std::size_t _offset;
    };

    /// Decodes one graph6 string. An optional ">>graph6<<" header is accepted; nothing may follow the data.
    auto parse_graph6(std::string_view text) -> Graph;

    /// Canonical graph6 bytes under the current vertex order (no header, no newline).
    auto emit_graph6(const Graph & g) -> std::string;

    /// Decodes one sparse6 string (leading ':'). Loops are rejected; repeated edges collapse.
    auto parse_sparse6(std::string_view text) -> Graph;

    /// Dispatches on the leading byte: ':' means sparse6, anything else graph6.
    auto parse_graph_line(std::string_view text) -> Graph;
}

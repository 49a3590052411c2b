#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "worm/graph.hpp"

namespace worm {

// Malformed graph6 input; offset is the byte position of the first bad byte
// (or the overall length when the input is truncated).
class graph6_error : public std::runtime_error {
public:
    graph6_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")")
        , offset_(offset)
    {
    }

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// graph6: printable ASCII encoding of simple undirected graphs. The order is
// followed by the upper triangle of the adjacency matrix in column order
// (x01, x02, x12, x03, ...), packed big-endian into 6-bit groups offset by 63.
inline std::string encode_graph6(const Graph& g)
{
    const long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    } else {
        throw contract_error("encode_graph6: order above 258047 not supported");
    }
    int bit = 5;
    char acc = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (g.adjacent(u, v))
                acc |= static_cast<char>(1 << bit);
            if (--bit < 0) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                bit = 5;
            }
        }
    if (bit != 5)
        out.push_back(static_cast<char>(63 + acc));
    return out;
}

inline Graph decode_graph6(std::string_view text)
{
    // tolerate the optional ">>graph6<<" header and a trailing newline
    if (text.starts_with(">>graph6<<"))
        text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);

    if (text.empty())
        throw graph6_error("decode_graph6: empty input", 0);

    auto value_at = [&](std::size_t i) -> int {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw graph6_error("decode_graph6: byte outside graph6 alphabet", i);
        return c - 63;
    };
    for (std::size_t i = 0; i < text.size(); ++i)
        value_at(i); // report the earliest bad byte before anything else

    std::size_t pos = 0;
    long long n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw graph6_error("decode_graph6: order above 258047 not supported", 1);
        if (text.size() < 4)
            throw graph6_error("decode_graph6: truncated order field", text.size());
        n = (static_cast<long long>(value_at(1)) << 12)
            | (static_cast<long long>(value_at(2)) << 6) | value_at(3);
        pos = 4;
    } else {
        n = value_at(0);
        pos = 1;
    }

    const long long pairs = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
    if (text.size() - pos < body)
        throw graph6_error("decode_graph6: truncated edge data", text.size());
    if (text.size() - pos > body)
        throw graph6_error("decode_graph6: trailing bytes after edge data", pos + body);

    Graph g(static_cast<int>(n));
    long long bit_index = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit_index) {
            const int word = value_at(pos + static_cast<std::size_t>(bit_index / 6));
            if ((word >> (5 - bit_index % 6)) & 1)
                g.add_edge(u, v);
        }
    return g;
}

} // namespace worm

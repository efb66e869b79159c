#include "vm/graph6.hpp"

#include <istream>

namespace vm {

namespace {

constexpr int kBias = 63;   // printable offset
constexpr int kLong = 126;  // '~', long-form size marker

} // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.size();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kBias + n));
    } else {
        // 18-bit size, three 6-bit groups, big-endian
        out.push_back(static_cast<char>(kLong));
        out.push_back(static_cast<char>(kBias + ((n >> 12) & 0x3f)));
        out.push_back(static_cast<char>(kBias + ((n >> 6) & 0x3f)));
        out.push_back(static_cast<char>(kBias + (n & 0x3f)));
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(kBias + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - nbits))));
    return out;
}

Graph from_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 input", 0);

    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw ParseError("truncated graph6 input", pos);
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < kBias || c > kLong) throw ParseError("invalid graph6 character", pos);
        ++pos;
        return c - kBias;
    };

    long n;
    int first = next();
    if (first == kLong - kBias) {
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == kLong)
            throw CapacityError("graph6 8-byte order form exceeds supported size");
        long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
        if (n <= 62) throw ParseError("non-canonical long-form graph6 order", 1);
    } else {
        n = first;
    }
    if (n > kMaxVertices)
        throw CapacityError("graph6 order " + std::to_string(n) + " exceeds limit " +
                            std::to_string(kMaxVertices));

    Graph g(static_cast<int>(n));
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            if (nbits == 0) {
                acc = next();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(row, col);
            --nbits;
        }
    if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
        throw ParseError("nonzero padding bits in graph6 input", pos - 1);
    if (pos != text.size()) throw ParseError("trailing bytes after graph6 data", pos);
    return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view sv = line;
        while (!sv.empty() && (sv.back() == '\r' || sv.back() == '\n')) sv.remove_suffix(1);
        if (sv.empty()) continue;
        out.push_back(from_graph6(sv));
    }
    return out;
}

} // namespace vm

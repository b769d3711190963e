#include "filar/graph6.hpp"

namespace filar {

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n + 63));

    int bits = 0;
    int acc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bits = 0;
                acc = 0;
            }
        }
    }
    if (bits > 0)
        out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Graph graph6_decode(const std::string& line) {
    if (line.empty())
        throw MalformedGraph6("empty graph6 line");
    const unsigned char head = static_cast<unsigned char>(line[0]);
    if (head == 126)
        throw UnsupportedLength("extended graph6 headers (n > 62) are not supported");
    if (head < 63 || head > 125)
        throw MalformedGraph6("invalid graph6 header byte");
    const int n = head - 63;
    if (n < 1)
        throw MalformedGraph6("graph6 line encodes an empty graph");

    const int nbits = n * (n - 1) / 2;
    const int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(line.size()) != 1 + nbytes)
        throw MalformedGraph6("graph6 line length does not match header");

    std::vector<std::vector<int>> adjacency(n, std::vector<int>(n, 0));
    int bit_index = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit_index) {
            const unsigned char c = static_cast<unsigned char>(line[1 + bit_index / 6]);
            if (c < 63 || c > 126)
                throw MalformedGraph6("invalid graph6 data byte");
            const int bit = ((c - 63) >> (5 - bit_index % 6)) & 1;
            adjacency[i][j] = adjacency[j][i] = bit;
        }
    }
    // Padding bits of the final byte must be zero.
    if (nbits % 6 != 0) {
        const unsigned char last = static_cast<unsigned char>(line.back()) - 63;
        if (last & ((1 << (6 - nbits % 6)) - 1))
            throw MalformedGraph6("nonzero padding bits");
    }
    return Graph::validate(adjacency);
}

} // namespace filar

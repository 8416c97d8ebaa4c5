#include "quadfree/graph6.hpp"

#include <string>

namespace quadfree {

namespace {
constexpr unsigned kMediumMax = 258047; // above this the format needs 8-byte sizes
}

std::string graph6_encode(const Graph& g) {
    unsigned n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= kMediumMax) {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    } else {
        throw TooLarge("graph6 encoding supports at most " +
                       std::to_string(kMediumMax) + " vertices");
    }
    unsigned buf = 0, nbits = 0;
    for (unsigned v = 1; v < n; ++v)
        for (unsigned u = 0; u < v; ++u) {
            buf = (buf << 1) | (g.adjacent(u, v) ? 1u : 0u);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + buf));
                buf = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (buf << (6 - nbits))));
    return out;
}

Graph graph6_decode(const std::string& input) {
    std::string s = input;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    if (!s.empty() && s.back() == '\n') s.pop_back();
    if (s.empty()) throw MalformedGraph6("empty graph6 string");
    for (char c : s)
        if (c < 63 || c > 126)
            throw MalformedGraph6("byte out of the printable graph6 range");

    uint64_t n;
    size_t pos;
    if (s[0] != '~') {
        n = static_cast<unsigned char>(s[0]) - 63u;
        pos = 1;
    } else {
        if (s.size() < 4) throw MalformedGraph6("truncated size field");
        if (s[1] == '~')
            throw MalformedGraph6("8-byte size fields are beyond the supported range");
        n = (static_cast<uint64_t>(s[1] - 63) << 12) |
            (static_cast<uint64_t>(s[2] - 63) << 6) |
            static_cast<uint64_t>(s[3] - 63);
        pos = 4;
    }
    uint64_t nbits = n * (n - 1) / 2;
    size_t need = static_cast<size_t>((nbits + 5) / 6);
    if (s.size() - pos != need)
        throw MalformedGraph6("payload length does not match the vertex count");

    std::vector<std::pair<unsigned, unsigned>> edges;
    uint64_t b = 0;
    for (unsigned v = 1; v < n; ++v)
        for (unsigned u = 0; u < v; ++u, ++b) {
            unsigned byte = static_cast<unsigned>(s[pos + b / 6] - 63);
            if ((byte >> (5 - b % 6)) & 1) edges.emplace_back(u, v);
        }
    for (uint64_t pad = nbits; pad < need * 6; ++pad) {
        unsigned byte = static_cast<unsigned>(s[pos + pad / 6] - 63);
        if ((byte >> (5 - pad % 6)) & 1)
            throw MalformedGraph6("nonzero padding bits");
    }
    return Graph::from_edges(static_cast<unsigned>(n), edges);
}

} // namespace quadfree

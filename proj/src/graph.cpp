#include "quadfree/graph.hpp"

#include <bit>
#include <string>

namespace quadfree {

Graph Graph::from_edges(unsigned n,
                        const std::vector<std::pair<unsigned, unsigned>>& edges) {
    unsigned w = (n + 63) / 64;
    if (w == 0) w = 1;
    Graph g(n, w);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw VertexOutOfRange("edge endpoint " + std::to_string(u >= n ? u : v) +
                                   " out of range for n = " + std::to_string(n));
        if (u == v) throw SelfLoop("self-loop at vertex " + std::to_string(u));
        uint64_t& word = g.rows_[static_cast<size_t>(u) * w + v / 64];
        uint64_t bit = 1ull << (v % 64);
        if (word & bit)
            throw DuplicateEdge("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                " listed twice");
        word |= bit;
        g.rows_[static_cast<size_t>(v) * w + u / 64] |= 1ull << (u % 64);
        ++g.e_;
    }
    g.degrees_.resize(n);
    for (unsigned v = 0; v < n; ++v) {
        unsigned d = 0;
        const uint64_t* r = g.row(v);
        for (unsigned i = 0; i < w; ++i) d += std::popcount(r[i]);
        g.degrees_[v] = d;
    }
    return g;
}

void Graph::check_vertex(unsigned v) const {
    if (v >= n_)
        throw VertexOutOfRange("vertex " + std::to_string(v) +
                               " out of range for n = " + std::to_string(n_));
}

bool Graph::adjacent(unsigned u, unsigned v) const {
    check_vertex(u);
    check_vertex(v);
    return (row(u)[v / 64] >> (v % 64)) & 1;
}

unsigned Graph::degree(unsigned v) const {
    check_vertex(v);
    return degrees_[v];
}

std::vector<unsigned> Graph::neighbors(unsigned v) const {
    check_vertex(v);
    std::vector<unsigned> result;
    result.reserve(degrees_[v]);
    const uint64_t* r = row(v);
    for (unsigned i = 0; i < w_; ++i) {
        uint64_t word = r[i];
        while (word) {
            result.push_back(i * 64 + std::countr_zero(word));
            word &= word - 1;
        }
    }
    return result;
}

std::vector<std::pair<unsigned, unsigned>> Graph::edges() const {
    std::vector<std::pair<unsigned, unsigned>> result;
    result.reserve(e_);
    for (unsigned u = 0; u < n_; ++u)
        for (unsigned v : neighbors(u))
            if (u < v) result.emplace_back(u, v);
    return result;
}

unsigned Graph::common_neighbor_count(unsigned u, unsigned v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw SameVertex("common neighbors of a vertex with itself");
    const uint64_t* ru = row(u);
    const uint64_t* rv = row(v);
    unsigned count = 0;
    for (unsigned i = 0; i < w_; ++i) count += std::popcount(ru[i] & rv[i]);
    return count;
}

std::optional<C4Witness> find_c4(const Graph& g) {
    unsigned n = g.n(), w = g.words_per_row();
    for (unsigned u = 0; u < n; ++u) {
        const uint64_t* ru = g.row(u);
        for (unsigned v = u + 1; v < n; ++v) {
            const uint64_t* rv = g.row(v);
            unsigned count = 0;
            for (unsigned i = 0; i < w; ++i) count += std::popcount(ru[i] & rv[i]);
            if (count >= 2) {
                unsigned found[2], got = 0;
                for (unsigned i = 0; i < w && got < 2; ++i) {
                    uint64_t word = ru[i] & rv[i];
                    while (word && got < 2) {
                        found[got++] = i * 64 + std::countr_zero(word);
                        word &= word - 1;
                    }
                }
                return C4Witness{u, found[0], v, found[1]};
            }
        }
    }
    return std::nullopt;
}

bool is_c4_free(const Graph& g) { return !find_c4(g).has_value(); }

uint64_t count_2paths(const Graph& g) {
    uint64_t total = 0;
    for (unsigned v = 0; v < g.n(); ++v) {
        uint64_t d = g.degree(v);
        total += d * (d - 1) / 2;
    }
    return total;
}

DegreeClassCounts degree_classes(const Graph& g, unsigned q) {
    DegreeClassCounts c;
    c.q = q;
    if (g.n() == 0) return c;
    c.min_degree = g.degree(0);
    c.max_degree = g.degree(0);
    for (unsigned v = 0; v < g.n(); ++v) {
        unsigned d = g.degree(v);
        if (d < c.min_degree) c.min_degree = d;
        if (d > c.max_degree) c.max_degree = d;
        // classes live at signed offsets from q; degrees are unsigned
        long long off = static_cast<long long>(d) - static_cast<long long>(q);
        if (off == 2) ++c.at_q_plus_2;
        else if (off == 1) ++c.at_q_plus_1;
        else if (off == 0) ++c.at_q;
        else if (off == -1) ++c.at_q_minus_1;
        else if (off == -2) ++c.at_q_minus_2;
        else if (off <= -3) ++c.le_q_minus_3;
        else ++c.ge_q_plus_3;
    }
    return c;
}

} // namespace quadfree

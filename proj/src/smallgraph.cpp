#include "quadfree/smallgraph.hpp"

#include <bit>
#include <utility>
#include <vector>

namespace quadfree {

SmallGraph::SmallGraph(unsigned n) : n_(n) {
    if (n > max_vertices) throw TooLarge("mask graphs support at most 64 vertices");
}

SmallGraph SmallGraph::from_graph(const Graph& g) {
    if (g.n() > max_vertices) throw TooLarge("mask graphs support at most 64 vertices");
    SmallGraph s(static_cast<unsigned>(g.n()));
    for (const auto& [u, v] : g.edges()) s.add_edge(u, v);
    return s;
}

Graph SmallGraph::to_graph() const {
    std::vector<std::pair<unsigned, unsigned>> edges;
    for (unsigned u = 0; u < n_; ++u) {
        uint64_t higher = (u + 1 < 64) ? (adj_[u] >> (u + 1) << (u + 1)) : 0;
        while (higher) {
            unsigned v = static_cast<unsigned>(std::countr_zero(higher));
            higher &= higher - 1;
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n_, edges);
}

uint64_t SmallGraph::e() const {
    uint64_t twice = 0;
    for (unsigned v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

void SmallGraph::check_vertex(unsigned v) const {
    if (v >= n_) throw VertexOutOfRange("vertex index out of range");
}

void SmallGraph::check_pair(unsigned u, unsigned v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw SelfLoop("self-loops are not allowed");
}

bool SmallGraph::adjacent(unsigned u, unsigned v) const {
    check_pair(u, v);
    return (adj_[u] >> v) & 1u;
}

unsigned SmallGraph::degree(unsigned v) const {
    check_vertex(v);
    return static_cast<unsigned>(std::popcount(adj_[v]));
}

uint64_t SmallGraph::neighbor_mask(unsigned v) const {
    check_vertex(v);
    return adj_[v];
}

void SmallGraph::add_edge(unsigned u, unsigned v) {
    check_pair(u, v);
    if ((adj_[u] >> v) & 1u) throw DuplicateEdge("edge already present");
    adj_[u] |= uint64_t(1) << v;
    adj_[v] |= uint64_t(1) << u;
}

void SmallGraph::remove_edge(unsigned u, unsigned v) {
    check_pair(u, v);
    if (!((adj_[u] >> v) & 1u)) throw DomainError("edge not present");
    adj_[u] &= ~(uint64_t(1) << v);
    adj_[v] &= ~(uint64_t(1) << u);
}

unsigned SmallGraph::add_vertex() {
    if (n_ == max_vertices) throw TooLarge("mask graphs support at most 64 vertices");
    return n_++;
}

void SmallGraph::add_edges_to(unsigned v, uint64_t mask) {
    check_vertex(v);
    uint64_t rest = mask;
    while (rest) {
        unsigned u = static_cast<unsigned>(std::countr_zero(rest));
        rest &= rest - 1;
        add_edge(v, u);
    }
}

bool SmallGraph::c4_free() const {
    for (unsigned u = 0; u + 1 < n_; ++u)
        for (unsigned v = u + 1; v < n_; ++v)
            if (std::popcount(adj_[u] & adj_[v]) >= 2) return false;
    return true;
}

uint64_t SmallGraph::count_2paths() const {
    uint64_t total = 0;
    for (unsigned v = 0; v < n_; ++v) {
        uint64_t d = std::popcount(adj_[v]);
        total += d * (d - 1) / 2;
    }
    return total;
}

bool SmallGraph::operator==(const SmallGraph& other) const {
    if (n_ != other.n_) return false;
    for (unsigned v = 0; v < n_; ++v)
        if (adj_[v] != other.adj_[v]) return false;
    return true;
}

}  // namespace quadfree

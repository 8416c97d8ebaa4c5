#ifndef QUADFREE_GRAPH_HPP
#define QUADFREE_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "quadfree/errors.hpp"

namespace quadfree {

// Immutable simple graph on vertices 0..n-1 with packed bit-row adjacency.
// Symmetric, irreflexive; safe to share across threads once built.
class Graph {
public:
    // Throws SelfLoop, DuplicateEdge, VertexOutOfRange.
    static Graph from_edges(unsigned n,
                            const std::vector<std::pair<unsigned, unsigned>>& edges);

    unsigned n() const { return n_; }
    uint64_t e() const { return e_; }

    bool adjacent(unsigned u, unsigned v) const;
    unsigned degree(unsigned v) const;
    std::vector<unsigned> neighbors(unsigned v) const;
    std::vector<std::pair<unsigned, unsigned>> edges() const; // sorted, u < v

    // |Gamma(u) cap Gamma(v)| by bit-row intersection. SameVertex on u = v.
    unsigned common_neighbor_count(unsigned u, unsigned v) const;

    // Packed row access for kernel loops: words_per_row() words per vertex.
    const uint64_t* row(unsigned v) const { return rows_.data() + static_cast<size_t>(v) * w_; }
    unsigned words_per_row() const { return w_; }

private:
    Graph(unsigned n, unsigned w) : n_(n), w_(w), rows_(static_cast<size_t>(n) * w) {}
    void check_vertex(unsigned v) const;

    unsigned n_ = 0;
    unsigned w_ = 0; // 64-bit words per row
    uint64_t e_ = 0;
    std::vector<uint64_t> rows_;
    std::vector<unsigned> degrees_;
};

// Four vertices in cycle order: a-b-c-d-a, with a,c the first violating
// pair (lexicographic scan over pairs) and b,d its two smallest common
// neighbors. Deterministic for tests.
struct C4Witness {
    unsigned a, b, c, d;
};

// A graph is C4-free iff every vertex pair has at most one common neighbor.
std::optional<C4Witness> find_c4(const Graph& g);
bool is_c4_free(const Graph& g);

// Number of 2-paths: sum over vertices of C(d(v), 2).
uint64_t count_2paths(const Graph& g);

// Census of vertex degrees around the parameter q.
struct DegreeClassCounts {
    unsigned q = 0;
    uint64_t at_q_plus_2 = 0;   // |X_{q+2}|
    uint64_t at_q_plus_1 = 0;   // |X_{q+1}|
    uint64_t at_q = 0;          // |X_q|
    uint64_t at_q_minus_1 = 0;  // |X_{q-1}|
    uint64_t at_q_minus_2 = 0;  // |X_{q-2}|
    uint64_t le_q_minus_3 = 0;  // |X_{<=q-3}|
    uint64_t ge_q_plus_3 = 0;   // catch-all above, so the counts sum to n
    unsigned min_degree = 0;
    unsigned max_degree = 0;
};

DegreeClassCounts degree_classes(const Graph& g, unsigned q);

} // namespace quadfree

#endif

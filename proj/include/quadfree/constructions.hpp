#ifndef QUADFREE_CONSTRUCTIONS_HPP
#define QUADFREE_CONSTRUCTIONS_HPP

#include <vector>

#include "quadfree/galois.hpp"
#include "quadfree/graph.hpp"

namespace quadfree {

struct PolarityGraphReport {
    unsigned q = 0;
    unsigned n = 0;                           // q^2+q+1
    uint64_t e = 0;                           // q(q+1)^2 / 2
    uint64_t deg_q_plus_1_count = 0;          // q^2
    uint64_t deg_q_count = 0;                 // q+1
    std::vector<unsigned> absolute_vertices;  // positions in the canonical point order
    bool c4_free = false;
};

// The orthogonal polarity graph on the canonical point ordering of PG(2,q):
// vertices are the points, x ~ y iff x lies on the polar line of y (dot
// product zero) and x != y. Every report field is recomputed from the
// finished graph and checked against the closed forms before returning.
Graph polarity_graph(const Field& f, PolarityGraphReport* report = nullptr);

// Remove one vertex, relabeling the rest in order. VertexOutOfRange.
Graph delete_vertex(const Graph& g, unsigned v);

// Remove the lowest-indexed vertex of minimum degree. EmptyGraph.
Graph delete_min_degree_vertex(const Graph& g);

// delete_min_degree_vertex(polarity_graph(q)): q^2+q vertices and
// q(q+1)^2/2 - q edges, C4-free, with q^2-q vertices of degree q+1 and 2q
// of degree q — all asserted before returning. NotPrimePower for invalid q;
// OddQ when require_even is set and q is odd.
Graph extremal_witness(unsigned q, bool require_even = false);

} // namespace quadfree

#endif

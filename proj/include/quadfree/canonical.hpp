#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quadfree/smallgraph.hpp"

namespace quadfree {

// Canonical relabeling of a graph together with the automorphism data the
// isomorph-free search needs. Two graphs are isomorphic exactly when their
// canon_adj vectors are equal.
struct CanonicalForm {
    unsigned n = 0;
    // labeling[v] = position of vertex v in the canonical order.
    std::vector<unsigned> labeling;
    // Adjacency masks of the relabeled graph (bit u of canon_adj[v] set iff
    // canonical vertices v and u are adjacent).
    std::vector<uint64_t> canon_adj;
    // A generating set for the automorphism group of the input graph, each
    // entry a permutation p with p[v] = image of v.
    std::vector<std::vector<unsigned>> generators;
    // orbit[v] = smallest vertex in v's orbit under the automorphism group.
    std::vector<unsigned> orbit;
    // Number of discrete partitions inspected (diagnostic).
    uint64_t leaves_visited = 0;
};

CanonicalForm canonical_form(const SmallGraph& g);

// graph6 string of the canonically relabeled graph: a portable isomorphism
// class key.
std::string canonical_g6(const SmallGraph& g);

bool isomorphic(const SmallGraph& a, const SmallGraph& b);

// Refines the given ordered partition of the vertices of g until it is
// equitable: every two vertices in one cell have equally many neighbors in
// every cell. Splitting is deterministic (by ascending neighbor count, in
// place), so the result is relabeling-equivariant. Exposed for testing and
// reuse; canonical_form starts from the all-vertices partition.
std::vector<std::vector<unsigned>> equitable_refinement(
    const SmallGraph& g, std::vector<std::vector<unsigned>> cells);

}  // namespace quadfree

#pragma once

#include <array>
#include <cstdint>

#include "quadfree/errors.hpp"
#include "quadfree/graph.hpp"

namespace quadfree {

// Adjacency-mask graph on at most 64 vertices. Cheap to copy, mutate and
// undo, which is what the exhaustive search needs; converts losslessly to
// and from the packed Graph type used everywhere else.
class SmallGraph {
  public:
    static constexpr unsigned max_vertices = 64;

    SmallGraph() = default;
    explicit SmallGraph(unsigned n);

    static SmallGraph from_graph(const Graph& g);
    Graph to_graph() const;

    unsigned n() const { return n_; }
    uint64_t e() const;

    bool adjacent(unsigned u, unsigned v) const;
    unsigned degree(unsigned v) const;
    uint64_t neighbor_mask(unsigned v) const;

    void add_edge(unsigned u, unsigned v);
    void remove_edge(unsigned u, unsigned v);
    // Appends an isolated vertex and returns its index.
    unsigned add_vertex();

    // Ties every vertex in `mask` to vertex v (used when a search step
    // attaches a new vertex with a whole neighborhood at once).
    void add_edges_to(unsigned v, uint64_t mask);

    bool c4_free() const;
    uint64_t count_2paths() const;

    bool operator==(const SmallGraph& other) const;

  private:
    void check_vertex(unsigned v) const;
    void check_pair(unsigned u, unsigned v) const;

    unsigned n_ = 0;
    std::array<uint64_t, max_vertices> adj_{};
};

}  // namespace quadfree

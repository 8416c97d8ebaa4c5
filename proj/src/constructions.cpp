#include "quadfree/constructions.hpp"

#include <algorithm>
#include <string>

#include "quadfree/projective.hpp"

namespace quadfree {

namespace {

void require(bool condition, const std::string& what) {
    if (!condition) throw Error("construction invariant violated: " + what);
}

} // namespace

Graph polarity_graph(const Field& f, PolarityGraphReport* report) {
    const unsigned q = f.q();
    std::vector<ProjPoint> points = all_points(f);
    const unsigned n = static_cast<unsigned>(points.size());

    std::vector<std::array<unsigned, 3>> coords;
    coords.reserve(n);
    for (const ProjPoint& p : points) coords.push_back(p.indices());

    auto dot = [&f](const std::array<unsigned, 3>& a, const std::array<unsigned, 3>& b) {
        unsigned s = 0;
        for (unsigned i = 0; i < 3; ++i) s = f.add(s, f.mul(a[i], b[i]));
        return s;
    };

    std::vector<std::pair<unsigned, unsigned>> edges;
    edges.reserve(static_cast<size_t>(q) * (q + 1) * (q + 1) / 2);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            if (dot(coords[i], coords[j]) == 0) edges.emplace_back(i, j);

    Graph g = Graph::from_edges(n, edges);

    PolarityGraphReport r;
    r.q = q;
    r.n = n;
    r.e = g.e();
    for (unsigned v = 0; v < n; ++v) {
        unsigned d = g.degree(v);
        if (d == q + 1) ++r.deg_q_plus_1_count;
        else if (d == q) ++r.deg_q_count;
        else require(false, "polarity graph degree outside {q, q+1}");
        if (dot(coords[v], coords[v]) == 0) r.absolute_vertices.push_back(v);
    }
    r.c4_free = is_c4_free(g);

    require(r.n == static_cast<unsigned>(q) * q + q + 1, "vertex count");
    require(r.e == static_cast<uint64_t>(q) * (q + 1) * (q + 1) / 2, "edge count");
    require(r.deg_q_plus_1_count == static_cast<uint64_t>(q) * q, "degree-(q+1) count");
    require(r.deg_q_count == q + 1, "degree-q count");
    require(r.absolute_vertices.size() == q + 1, "absolute point count");
    for (unsigned v : r.absolute_vertices)
        require(g.degree(v) == q, "absolute vertices must have degree q");
    require(r.c4_free, "polarity graph must be C4-free");

    if (report) *report = std::move(r);
    return g;
}

Graph delete_vertex(const Graph& g, unsigned v) {
    if (v >= g.n())
        throw VertexOutOfRange("vertex " + std::to_string(v) +
                               " out of range for n = " + std::to_string(g.n()));
    std::vector<std::pair<unsigned, unsigned>> edges;
    edges.reserve(g.e());
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        edges.emplace_back(a - (a > v ? 1 : 0), b - (b > v ? 1 : 0));
    }
    return Graph::from_edges(g.n() - 1, edges);
}

Graph delete_min_degree_vertex(const Graph& g) {
    if (g.n() == 0) throw EmptyGraph("cannot delete a vertex from the empty graph");
    unsigned best = 0;
    for (unsigned v = 1; v < g.n(); ++v)
        if (g.degree(v) < g.degree(best)) best = v;
    return delete_vertex(g, best);
}

Graph extremal_witness(unsigned q, bool require_even) {
    if (require_even && q % 2 != 0)
        throw OddQ("witness for order " + std::to_string(q) +
                   " requested with the even-order requirement");
    Field f(q); // NotPrimePower propagates
    Graph er = polarity_graph(f);
    Graph g = delete_min_degree_vertex(er);

    const uint64_t e0 = static_cast<uint64_t>(q) * (q + 1) * (q + 1) / 2 - q;
    require(g.n() == static_cast<unsigned>(q) * q + q, "witness vertex count");
    require(g.e() == e0, "witness edge count");
    require(is_c4_free(g), "witness must be C4-free");

    DegreeClassCounts c = degree_classes(g, q);
    require(c.at_q_plus_1 == static_cast<uint64_t>(q) * q - q, "witness degree-(q+1) count");
    require(c.at_q == 2ull * q, "witness degree-q count");
    require(c.at_q_plus_2 == 0 && c.at_q_minus_1 == 0 && c.at_q_minus_2 == 0 &&
                c.le_q_minus_3 == 0 && c.ge_q_plus_3 == 0,
            "witness degrees confined to {q, q+1}");
    return g;
}

} // namespace quadfree

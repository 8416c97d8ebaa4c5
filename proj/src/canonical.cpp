#include "quadfree/canonical.hpp"

#include <array>
#include <bit>
#include <cstddef>
#include <map>
#include <numeric>
#include <utility>

#include "quadfree/graph6.hpp"

namespace quadfree {

namespace {

uint64_t cell_mask(const std::vector<unsigned>& cell) {
    uint64_t m = 0;
    for (unsigned v : cell) m |= uint64_t(1) << v;
    return m;
}

unsigned uf_find(std::array<unsigned, 64>& parent, unsigned v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
}

void uf_unite(std::array<unsigned, 64>& parent, unsigned a, unsigned b) {
    parent[uf_find(parent, a)] = uf_find(parent, b);
}

// Individualization-refinement search for the lexicographically smallest
// relabeled adjacency matrix. Every discrete refinement ("leaf") is compared
// against the first leaf and the current best leaf; a tie with either one
// yields an automorphism. Siblings already known to be equivalent under
// automorphisms that fix the individualized path are skipped, which is what
// keeps highly symmetric graphs from exploding the tree.
struct Searcher {
    const SmallGraph& g;
    unsigned n;
    bool have_first = false;
    std::vector<uint64_t> first_key, best_key;
    std::vector<unsigned> first_label, best_label;
    std::vector<std::vector<unsigned>> gens;
    std::vector<unsigned> path;
    uint64_t leaves = 0;

    explicit Searcher(const SmallGraph& graph) : g(graph), n(graph.n()) {}

    // Row i carries the adjacency bits of canonical vertex i with bit
    // (63 - j) set for canonical neighbor j, so numeric comparison of the
    // vector is lexicographic comparison of the relabeled matrix.
    std::vector<uint64_t> leaf_key(const std::vector<unsigned>& label) const {
        std::array<unsigned, 64> inv{};
        for (unsigned v = 0; v < n; ++v) inv[label[v]] = v;
        std::vector<uint64_t> key(n, 0);
        for (unsigned i = 0; i < n; ++i) {
            uint64_t row = 0;
            uint64_t nb = g.neighbor_mask(inv[i]);
            while (nb) {
                unsigned w = static_cast<unsigned>(std::countr_zero(nb));
                nb &= nb - 1;
                row |= uint64_t(1) << (63 - label[w]);
            }
            key[i] = row;
        }
        return key;
    }

    void record_generator(const std::vector<unsigned>& base_label,
                          const std::vector<unsigned>& label) {
        std::array<unsigned, 64> base_inv{};
        for (unsigned v = 0; v < n; ++v) base_inv[base_label[v]] = v;
        std::vector<unsigned> sigma(n);
        bool identity = true;
        for (unsigned v = 0; v < n; ++v) {
            sigma[v] = base_inv[label[v]];
            if (sigma[v] != v) identity = false;
        }
        if (!identity) gens.push_back(std::move(sigma));
    }

    void leaf(const std::vector<std::vector<unsigned>>& cells) {
        std::vector<unsigned> label(n);
        for (size_t i = 0; i < cells.size(); ++i) label[cells[i][0]] = static_cast<unsigned>(i);
        std::vector<uint64_t> key = leaf_key(label);
        ++leaves;
        if (!have_first) {
            have_first = true;
            first_key = key;
            first_label = label;
            best_key = std::move(key);
            best_label = std::move(label);
            return;
        }
        if (key == first_key) {
            record_generator(first_label, label);
            return;
        }
        if (key == best_key) {
            record_generator(best_label, label);
            return;
        }
        if (key < best_key) {
            best_key = std::move(key);
            best_label = std::move(label);
        }
    }

    // Orbits of the subgroup generated by the discovered automorphisms that
    // fix every vertex individualized so far. Skipping a sibling merged with
    // an already-tried one is sound: its subtree is the image of the tried
    // subtree under such an automorphism, so it contributes the same leaf
    // keys and no new best leaf.
    std::array<unsigned, 64> prefix_orbits() {
        std::array<unsigned, 64> parent{};
        std::iota(parent.begin(), parent.begin() + n, 0u);
        for (const auto& sigma : gens) {
            bool fixes = true;
            for (unsigned w : path)
                if (sigma[w] != w) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (unsigned v = 0; v < n; ++v) uf_unite(parent, v, sigma[v]);
        }
        return parent;
    }

    void descend(std::vector<std::vector<unsigned>> cells) {
        size_t target = cells.size();
        size_t target_size = SIZE_MAX;
        for (size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1 && cells[i].size() < target_size) {
                target_size = cells[i].size();
                target = i;
            }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }

        const std::vector<unsigned> candidates = cells[target];
        std::vector<unsigned> tried;
        for (unsigned v : candidates) {
            if (!tried.empty()) {
                auto parent = prefix_orbits();
                bool skip = false;
                for (unsigned t : tried)
                    if (uf_find(parent, t) == uf_find(parent, v)) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
            }
            std::vector<std::vector<unsigned>> child = cells;
            std::vector<unsigned> rest;
            rest.reserve(candidates.size() - 1);
            for (unsigned u : candidates)
                if (u != v) rest.push_back(u);
            child[target] = {v};
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1,
                         std::move(rest));
            path.push_back(v);
            descend(equitable_refinement(g, std::move(child)));
            path.pop_back();
            tried.push_back(v);
        }
    }
};

}  // namespace

std::vector<std::vector<unsigned>> equitable_refinement(
    const SmallGraph& g, std::vector<std::vector<unsigned>> cells) {
    const unsigned n = g.n();
    uint64_t seen = 0;
    size_t total = 0;
    for (const auto& cell : cells) {
        if (cell.empty()) throw DomainError("partition cells must be non-empty");
        for (unsigned v : cell) {
            if (v >= n) throw VertexOutOfRange("partition vertex out of range");
            if ((seen >> v) & 1u) throw DomainError("partition repeats a vertex");
            seen |= uint64_t(1) << v;
            ++total;
        }
    }
    if (total != n) throw DomainError("partition must cover every vertex");

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t si = 0; si < cells.size() && !changed; ++si) {
            const uint64_t smask = cell_mask(cells[si]);
            for (size_t di = 0; di < cells.size() && !changed; ++di) {
                if (cells[di].size() <= 1) continue;
                const int c0 = std::popcount(g.neighbor_mask(cells[di][0]) & smask);
                bool uniform = true;
                for (unsigned v : cells[di])
                    if (std::popcount(g.neighbor_mask(v) & smask) != c0) {
                        uniform = false;
                        break;
                    }
                if (uniform) continue;

                std::map<int, std::vector<unsigned>> groups;
                for (unsigned v : cells[di])
                    groups[std::popcount(g.neighbor_mask(v) & smask)].push_back(v);
                std::vector<std::vector<unsigned>> pieces;
                pieces.reserve(groups.size());
                for (auto& [count, members] : groups) pieces.push_back(std::move(members));
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(di));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(di),
                             std::make_move_iterator(pieces.begin()),
                             std::make_move_iterator(pieces.end()));
                changed = true;
            }
        }
    }
    return cells;
}

CanonicalForm canonical_form(const SmallGraph& g) {
    const unsigned n = g.n();
    CanonicalForm out;
    out.n = n;
    if (n == 0) {
        out.leaves_visited = 1;
        return out;
    }

    std::vector<unsigned> all(n);
    std::iota(all.begin(), all.end(), 0u);
    Searcher searcher(g);
    searcher.descend(equitable_refinement(g, {std::move(all)}));

    out.labeling = searcher.best_label;
    out.canon_adj.assign(n, 0);
    for (unsigned v = 0; v < n; ++v) {
        uint64_t nb = g.neighbor_mask(v);
        while (nb) {
            unsigned w = static_cast<unsigned>(std::countr_zero(nb));
            nb &= nb - 1;
            out.canon_adj[out.labeling[v]] |= uint64_t(1) << out.labeling[w];
        }
    }
    out.generators = std::move(searcher.gens);

    std::array<unsigned, 64> parent{};
    std::iota(parent.begin(), parent.begin() + n, 0u);
    for (const auto& sigma : out.generators)
        for (unsigned v = 0; v < n; ++v) uf_unite(parent, v, sigma[v]);
    std::array<unsigned, 64> least{};
    for (unsigned v = 0; v < n; ++v) least[v] = n;
    for (unsigned v = 0; v < n; ++v) {
        unsigned r = uf_find(parent, v);
        if (v < least[r]) least[r] = v;
    }
    out.orbit.resize(n);
    for (unsigned v = 0; v < n; ++v) out.orbit[v] = least[uf_find(parent, v)];

    out.leaves_visited = searcher.leaves;
    return out;
}

std::string canonical_g6(const SmallGraph& g) {
    CanonicalForm cf = canonical_form(g);
    std::vector<std::pair<unsigned, unsigned>> edges;
    for (unsigned i = 0; i < cf.n; ++i) {
        uint64_t higher = (i + 1 < 64) ? (cf.canon_adj[i] >> (i + 1) << (i + 1)) : 0;
        while (higher) {
            unsigned j = static_cast<unsigned>(std::countr_zero(higher));
            higher &= higher - 1;
            edges.emplace_back(i, j);
        }
    }
    return graph6_encode(Graph::from_edges(cf.n, edges));
}

bool isomorphic(const SmallGraph& a, const SmallGraph& b) {
    if (a.n() != b.n()) return false;
    return canonical_form(a).canon_adj == canonical_form(b).canon_adj;
}

}  // namespace quadfree

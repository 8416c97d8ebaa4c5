#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadfree/graph.hpp"
#include "quadfree/smallgraph.hpp"

namespace quadfree {

struct SearchConfig {
    unsigned n = 1;

    // Caller-vouched lower bound on the answer. A value > 0 tightens pruning
    // from the start; if the search exhausts the tree and proves the claim
    // wrong, it throws DomainError rather than report a value it did not
    // verify.
    uint64_t seed_edges = 0;
    // Optional witness realizing a lower bound: must have n vertices and be
    // C4-free. Becomes the incumbent.
    std::optional<SmallGraph> seed_witness;

    // Proven upper bound on the answer. Defaults to default_search_ceiling(n).
    // Must be >= the seed when both are present.
    std::optional<uint64_t> ceiling;

    // Wall-clock budget in seconds; <= 0 means default_budget_secs().
    double budget_secs = 0.0;

    unsigned workers = 1;

    // Also enumerate every extremal graph (fills SearchResult::extremal_g6).
    bool enumerate_all = false;
};

struct SearchResult {
    unsigned n = 0;
    uint64_t ex = 0;
    // graph6 of one maximum C4-free graph found (always set, with exactly
    // `ex` edges).
    std::string witness_g6;
    // Canonical graph6 of every extremal graph, sorted; filled only when
    // enumerate_all was set and the enumeration finished within budget.
    std::vector<std::string> extremal_g6;
    uint64_t nodes = 0;
    double wall_secs = 0.0;
    // True when the value is proved: the tree was exhausted, or the incumbent
    // met the proven ceiling. False means the budget expired first and `ex`
    // is only a lower bound.
    bool optimal = false;
};

// QUADFREE_BUDGET_SECS when set to a positive number, otherwise 600.
double default_budget_secs();

// min(edge-count ceiling from the pair bound, 1/2 q(q+1)^2 - q when
// n = q^2+q with q a power of two).
uint64_t default_search_ceiling(unsigned n);

// Exact maximum number of edges of a C4-free graph on cfg.n vertices, by
// vertex-incremental isomorph-free augmentation with admissible completion
// bounds. Runs to exhaustion or to the budget; see SearchResult::optimal.
SearchResult max_edges_c4free(const SearchConfig& cfg);

// Exhaustive maximum over all 2^C(n,2) edge subsets, with an independent
// quadruple-enumeration C4 test. The oracle the search is measured against.
uint64_t brute_force_oracle(unsigned n);

// All pairwise non-isomorphic C4-free graphs on n vertices with exactly
// ex_value edges (canonical forms, deterministic order). ex_value must be
// the true maximum for "extremal" to mean anything, but any target works.
// Throws BudgetExhausted if the budget expires before the list is complete.
std::vector<Graph> enumerate_extremal(unsigned n, uint64_t ex_value,
                                      const SearchConfig& base = SearchConfig{});

// Number of isomorphism classes of C4-free graphs on exactly n vertices
// (unpruned augmentation census; validates the generator against published
// counts). Throws BudgetExhausted if it cannot finish.
uint64_t count_c4free_classes(unsigned n, double budget_secs = 0.0);

}  // namespace quadfree

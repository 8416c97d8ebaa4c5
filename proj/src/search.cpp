#include "quadfree/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>
#include <utility>

#include "quadfree/bounds.hpp"
#include "quadfree/canonical.hpp"
#include "quadfree/graph6.hpp"

namespace quadfree {

namespace {

using Clock = std::chrono::steady_clock;

uint64_t perm_mask(uint64_t mask, const std::vector<unsigned>& sigma) {
    uint64_t out = 0;
    while (mask) {
        unsigned v = static_cast<unsigned>(std::countr_zero(mask));
        mask &= mask - 1;
        out |= uint64_t(1) << sigma[v];
    }
    return out;
}

// Growing a C4-free graph by one vertex keeps it C4-free exactly when the
// new neighborhood is pairwise common-neighbor-free in the old graph: a pair
// a,b with an existing common neighbor x would close the cycle new-a-x-b.
std::vector<uint64_t> candidate_neighborhoods(const SmallGraph& g) {
    const unsigned k = g.n();
    std::array<uint64_t, SmallGraph::max_vertices> compat{};
    for (unsigned v = 0; v < k; ++v) {
        uint64_t m = 0;
        for (unsigned u = 0; u < k; ++u)
            if (u != v && (g.neighbor_mask(v) & g.neighbor_mask(u)) == 0)
                m |= uint64_t(1) << u;
        compat[v] = m;
    }

    std::vector<uint64_t> out;
    // Every set emitted extends only to higher-indexed compatible vertices,
    // so each valid subset appears exactly once.
    auto rec = [&](auto&& self, uint64_t avail, uint64_t cur) -> void {
        out.push_back(cur);
        uint64_t it = avail;
        while (it) {
            unsigned v = static_cast<unsigned>(std::countr_zero(it));
            it &= it - 1;
            self(self, it & compat[v], cur | (uint64_t(1) << v));
        }
    };
    uint64_t all = (k == 64) ? ~uint64_t(0) : ((uint64_t(1) << k) - 1);
    rec(rec, all, 0);
    return out;
}

// One representative per orbit of the candidate sets under the generators,
// densest (then numerically smallest) representative first. The search needs
// this to be exact: trying two equivalent neighborhoods would emit the same
// child class twice.
std::vector<uint64_t> orbit_representatives(std::vector<uint64_t> cands,
                                            const std::vector<std::vector<unsigned>>& gens) {
    std::sort(cands.begin(), cands.end(), [](uint64_t a, uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa > pb;
        return a < b;
    });
    if (gens.empty()) return cands;

    std::unordered_set<uint64_t> seen;
    std::vector<uint64_t> reps, stack;
    for (uint64_t m : cands) {
        if (seen.count(m)) continue;
        reps.push_back(m);
        seen.insert(m);
        stack.assign(1, m);
        while (!stack.empty()) {
            uint64_t cur = stack.back();
            stack.pop_back();
            for (const auto& sigma : gens) {
                uint64_t im = perm_mask(cur, sigma);
                if (seen.insert(im).second) stack.push_back(im);
            }
        }
    }
    return reps;
}

struct Task {
    SmallGraph g;
    std::vector<std::vector<unsigned>> gens;
};

struct Engine {
    enum class Mode { Max, Enumerate, Census };

    unsigned n = 0;
    Mode mode = Mode::Max;
    uint64_t ceiling = 0;
    uint64_t target = 0;      // Enumerate: collect graphs with exactly this many edges
    uint64_t seed_floor = 0;  // Max: prune as if seed_floor edges were already found
    Clock::time_point deadline;
    std::vector<uint64_t> reiman;  // reiman[j] for j = 0..n

    std::atomic<uint64_t> best{0};
    std::mutex result_mu;
    SmallGraph best_graph;
    std::atomic<bool> stop{false};  // incumbent met the ceiling; value proved
    std::atomic<bool> out_of_time{false};
    std::atomic<uint64_t> nodes{0};
    std::atomic<uint64_t> census_count{0};
    std::mutex sink_mu;
    std::set<std::string> sink;

    std::vector<Task> frontier;

    // Optimistic completion bound: no completion of g to n vertices can have
    // more edges than this. Two admissible relaxations, take the smaller:
    //  - chain: each later vertex adds at most (order-1) edges, and every
    //    intermediate order j obeys the pair bound reiman[j];
    //  - waterfill: a C4-free graph on n vertices has at most C(n,2) paths
    //    of length two, raising any vertex from degree t to t+1 costs t of
    //    that budget, and every edge raises two degrees.
    uint64_t upper_bound_total(const SmallGraph& g, uint64_t e) const {
        const unsigned k = g.n();
        uint64_t chain = e;
        for (unsigned j = k + 1; j <= n; ++j)
            chain = std::min(chain + (j - 1), reiman[j]);

        std::array<uint16_t, SmallGraph::max_vertices + 1> degcnt{};
        uint64_t consumed = 0;
        for (unsigned v = 0; v < k; ++v) {
            uint64_t d = g.degree(v);
            consumed += d * (d - 1) / 2;
            ++degcnt[d];
        }
        const uint64_t pair_budget = uint64_t(n) * (n - 1) / 2;
        uint64_t rem = pair_budget > consumed ? pair_budget - consumed : 0;
        uint64_t increments = 0;
        unsigned le = 0;
        for (unsigned c = 0; c + 1 < n; ++c) {
            le += degcnt[c];
            const uint64_t affordable = le + (n - k);
            if (c == 0) {
                increments += affordable;
                continue;
            }
            uint64_t take = std::min<uint64_t>(affordable, rem / c);
            increments += take;
            rem -= take * c;
            if (take < affordable) break;
        }
        uint64_t waterfill = e + increments / 2;
        return std::min({chain, waterfill, ceiling});
    }

    bool prune(const SmallGraph& g, uint64_t e) const {
        if (mode == Mode::Census) return false;
        if (mode == Mode::Enumerate && e > target) return true;  // edges never go away
        uint64_t bound = upper_bound_total(g, e);
        if (mode == Mode::Enumerate) return bound < target;
        return bound <= std::max(best.load(std::memory_order_relaxed), seed_floor);
    }

    void reached_full(const SmallGraph& g, uint64_t e) {
        if (mode == Mode::Census) {
            census_count.fetch_add(1, std::memory_order_relaxed);
            return;
        }
        if (mode == Mode::Enumerate) {
            if (e == target) {
                std::string key = canonical_g6(g);
                std::lock_guard<std::mutex> lock(sink_mu);
                sink.insert(std::move(key));
            }
            return;
        }
        if (e > best.load(std::memory_order_relaxed)) {
            std::lock_guard<std::mutex> lock(result_mu);
            if (e > best.load(std::memory_order_relaxed)) {
                best_graph = g;
                best.store(e, std::memory_order_relaxed);
                if (e >= ceiling) stop.store(true, std::memory_order_relaxed);
            }
        }
    }

    // Isomorph-free DFS. split_depth < n turns nodes at that order into
    // frontier tasks instead of recursing. Returns false when aborted by the
    // deadline or a ceiling stop.
    bool dfs(const SmallGraph& g, const std::vector<std::vector<unsigned>>& gens,
             unsigned split_depth, bool count_self) {
        if (count_self) {
            uint64_t visited = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
            if ((visited & 255) == 0 && Clock::now() >= deadline) {
                out_of_time.store(true, std::memory_order_relaxed);
                return false;
            }
        }
        if (out_of_time.load(std::memory_order_relaxed)) return false;
        if (stop.load(std::memory_order_relaxed)) return false;

        const unsigned k = g.n();
        const uint64_t e = g.e();
        if (k == n) {
            reached_full(g, e);
            return !stop.load(std::memory_order_relaxed);
        }
        if (prune(g, e)) return true;
        if (k == split_depth) {
            frontier.push_back(Task{g, gens});
            return true;
        }

        std::vector<uint64_t> reps = orbit_representatives(candidate_neighborhoods(g), gens);
        for (uint64_t mask : reps) {
            SmallGraph child = g;
            unsigned w = child.add_vertex();
            child.add_edges_to(w, mask);
            const uint64_t child_e = e + static_cast<unsigned>(std::popcount(mask));
            if (child.n() == n) {
                // final order: the child is useful only if it records
                if (mode == Mode::Enumerate && child_e != target) continue;
                if (mode == Mode::Max &&
                    child_e <= std::max(best.load(std::memory_order_relaxed), seed_floor))
                    continue;
            } else if (prune(child, child_e)) {
                continue;
            }

            CanonicalForm cf = canonical_form(child);
            unsigned last_pos = child.n() - 1;
            unsigned v_star = 0;
            while (cf.labeling[v_star] != last_pos) ++v_star;
            if (cf.orbit[v_star] != cf.orbit[w]) continue;

            if (!dfs(child, cf.generators, split_depth, true)) return false;
        }
        return true;
    }

    // Runs the full search: a single-threaded sweep down to split_depth
    // gathers independent subtree tasks, then the workers drain them sharing
    // only the monotone incumbent.
    void run(unsigned workers) {
        const unsigned split_depth = std::min(n, 6u);
        SmallGraph root(1);
        dfs(root, {}, split_depth, true);

        if (frontier.empty()) return;
        if (workers <= 1) {
            for (const Task& t : frontier)
                if (!dfs(t.g, t.gens, n + 1, false)) break;
            return;
        }
        std::atomic<size_t> next{0};
        auto drain = [&]() {
            for (;;) {
                if (out_of_time.load(std::memory_order_relaxed)) break;
                if (stop.load(std::memory_order_relaxed)) break;
                size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= frontier.size()) break;
                dfs(frontier[i].g, frontier[i].gens, n + 1, false);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(drain);
        for (auto& th : pool) th.join();
    }
};

void validate_common(unsigned n) {
    if (n == 0) throw DomainError("the search needs at least one vertex");
    if (n > SmallGraph::max_vertices) throw TooLarge("the search supports at most 64 vertices");
}

std::vector<uint64_t> reiman_table(unsigned n) {
    std::vector<uint64_t> t(n + 1);
    for (unsigned j = 0; j <= n; ++j) t[j] = reiman_bound(j);
    return t;
}

double resolve_budget(double budget_secs) {
    return budget_secs > 0 ? budget_secs : default_budget_secs();
}

Clock::time_point budget_deadline(double secs) {
    return Clock::now() + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(secs));
}

}  // namespace

double default_budget_secs() {
    if (const char* env = std::getenv("QUADFREE_BUDGET_SECS")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
    }
    return 600.0;
}

uint64_t default_search_ceiling(unsigned n) {
    uint64_t ceiling = reiman_bound(n);
    // n = q^2+q with q a power of two: the polarity-graph theorem gives the
    // sharper cap 1/2 q(q+1)^2 - q.
    for (uint64_t q = 2; q * q + q <= n; q *= 2)
        if (q * q + q == n) ceiling = std::min(ceiling, e0(static_cast<unsigned>(q)));
    return ceiling;
}

uint64_t brute_force_oracle(unsigned n) {
    if (n > 7) throw TooLarge("the exhaustive oracle stops at 7 vertices");
    if (n < 2) return 0;

    const unsigned pairs = n * (n - 1) / 2;
    std::array<unsigned, 21> pu{}, pv{};
    {
        unsigned bit = 0;
        for (unsigned u = 0; u + 1 < n; ++u)
            for (unsigned v = u + 1; v < n; ++v, ++bit) {
                pu[bit] = u;
                pv[bit] = v;
            }
    }

    uint64_t best = 0;
    for (uint64_t mask = 0; mask < (uint64_t(1) << pairs); ++mask) {
        uint64_t edges = std::popcount(mask);
        if (edges <= best) continue;

        bool adj[7][7] = {};
        for (unsigned bit = 0; bit < pairs; ++bit)
            if ((mask >> bit) & 1u) adj[pu[bit]][pv[bit]] = adj[pv[bit]][pu[bit]] = true;

        // quadruple enumeration: a 4-cycle on {a,b,c,d} is one of the three
        // pairings a-b-c-d-a, a-b-d-c-a, a-c-b-d-a
        bool has_c4 = false;
        for (unsigned a = 0; a + 3 < n && !has_c4; ++a)
            for (unsigned b = a + 1; b + 2 < n && !has_c4; ++b)
                for (unsigned c = b + 1; c + 1 < n && !has_c4; ++c)
                    for (unsigned d = c + 1; d < n && !has_c4; ++d)
                        has_c4 = (adj[a][b] && adj[b][c] && adj[c][d] && adj[d][a]) ||
                                 (adj[a][b] && adj[b][d] && adj[d][c] && adj[c][a]) ||
                                 (adj[a][c] && adj[c][b] && adj[b][d] && adj[d][a]);
        if (!has_c4) best = edges;
    }
    return best;
}

SearchResult max_edges_c4free(const SearchConfig& cfg) {
    validate_common(cfg.n);
    const auto start = Clock::now();

    Engine eng;
    eng.n = cfg.n;
    eng.mode = Engine::Mode::Max;
    eng.ceiling = cfg.ceiling ? *cfg.ceiling : default_search_ceiling(cfg.n);
    eng.reiman = reiman_table(cfg.n);
    const double budget = resolve_budget(cfg.budget_secs);
    eng.deadline = budget_deadline(budget);

    eng.best_graph = SmallGraph(cfg.n);  // the edgeless fallback witness
    eng.best.store(0);
    if (cfg.seed_witness) {
        const SmallGraph& seed = *cfg.seed_witness;
        if (seed.n() != cfg.n) throw DomainError("seed witness has the wrong vertex count");
        if (!seed.c4_free()) throw DomainError("seed witness is not C4-free");
        eng.best_graph = seed;
        eng.best.store(seed.e());
    }
    if (cfg.seed_edges > 0) eng.seed_floor = cfg.seed_edges - 1;
    const uint64_t claimed = std::max<uint64_t>(cfg.seed_edges, eng.best.load());
    if (claimed > eng.ceiling)
        throw DomainError("seed lower bound exceeds the upper-bound ceiling");

    eng.run(std::max(1u, cfg.workers));

    SearchResult result;
    result.n = cfg.n;
    result.ex = eng.best.load();
    result.witness_g6 = graph6_encode(eng.best_graph.to_graph());
    result.nodes = eng.nodes.load();
    result.optimal = eng.stop.load() || !eng.out_of_time.load();
    // The value phase is authoritative for the seed check: exhaustion that
    // never reached the promised edge count means the caller's bound is wrong.
    if (result.optimal && result.ex < cfg.seed_edges)
        throw DomainError("seed lower bound refuted by exhaustive search");

    if (cfg.enumerate_all && result.optimal) {
        Engine enumerator;
        enumerator.n = cfg.n;
        enumerator.mode = Engine::Mode::Enumerate;
        enumerator.target = result.ex;
        enumerator.ceiling = eng.ceiling;
        enumerator.reiman = eng.reiman;
        enumerator.deadline = eng.deadline;  // whatever is left of the budget
        enumerator.run(std::max(1u, cfg.workers));
        result.nodes += enumerator.nodes.load();
        if (enumerator.out_of_time.load()) {
            result.optimal = false;  // the requested output is incomplete
        } else {
            result.extremal_g6.assign(enumerator.sink.begin(), enumerator.sink.end());
        }
    }

    result.wall_secs = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

std::vector<Graph> enumerate_extremal(unsigned n, uint64_t ex_value, const SearchConfig& base) {
    validate_common(n);

    Engine eng;
    eng.n = n;
    eng.mode = Engine::Mode::Enumerate;
    eng.target = ex_value;
    eng.ceiling = base.ceiling ? *base.ceiling : default_search_ceiling(n);
    eng.reiman = reiman_table(n);
    eng.deadline = budget_deadline(resolve_budget(base.budget_secs));
    eng.run(std::max(1u, base.workers));
    if (eng.out_of_time.load())
        throw BudgetExhausted("enumeration did not finish within the time budget");

    std::vector<Graph> out;
    out.reserve(eng.sink.size());
    for (const std::string& g6 : eng.sink) out.push_back(graph6_decode(g6));
    return out;
}

uint64_t count_c4free_classes(unsigned n, double budget_secs) {
    validate_common(n);

    Engine eng;
    eng.n = n;
    eng.mode = Engine::Mode::Census;
    eng.ceiling = std::numeric_limits<uint64_t>::max();
    eng.reiman = reiman_table(n);
    eng.deadline = budget_deadline(resolve_budget(budget_secs));
    eng.run(1);
    if (eng.out_of_time.load())
        throw BudgetExhausted("census did not finish within the time budget");
    return eng.census_count.load();
}

}  // namespace quadfree

#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <thread>
#include <vector>

#include "worm/base.hpp"
#include "worm/coloring.hpp"
#include "worm/copies.hpp"
#include "worm/graph.hpp"
#include "worm/partitions.hpp"

namespace worm {

enum class SolveStatus { feasible, infeasible, unknown };

struct KStatus {
    SolveStatus status = SolveStatus::unknown;
    std::optional<Coloring> witness; // present iff feasible
};

// min/max color-count queries: `feasible` carries the bound, `infeasible`
// means the graph admits no WORM coloring at all, `unknown` means the
// boundary was budget-blocked.
struct BoundResult {
    SolveStatus status = SolveStatus::unknown;
    int value = 0;
};

struct GapRun {
    int start = 0; // first missing color count
    int size = 0;  // consecutive missing color counts
    friend bool operator==(const GapRun&, const GapRun&) = default;
};

// Per-color-count feasibility over k in [1, |V|].
struct FeasibleSet {
    std::vector<KStatus> statuses; // statuses[k-1] is the entry for k

    const KStatus& at(int k) const { return statuses.at(static_cast<std::size_t>(k) - 1); }

    BoundResult w_minus() const
    {
        for (int k = 1; k <= static_cast<int>(statuses.size()); ++k) {
            const auto s = at(k).status;
            if (s == SolveStatus::feasible)
                return {SolveStatus::feasible, k};
            if (s == SolveStatus::unknown)
                return {SolveStatus::unknown, 0};
        }
        return {SolveStatus::infeasible, 0};
    }

    BoundResult w_plus() const
    {
        for (int k = static_cast<int>(statuses.size()); k >= 1; --k) {
            const auto s = at(k).status;
            if (s == SolveStatus::feasible)
                return {SolveStatus::feasible, k};
            if (s == SolveStatus::unknown)
                return {SolveStatus::unknown, 0};
        }
        return {SolveStatus::infeasible, 0};
    }

    // Maximal runs of proven-infeasible counts strictly between the two
    // chromatic bounds. Budget-blocked entries never count as gaps.
    std::vector<GapRun> gaps() const
    {
        std::vector<GapRun> out;
        const auto lo = w_minus();
        const auto hi = w_plus();
        if (lo.status != SolveStatus::feasible || hi.status != SolveStatus::feasible)
            return out;
        int run_start = 0, run_len = 0;
        for (int k = lo.value + 1; k < hi.value; ++k) {
            if (at(k).status == SolveStatus::infeasible) {
                if (run_len == 0)
                    run_start = k;
                ++run_len;
            } else {
                if (run_len > 0)
                    out.push_back({run_start, run_len});
                run_len = 0;
            }
        }
        if (run_len > 0)
            out.push_back({run_start, run_len});
        return out;
    }
};

namespace detail {

// Backtracking search for a coloring that uses exactly k colors and makes no
// family member monochromatic or rainbow.
//
// Pruning:
//  - per-member color counting; a member with one unassigned vertex restricts
//    that vertex's color domain (must break a monochromatic prefix, must
//    repeat a color of an all-distinct prefix), domain wipeouts and forced
//    singletons propagate through a queue;
//  - surjectivity: unassigned vertices must suffice for the unused colors;
//  - canonical symmetry breaking: a vertex may use at most one color id above
//    the maximum id used so far (sound for any assignment order: unused
//    colors are interchangeable).
//
// Branching picks an unassigned vertex with the smallest remaining domain,
// ties broken by descending degeneracy order of the conflict graph (vertices
// co-occurring in some member).
class ExactKSearch {
public:
    ExactKSearch(int vertex_count, const CopyFamily& family, int k)
        : V(vertex_count)
        , k(k)
        , n(family.pattern_order)
        , words((k + 63) / 64)
    {
        build_members(family);
        build_order();
        color.assign(V, -1);
        used_count.assign(k, 0);
        dom.assign(static_cast<std::size_t>(V) * words, 0);
        for (int v = 0; v < V; ++v)
            for (int c = 0; c < k; ++c)
                dom[static_cast<std::size_t>(v) * words + c / 64] |= 1ull << (c % 64);
        member_assigned.assign(member_count, 0);
        member_distinct.assign(member_count, 0);
        counts.assign(static_cast<std::size_t>(member_count) * k, 0);
    }

    KStatus run(const SearchBudget& budget)
    {
        BudgetMeter meter(budget);
        exhausted = false;
        if (dfs(meter)) {
            Coloring witness{color};
            return {SolveStatus::feasible, std::move(witness)};
        }
        return {exhausted ? SolveStatus::unknown : SolveStatus::infeasible, std::nullopt};
    }

private:
    int V, k, n, words;
    int member_count = 0;

    std::vector<int> member_verts;  // member_count * n
    std::vector<int> vm_flat;       // member ids, grouped by vertex
    std::vector<int> vm_offset;     // per vertex: [vm_offset[v], vm_offset[v+1])
    std::vector<int> order;

    std::vector<int> color;
    std::vector<int> used_count;
    std::vector<std::uint64_t> dom; // V * words
    std::vector<std::uint16_t> counts;
    std::vector<int> member_assigned;
    std::vector<int> member_distinct;
    int distinct_used = 0;
    int max_used = -1;
    int assigned_total = 0;

    struct DomSave {
        std::size_t index;
        std::uint64_t old;
    };
    std::vector<DomSave> dom_trail;
    std::vector<int> assign_trail;
    std::vector<int> max_used_trail;
    std::vector<std::pair<int, int>> queue;
    bool exhausted = false;

    void build_members(const CopyFamily& family)
    {
        member_count = static_cast<int>(family.members.size());
        member_verts.reserve(static_cast<std::size_t>(member_count) * n);
        std::vector<int> degree(V, 0);
        for (const auto& m : family.members) {
            assert(static_cast<int>(m.size()) == n);
            for (int v : m) {
                member_verts.push_back(v);
                ++degree[v];
            }
        }
        vm_offset.assign(V + 1, 0);
        for (int v = 0; v < V; ++v)
            vm_offset[v + 1] = vm_offset[v] + degree[v];
        vm_flat.assign(vm_offset[V], 0);
        std::vector<int> cursor(vm_offset.begin(), vm_offset.end() - 1);
        for (int m = 0; m < member_count; ++m)
            for (int j = 0; j < n; ++j)
                vm_flat[cursor[member_verts[m * n + j]]++] = m;
    }

    // Descending degeneracy order of the conflict graph.
    void build_order()
    {
        std::vector<std::vector<std::uint64_t>> conflict(
            V, std::vector<std::uint64_t>((V + 63) / 64, 0));
        for (int m = 0; m < member_count; ++m)
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    const int u = member_verts[m * n + a];
                    const int v = member_verts[m * n + b];
                    conflict[u][v / 64] |= 1ull << (v % 64);
                    conflict[v][u / 64] |= 1ull << (u % 64);
                }
        std::vector<int> deg(V, 0);
        for (int v = 0; v < V; ++v)
            for (auto w : conflict[v])
                deg[v] += std::popcount(w);
        std::vector<char> removed(V, 0);
        std::vector<int> removal;
        removal.reserve(V);
        for (int step = 0; step < V; ++step) {
            int best = -1;
            for (int v = 0; v < V; ++v)
                if (!removed[v] && (best == -1 || deg[v] < deg[best]))
                    best = v;
            removed[best] = 1;
            removal.push_back(best);
            for (int v = 0; v < V; ++v)
                if (!removed[v] && (conflict[best][v / 64] >> (v % 64)) & 1)
                    --deg[v];
        }
        order.assign(removal.rbegin(), removal.rend());
    }

    bool dom_has(int v, int c) const
    {
        return (dom[static_cast<std::size_t>(v) * words + c / 64] >> (c % 64)) & 1u;
    }

    int dom_size(int v) const
    {
        int total = 0;
        for (int w = 0; w < words; ++w)
            total += std::popcount(dom[static_cast<std::size_t>(v) * words + w]);
        return total;
    }

    int dom_single(int v) const
    {
        for (int w = 0; w < words; ++w)
            if (const auto word = dom[static_cast<std::size_t>(v) * words + w])
                return w * 64 + std::countr_zero(word);
        return -1;
    }

    // Keep only the `mask` bits of dom[v]. Returns false on wipeout; a new
    // singleton for an unassigned vertex joins the propagation queue.
    bool dom_restrict(int v, const std::vector<std::uint64_t>& mask)
    {
        bool changed = false;
        for (int w = 0; w < words; ++w) {
            const std::size_t idx = static_cast<std::size_t>(v) * words + w;
            const std::uint64_t updated = dom[idx] & mask[w];
            if (updated != dom[idx]) {
                dom_trail.push_back({idx, dom[idx]});
                dom[idx] = updated;
                changed = true;
            }
        }
        if (!changed)
            return true;
        const int size = dom_size(v);
        if (size == 0)
            return false;
        if (size == 1 && color[v] == -1)
            queue.emplace_back(v, dom_single(v));
        return true;
    }

    bool dom_remove(int v, int c)
    {
        const std::size_t idx = static_cast<std::size_t>(v) * words + c / 64;
        const std::uint64_t bit = 1ull << (c % 64);
        if (!(dom[idx] & bit))
            return true;
        dom_trail.push_back({idx, dom[idx]});
        dom[idx] &= ~bit;
        const int size = dom_size(v);
        if (size == 0)
            return false;
        if (size == 1 && color[v] == -1)
            queue.emplace_back(v, dom_single(v));
        return true;
    }

    struct Frame {
        std::size_t dom_mark;
        std::size_t assign_mark;
    };

    Frame mark() const { return {dom_trail.size(), assign_trail.size()}; }

    void undo_to(const Frame& frame)
    {
        while (assign_trail.size() > frame.assign_mark) {
            const int u = assign_trail.back();
            assign_trail.pop_back();
            const int d = color[u];
            for (int idx = vm_offset[u]; idx < vm_offset[u + 1]; ++idx) {
                const int m = vm_flat[idx];
                --member_assigned[m];
                if (--counts[static_cast<std::size_t>(m) * k + d] == 0)
                    --member_distinct[m];
            }
            if (--used_count[d] == 0)
                --distinct_used;
            max_used = max_used_trail.back();
            max_used_trail.pop_back();
            --assigned_total;
            color[u] = -1;
        }
        while (dom_trail.size() > frame.dom_mark) {
            dom[dom_trail.back().index] = dom_trail.back().old;
            dom_trail.pop_back();
        }
    }

    // Assign v := c and run unit propagation; false signals a conflict (the
    // caller unwinds via undo_to). Counter updates for a vertex always run to
    // completion so that undo_to stays an exact inverse; a conflict found
    // halfway through is remembered and reported afterwards.
    bool assign(int v, int c)
    {
        queue.clear();
        queue.emplace_back(v, c);
        std::vector<std::uint64_t> mask(words);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const auto [u, d] = queue[qi];
            if (color[u] != -1) {
                if (color[u] != d)
                    return false;
                continue;
            }
            if (!dom_has(u, d))
                return false;
            assert(d <= max_used + 1);
            color[u] = d;
            assign_trail.push_back(u);
            max_used_trail.push_back(max_used);
            if (++used_count[d] == 1)
                ++distinct_used;
            max_used = std::max(max_used, d);
            ++assigned_total;
            // not enough vertices left to reach k colors?
            bool conflict = V - assigned_total < k - distinct_used;
            for (int idx = vm_offset[u]; idx < vm_offset[u + 1]; ++idx) {
                const int m = vm_flat[idx];
                ++member_assigned[m];
                if (++counts[static_cast<std::size_t>(m) * k + d] == 1)
                    ++member_distinct[m];
                if (conflict)
                    continue;
                const int assigned = member_assigned[m];
                const int distinct = member_distinct[m];
                if (assigned == n) {
                    if (distinct == 1 || distinct == n)
                        conflict = true;
                } else if (assigned == n - 1) {
                    int open = -1;
                    for (int j = 0; j < n; ++j)
                        if (color[member_verts[m * n + j]] == -1) {
                            open = member_verts[m * n + j];
                            break;
                        }
                    if (distinct == 1) {
                        if (!dom_remove(open, d))
                            conflict = true;
                    } else if (distinct == n - 1) {
                        std::fill(mask.begin(), mask.end(), 0);
                        for (int j = 0; j < n; ++j) {
                            const int cc = color[member_verts[m * n + j]];
                            if (cc != -1)
                                mask[cc / 64] |= 1ull << (cc % 64);
                        }
                        if (!dom_restrict(open, mask))
                            conflict = true;
                    }
                }
            }
            if (conflict)
                return false;
        }
        return true;
    }

    bool dfs(BudgetMeter& meter)
    {
        // Pick the unassigned vertex with the smallest domain. On the same
        // pass, count the vertices still able to host a fresh color: domains
        // hold either all unused colors or none of them, so testing the bit
        // for max_used+1 is enough.
        int v = -1;
        int smallest = k + 1;
        int fresh_capable = 0;
        const int next_new = max_used + 1;
        for (int u : order) {
            if (color[u] != -1)
                continue;
            if (next_new < k && dom_has(u, next_new))
                ++fresh_capable;
            const int size = dom_size(u);
            if (size < smallest) {
                smallest = size;
                v = u;
            }
        }
        if (v == -1)
            return distinct_used == k;
        if (fresh_capable < k - distinct_used)
            return false; // the missing colors have nowhere to go
        const int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (!dom_has(v, c))
                continue;
            if (!meter.charge()) {
                exhausted = true;
                return false;
            }
            const Frame frame = mark();
            if (assign(v, c) && dfs(meter))
                return true;
            undo_to(frame);
            if (exhausted)
                return false;
        }
        return false;
    }
};

} // namespace detail

// Search for a WORM coloring of the host using exactly k colors.
inline KStatus solve_exactly(const Graph& host, const CopyFamily& family, int k,
                             const SearchBudget& budget = {})
{
    check_family(family, host.vertex_count(), "solve_exactly");
    const int V = host.vertex_count();
    if (V == 0)
        return k == 0 ? KStatus{SolveStatus::feasible, Coloring{}}
                      : KStatus{SolveStatus::infeasible, std::nullopt};
    if (k < 1 || k > V)
        return {SolveStatus::infeasible, std::nullopt};
    detail::ExactKSearch search(V, family, k);
    return search.run(budget);
}

// Exact feasibility for every color count in [1, |V|]. The budget applies
// to each per-k search separately. `threads` may parallelize the independent
// per-k searches without changing any reported status.
inline FeasibleSet feasible_set(const Graph& host, const CopyFamily& family,
                                const SearchBudget& budget = {}, int threads = 1)
{
    if (threads < 1)
        throw contract_error("feasible_set: thread count must be positive");
    check_family(family, host.vertex_count(), "feasible_set"); // before any thread spawns
    const int V = host.vertex_count();
    FeasibleSet result;
    result.statuses.resize(V);
    auto solve_range = [&](int from, int step) {
        for (int k = from; k <= V; k += step)
            result.statuses[k - 1] = solve_exactly(host, family, k, budget);
    };
    if (threads == 1 || V <= 1) {
        solve_range(1, 1);
    } else {
        std::vector<std::thread> pool;
        const int workers = std::min(threads, V);
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t)
            pool.emplace_back(solve_range, t + 1, workers);
        for (auto& th : pool)
            th.join();
    }
    return result;
}

inline BoundResult w_minus(const Graph& host, const CopyFamily& family,
                           const SearchBudget& budget = {})
{
    for (int k = 1; k <= host.vertex_count(); ++k) {
        const auto r = solve_exactly(host, family, k, budget);
        if (r.status == SolveStatus::feasible)
            return {SolveStatus::feasible, k};
        if (r.status == SolveStatus::unknown)
            return {SolveStatus::unknown, 0};
    }
    return {SolveStatus::infeasible, 0};
}

inline BoundResult w_plus(const Graph& host, const CopyFamily& family,
                          const SearchBudget& budget = {})
{
    for (int k = host.vertex_count(); k >= 1; --k) {
        const auto r = solve_exactly(host, family, k, budget);
        if (r.status == SolveStatus::feasible)
            return {SolveStatus::feasible, k};
        if (r.status == SolveStatus::unknown)
            return {SolveStatus::unknown, 0};
    }
    return {SolveStatus::infeasible, 0};
}

// Partition-enumeration oracle: iterates every set partition of the vertex
// set (restricted growth strings) and verifies each one. Exact and
// budget-free, therefore capped at 12 vertices.
inline FeasibleSet brute_force_feasible(const Graph& host, const CopyFamily& family)
{
    const int V = host.vertex_count();
    if (V > 12)
        throw contract_error("brute_force_feasible: host larger than 12 vertices");
    check_family(family, V, "brute_force_feasible");
    FeasibleSet result;
    result.statuses.resize(V);
    for (auto& s : result.statuses)
        s.status = SolveStatus::infeasible;
    const int n = family.pattern_order;
    for_each_partition(V, [&](const std::vector<int>& rgs, int blocks) {
        auto& slot = result.statuses[blocks - 1];
        if (slot.status == SolveStatus::feasible)
            return;
        for (const auto& member : family.members) {
            int distinct = 0;
            bool mono = true;
            // small member: count distinct colors quadratically
            for (std::size_t a = 0; a < member.size(); ++a) {
                bool fresh = true;
                for (std::size_t b = 0; b < a; ++b)
                    if (rgs[member[b]] == rgs[member[a]]) {
                        fresh = false;
                        break;
                    }
                if (fresh)
                    ++distinct;
                if (rgs[member[a]] != rgs[member[0]])
                    mono = false;
            }
            if ((mono && !member.empty()) || distinct == n)
                return; // violated: try next partition
        }
        slot.status = SolveStatus::feasible;
        slot.witness = Coloring{rgs};
    });
    return result;
}

// W^-(K_s, F) for any pattern of order pattern_order, in closed form.
// nullopt means K_s is not F-WORM colorable (s exceeds (n-1)^2).
inline std::optional<int> complete_graph_w_minus(int s, int pattern_order)
{
    if (s < 1 || pattern_order < 2)
        throw contract_error("complete_graph_w_minus: requires s >= 1 and n >= 2");
    const long long limit =
        static_cast<long long>(pattern_order - 1) * (pattern_order - 1);
    if (s > limit)
        return std::nullopt;
    return static_cast<int>(ceil_div(s, pattern_order - 1));
}

// ---------------------------------------------------------------------------
// Proper-coloring helpers

struct ChromaticResult {
    bool known = false;
    int value = 0;
    Coloring witness;
};

namespace detail {

// Decision search: proper coloring with at most k colors.
class ProperKSearch {
public:
    ProperKSearch(const Graph& g, int k)
        : g(g)
        , k(k)
    {
        const int V = g.vertex_count();
        // descending degeneracy order
        std::vector<int> deg(V), removal;
        std::vector<char> removed(V, 0);
        for (int v = 0; v < V; ++v)
            deg[v] = g.degree(v);
        for (int step = 0; step < V; ++step) {
            int best = -1;
            for (int v = 0; v < V; ++v)
                if (!removed[v] && (best == -1 || deg[v] < deg[best]))
                    best = v;
            removed[best] = 1;
            removal.push_back(best);
            for (int w : g.neighbors(best))
                if (!removed[w])
                    --deg[w];
        }
        order.assign(removal.rbegin(), removal.rend());
        color.assign(V, -1);
    }

    // nullopt: budget exhausted.
    std::optional<bool> run(BudgetMeter& meter, Coloring& witness)
    {
        exhausted = false;
        const bool found = dfs(0, -1, meter);
        if (exhausted)
            return std::nullopt;
        if (found)
            witness = Coloring{color};
        return found;
    }

private:
    const Graph& g;
    int k;
    std::vector<int> order;
    std::vector<int> color;
    bool exhausted = false;

    bool dfs(int oi, int max_used, BudgetMeter& meter)
    {
        if (oi == static_cast<int>(order.size()))
            return true;
        const int v = order[oi];
        const int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            bool clash = false;
            for (int w : g.neighbors(v))
                if (color[w] == c) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            if (!meter.charge()) {
                exhausted = true;
                return false;
            }
            color[v] = c;
            if (dfs(oi + 1, std::max(max_used, c), meter))
                return true;
            color[v] = -1;
            if (exhausted)
                return false;
        }
        return false;
    }
};

// Greedy clique in descending-degree order: a cheap chromatic lower bound.
inline int greedy_clique_bound(const Graph& g)
{
    const int V = g.vertex_count();
    std::vector<int> by_degree(V);
    for (int v = 0; v < V; ++v)
        by_degree[v] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> clique;
    for (int v : by_degree) {
        bool fits = true;
        for (int u : clique)
            if (!g.adjacent(u, v)) {
                fits = false;
                break;
            }
        if (fits)
            clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

} // namespace detail

// Exact chromatic number by ascending exact k-colorability decisions.
inline ChromaticResult chromatic_number(const Graph& g, const SearchBudget& budget = {})
{
    const int V = g.vertex_count();
    if (V == 0)
        return {true, 0, Coloring{}};
    detail::BudgetMeter meter(budget);
    for (int k = std::max(1, detail::greedy_clique_bound(g)); k <= V; ++k) {
        detail::ProperKSearch search(g, k);
        Coloring witness;
        const auto found = search.run(meter, witness);
        if (!found.has_value())
            return {false, 0, Coloring{}};
        if (*found)
            return {true, k, std::move(witness)};
    }
    return {false, 0, Coloring{}}; // unreachable: k = V always succeeds
}

// Exact clique number (branch and bound; intended for small graphs).
inline int clique_number(const Graph& g)
{
    const int V = g.vertex_count();
    std::vector<int> current, candidates(V);
    for (int v = 0; v < V; ++v)
        candidates[v] = v;
    int best = 0;
    auto recurse = [&](auto&& self, std::vector<int>& cand) -> void {
        if (static_cast<int>(current.size()) > best)
            best = static_cast<int>(current.size());
        if (current.size() + cand.size() <= static_cast<std::size_t>(best))
            return;
        while (!cand.empty()) {
            if (current.size() + cand.size() <= static_cast<std::size_t>(best))
                return;
            const int v = cand.back();
            cand.pop_back();
            std::vector<int> next;
            for (int u : cand)
                if (g.adjacent(u, v))
                    next.push_back(u);
            current.push_back(v);
            self(self, next);
            current.pop_back();
        }
    };
    recurse(recurse, candidates);
    return best;
}

// Merge the classes of a proper coloring into at most pattern_order-1 groups,
// which can never leave a monochromatic or rainbow K_n. With fewer than n-1
// classes no K_n exists at all and a single color suffices.
inline Coloring worm_from_proper(const Graph& g, int pattern_order, const Coloring& proper)
{
    const int n = pattern_order;
    if (n < 3)
        throw contract_error("worm_from_proper: pattern order must be >= 3");
    if (static_cast<int>(proper.colors.size()) != g.vertex_count())
        throw contract_error("worm_from_proper: coloring must be total on the graph");
    for (auto [u, v] : g.edges())
        if (proper.colors[u] == proper.colors[v])
            throw contract_error("worm_from_proper: input coloring is not proper");

    // classes keyed by color id, ascending
    std::map<int, int> class_size;
    for (int c : proper.colors)
        ++class_size[c];
    const int t = static_cast<int>(class_size.size());
    if (t > (n - 1) * (n - 1))
        throw contract_error("worm_from_proper: more than (n-1)^2 color classes");

    Coloring out;
    out.colors.assign(g.vertex_count(), 0);
    if (t < n - 1)
        return out; // no K_n possible: chi(g) < n

    // round-robin the classes, largest first, into n-1 groups
    std::vector<std::pair<int, int>> classes(class_size.begin(), class_size.end());
    std::stable_sort(classes.begin(), classes.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    std::map<int, int> group_of;
    for (std::size_t i = 0; i < classes.size(); ++i)
        group_of[classes[i].first] = static_cast<int>(i) % (n - 1);
    for (std::size_t v = 0; v < out.colors.size(); ++v)
        out.colors[v] = group_of[proper.colors[v]];
    return out;
}

// Deterministic proper coloring with exactly k color classes (k >= chi).
// Splits one vertex off a largest class until k classes exist.
inline Coloring proper_coloring_exactly(const Graph& g, int k,
                                        const SearchBudget& budget = {})
{
    const auto chrom = chromatic_number(g, budget);
    if (!chrom.known)
        throw contract_error("proper_coloring_exactly: chromatic search exhausted its budget");
    if (k < chrom.value || k > g.vertex_count())
        throw contract_error("proper_coloring_exactly: k outside [chi, |V|]");
    Coloring coloring = chrom.witness;
    int used = chrom.value;
    while (used < k) {
        std::map<int, std::vector<int>> classes;
        for (int v = 0; v < g.vertex_count(); ++v)
            classes[coloring.colors[v]].push_back(v);
        int pick = -1;
        std::size_t pick_size = 1;
        for (const auto& [c, verts] : classes)
            if (verts.size() > pick_size) {
                pick = c;
                pick_size = verts.size();
            }
        coloring.colors[classes[pick].back()] = used++;
    }
    return coloring;
}

} // namespace worm

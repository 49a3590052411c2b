#pragma once

#include <optional>
#include <set>
#include <vector>

#include "worm/base.hpp"
#include "worm/graph.hpp"

namespace worm {

// The family of F-copies of a host graph: every n-element vertex set whose
// induced subgraph contains a spanning subgraph isomorphic to the pattern.
// Members are sorted vertex tuples, the family is sorted lexicographically,
// and vertex sets reached through several embeddings appear once.
struct CopyFamily {
    int pattern_order = 0;
    std::vector<std::vector<int>> members;

    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }
};

namespace detail {

// Pattern vertex order for the embedding search: start at a maximum-degree
// vertex, then prefer vertices adjacent to the ordered prefix, breaking ties
// by descending degree and then by index.
inline std::vector<int> pattern_search_order(const Graph& pattern)
{
    const int n = pattern.vertex_count();
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> chosen(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        bool best_connected = false;
        for (int v = 0; v < n; ++v) {
            if (chosen[v])
                continue;
            bool connected = false;
            for (int u : order)
                if (pattern.adjacent(u, v)) {
                    connected = true;
                    break;
                }
            if (best == -1
                || (connected && !best_connected)
                || (connected == best_connected
                    && pattern.degree(v) > pattern.degree(best))) {
                best = v;
                best_connected = connected;
            }
        }
        chosen[best] = 1;
        order.push_back(best);
    }
    return order;
}

struct EmbeddingSearch {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> order;            // pattern vertices in search order
    std::vector<std::vector<int>> pre; // per level: earlier levels adjacent in pattern
    std::vector<int> image;            // level -> host vertex
    std::vector<char> used;            // host vertex already in image
    std::set<std::vector<int>> found;
    BudgetMeter meter;
    bool exhausted_budget = false;
    bool stop_after_first = false;

    EmbeddingSearch(const Graph& h, const Graph& p, const SearchBudget& budget)
        : host(h)
        , pattern(p)
        , order(pattern_search_order(p))
        , meter(budget)
    {
        const int n = p.vertex_count();
        pre.resize(n);
        for (int level = 0; level < n; ++level)
            for (int earlier = 0; earlier < level; ++earlier)
                if (p.adjacent(order[earlier], order[level]))
                    pre[level].push_back(earlier);
        image.assign(n, -1);
        used.assign(h.vertex_count(), 0);
    }

    bool feasible(int level, int candidate) const
    {
        if (used[candidate])
            return false;
        if (host.degree(candidate) < pattern.degree(order[level]))
            return false;
        for (int earlier : pre[level])
            if (!host.adjacent(image[earlier], candidate))
                return false;
        return true;
    }

    // Returns false when the budget tripped.
    bool run(int level)
    {
        if (!meter.charge()) {
            exhausted_budget = true;
            return false;
        }
        const int n = pattern.vertex_count();
        if (level == n) {
            std::vector<int> member(image.begin(), image.end());
            std::sort(member.begin(), member.end());
            found.insert(std::move(member));
            return !stop_after_first;
        }
        // Candidates: neighbors of an already-mapped pattern neighbor when one
        // exists, otherwise every host vertex.
        if (!pre[level].empty()) {
            const int anchor = image[pre[level][0]];
            for (int candidate : host.neighbors(anchor)) {
                if (!feasible(level, candidate))
                    continue;
                image[level] = candidate;
                used[candidate] = 1;
                const bool ok = run(level + 1);
                used[candidate] = 0;
                image[level] = -1;
                if (!ok)
                    return false;
            }
        } else {
            for (int candidate = 0; candidate < host.vertex_count(); ++candidate) {
                if (!feasible(level, candidate))
                    continue;
                image[level] = candidate;
                used[candidate] = 1;
                const bool ok = run(level + 1);
                used[candidate] = 0;
                image[level] = -1;
                if (!ok)
                    return false;
            }
        }
        return true;
    }
};

} // namespace detail

// Enumerate every F-copy of the host by backtracking subgraph-isomorphism
// search. Returns nullopt when the optional budget trips; a complete family
// is never truncated silently.
inline std::optional<CopyFamily> enumerate_copies(const Graph& host, const Graph& pattern,
                                                  const SearchBudget& budget = {})
{
    if (pattern.vertex_count() < 2)
        throw contract_error("enumerate_copies: pattern must have at least 2 vertices");
    CopyFamily family;
    family.pattern_order = pattern.vertex_count();
    if (pattern.vertex_count() > host.vertex_count())
        return family;
    detail::EmbeddingSearch search(host, pattern, budget);
    search.run(0);
    if (search.exhausted_budget)
        return std::nullopt;
    family.members.assign(search.found.begin(), search.found.end());
    return family;
}

// A family is usable against a host only when every member is a
// pattern-order tuple of valid host vertices.
inline void check_family(const CopyFamily& family, int host_vertex_count, const char* who)
{
    for (const auto& member : family.members) {
        if (static_cast<int>(member.size()) != family.pattern_order)
            throw contract_error(std::string(who) + ": family member size mismatch");
        for (int v : member)
            if (v < 0 || v >= host_vertex_count)
                throw contract_error(std::string(who)
                                     + ": family member references a missing vertex");
    }
}

// True iff some bijection from pattern vertices onto the vertices of
// `induced` maps every pattern edge to an edge.
inline bool has_spanning_copy(const Graph& induced, const Graph& pattern)
{
    if (induced.vertex_count() != pattern.vertex_count())
        throw contract_error("has_spanning_copy: order mismatch");
    if (pattern.vertex_count() == 0)
        return true;
    if (induced.edge_count() < pattern.edge_count())
        return false;
    detail::EmbeddingSearch search(induced, pattern, SearchBudget{});
    search.stop_after_first = true;
    search.run(0);
    return !search.found.empty();
}

} // namespace worm

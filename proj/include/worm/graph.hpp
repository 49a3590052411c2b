#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "worm/base.hpp"

namespace worm {

// Provenance labels attached by the construction builders. Plain generators
// and operators leave graphs unlabeled.

struct CopyVertexLabel { // v_i^j
    int origin;
    int copy;
    friend bool operator==(const CopyVertexLabel&, const CopyVertexLabel&) = default;
};

struct GadgetInnerLabel { // inner vertex of the gadget chained at (origin, position)
    int origin;
    int position;
    bool in_s_prime;
    friend bool operator==(const GadgetInnerLabel&, const GadgetInnerLabel&) = default;
};

struct ProductVertexLabel { // (origin, slot) of G x K_{n-1}
    int origin;
    int slot;
    friend bool operator==(const ProductVertexLabel&, const ProductVertexLabel&) = default;
};

struct UniversalLabel { // universal vertex added by the join
    int slot;
    friend bool operator==(const UniversalLabel&, const UniversalLabel&) = default;
};

using Label = std::variant<CopyVertexLabel, GadgetInnerLabel, ProductVertexLabel, UniversalLabel>;

inline std::string label_display(const Label& label)
{
    struct Visitor {
        std::string operator()(const CopyVertexLabel& l) const
        {
            return "v" + std::to_string(l.origin) + "^" + std::to_string(l.copy);
        }
        std::string operator()(const GadgetInnerLabel& l) const
        {
            return "g" + std::to_string(l.origin) + "," + std::to_string(l.position)
                + (l.in_s_prime ? ":S'" : ":S");
        }
        std::string operator()(const ProductVertexLabel& l) const
        {
            return "p" + std::to_string(l.origin) + "," + std::to_string(l.slot);
        }
        std::string operator()(const UniversalLabel& l) const
        {
            return "u" + std::to_string(l.slot);
        }
    };
    return std::visit(Visitor{}, label);
}

// Simple undirected graph over dense vertex indices 0..n-1. No self-loops,
// adjacency kept symmetric. Treated as immutable once built.
class Graph {
public:
    Graph() = default;

    explicit Graph(int vertex_count)
        : n_(vertex_count)
    {
        if (vertex_count < 0)
            throw contract_error("Graph: negative vertex count");
        adj_.resize(n_);
        words_ = static_cast<std::size_t>((n_ + 63) / 64);
        bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    bool adjacent(int u, int v) const
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            return false;
        return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }

    void add_edge(int u, int v)
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw contract_error("Graph: self-loop rejected");
        if (adjacent(u, v))
            return;
        set_bit(u, v);
        set_bit(v, u);
        adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
        adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
        ++edge_count_;
    }

    const std::vector<int>& neighbors(int v) const
    {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    int min_degree() const
    {
        int d = n_ == 0 ? 0 : degree(0);
        for (int v = 1; v < n_; ++v)
            d = std::min(d, degree(v));
        return d;
    }

    int max_degree() const
    {
        int d = 0;
        for (int v = 0; v < n_; ++v)
            d = std::max(d, degree(v));
        return d;
    }

    std::vector<std::pair<int, int>> edges() const
    {
        std::vector<std::pair<int, int>> out;
        out.reserve(edge_count_);
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    bool has_labels() const { return !labels_.empty(); }

    const std::vector<Label>& labels() const { return labels_; }

    void set_labels(std::vector<Label> labels)
    {
        if (!labels.empty() && static_cast<int>(labels.size()) != n_)
            throw contract_error("Graph: labels must cover every vertex exactly once");
        labels_ = std::move(labels);
    }

private:
    void check_vertex(int v) const
    {
        if (v < 0 || v >= n_)
            throw contract_error("Graph: vertex index out of range");
    }

    void set_bit(int u, int v)
    {
        bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ull << (v % 64);
    }

    int n_ = 0;
    int edge_count_ = 0;
    std::size_t words_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;
    std::vector<Label> labels_;
};

// ---------------------------------------------------------------------------
// Generators

inline Graph complete(int s)
{
    if (s < 0)
        throw contract_error("complete: negative order");
    Graph g(s);
    for (int u = 0; u < s; ++u)
        for (int v = u + 1; v < s; ++v)
            g.add_edge(u, v);
    return g;
}

inline Graph cycle(int s)
{
    if (s < 3)
        throw contract_error("cycle: order must be >= 3");
    Graph g(s);
    for (int v = 0; v < s; ++v)
        g.add_edge(v, (v + 1) % s);
    return g;
}

inline Graph path(int s)
{
    if (s < 1)
        throw contract_error("path: order must be >= 1");
    Graph g(s);
    for (int v = 0; v + 1 < s; ++v)
        g.add_edge(v, v + 1);
    return g;
}

// Deterministic G(n, p) with a portable integer threshold on mt19937 draws.
inline Graph random_graph(int n, double density, std::uint32_t seed)
{
    if (n < 0 || density < 0.0 || density > 1.0)
        throw contract_error("random_graph: bad parameters");
    Graph g(n);
    std::mt19937 gen(seed);
    const std::uint64_t threshold =
        static_cast<std::uint64_t>(density * 4294967296.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<std::uint64_t>(gen() & 0xffffffffu) < threshold)
                g.add_edge(u, v);
    return g;
}

namespace detail {

inline Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges)
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

} // namespace detail

// Fixed catalog entries (parametric families are handled by named()).
inline const std::vector<std::string>& fixed_catalog_names()
{
    static const std::vector<std::string> names = {
        "diamond", "paw", "claw", "bull", "house", "butterfly",
        "prism", "octahedron", "cube", "petersen", "groetzsch",
    };
    return names;
}

// Catalog lookup: fixed names plus the shorthands k<N>, c<N>, p<N>.
inline Graph named(std::string_view name)
{
    auto parse_int = [](std::string_view s) -> std::optional<int> {
        if (s.empty() || s.size() > 6)
            return std::nullopt;
        int value = 0;
        for (char ch : s) {
            if (ch < '0' || ch > '9')
                return std::nullopt;
            value = value * 10 + (ch - '0');
        }
        return value;
    };

    if (name.size() >= 2) {
        if (auto v = parse_int(name.substr(1))) {
            switch (name[0]) {
            case 'k': return complete(*v);
            case 'c': return cycle(*v);
            case 'p': return path(*v);
            default: break;
            }
        }
    }

    if (name == "diamond") // K4 minus an edge
        return detail::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    if (name == "paw")
        return detail::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    if (name == "claw")
        return detail::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    if (name == "bull")
        return detail::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}});
    if (name == "house") // square 0-1-2-3 with roof triangle 0-3-4
        return detail::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {0, 4}});
    if (name == "butterfly")
        return detail::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    if (name == "prism")
        return detail::from_edges(6,
            {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    if (name == "octahedron") { // K6 minus a perfect matching
        Graph g(6);
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (v != u + 3)
                    g.add_edge(u, v);
        return g;
    }
    if (name == "cube") { // Q3
        Graph g(8);
        for (int u = 0; u < 8; ++u)
            for (int b = 0; b < 3; ++b)
                if (int v = u ^ (1 << b); u < v)
                    g.add_edge(u, v);
        return g;
    }
    if (name == "petersen") {
        Graph g(10);
        for (int i = 0; i < 5; ++i) {
            g.add_edge(i, (i + 1) % 5);         // outer cycle
            g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
            g.add_edge(i, 5 + i);               // spokes
        }
        return g;
    }
    if (name == "groetzsch") { // Mycielskian of C5
        Graph g(11);
        for (int i = 0; i < 5; ++i) {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, (i + 4) % 5);
            g.add_edge(5 + i, (i + 1) % 5);
            g.add_edge(5 + i, 10);
        }
        return g;
    }

    throw contract_error("named: unknown catalog graph '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Operators

// Disjoint union plus all cross edges; g1 keeps its indices, g2 is shifted.
inline Graph join(const Graph& g1, const Graph& g2)
{
    const int n1 = g1.vertex_count();
    const int n2 = g2.vertex_count();
    Graph g(n1 + n2);
    for (auto [u, v] : g1.edges())
        g.add_edge(u, v);
    for (auto [u, v] : g2.edges())
        g.add_edge(n1 + u, n1 + v);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v)
            g.add_edge(u, n1 + v);
    if (g1.has_labels() && g2.has_labels()) {
        std::vector<Label> labels = g1.labels();
        labels.insert(labels.end(), g2.labels().begin(), g2.labels().end());
        g.set_labels(std::move(labels));
    }
    return g;
}

// Strong product: (u1,u2) ~ (v1,v2) iff the coordinate pairs are equal or
// adjacent in their factors (and the vertices differ). Vertex (i,j) of the
// product has index i*|V(g2)|+j.
inline Graph strong_product(const Graph& g1, const Graph& g2)
{
    const int n1 = g1.vertex_count();
    const int n2 = g2.vertex_count();
    Graph g(n1 * n2);
    auto id = [n2](int a, int b) { return a * n2 + b; };
    for (int u1 = 0; u1 < n1; ++u1)
        for (int u2 = 0; u2 < n2; ++u2)
            for (int v1 = u1; v1 < n1; ++v1) {
                const bool first_eq = (u1 == v1);
                const bool first_adj = g1.adjacent(u1, v1);
                if (!first_eq && !first_adj)
                    continue;
                for (int v2 = 0; v2 < n2; ++v2) {
                    if (first_eq && v2 <= u2)
                        continue;
                    const bool second_eq = (u2 == v2);
                    const bool second_adj = g2.adjacent(u2, v2);
                    if ((first_eq && second_adj) || (second_eq && first_adj)
                        || (first_adj && second_adj))
                        g.add_edge(id(u1, u2), id(v1, v2));
                }
            }
    return g;
}

inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices)
{
    Graph h(static_cast<int>(vertices.size()));
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (g.adjacent(vertices[a], vertices[b]))
                h.add_edge(static_cast<int>(a), static_cast<int>(b));
    return h;
}

// ---------------------------------------------------------------------------
// Structural predicates

inline bool is_connected(const Graph& g)
{
    const int n = g.vertex_count();
    if (n <= 1)
        return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

inline bool is_bipartite(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<int> side(n, -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        queue.assign(1, s);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : g.neighbors(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool is_triangle_free(const Graph& g)
{
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u)
                continue;
            for (int w : g.neighbors(v))
                if (w > v && g.adjacent(u, w))
                    return false;
        }
    return true;
}

// 2-connected: at least 3 vertices, connected, and no articulation vertex.
inline bool is_biconnected(const Graph& g)
{
    const int n = g.vertex_count();
    if (n < 3 || !is_connected(g))
        return false;
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    int timer = 0;
    int root_children = 0;
    // iterative DFS from vertex 0
    std::vector<std::pair<int, std::size_t>> stack = {{0, 0}};
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        if (idx < g.neighbors(v).size()) {
            int w = g.neighbors(v)[idx++];
            if (disc[w] == -1) {
                parent[w] = v;
                if (v == 0)
                    ++root_children;
                disc[w] = low[w] = timer++;
                stack.emplace_back(w, 0);
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], disc[w]);
            }
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                int p = stack.back().first;
                low[p] = std::min(low[p], low[v]);
                if (p != 0 && low[v] >= disc[p])
                    return false; // p is an articulation vertex
            }
        }
    }
    return root_children <= 1;
}

} // namespace worm

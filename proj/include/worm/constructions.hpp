#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "worm/base.hpp"
#include "worm/coloring.hpp"
#include "worm/graph.hpp"
#include "worm/solver.hpp"

namespace worm {

// ---------------------------------------------------------------------------
// Gadget: a complete graph on (n-1)^2 - 1 inner vertices S u S' plus two
// non-adjacent outer vertices x, y joined to all of S. Every WORM coloring
// gives x and y one shared color that appears on exactly n-2 inner vertices.

struct GadgetLayout {
    Graph graph;
    int x = 0;
    int y = 1;
    std::vector<int> inner_s;
    std::vector<int> inner_s_prime;
    int pattern_order = 0;
    int pattern_min_degree = 0;
};

namespace detail {

inline void require_usable_pattern(const Graph& pattern, const char* who)
{
    if (pattern.vertex_count() < 3)
        throw contract_error(std::string(who) + ": pattern must have at least 3 vertices");
    if (!is_biconnected(pattern))
        throw contract_error(std::string(who) + ": pattern must be 2-connected");
}

// Pattern vertices by descending degree, ties by index: the fixed bijection
// used when planting pattern copies on fresh vertices.
inline std::vector<int> pattern_plant_order(const Graph& pattern)
{
    std::vector<int> order(pattern.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return pattern.degree(a) > pattern.degree(b);
    });
    return order;
}

} // namespace detail

// Index convention: x = 0, y = 1, then S, then S'.
inline GadgetLayout gadget(const Graph& pattern)
{
    detail::require_usable_pattern(pattern, "gadget");
    const int n = pattern.vertex_count();
    const int delta = pattern.min_degree();
    const int inner = (n - 1) * (n - 1) - 1;
    const int s_prime_size = n - delta - 1;
    const int s_size = inner - s_prime_size;

    GadgetLayout layout;
    layout.pattern_order = n;
    layout.pattern_min_degree = delta;
    Graph g(inner + 2);
    for (int u = 2; u < inner + 2; ++u)
        for (int v = u + 1; v < inner + 2; ++v)
            g.add_edge(u, v);
    for (int i = 0; i < s_size; ++i) {
        g.add_edge(0, 2 + i);
        g.add_edge(1, 2 + i);
        layout.inner_s.push_back(2 + i);
    }
    for (int i = 0; i < s_prime_size; ++i)
        layout.inner_s_prime.push_back(2 + s_size + i);

    std::vector<Label> labels;
    labels.emplace_back(CopyVertexLabel{0, 0});
    labels.emplace_back(CopyVertexLabel{0, 1});
    for (int i = 0; i < s_size; ++i)
        labels.emplace_back(GadgetInnerLabel{0, 0, false});
    for (int i = 0; i < s_prime_size; ++i)
        labels.emplace_back(GadgetInnerLabel{0, 0, true});
    g.set_labels(std::move(labels));
    layout.graph = std::move(g);
    return layout;
}

// ---------------------------------------------------------------------------
// C1 / C2 reduction graphs

struct GadgetEmbedding {
    int origin = 0;   // base-graph vertex whose chain holds this gadget
    int position = 0; // gadget index along the chain
    int x = 0;        // outer vertices: copy (origin, position) / (origin, position+1)
    int y = 0;
    std::vector<int> inner; // S first, then S'
    int s_size = 0;
};

struct SupplementaryCopy {
    std::vector<int> origins;                  // base vertices supplying the sequences
    std::vector<int> vertices;                 // host vertices, in allocation order
    std::vector<std::pair<int, int>> added_edges;
};

struct C1Layout {
    Graph graph;
    Graph base;
    Graph pattern;
    int n0 = 0;
    int block_size = 0; // host vertices per base vertex: (n-1)^2 * n0 + 1

    std::vector<GadgetEmbedding> gadgets;
    std::vector<std::vector<int>> sequences; // V_i-sequence host vertices
    std::vector<int> sequence_used;          // allocated prefix length per sequence
    std::vector<SupplementaryCopy> first_type;
    std::vector<SupplementaryCopy> second_type; // c2 only

    int copy_vertex(int origin, int copy) const
    {
        if (origin < 0 || origin >= base.vertex_count() || copy < 0 || copy > n0)
            throw contract_error("copy_vertex: index out of range");
        return origin * block_size + copy;
    }
};

inline int c1_default_n0(const Graph& g, const Graph& pattern)
{
    const int n = pattern.vertex_count();
    const long long bound = ceil_div(
        static_cast<long long>(n + 1) * (n + 1) * g.max_degree(), 4);
    return static_cast<int>(std::max(1LL, bound));
}

namespace detail {

// One sequence allocation: `need` fresh entries from the origin's
// V_i-sequence, in order. Throws naming the starved sequence.
inline std::vector<int> take_from_sequence(const C1Layout& layout, std::vector<int>& used,
                                           int origin, int need, const std::string& what)
{
    const auto& seq = layout.sequences[origin];
    if (used[origin] + need > static_cast<int>(seq.size()))
        throw contract_error(
            "c1/c2: V_" + std::to_string(origin) + "-sequence exhausted while placing "
            + what + " (needs " + std::to_string(need) + " more, has "
            + std::to_string(seq.size() - used[origin]) + " unused; n0 = "
            + std::to_string(layout.n0) + ")");
    std::vector<int> out;
    for (int t = 0; t < need; ++t)
        out.push_back(seq[used[origin]++]);
    return out;
}

// Add an induced pattern copy on fresh, pairwise non-adjacent vertices
// listed in allocation order.
inline SupplementaryCopy plant_pattern(Graph& host, const Graph& pattern,
                                       std::vector<int> origins, std::vector<int> vertices)
{
    const auto order = pattern_plant_order(pattern);
    std::vector<int> image(pattern.vertex_count());
    for (std::size_t a = 0; a < order.size(); ++a)
        image[order[a]] = vertices[a];
    SupplementaryCopy copy;
    copy.origins = std::move(origins);
    copy.vertices = std::move(vertices);
    for (auto [u, v] : pattern.edges()) {
        host.add_edge(image[u], image[v]);
        copy.added_edges.emplace_back(std::min(image[u], image[v]),
                                      std::max(image[u], image[v]));
    }
    std::sort(copy.added_edges.begin(), copy.added_edges.end());
    return copy;
}

inline C1Layout build_chains(const Graph& g, const Graph& pattern, int n0)
{
    require_usable_pattern(pattern, "c1");
    if (n0 < 1)
        throw contract_error("c1: n0 must be at least 1");
    const int n = pattern.vertex_count();
    const int ell = g.vertex_count();
    if (ell < 1)
        throw contract_error("c1: base graph must be non-empty");
    const int delta = pattern.min_degree();
    const int inner = (n - 1) * (n - 1) - 1;
    const int s_prime_size = n - delta - 1;
    const int s_size = inner - s_prime_size;
    const int block = (n - 1) * (n - 1) * n0 + 1;
    const long long total = static_cast<long long>(block) * ell;
    if (total > 5'000'000)
        throw contract_error("c1: construction would exceed 5M vertices");

    C1Layout layout;
    layout.base = g;
    layout.pattern = pattern;
    layout.n0 = n0;
    layout.block_size = block;

    Graph host(static_cast<int>(total));
    std::vector<Label> labels(static_cast<std::size_t>(total),
                              Label{CopyVertexLabel{0, 0}});
    const int half_up = (n + 1) / 2;

    for (int i = 0; i < ell; ++i) {
        const int base_index = i * block;
        for (int j = 0; j <= n0; ++j)
            labels[base_index + j] = CopyVertexLabel{i, j};
        for (int p = 0; p < n0; ++p) {
            GadgetEmbedding emb;
            emb.origin = i;
            emb.position = p;
            emb.x = base_index + p;
            emb.y = base_index + p + 1;
            emb.s_size = s_size;
            const int inner_base = base_index + (n0 + 1) + p * inner;
            for (int t = 0; t < inner; ++t) {
                const int v = inner_base + t;
                emb.inner.push_back(v);
                labels[v] = GadgetInnerLabel{i, p, t >= s_size};
            }
            for (int a = 0; a < inner; ++a)
                for (int b = a + 1; b < inner; ++b)
                    host.add_edge(inner_base + a, inner_base + b);
            for (int t = 0; t < s_size; ++t) {
                host.add_edge(emb.x, inner_base + t);
                host.add_edge(emb.y, inner_base + t);
            }
            layout.gadgets.push_back(std::move(emb));
        }
        std::vector<int> seq;
        for (int t = 0; t * half_up <= n0; ++t)
            seq.push_back(base_index + t * half_up);
        layout.sequences.push_back(std::move(seq));
    }
    host.set_labels(std::move(labels));
    layout.graph = std::move(host);
    layout.sequence_used.assign(ell, 0);
    return layout;
}

// First-type supplementary copies: one induced pattern per base edge, in
// lexicographic edge order; the lower endpoint supplies ceil(n/2) sequence
// vertices, the higher floor(n/2).
inline void add_first_type(C1Layout& layout)
{
    const Graph& pattern = layout.pattern;
    const int n = pattern.vertex_count();
    const int half_up = (n + 1) / 2;
    for (auto [i, j] : layout.base.edges()) {
        const std::string what =
            "the copy for edge (" + std::to_string(i) + "," + std::to_string(j) + ")";
        std::vector<int> verts =
            take_from_sequence(layout, layout.sequence_used, i, half_up, what);
        const auto from_j =
            take_from_sequence(layout, layout.sequence_used, j, n - half_up, what);
        verts.insert(verts.end(), from_j.begin(), from_j.end());
        std::vector<int> origins(half_up, i);
        origins.insert(origins.end(), static_cast<std::size_t>(n - half_up), j);
        layout.first_type.push_back(
            plant_pattern(layout.graph, pattern, std::move(origins), std::move(verts)));
    }
}

} // namespace detail

// C1(G, F, N0): chains of N0 gadgets per base vertex plus one induced
// pattern copy per base edge. n0 below the default bound is accepted
// whenever the sequences can still supply every edge.
inline C1Layout c1(const Graph& g, const Graph& pattern, std::optional<int> n0 = {})
{
    C1Layout layout =
        detail::build_chains(g, pattern, n0.value_or(c1_default_n0(g, pattern)));
    detail::add_first_type(layout);
    return layout;
}

// C2(G, F): c1 with an enlarged N0, plus one induced pattern copy for every
// n-subset of base vertices spanning at least one base edge (lexicographic
// subset order, one fresh sequence vertex per involved base vertex).
inline C1Layout c2(const Graph& g, const Graph& pattern)
{
    detail::require_usable_pattern(pattern, "c2");
    const int n = pattern.vertex_count();
    const int half_up = (n + 1) / 2;
    const long long n0 = c1_default_n0(g, pattern)
        + binomial(g.vertex_count() - 1, n - 1) * half_up;
    if (n0 > 10'000'000)
        throw contract_error("c2: chain length bound exceeds 10M (base graph too large)");
    C1Layout layout = detail::build_chains(g, pattern, static_cast<int>(n0));
    detail::add_first_type(layout);

    const int ell = g.vertex_count();
    if (ell < n)
        return layout;
    std::vector<int> subset(n);
    std::iota(subset.begin(), subset.end(), 0);
    for (;;) {
        bool has_edge = false;
        for (int a = 0; a < n && !has_edge; ++a)
            for (int b = a + 1; b < n && !has_edge; ++b)
                if (g.adjacent(subset[a], subset[b]))
                    has_edge = true;
        if (has_edge) {
            std::string what = "the second-type copy for subset {";
            for (int a = 0; a < n; ++a)
                what += (a ? "," : "") + std::to_string(subset[a]);
            what += "}";
            std::vector<int> verts;
            for (int a = 0; a < n; ++a) {
                const auto taken = detail::take_from_sequence(
                    layout, layout.sequence_used, subset[a], 1, what);
                verts.push_back(taken[0]);
            }
            layout.second_type.push_back(detail::plant_pattern(
                layout.graph, pattern, subset, std::move(verts)));
        }
        // next n-combination of {0..ell-1} in lexicographic order
        int pos = n - 1;
        while (pos >= 0 && subset[pos] == ell - n + pos)
            --pos;
        if (pos < 0)
            break;
        ++subset[pos];
        for (int q = pos + 1; q < n; ++q)
            subset[q] = subset[q - 1] + 1;
    }
    return layout;
}

// ---------------------------------------------------------------------------
// Gap construction: (G x K_{n-1}) v K_{(n-3)(n-1)} for triangle-free
// connected G with chi(G) >= 3.

struct GapLayout {
    Graph graph;
    Graph base;
    int pattern_order = 0;
    std::vector<std::vector<int>> parts; // V_i, each inducing K_{n-1}
    std::vector<int> universal;          // V*
};

inline GapLayout gap_graph(const Graph& g, int n)
{
    if (n < 4)
        throw contract_error("gap_graph: requires n >= 4");
    if (!is_connected(g))
        throw contract_error("gap_graph: base graph must be connected");
    if (!is_triangle_free(g))
        throw contract_error("gap_graph: base graph must be triangle-free");
    if (is_bipartite(g))
        throw contract_error("gap_graph: base graph must have chromatic number >= 3");

    GapLayout layout;
    layout.base = g;
    layout.pattern_order = n;
    const int ell = g.vertex_count();
    Graph host = join(strong_product(g, complete(n - 1)), complete((n - 3) * (n - 1)));

    std::vector<Label> labels;
    labels.reserve(host.vertex_count());
    for (int i = 0; i < ell; ++i) {
        std::vector<int> part;
        for (int t = 0; t < n - 1; ++t) {
            part.push_back(i * (n - 1) + t);
            labels.emplace_back(ProductVertexLabel{i, t});
        }
        layout.parts.push_back(std::move(part));
    }
    for (int s = 0; s < (n - 3) * (n - 1); ++s) {
        layout.universal.push_back(ell * (n - 1) + s);
        labels.emplace_back(UniversalLabel{s});
    }
    host.set_labels(std::move(labels));
    layout.graph = std::move(host);
    return layout;
}

// ---------------------------------------------------------------------------
// Witness colorings

namespace detail {

// Validates a proper coloring of `g` and returns the dense rank of each
// color id (ascending id order).
inline std::vector<int> dense_proper_ranks(const Graph& g, const Coloring& proper,
                                           const char* who)
{
    if (static_cast<int>(proper.colors.size()) != g.vertex_count())
        throw contract_error(std::string(who) + ": coloring must be total on the base graph");
    for (int c : proper.colors)
        if (c < 0)
            throw contract_error(std::string(who) + ": negative color id");
    for (auto [u, v] : g.edges())
        if (proper.colors[u] == proper.colors[v])
            throw contract_error(std::string(who) + ": input coloring is not proper");
    std::vector<int> ids(proper.colors.begin(), proper.colors.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<int> rank(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        rank[v] = static_cast<int>(
            std::lower_bound(ids.begin(), ids.end(), proper.colors[v]) - ids.begin());
    return rank;
}

} // namespace detail

// WORM coloring of a c1 graph from a proper coloring of the base graph:
// every chain repeats its base color; inside each gadget that color covers
// S' plus the delta-1 lowest vertices of S, and the n-2 lowest other colors
// cover n-1 vertices of S each. Uses exactly max(k, n-1) colors.
inline Coloring witness_c1(const C1Layout& layout, const Coloring& proper)
{
    const auto rank = detail::dense_proper_ranks(layout.base, proper, "witness_c1");
    const int n = layout.pattern.vertex_count();
    const int delta = layout.pattern.min_degree();
    int k = 0;
    for (int r : rank)
        k = std::max(k, r + 1);
    const int palette = std::max(k, n - 1);

    Coloring out;
    out.colors.assign(layout.graph.vertex_count(), -1);
    for (int i = 0; i < layout.base.vertex_count(); ++i)
        for (int j = 0; j <= layout.n0; ++j)
            out.colors[layout.copy_vertex(i, j)] = rank[i];

    for (const auto& emb : layout.gadgets) {
        const int outer_color = rank[emb.origin];
        std::vector<int> aux;
        for (int c = 0; c < palette && static_cast<int>(aux.size()) < n - 2; ++c)
            if (c != outer_color)
                aux.push_back(c);
        // S' and the delta-1 lowest of S share the outer color
        for (int t = emb.s_size; t < static_cast<int>(emb.inner.size()); ++t)
            out.colors[emb.inner[t]] = outer_color;
        for (int t = 0; t < delta - 1; ++t)
            out.colors[emb.inner[t]] = outer_color;
        // remaining S vertices: n-1 per auxiliary color, in index order
        for (int t = delta - 1; t < emb.s_size; ++t)
            out.colors[emb.inner[t]] = aux[(t - (delta - 1)) / (n - 1)];
    }
    return out;
}

// Distinct colors on the set of gadget outer vertices, reported alongside
// c1 witnesses.
inline int outer_color_count(const C1Layout& layout, const Coloring& coloring)
{
    std::set<int> distinct;
    for (int i = 0; i < layout.base.vertex_count(); ++i)
        for (int j = 0; j <= layout.n0; ++j)
            distinct.insert(coloring.colors.at(layout.copy_vertex(i, j)));
    return static_cast<int>(distinct.size());
}

// The (n-1)-color witness: color t on slot t of every part, and each color
// on n-3 consecutive universal vertices.
inline Coloring witness_gap_low(const GapLayout& layout)
{
    const int n = layout.pattern_order;
    Coloring out;
    out.colors.assign(layout.graph.vertex_count(), -1);
    for (const auto& part : layout.parts)
        for (int t = 0; t < n - 1; ++t)
            out.colors[part[t]] = t;
    for (std::size_t p = 0; p < layout.universal.size(); ++p)
        out.colors[layout.universal[p]] = static_cast<int>(p) / (n - 3);
    return out;
}

// The high-end witnesses: n-3 dedicated colors on the universal set (n-1
// vertices each) and every part monochromatic in its base color shifted past
// them. Uses exactly t + n - 3 colors for a proper base coloring with t.
inline Coloring witness_gap_high(const GapLayout& layout, const Coloring& proper)
{
    const auto rank = detail::dense_proper_ranks(layout.base, proper, "witness_gap_high");
    const int n = layout.pattern_order;
    Coloring out;
    out.colors.assign(layout.graph.vertex_count(), -1);
    for (std::size_t p = 0; p < layout.universal.size(); ++p)
        out.colors[layout.universal[p]] = static_cast<int>(p) / (n - 1);
    for (int i = 0; i < layout.base.vertex_count(); ++i)
        for (int v : layout.parts[i])
            out.colors[v] = (n - 3) + rank[i];
    return out;
}

} // namespace worm

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <queue>

#include "worm/graph.hpp"
#include "worm/graph6.hpp"
#include "worm/io.hpp"

using namespace worm;

namespace {

// Test oracle: girth by deleting each edge and measuring the detour.
int girth_oracle(const Graph& g)
{
    int best = -1;
    for (auto [u, v] : g.edges()) {
        // BFS distance from u to v avoiding the edge uv
        std::vector<int> dist(g.vertex_count(), -1);
        std::queue<int> q;
        dist[u] = 0;
        q.push(u);
        while (!q.empty()) {
            const int w = q.front();
            q.pop();
            for (int x : g.neighbors(w)) {
                if (w == u && x == v)
                    continue;
                if (dist[x] == -1) {
                    dist[x] = dist[w] + 1;
                    q.push(x);
                }
            }
        }
        if (dist[v] != -1 && (best == -1 || dist[v] + 1 < best))
            best = dist[v] + 1;
    }
    return best;
}

// Test oracle: is there a proper coloring with at most k colors? Plain
// exhaustive scan over k^V assignments, independent of the solver module.
bool properly_colorable_oracle(const Graph& g, int k)
{
    const int V = g.vertex_count();
    std::vector<int> assignment(V, 0);
    for (;;) {
        bool proper = true;
        for (auto [u, v] : g.edges())
            if (assignment[u] == assignment[v]) {
                proper = false;
                break;
            }
        if (proper)
            return true;
        int i = V - 1;
        while (i >= 0 && assignment[i] == k - 1)
            assignment[i--] = 0;
        if (i < 0)
            return false;
        ++assignment[i];
    }
}

bool graphs_equal(const Graph& a, const Graph& b)
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    return a.edges() == b.edges();
}

void check_symmetric_irreflexive(const Graph& g)
{
    for (int u = 0; u < g.vertex_count(); ++u) {
        REQUIRE_FALSE(g.adjacent(u, u));
        for (int v = 0; v < g.vertex_count(); ++v)
            REQUIRE(g.adjacent(u, v) == g.adjacent(v, u));
    }
}

} // namespace

TEST_CASE("complete graphs")
{
    REQUIRE(complete(0).vertex_count() == 0);
    REQUIRE(complete(0).edge_count() == 0);
    REQUIRE(complete(4).vertex_count() == 4);
    REQUIRE(complete(4).edge_count() == 6);
    REQUIRE(complete(9).edge_count() == 36);
}

TEST_CASE("catalog graphs")
{
    const auto c5 = named("c5");
    REQUIRE(c5.vertex_count() == 5);
    REQUIRE(c5.edge_count() == 5);
    REQUIRE(is_triangle_free(c5));

    const auto petersen = named("petersen");
    REQUIRE(petersen.vertex_count() == 10);
    REQUIRE(petersen.edge_count() == 15);
    REQUIRE(girth_oracle(petersen) == 5);
    for (int v = 0; v < 10; ++v)
        REQUIRE(petersen.degree(v) == 3);

    const auto groetzsch = named("groetzsch");
    REQUIRE(groetzsch.vertex_count() == 11);
    REQUIRE(groetzsch.edge_count() == 20);
    REQUIRE(is_triangle_free(groetzsch));
    REQUIRE_FALSE(properly_colorable_oracle(groetzsch, 3));
    REQUIRE(properly_colorable_oracle(groetzsch, 4));

    REQUIRE(named("k7").edge_count() == 21);
    REQUIRE(named("p4").edge_count() == 3);
    REQUIRE(named("diamond").min_degree() == 2);
    REQUIRE(is_biconnected(named("diamond")));
    REQUIRE_THROWS_AS(named("no-such-graph"), contract_error);
}

TEST_CASE("fixed catalog is well formed")
{
    for (const auto& name : fixed_catalog_names()) {
        const auto g = named(name);
        check_symmetric_irreflexive(g);
        REQUIRE(is_connected(g));
    }
}

TEST_CASE("join")
{
    REQUIRE(graphs_equal(join(complete(1), complete(1)), complete(2)));

    const auto j = join(cycle(5), complete(3));
    REQUIRE(j.vertex_count() == 8);
    REQUIRE(j.edge_count() == 5 + 3 + 15);
    check_symmetric_irreflexive(j);

    const auto g = named("petersen");
    REQUIRE(graphs_equal(join(Graph(0), g), g));
}

TEST_CASE("join preserves labels when both sides carry them")
{
    Graph a(2);
    a.add_edge(0, 1);
    a.set_labels({Label{UniversalLabel{0}}, Label{UniversalLabel{1}}});
    Graph b(1);
    b.set_labels({Label{UniversalLabel{2}}});
    const auto j = join(a, b);
    REQUIRE(j.has_labels());
    REQUIRE(j.labels().size() == 3);
    REQUIRE(std::get<UniversalLabel>(j.labels()[2]).slot == 2);

    // a plain operand drops provenance
    REQUIRE_FALSE(join(a, complete(1)).has_labels());
}

TEST_CASE("strong product")
{
    REQUIRE(graphs_equal(strong_product(complete(2), complete(2)), complete(4)));

    const auto p = strong_product(cycle(5), complete(3));
    REQUIRE(p.vertex_count() == 15);
    // oracle: enumerate the edge rule directly over all vertex pairs
    const auto g1 = cycle(5);
    const auto g2 = complete(3);
    int expected = 0;
    for (int u1 = 0; u1 < 5; ++u1)
        for (int u2 = 0; u2 < 3; ++u2)
            for (int v1 = 0; v1 < 5; ++v1)
                for (int v2 = 0; v2 < 3; ++v2) {
                    if (u1 * 3 + u2 >= v1 * 3 + v2)
                        continue;
                    const bool e1 = g1.adjacent(u1, v1);
                    const bool e2 = g2.adjacent(u2, v2);
                    if ((u1 == v1 && e2) || (u2 == v2 && e1) || (e1 && e2))
                        ++expected;
                }
    REQUIRE(expected == 60);
    REQUIRE(p.edge_count() == expected);
    check_symmetric_irreflexive(p);

    const auto identity = strong_product(named("petersen"), complete(1));
    REQUIRE(graphs_equal(identity, named("petersen")));
}

TEST_CASE("operator edge-count formulas over the corpus")
{
    const std::vector<Graph> corpus = {complete(3), cycle(4), path(5), named("bull"),
                                       named("diamond"), random_graph(6, 0.5, 7)};
    for (const auto& a : corpus)
        for (const auto& b : corpus) {
            const auto j = join(a, b);
            REQUIRE(j.vertex_count() == a.vertex_count() + b.vertex_count());
            REQUIRE(j.edge_count()
                    == a.edge_count() + b.edge_count() + a.vertex_count() * b.vertex_count());
            const auto s = strong_product(a, b);
            REQUIRE(s.vertex_count() == a.vertex_count() * b.vertex_count());
            REQUIRE(s.edge_count()
                    == a.vertex_count() * b.edge_count() + b.vertex_count() * a.edge_count()
                           + 2 * a.edge_count() * b.edge_count());
        }
}

TEST_CASE("graph6 encoding of known graphs")
{
    // hand-packed from the format: K3 = n-byte 'B' + bits 111 -> 'w'
    REQUIRE(encode_graph6(complete(3)) == "Bw");
    REQUIRE(encode_graph6(complete(4)) == "C~");
    // C5 in cycle vertex order: bits 1 01 001 1001 -> 101001 100100
    REQUIRE(encode_graph6(cycle(5)) == "Dhc");
}

TEST_CASE("graph6 round trip")
{
    std::vector<Graph> corpus;
    for (int s = 1; s <= 9; ++s)
        corpus.push_back(complete(s));
    for (int s = 3; s <= 9; ++s)
        corpus.push_back(cycle(s));
    for (const auto& name : fixed_catalog_names())
        corpus.push_back(named(name));
    for (int n = 2; n <= 12; ++n)
        for (std::uint32_t seed = 0; seed < 8; ++seed)
            corpus.push_back(random_graph(n, 0.1 * (seed + 1), 1000 + seed));
    for (const auto& g : corpus)
        REQUIRE(graphs_equal(decode_graph6(encode_graph6(g)), g));

    // large order uses the 3-byte form
    const auto big = path(200);
    const auto enc = encode_graph6(big);
    REQUIRE(enc[0] == '~');
    REQUIRE(graphs_equal(decode_graph6(enc), big));
}

TEST_CASE("graph6 errors carry byte offsets")
{
    try {
        decode_graph6("garbage\x01");
        FAIL("expected graph6_error");
    } catch (const graph6_error& e) {
        REQUIRE(e.offset() == 7);
    }

    try {
        decode_graph6("D"); // order 5, missing edge bytes
        FAIL("expected graph6_error");
    } catch (const graph6_error& e) {
        REQUIRE(e.offset() == 1);
    }

    REQUIRE_THROWS_AS(decode_graph6("Bwz"), graph6_error); // trailing byte
    REQUIRE_THROWS_AS(decode_graph6(""), graph6_error);

    // the optional header is accepted
    REQUIRE(graphs_equal(decode_graph6(">>graph6<<Bw\n"), complete(3)));
}

TEST_CASE("graph6 decode never crashes on junk")
{
    std::mt19937 gen(7);
    for (int trial = 0; trial < 2000; ++trial) {
        std::string junk;
        const int len = static_cast<int>(gen() % 12);
        for (int i = 0; i < len; ++i)
            junk.push_back(static_cast<char>(gen() % 256));
        try {
            const auto g = decode_graph6(junk);
            REQUIRE(encode_graph6(g).size() <= junk.size() + 10);
        } catch (const graph6_error& e) {
            REQUIRE(e.offset() <= junk.size());
        }
    }
}

TEST_CASE("structural predicates")
{
    REQUIRE(is_connected(named("petersen")));
    REQUIRE_FALSE(is_connected(join(Graph(2), Graph(0))));
    REQUIRE(is_bipartite(named("cube")));
    REQUIRE_FALSE(is_bipartite(cycle(5)));
    REQUIRE(is_triangle_free(named("petersen")));
    REQUIRE_FALSE(is_triangle_free(named("paw")));
    REQUIRE(is_biconnected(cycle(4)));
    REQUIRE_FALSE(is_biconnected(path(3)));
    REQUIRE_FALSE(is_biconnected(named("butterfly"))); // cut vertex
    REQUIRE_FALSE(is_biconnected(complete(2)));        // too small
}

TEST_CASE("graph invariants are enforced")
{
    Graph g(3);
    REQUIRE_THROWS_AS(g.add_edge(0, 0), contract_error);
    REQUIRE_THROWS_AS(g.add_edge(0, 3), contract_error);
    g.add_edge(0, 1);
    g.add_edge(1, 0); // idempotent
    REQUIRE(g.edge_count() == 1);
    REQUIRE_THROWS_AS(g.set_labels({Label{UniversalLabel{0}}}), contract_error);
}

TEST_CASE("exports")
{
    const auto g = cycle(3);
    const auto j = graph_to_json(g);
    REQUIRE(j["n"] == 3);
    REQUIRE(j["edges"].size() == 3);
    REQUIRE_FALSE(j.contains("labels"));

    const auto dot = to_dot(g);
    REQUIRE(dot.find("graph G {") == 0);
    REQUIRE(dot.find("0 -- 1") != std::string::npos);
}

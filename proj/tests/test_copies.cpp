#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "worm/copies.hpp"
#include "worm/graph.hpp"
#include "worm/io.hpp"

using namespace worm;

namespace {

// Test oracle: spanning-copy check that literally exhausts all bijections.
bool spanning_copy_by_permutations(const Graph& induced, const Graph& pattern)
{
    const int n = pattern.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool all_edges = true;
        for (auto [u, v] : pattern.edges())
            if (!induced.adjacent(perm[u], perm[v])) {
                all_edges = false;
                break;
            }
        if (all_edges)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Test oracle: the family by scanning every n-subset of the host.
std::vector<std::vector<int>> family_by_subset_scan(const Graph& host, const Graph& pattern)
{
    const int V = host.vertex_count();
    const int n = pattern.vertex_count();
    std::vector<std::vector<int>> members;
    if (n > V)
        return members;
    std::vector<int> subset(n);
    std::iota(subset.begin(), subset.end(), 0);
    for (;;) {
        if (spanning_copy_by_permutations(induced_subgraph(host, subset), pattern))
            members.push_back(subset);
        int i = n - 1;
        while (i >= 0 && subset[i] == V - n + i)
            --i;
        if (i < 0)
            break;
        ++subset[i];
        for (int j = i + 1; j < n; ++j)
            subset[j] = subset[j - 1] + 1;
    }
    return members;
}

} // namespace

TEST_CASE("enumerate_copies on small hosts")
{
    const auto fam_k4_k3 = *enumerate_copies(complete(4), complete(3));
    REQUIRE(fam_k4_k3.size() == 4); // every triple of K4 is a triangle

    REQUIRE(enumerate_copies(cycle(5), complete(3))->empty());

    // Petersen has girth 5: no 4-subset carries a C4 (cross-checked by scan)
    const auto petersen = named("petersen");
    REQUIRE(enumerate_copies(petersen, cycle(4))->empty());
    REQUIRE(family_by_subset_scan(petersen, cycle(4)).empty());

    const auto fam_k4_c4 = *enumerate_copies(complete(4), cycle(4));
    REQUIRE(fam_k4_c4.size() == 1);
    REQUIRE(fam_k4_c4.members[0] == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("members are sorted, deduplicated and complete")
{
    const auto fam = *enumerate_copies(complete(6), cycle(4));
    REQUIRE(fam.size() == 15); // binomial(6,4): every 4-subset of a clique
    REQUIRE(std::is_sorted(fam.members.begin(), fam.members.end()));
    for (const auto& m : fam.members) {
        REQUIRE(m.size() == 4);
        REQUIRE(std::is_sorted(m.begin(), m.end()));
        REQUIRE(std::adjacent_find(m.begin(), m.end()) == m.end());
    }
}

TEST_CASE("oracle equivalence against the subset scan")
{
    std::vector<Graph> hosts = {complete(5), cycle(6), named("petersen"), named("bull"),
                                named("prism"), named("house")};
    for (std::uint32_t seed = 1; seed <= 6; ++seed)
        hosts.push_back(random_graph(7, 0.8 * seed / 6.0, seed));
    const std::vector<Graph> patterns = {complete(3), cycle(4), complete(4), named("diamond")};
    for (const auto& host : hosts)
        for (const auto& pattern : patterns) {
            if (pattern.vertex_count() > host.vertex_count())
                continue;
            const auto fam = *enumerate_copies(host, pattern);
            REQUIRE(fam.members == family_by_subset_scan(host, pattern));
        }
}

TEST_CASE("monotonicity: adding a host edge never loses members")
{
    auto host = random_graph(8, 0.35, 99);
    const auto pattern = named("diamond");
    auto before = enumerate_copies(host, pattern)->members;
    for (int u = 0; u < host.vertex_count(); ++u)
        for (int v = u + 1; v < host.vertex_count(); ++v) {
            if (host.adjacent(u, v))
                continue;
            Graph bigger = host;
            bigger.add_edge(u, v);
            const auto after = enumerate_copies(bigger, pattern)->members;
            REQUIRE(std::includes(after.begin(), after.end(), before.begin(), before.end()));
        }
}

TEST_CASE("complete hosts realize every n-subset")
{
    for (int s = 4; s <= 8; ++s)
        for (const auto& pattern : {complete(4), cycle(4), named("diamond")}) {
            const auto fam = *enumerate_copies(complete(s), pattern);
            REQUIRE(static_cast<long long>(fam.size()) == binomial(s, 4));
        }
}

TEST_CASE("has_spanning_copy")
{
    REQUIRE(has_spanning_copy(complete(4), cycle(4)));
    REQUIRE_FALSE(has_spanning_copy(cycle(4), complete(4)));
    REQUIRE_FALSE(has_spanning_copy(path(4), cycle(4)));
    REQUIRE_FALSE(spanning_copy_by_permutations(path(4), cycle(4)));
    REQUIRE_THROWS_AS(has_spanning_copy(complete(3), complete(4)), contract_error);
}

TEST_CASE("pattern must have at least two vertices")
{
    REQUIRE_THROWS_AS(enumerate_copies(complete(3), complete(1)), contract_error);
}

TEST_CASE("budget exhaustion yields no partial family")
{
    SearchBudget tiny;
    tiny.node_limit = 5;
    REQUIRE_FALSE(enumerate_copies(complete(9), complete(4), tiny).has_value());
}

TEST_CASE("family JSON export")
{
    const auto fam = *enumerate_copies(complete(4), complete(3));
    const auto j = family_to_json(fam);
    REQUIRE(j["n"] == 3);
    REQUIRE(j["copies"].size() == 4);
    REQUIRE(j["copies"][0] == json::array({0, 1, 2}));
    REQUIRE(j["copies"][3] == json::array({1, 2, 3}));
}

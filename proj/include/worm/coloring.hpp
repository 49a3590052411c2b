#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "worm/base.hpp"
#include "worm/copies.hpp"
#include "worm/graph.hpp"

namespace worm {

// Total assignment of color ids to the vertices of a host graph. "Uses
// exactly k colors" always means k distinct ids appear.
struct Coloring {
    std::vector<int> colors;

    int used_count() const
    {
        std::set<int> distinct(colors.begin(), colors.end());
        return static_cast<int>(distinct.size());
    }
};

enum class VerdictKind { ok, monochromatic_copy, rainbow_copy };

// Outcome of a WORM check; on violation, member is the offending copy (the
// first one in the family's deterministic order).
struct Verdict {
    VerdictKind kind = VerdictKind::ok;
    std::vector<int> member;

    bool ok() const { return kind == VerdictKind::ok; }
};

// A coloring is F-WORM iff every family member sees more than one and fewer
// than n distinct colors.
inline Verdict verify(const Graph& host, const CopyFamily& family, const Coloring& coloring)
{
    if (static_cast<int>(coloring.colors.size()) != host.vertex_count())
        throw contract_error("verify: coloring must be total on the host");
    for (int c : coloring.colors)
        if (c < 0)
            throw contract_error("verify: negative color id (partial coloring?)");
    check_family(family, host.vertex_count(), "verify");

    const int n = family.pattern_order;
    std::vector<int> seen;
    for (const auto& member : family.members) {
        seen.clear();
        for (int v : member)
            seen.push_back(coloring.colors[v]);
        std::sort(seen.begin(), seen.end());
        const int distinct =
            static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
        if (distinct == 1)
            return {VerdictKind::monochromatic_copy, member};
        if (distinct == n)
            return {VerdictKind::rainbow_copy, member};
    }
    return {};
}

} // namespace worm

#pragma once

#include <string>

#include <json.hpp>

#include "worm/coloring.hpp"
#include "worm/constructions.hpp"
#include "worm/copies.hpp"
#include "worm/graph.hpp"
#include "worm/solver.hpp"

namespace worm {

using json = nlohmann::ordered_json;

inline json graph_to_json(const Graph& g)
{
    json out;
    out["n"] = g.vertex_count();
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    out["edges"] = std::move(edges);
    if (g.has_labels()) {
        json labels = json::array();
        for (const auto& label : g.labels()) {
            json entry;
            if (const auto* l = std::get_if<CopyVertexLabel>(&label)) {
                entry = {{"type", "copy"}, {"origin", l->origin}, {"copy", l->copy}};
            } else if (const auto* l = std::get_if<GadgetInnerLabel>(&label)) {
                entry = {{"type", "gadget_inner"}, {"origin", l->origin},
                         {"position", l->position}, {"part", l->in_s_prime ? "S'" : "S"}};
            } else if (const auto* l = std::get_if<ProductVertexLabel>(&label)) {
                entry = {{"type", "product"}, {"origin", l->origin}, {"slot", l->slot}};
            } else if (const auto* l = std::get_if<UniversalLabel>(&label)) {
                entry = {{"type", "universal"}, {"slot", l->slot}};
            }
            labels.push_back(std::move(entry));
        }
        out["labels"] = std::move(labels);
    }
    return out;
}

// DOT export; vertex names embed labels and roles pick the fill color.
inline std::string to_dot(const Graph& g)
{
    std::string out = "graph G {\n  node [style=filled fillcolor=white];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out += "  " + std::to_string(v);
        if (g.has_labels()) {
            const auto& label = g.labels()[v];
            const char* fill = "white";
            if (std::holds_alternative<CopyVertexLabel>(label))
                fill = "lightblue";
            else if (std::holds_alternative<GadgetInnerLabel>(label))
                fill = std::get<GadgetInnerLabel>(label).in_s_prime ? "gray55" : "gray80";
            else if (std::holds_alternative<ProductVertexLabel>(label))
                fill = "palegreen";
            else if (std::holds_alternative<UniversalLabel>(label))
                fill = "lightcoral";
            out += " [label=\"" + label_display(label) + "\" fillcolor=" + fill + "]";
        }
        out += ";\n";
    }
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

// ---------------------------------------------------------------------------
// Colorings

inline json coloring_to_json(const Coloring& c)
{
    return json{{"colors", c.colors}};
}

inline Coloring coloring_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("colors") || !j["colors"].is_array())
        throw contract_error("coloring: expected an object with a \"colors\" array");
    Coloring c;
    for (const auto& entry : j["colors"]) {
        if (!entry.is_number_integer())
            throw contract_error("coloring: color ids must be integers");
        c.colors.push_back(entry.get<int>());
    }
    return c;
}

inline json verdict_to_json(const Verdict& v)
{
    json out;
    switch (v.kind) {
    case VerdictKind::ok: out["verdict"] = "ok"; break;
    case VerdictKind::monochromatic_copy: out["verdict"] = "monochromatic_copy"; break;
    case VerdictKind::rainbow_copy: out["verdict"] = "rainbow_copy"; break;
    }
    if (!v.ok())
        out["member"] = v.member;
    return out;
}

// ---------------------------------------------------------------------------
// Copy families

inline json family_to_json(const CopyFamily& family)
{
    json out;
    out["n"] = family.pattern_order;
    json copies = json::array();
    for (const auto& member : family.members)
        copies.push_back(member);
    out["copies"] = std::move(copies);
    return out;
}

// ---------------------------------------------------------------------------
// Feasible sets

inline const char* solve_status_name(SolveStatus s)
{
    switch (s) {
    case SolveStatus::feasible: return "feasible";
    case SolveStatus::infeasible: return "infeasible";
    default: return "unknown";
    }
}

inline json feasible_set_to_json(const FeasibleSet& fs, bool include_witnesses = false)
{
    json table = json::object();
    for (int k = 1; k <= static_cast<int>(fs.statuses.size()); ++k) {
        const auto& entry = fs.at(k);
        if (include_witnesses && entry.witness)
            table[std::to_string(k)] = {{"status", solve_status_name(entry.status)},
                                        {"witness", entry.witness->colors}};
        else
            table[std::to_string(k)] = solve_status_name(entry.status);
    }
    json out;
    out["k"] = std::move(table);
    const auto lo = fs.w_minus();
    const auto hi = fs.w_plus();
    out["w_minus"] = lo.status == SolveStatus::feasible ? json(lo.value)
                                                        : json(solve_status_name(lo.status));
    out["w_plus"] = hi.status == SolveStatus::feasible ? json(hi.value)
                                                       : json(solve_status_name(hi.status));
    json gaps = json::array();
    for (const auto& gap : fs.gaps())
        gaps.push_back({{"start", gap.start}, {"size", gap.size}});
    out["gaps"] = std::move(gaps);
    return out;
}

// ---------------------------------------------------------------------------
// Construction layouts

inline json layout_to_json(const GadgetLayout& layout)
{
    json out;
    out["kind"] = "gadget";
    out["pattern_order"] = layout.pattern_order;
    out["pattern_min_degree"] = layout.pattern_min_degree;
    out["x"] = layout.x;
    out["y"] = layout.y;
    out["s"] = layout.inner_s;
    out["s_prime"] = layout.inner_s_prime;
    return out;
}

namespace detail {

inline json supplementary_to_json(const SupplementaryCopy& copy)
{
    json edges = json::array();
    for (auto [u, v] : copy.added_edges)
        edges.push_back({u, v});
    return json{{"origins", copy.origins},
                {"vertices", copy.vertices},
                {"added_edges", std::move(edges)}};
}

} // namespace detail

inline json layout_to_json(const C1Layout& layout)
{
    json out;
    out["kind"] = layout.second_type.empty() ? "c1" : "c2";
    out["n0"] = layout.n0;
    out["vertex_count"] = layout.graph.vertex_count();
    out["block_size"] = layout.block_size;
    json gadgets = json::array();
    for (const auto& emb : layout.gadgets)
        gadgets.push_back({{"origin", emb.origin}, {"position", emb.position},
                           {"x", emb.x}, {"y", emb.y}, {"s_size", emb.s_size},
                           {"inner", emb.inner}});
    out["gadgets"] = std::move(gadgets);
    out["sequences"] = layout.sequences;
    json first = json::array();
    for (const auto& copy : layout.first_type)
        first.push_back(detail::supplementary_to_json(copy));
    out["first_type"] = std::move(first);
    json second = json::array();
    for (const auto& copy : layout.second_type)
        second.push_back(detail::supplementary_to_json(copy));
    out["second_type"] = std::move(second);
    return out;
}

inline json layout_to_json(const GapLayout& layout)
{
    json out;
    out["kind"] = "gap";
    out["n"] = layout.pattern_order;
    out["vertex_count"] = layout.graph.vertex_count();
    out["parts"] = layout.parts;
    out["universal"] = layout.universal;
    return out;
}

} // namespace worm

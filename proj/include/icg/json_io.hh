/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ICG_JSON_IO_HH
#define ICG_JSON_IO_HH

#include <icg/graph.hh>
#include <icg/homomorphism.hh>
#include <icg/incidence.hh>

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace icg
{
    using nlohmann::json;

    // {"n": int, "edges": [[u, v], ...]}
    auto graph_to_json(const Graph & g) -> json;
    auto graph_from_json(const json & j) -> Graph;

    // graph fields plus "palette" and "colors": [{"v", "w", "c"}, ...] in incidence order
    auto coloring_to_json(const IncidenceColoring & c) -> json;
    auto coloring_from_json(const json & j) -> IncidenceColoring;

    // {"map": [t0, t1, ...]}
    auto homomorphism_to_json(const Homomorphism & h) -> json;
    auto homomorphism_from_json(const json & j) -> Homomorphism;

    // {"classes": [[v, ...], ...]}
    auto partition_to_json(const std::vector<std::vector<Vertex> > & classes) -> json;

    /// A graph from either a JSON object or a graph6 line (first non-blank line).
    auto parse_graph_text(std::string_view text) -> Graph;

    /// DOT with edge label "c(u,uv)|c(v,uv)" for u < v; colours shifted by `offset`.
    auto coloring_to_dot(const IncidenceColoring & c, int offset = 0) -> std::string;
}

#endif

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <icg/json_io.hh>

#include <sstream>

using std::pair;
using std::string;
using std::vector;

namespace icg
{
    namespace
    {
        template <typename F_>
        auto guarded(F_ && f)
        {
            try {
                return f();
            }
            catch (const json::exception & e) {
                throw Error(ErrorKind::MalformedJson, e.what());
            }
        }
    }

    auto graph_to_json(const Graph & g) -> json
    {
        json edges = json::array();
        for (auto & e : g.edges())
            edges.push_back({ e.u, e.v });
        return json{ { "n", g.size() }, { "edges", edges } };
    }

    auto graph_from_json(const json & j) -> Graph
    {
        return guarded([&] {
                vector<pair<Vertex, Vertex> > edges;
                for (auto & e : j.at("edges")) {
                    if (! e.is_array() || e.size() != 2)
                        throw Error(ErrorKind::MalformedJson, "edge must be a pair");
                    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
                }
                return Graph(j.at("n").get<int>(), edges);
            });
    }

    auto coloring_to_json(const IncidenceColoring & c) -> json
    {
        auto result = graph_to_json(c.host());
        result["palette"] = c.palette_size();
        json colors = json::array();
        auto incidences = enumerate_incidences(c.host());
        for (std::size_t i = 0 ; i < incidences.size() ; ++i)
            colors.push_back({ { "v", incidences[i].v }, { "w", incidences[i].w }, { "c", c.color(int(i)) } });
        result["colors"] = colors;
        return result;
    }

    auto coloring_from_json(const json & j) -> IncidenceColoring
    {
        auto g = graph_from_json(j);
        return guarded([&] {
                vector<Color> colors(2 * g.edge_count(), -1);
                for (auto & entry : j.at("colors")) {
                    auto i = incidence_index(g, Incidence{ entry.at("v").get<int>(), entry.at("w").get<int>() });
                    if (! i)
                        throw Error(ErrorKind::MalformedJson, "colour entry names a non-incidence");
                    if (colors[*i] != -1)
                        throw Error(ErrorKind::MalformedJson, "incidence coloured twice");
                    colors[*i] = entry.at("c").get<int>();
                }
                for (auto col : colors)
                    if (col == -1)
                        throw Error(ErrorKind::MalformedJson, "coloring is not total");
                try {
                    return IncidenceColoring(g, j.at("palette").get<int>(), colors);
                }
                catch (const Error & e) {
                    throw Error(ErrorKind::MalformedJson, e.what());
                }
            });
    }

    auto homomorphism_to_json(const Homomorphism & h) -> json
    {
        return json{ { "map", h.map } };
    }

    auto homomorphism_from_json(const json & j) -> Homomorphism
    {
        return guarded([&] { return Homomorphism{ j.at("map").get<vector<Vertex> >() }; });
    }

    auto partition_to_json(const vector<vector<Vertex> > & classes) -> json
    {
        return json{ { "classes", classes } };
    }

    auto parse_graph_text(std::string_view text) -> Graph
    {
        auto first = text.find_first_not_of(" \t\r\n");
        if (first == std::string_view::npos)
            throw Error(ErrorKind::MalformedGraph6, "empty input");
        text.remove_prefix(first);

        if (text.front() == '{') {
            auto j = guarded([&] { return json::parse(text); });
            return graph_from_json(j);
        }

        auto end = text.find_first_of("\r\n");
        return parse_graph6(text.substr(0, end));
    }

    auto coloring_to_dot(const IncidenceColoring & c, int offset) -> string
    {
        std::ostringstream out;
        out << "graph G {\n";
        for (Vertex v = 0 ; v < c.host().size() ; ++v)
            out << "  " << v << ";\n";
        for (auto & e : c.host().edges())
            out << "  " << e.u << " -- " << e.v << " [label=\""
                << c.color(e.u, e.v) + offset << "|" << c.color(e.v, e.u) + offset << "\"];\n";
        out << "}\n";
        return out.str();
    }
}

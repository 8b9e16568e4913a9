/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <icg/incidence.hh>

#include <algorithm>
#include <string>

using std::pair;
using std::vector;

namespace icg
{
    auto enumerate_incidences(const Graph & g) -> vector<Incidence>
    {
        vector<Incidence> result;
        result.reserve(2 * g.edge_count());
        for (auto & e : g.edges()) {
            result.push_back(Incidence{ e.u, e.v });
            result.push_back(Incidence{ e.v, e.u });
        }
        return result;
    }

    auto incidence_index(const Graph & g, Incidence i) -> std::optional<IncidenceIndex>
    {
        auto e = g.edge_index(i.v, i.w);
        if (! e)
            return std::nullopt;
        return 2 * *e + (i.v < i.w ? 0 : 1);
    }

    auto incidence_at(const Graph & g, IncidenceIndex i) -> Incidence
    {
        auto & e = g.edge(i / 2);
        return (i % 2 == 0) ? Incidence{ e.u, e.v } : Incidence{ e.v, e.u };
    }

    auto incidences_adjacent(Incidence a, Incidence b) -> bool
    {
        if (a == b)
            return false;
        return a.v == b.v || b.v == a.w || a.v == b.w;
    }

    auto adjacent_incidences(const Graph & g, IncidenceIndex i) -> vector<IncidenceIndex>
    {
        auto [v, w] = incidence_at(g, i);
        vector<IncidenceIndex> result;
        auto & ev = g.incident_edges(v);
        auto & nv = g.neighbours(v);
        for (std::size_t k = 0 ; k < nv.size() ; ++k) {
            // (v, x) and (x, v)
            result.push_back(2 * ev[k] + (v < nv[k] ? 0 : 1));
            result.push_back(2 * ev[k] + (v < nv[k] ? 1 : 0));
        }
        auto & ew = g.incident_edges(w);
        auto & nw = g.neighbours(w);
        for (std::size_t k = 0 ; k < nw.size() ; ++k)
            result.push_back(2 * ew[k] + (w < nw[k] ? 0 : 1));

        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
        result.erase(std::remove(result.begin(), result.end(), i), result.end());
        return result;
    }

    IncidenceColoring::IncidenceColoring(Graph host, int palette, vector<Color> colors) :
        _host(std::move(host)),
        _palette(palette),
        _colors(std::move(colors))
    {
        if (palette < 0)
            throw Error(ErrorKind::BadParams, "negative palette");
        if (int(_colors.size()) != 2 * _host.edge_count())
            throw Error(ErrorKind::BadParams, "coloring is not total: " + std::to_string(_colors.size())
                    + " colours for " + std::to_string(2 * _host.edge_count()) + " incidences");
        for (auto c : _colors)
            if (c < 0 || c >= palette)
                throw Error(ErrorKind::BadParams, "colour " + std::to_string(c) + " outside palette " + std::to_string(palette));
    }

    auto IncidenceColoring::color(Vertex v, Vertex w) const -> Color
    {
        auto i = incidence_index(_host, Incidence{ v, w });
        if (! i)
            throw Error(ErrorKind::BadParams, "(" + std::to_string(v) + "," + std::to_string(w) + ") is not an incidence");
        return _colors[*i];
    }

    auto IncidenceColoring::colors_used() const -> int
    {
        vector<bool> seen(_palette, false);
        for (auto c : _colors)
            seen[c] = true;
        return int(std::count(seen.begin(), seen.end(), true));
    }

    auto verify_coloring(const IncidenceColoring & c) -> Verdict
    {
        auto & g = c.host();
        for (IncidenceIndex i = 0 ; i < 2 * g.edge_count() ; ++i)
            for (auto j : adjacent_incidences(g, i))
                if (j > i && c.color(i) == c.color(j))
                    return Violation{ incidence_at(g, i), incidence_at(g, j) };
        return Valid{ };
    }

    auto is_valid(const IncidenceColoring & c) -> bool
    {
        return std::holds_alternative<Valid>(verify_coloring(c));
    }

    auto Spectrum::all() const -> ColorSet
    {
        ColorSet result = s0;
        result.insert(s1.begin(), s1.end());
        return result;
    }

    auto spectrum(const IncidenceColoring & c, Vertex v) -> Spectrum
    {
        Spectrum result;
        for (auto w : c.host().neighbours(v)) {
            result.s0.insert(c.color(v, w));
            result.s1.insert(c.color(w, v));
        }
        return result;
    }

    auto verify_kp(const IncidenceColoring & c, int p) -> bool
    {
        if (! is_valid(c))
            return false;
        for (Vertex v = 0 ; v < c.host().size() ; ++v)
            if (int(spectrum(c, v).s1.size()) > p)
                return false;
        return true;
    }

    auto free_color_pairs(const IncidenceColoring & c) -> vector<pair<Color, Color> >
    {
        int k = c.palette_size();
        vector<vector<bool> > together(k, vector<bool>(k, false));
        for (Vertex v = 0 ; v < c.host().size() ; ++v) {
            auto s0 = spectrum(c, v).s0;
            for (auto x : s0)
                for (auto y : s0)
                    together[x][y] = true;
        }

        vector<pair<Color, Color> > result;
        for (Color x = 0 ; x < k ; ++x)
            for (Color y = x + 1 ; y < k ; ++y)
                if (! together[x][y])
                    result.emplace_back(x, y);
        return result;
    }

    auto is_adjustable(const IncidenceColoring & c) -> bool
    {
        return c.palette_size() == c.host().max_degree() + 2 && ! free_color_pairs(c).empty();
    }

    auto is_dominating_set(const Graph & g, const vector<Vertex> & s) -> bool
    {
        vector<bool> member(g.size(), false);
        for (auto v : s) {
            if (v < 0 || v >= g.size())
                throw Error(ErrorKind::VertexOutOfRange, std::to_string(v));
            member[v] = true;
        }
        for (Vertex v = 0 ; v < g.size() ; ++v) {
            if (member[v])
                continue;
            auto & n = g.neighbours(v);
            if (std::none_of(n.begin(), n.end(), [&] (Vertex w) { return member[w]; }))
                return false;
        }
        return true;
    }

    auto dominating_partition_check(const Graph & g, const vector<vector<Vertex> > & parts) -> bool
    {
        vector<int> owner(g.size(), -1);
        for (int p = 0 ; p < int(parts.size()) ; ++p)
            for (auto v : parts[p]) {
                if (v < 0 || v >= g.size())
                    throw Error(ErrorKind::NotAPartition, "vertex " + std::to_string(v) + " out of range");
                if (owner[v] != -1)
                    throw Error(ErrorKind::NotAPartition, "vertex " + std::to_string(v) + " in two parts");
                owner[v] = p;
            }
        if (std::find(owner.begin(), owner.end(), -1) != owner.end())
            throw Error(ErrorKind::NotAPartition, "parts do not cover every vertex");

        return std::all_of(parts.begin(), parts.end(), [&] (const vector<Vertex> & part) {
                return is_dominating_set(g, part);
            });
    }

    auto incoming_constancy(const IncidenceColoring & c) -> bool
    {
        for (Vertex v = 0 ; v < c.host().size() ; ++v)
            if (c.host().degree(v) > 0 && spectrum(c, v).s1.size() != 1)
                return false;
        return true;
    }
}

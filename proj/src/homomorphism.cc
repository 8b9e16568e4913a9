/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <icg/homomorphism.hh>

#include <algorithm>
#include <queue>
#include <string>

using std::optional;
using std::vector;

namespace icg
{
    auto kminus_target(int order) -> TargetGraph
    {
        if (order < 2 || order % 2 != 0)
            throw Error(ErrorKind::BadParams, "K^- needs an even order >= 2");
        return TargetGraph{ k_minus(order / 2), { } };
    }

    auto kloop_target(int n) -> TargetGraph
    {
        return TargetGraph{ complete(n), { 0 } };
    }

    auto plain_target(Graph g) -> TargetGraph
    {
        return TargetGraph{ std::move(g), { } };
    }

    namespace
    {
        auto image_edge(const TargetGraph & target, Vertex a, Vertex b) -> bool
        {
            if (a == b)
                return target.loops.contains(a);
            return target.base.adjacent(a, b);
        }

        auto well_formed(const Graph & source, const TargetGraph & target, const Homomorphism & h) -> bool
        {
            if (int(h.map.size()) != source.size())
                return false;
            return std::all_of(h.map.begin(), h.map.end(), [&] (Vertex t) { return t >= 0 && t < target.base.size(); });
        }

        auto injective_on_neighbourhoods(const Graph & source, const Homomorphism & h) -> bool
        {
            for (Vertex v = 0 ; v < source.size() ; ++v) {
                vector<Vertex> images;
                for (auto w : source.neighbours(v))
                    images.push_back(h.map[w]);
                std::sort(images.begin(), images.end());
                if (std::adjacent_find(images.begin(), images.end()) != images.end())
                    return false;
            }
            return true;
        }

        auto require_valid(const Graph & source, const TargetGraph & target, const Homomorphism & h, const char * what) -> void
        {
            if (! is_locally_injective_homomorphism(source, target, h))
                throw Error(ErrorKind::InvalidHomomorphism, what);
        }

        class HomSearch
        {
            private:
                const Graph & _source;
                const TargetGraph & _target;
                vector<Vertex> _order;
                vector<Vertex> _map;

                auto consistent(Vertex v, Vertex t) const -> bool
                {
                    for (auto u : _source.neighbours(v)) {
                        if (_map[u] != -1 && ! image_edge(_target, t, _map[u]))
                            return false;
                        // t must not repeat an image already used in N(u)
                        for (auto x : _source.neighbours(u))
                            if (x != v && _map[x] == t)
                                return false;
                    }
                    return true;
                }

                auto expand(std::size_t depth) -> bool
                {
                    if (depth == _order.size())
                        return true;
                    Vertex v = _order[depth];
                    for (Vertex t = 0 ; t < _target.base.size() ; ++t)
                        if (consistent(v, t)) {
                            _map[v] = t;
                            if (expand(depth + 1))
                                return true;
                            _map[v] = -1;
                        }
                    return false;
                }

            public:
                HomSearch(const Graph & source, const TargetGraph & target) :
                    _source(source),
                    _target(target),
                    _map(source.size(), -1)
                {
                    vector<bool> seen(source.size(), false);
                    for (Vertex s = 0 ; s < source.size() ; ++s) {
                        if (seen[s])
                            continue;
                        std::queue<Vertex> queue;
                        queue.push(s);
                        seen[s] = true;
                        while (! queue.empty()) {
                            auto v = queue.front();
                            queue.pop();
                            _order.push_back(v);
                            for (auto w : source.neighbours(v))
                                if (! seen[w]) {
                                    seen[w] = true;
                                    queue.push(w);
                                }
                        }
                    }
                }

                auto run() -> optional<Homomorphism>
                {
                    if (expand(0))
                        return Homomorphism{ _map };
                    return std::nullopt;
                }
        };
    }

    auto is_homomorphism(const Graph & source, const TargetGraph & target, const Homomorphism & h) -> bool
    {
        if (! well_formed(source, target, h))
            return false;
        return std::all_of(source.edges().begin(), source.edges().end(), [&] (const Edge & e) {
                return image_edge(target, h.map[e.u], h.map[e.v]);
            });
    }

    auto is_locally_injective_homomorphism(const Graph & source, const TargetGraph & target, const Homomorphism & h) -> bool
    {
        return is_homomorphism(source, target, h) && injective_on_neighbourhoods(source, h);
    }

    auto find_loc_inj_hom(const Graph & source, const TargetGraph & target) -> optional<Homomorphism>
    {
        if (source.size() > 0 && target.base.size() == 0)
            return std::nullopt;
        return HomSearch(source, target).run();
    }

    auto is_2_permutable(const Graph & g) -> optional<Homomorphism>
    {
        if (g.size() == 0 || ! g.is_connected() || ! g.is_regular() || g.max_degree() == 0 || g.max_degree() % 2 != 0)
            throw Error(ErrorKind::NotApplicable, "2-permutability needs a connected 2d-regular graph");
        return find_loc_inj_hom(g, kminus_target(g.max_degree() + 2));
    }

    auto is_sub_2_permutable(const Graph & g) -> optional<Homomorphism>
    {
        if (g.max_degree() % 2 != 0)
            throw Error(ErrorKind::NoTarget, "K_{Delta+2}^- needs an even order, Delta = " + std::to_string(g.max_degree()));
        return find_loc_inj_hom(g, kminus_target(g.max_degree() + 2));
    }

    auto bar(Color i, int palette) -> Color
    {
        return (i + palette / 2) % palette;
    }

    auto permutable_coloring(const Graph & g, const Homomorphism & h) -> IncidenceColoring
    {
        int delta = g.max_degree();
        if (delta % 2 != 0)
            throw Error(ErrorKind::InvalidHomomorphism, "no K_{Delta+2}^- target for odd Delta");
        require_valid(g, kminus_target(delta + 2), h, "not a locally injective homomorphism to K_{Delta+2}^-");

        vector<Color> colors;
        for (auto & i : enumerate_incidences(g))
            colors.push_back(h.map[i.w]);
        return IncidenceColoring(g, delta + 2, std::move(colors));
    }

    auto adjustable_from_loop_hom(const Graph & g, const Homomorphism & h) -> IncidenceColoring
    {
        int delta = g.max_degree();
        require_valid(g, kloop_target(delta + 1), h, "not a locally injective homomorphism to looped K_{Delta+1}");

        // greedy proper 2-colouring of the max-degree-1 subgraph mapped to the loop
        vector<Color> free(g.size(), -1);
        for (Vertex v = 0 ; v < g.size() ; ++v) {
            if (h.map[v] != 0)
                continue;
            free[v] = delta;
            for (auto w : g.neighbours(v))
                if (h.map[w] == 0 && free[w] != -1)
                    free[v] = (free[w] == delta) ? delta + 1 : delta;
        }

        vector<Color> colors;
        for (auto & i : enumerate_incidences(g))
            colors.push_back(h.map[i.w] > 0 ? h.map[i.w] - 1 : free[i.w]);
        return IncidenceColoring(g, delta + 2, std::move(colors));
    }

    auto pullback_coloring(const Graph & g, const Homomorphism & h, const IncidenceColoring & target) -> IncidenceColoring
    {
        auto & host = target.host();
        if (int(h.map.size()) != g.size()
                || std::any_of(h.map.begin(), h.map.end(), [&] (Vertex t) { return t < 0 || t >= host.size(); }))
            throw Error(ErrorKind::InvalidHomomorphism, "map does not fit source and target");

        for (auto & e : g.edges())
            if (! host.adjacent(h.map[e.u], h.map[e.v]))
                throw Error(ErrorKind::EdgeNotInTarget, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");

        if (! injective_on_neighbourhoods(g, h))
            throw Error(ErrorKind::InvalidHomomorphism, "not locally injective");

        vector<Color> colors;
        for (auto & i : enumerate_incidences(g))
            colors.push_back(target.color(h.map[i.v], h.map[i.w]));
        return IncidenceColoring(g, target.palette_size(), std::move(colors));
    }
}

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <icg/solver.hh>

#include <algorithm>
#include <queue>
#include <string>

using std::optional;
using std::pair;
using std::vector;

namespace icg
{
    namespace
    {
        auto solve_incidence(const Graph & g, int lower, int upper, const IncidenceSearchOptions & options, const char * what) -> SolveResult
        {
            if (g.size() == 0)
                throw Error(ErrorKind::BadParams, "empty graph");

            SolveResult result;
            if (g.edge_count() == 0) {
                result.witness = IncidenceColoring(g, 0, { });
                return result;
            }

            for (int k = lower ; k <= std::min(upper, 64) ; ++k) {
                auto outcome = find_incidence_coloring(g, k, options);
                result.nodes_explored += outcome.nodes_explored;
                if (outcome.coloring) {
                    result.optimum = k;
                    result.witness = std::move(*outcome.coloring);
                    return result;
                }
            }

            throw Error(ErrorKind::ExceedsBound, std::string(what) + " exceeds " + std::to_string(upper));
        }

        auto greedy_clique(const Graph & g) -> int
        {
            int best = g.size() > 0 ? 1 : 0;
            for (Vertex start = 0 ; start < g.size() ; ++start) {
                vector<Vertex> clique{ start };
                auto candidates = g.neighbours(start);
                std::sort(candidates.begin(), candidates.end(), [&] (Vertex a, Vertex b) {
                        return std::pair(-g.degree(a), a) < std::pair(-g.degree(b), b);
                    });
                for (auto v : candidates)
                    if (std::all_of(clique.begin(), clique.end(), [&] (Vertex u) { return g.adjacent(u, v); }))
                        clique.push_back(v);
                best = std::max(best, int(clique.size()));
            }
            return best;
        }

        class DsaturSearch
        {
            private:
                const Graph & _graph;
                int _k;
                vector<Color> _colour;
                int _max_used = -1;
                unsigned long long _nodes = 0;

                auto saturation(Vertex v) const -> int
                {
                    vector<bool> seen(_k, false);
                    int count = 0;
                    for (auto w : _graph.neighbours(v))
                        if (_colour[w] != -1 && ! seen[_colour[w]]) {
                            seen[_colour[w]] = true;
                            ++count;
                        }
                    return count;
                }

                auto uncoloured_degree(Vertex v) const -> int
                {
                    int count = 0;
                    for (auto w : _graph.neighbours(v))
                        if (_colour[w] == -1)
                            ++count;
                    return count;
                }

                auto expand(int remaining) -> bool
                {
                    if (remaining == 0)
                        return true;

                    Vertex best = -1;
                    pair<int, int> best_key{ -1, -1 };
                    for (Vertex v = 0 ; v < _graph.size() ; ++v)
                        if (_colour[v] == -1) {
                            pair<int, int> key{ saturation(v), uncoloured_degree(v) };
                            if (key > best_key) {
                                best_key = key;
                                best = v;
                            }
                        }

                    int limit = std::min(_k - 1, _max_used + 1);
                    for (Color c = 0 ; c <= limit ; ++c) {
                        auto & n = _graph.neighbours(best);
                        if (std::any_of(n.begin(), n.end(), [&] (Vertex w) { return _colour[w] == c; }))
                            continue;

                        ++_nodes;
                        int saved_max = _max_used;
                        _colour[best] = c;
                        _max_used = std::max(_max_used, c);
                        if (expand(remaining - 1))
                            return true;
                        _colour[best] = -1;
                        _max_used = saved_max;
                    }
                    return false;
                }

            public:
                DsaturSearch(const Graph & g, int k) :
                    _graph(g),
                    _k(k),
                    _colour(g.size(), -1)
                {
                }

                auto run() -> optional<vector<Color> >
                {
                    if (expand(_graph.size()))
                        return _colour;
                    return std::nullopt;
                }

                auto nodes() const -> unsigned long long
                {
                    return _nodes;
                }
        };
    }

    auto chi_i(const Graph & g, optional<int> max_colors) -> SolveResult
    {
        int delta = g.max_degree();
        return solve_incidence(g, delta + 1, max_colors.value_or(2 * delta), { }, "incidence chromatic number");
    }

    auto chi_ip(const Graph & g, int p, optional<int> max_colors) -> SolveResult
    {
        if (p < 1)
            throw Error(ErrorKind::BadParams, "p must be at least 1");
        int delta = g.max_degree();
        IncidenceSearchOptions options;
        options.max_incoming = p;
        return solve_incidence(g, delta + 1, max_colors.value_or(delta * delta + 1), options, "(k,p) incidence chromatic number");
    }

    auto chromatic_number(const Graph & g, optional<int> max_colors) -> VertexColouringResult
    {
        VertexColouringResult result;
        if (g.size() == 0)
            return result;

        int upper = max_colors.value_or(g.size());
        for (int k = greedy_clique(g) ; k <= upper ; ++k) {
            DsaturSearch search(g, k);
            auto colouring = search.run();
            result.nodes_explored += search.nodes();
            if (colouring) {
                result.optimum = k;
                result.colouring = std::move(*colouring);
                return result;
            }
        }

        throw Error(ErrorKind::ExceedsBound, "chromatic number exceeds " + std::to_string(upper));
    }

    auto exists_adjustable(const Graph & g) -> optional<IncidenceColoring>
    {
        IncidenceSearchOptions options;
        options.adjustable = true;
        return find_incidence_coloring(g, g.max_degree() + 2, options).coloring;
    }

    namespace
    {
        class PartitionSearch
        {
            private:
                const Graph & _graph;
                int _classes;
                vector<Vertex> _order;
                vector<int> _class_of;
                vector<int> _count;           // vertex * classes + class: members of the class in N[vertex]
                vector<int> _distinct;        // classes present in N[vertex]
                vector<int> _unassigned;      // unassigned members of N[vertex]
                int _max_used = -1;

                auto closed(Vertex v, auto && f) const -> void
                {
                    f(v);
                    for (auto w : _graph.neighbours(v))
                        f(w);
                }

                auto place(Vertex v, int c) -> bool
                {
                    _class_of[v] = c;
                    bool ok = true;
                    closed(v, [&] (Vertex u) {
                            --_unassigned[u];
                            if (_count[u * _classes + c]++ == 0)
                                ++_distinct[u];
                            if (_classes - _distinct[u] > _unassigned[u])
                                ok = false;
                        });
                    return ok;
                }

                auto unplace(Vertex v, int c) -> void
                {
                    closed(v, [&] (Vertex u) {
                            ++_unassigned[u];
                            if (--_count[u * _classes + c] == 0)
                                --_distinct[u];
                        });
                    _class_of[v] = -1;
                }

                auto expand(std::size_t depth) -> bool
                {
                    if (depth == _order.size())
                        return true;
                    Vertex v = _order[depth];
                    int limit = std::min(_classes - 1, _max_used + 1);
                    for (int c = 0 ; c <= limit ; ++c) {
                        int saved = _max_used;
                        _max_used = std::max(_max_used, c);
                        bool ok = place(v, c);
                        if (ok && expand(depth + 1))
                            return true;
                        unplace(v, c);
                        _max_used = saved;
                    }
                    return false;
                }

            public:
                PartitionSearch(const Graph & g, int classes) :
                    _graph(g),
                    _classes(classes),
                    _class_of(g.size(), -1),
                    _count(std::size_t(g.size()) * classes, 0),
                    _distinct(g.size(), 0),
                    _unassigned(g.size(), 0)
                {
                    vector<bool> seen(g.size(), false);
                    for (Vertex s = 0 ; s < g.size() ; ++s) {
                        if (seen[s])
                            continue;
                        std::queue<Vertex> queue;
                        queue.push(s);
                        seen[s] = true;
                        while (! queue.empty()) {
                            auto v = queue.front();
                            queue.pop();
                            _order.push_back(v);
                            for (auto w : g.neighbours(v))
                                if (! seen[w]) {
                                    seen[w] = true;
                                    queue.push(w);
                                }
                        }
                    }
                    for (Vertex v = 0 ; v < g.size() ; ++v)
                        _unassigned[v] = g.degree(v) + 1;
                }

                auto run() -> optional<vector<int> >
                {
                    for (Vertex v = 0 ; v < _graph.size() ; ++v)
                        if (_unassigned[v] < _classes)
                            return std::nullopt;
                    if (expand(0))
                        return _class_of;
                    return std::nullopt;
                }
        };
    }

    auto dominating_partition(const Graph & g, int classes) -> optional<vector<vector<Vertex> > >
    {
        if (g.size() == 0 || classes < 1)
            throw Error(ErrorKind::BadParams, "dominating_partition needs a nonempty graph and at least one class");

        auto class_of = PartitionSearch(g, classes).run();
        if (! class_of)
            return std::nullopt;

        vector<vector<Vertex> > parts(classes);
        for (Vertex v = 0 ; v < g.size() ; ++v)
            parts[(*class_of)[v]].push_back(v);

        // regular with degree + 1 classes: every closed neighbourhood meets every class exactly once
        if (g.is_regular() && classes == g.max_degree() + 1)
            for (Vertex v = 0 ; v < g.size() ; ++v) {
                vector<int> hits(classes, 0);
                ++hits[(*class_of)[v]];
                for (auto w : g.neighbours(v))
                    ++hits[(*class_of)[w]];
                if (std::any_of(hits.begin(), hits.end(), [] (int h) { return h != 1; }))
                    throw Error(ErrorKind::InternalError, "closed neighbourhood does not meet each class once");
            }

        if (! dominating_partition_check(g, parts))
            throw Error(ErrorKind::InternalError, "partition search returned a non-dominating class");

        return parts;
    }

    auto strong_edge_conflict_graph(const Graph & g) -> Graph
    {
        vector<pair<Vertex, Vertex> > conflicts;
        for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e)
            for (EdgeIndex f = e + 1 ; f < g.edge_count() ; ++f) {
                auto [a, b] = g.edge(e);
                auto [c, d] = g.edge(f);
                bool close = a == c || a == d || b == c || b == d
                    || g.adjacent(a, c) || g.adjacent(a, d) || g.adjacent(b, c) || g.adjacent(b, d);
                if (close)
                    conflicts.emplace_back(e, f);
            }
        return Graph(g.edge_count(), conflicts);
    }

    auto verify_strong_edge_coloring(const Graph & g, const vector<Color> & edge_colors) -> bool
    {
        if (int(edge_colors.size()) != g.edge_count())
            return false;

        // all-pairs vertex distances by BFS
        vector<vector<int> > dist(g.size(), vector<int>(g.size(), -1));
        for (Vertex s = 0 ; s < g.size() ; ++s) {
            std::queue<Vertex> queue;
            queue.push(s);
            dist[s][s] = 0;
            while (! queue.empty()) {
                auto v = queue.front();
                queue.pop();
                for (auto w : g.neighbours(v))
                    if (dist[s][w] == -1) {
                        dist[s][w] = dist[s][v] + 1;
                        queue.push(w);
                    }
            }
        }

        for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e)
            for (EdgeIndex f = e + 1 ; f < g.edge_count() ; ++f) {
                int closest = -1;
                for (auto x : { g.edge(e).u, g.edge(e).v })
                    for (auto y : { g.edge(f).u, g.edge(f).v })
                        if (dist[x][y] != -1 && (closest == -1 || dist[x][y] < closest))
                            closest = dist[x][y];
                // edge distance 1 (shared vertex) or 2 (joined by an edge)
                if (closest != -1 && closest <= 1 && edge_colors[e] == edge_colors[f])
                    return false;
            }
        return true;
    }

    auto strong_edge_chromatic_index(const Graph & g) -> VertexColouringResult
    {
        auto result = chromatic_number(strong_edge_conflict_graph(g));
        if (! verify_strong_edge_coloring(g, result.colouring))
            throw Error(ErrorKind::InternalError, "strong edge colouring failed verification");
        return result;
    }
}

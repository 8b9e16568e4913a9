/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <icg/graph.hh>

#include <algorithm>
#include <queue>
#include <string>

using std::pair;
using std::string;
using std::vector;

namespace icg
{
    auto to_string(ErrorKind kind) -> std::string_view
    {
        switch (kind) {
            case ErrorKind::SelfLoop:            return "SelfLoop";
            case ErrorKind::DuplicateEdge:       return "DuplicateEdge";
            case ErrorKind::VertexOutOfRange:    return "VertexOutOfRange";
            case ErrorKind::BadParams:           return "BadParams";
            case ErrorKind::MalformedGraph6:     return "MalformedGraph6";
            case ErrorKind::MalformedJson:       return "MalformedJson";
            case ErrorKind::NotAPartition:       return "NotAPartition";
            case ErrorKind::ExceedsBound:        return "ExceedsBound";
            case ErrorKind::NotApplicable:       return "NotApplicable";
            case ErrorKind::NoTarget:            return "NoTarget";
            case ErrorKind::InvalidHomomorphism: return "InvalidHomomorphism";
            case ErrorKind::EdgeNotInTarget:     return "EdgeNotInTarget";
            case ErrorKind::NotInvolution:       return "NotInvolution";
            case ErrorKind::PreconditionFailed:  return "PreconditionFailed";
            case ErrorKind::InternalError:       return "InternalError";
        }
        return "Unknown";
    }

    Error::Error(ErrorKind kind, const string & detail) :
        std::runtime_error(string(to_string(kind)) + (detail.empty() ? "" : ": " + detail)),
        _kind(kind)
    {
    }

    Graph::Graph(int n, const vector<pair<Vertex, Vertex> > & edges) :
        _n(n),
        _adjacency(n < 0 ? 0 : n),
        _incident_edges(n < 0 ? 0 : n)
    {
        if (n < 0)
            throw Error(ErrorKind::BadParams, "negative vertex count");

        _edges.reserve(edges.size());
        for (auto & [a, b] : edges) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw Error(ErrorKind::VertexOutOfRange, "(" + std::to_string(a) + "," + std::to_string(b) + ")");
            if (a == b)
                throw Error(ErrorKind::SelfLoop, "(" + std::to_string(a) + "," + std::to_string(b) + ")");
            _edges.push_back(Edge{ std::min(a, b), std::max(a, b) });
        }

        std::sort(_edges.begin(), _edges.end());
        auto dup = std::adjacent_find(_edges.begin(), _edges.end());
        if (dup != _edges.end())
            throw Error(ErrorKind::DuplicateEdge, "(" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");

        for (EdgeIndex e = 0 ; e < EdgeIndex(_edges.size()) ; ++e) {
            _adjacency[_edges[e].u].push_back(_edges[e].v);
            _adjacency[_edges[e].v].push_back(_edges[e].u);
        }

        for (Vertex v = 0 ; v < n ; ++v) {
            std::sort(_adjacency[v].begin(), _adjacency[v].end());
            _incident_edges[v].reserve(_adjacency[v].size());
            for (auto w : _adjacency[v]) {
                Edge key{ std::min(v, w), std::max(v, w) };
                auto it = std::lower_bound(_edges.begin(), _edges.end(), key);
                _incident_edges[v].push_back(EdgeIndex(it - _edges.begin()));
            }
        }
    }

    auto Graph::max_degree() const -> int
    {
        int result = 0;
        for (auto & a : _adjacency)
            result = std::max(result, int(a.size()));
        return result;
    }

    auto Graph::min_degree() const -> int
    {
        if (_adjacency.empty())
            return 0;
        int result = _n;
        for (auto & a : _adjacency)
            result = std::min(result, int(a.size()));
        return result;
    }

    auto Graph::adjacent(Vertex a, Vertex b) const -> bool
    {
        return std::binary_search(_adjacency[a].begin(), _adjacency[a].end(), b);
    }

    auto Graph::edge_index(Vertex a, Vertex b) const -> std::optional<EdgeIndex>
    {
        if (a < 0 || a >= _n || b < 0 || b >= _n)
            return std::nullopt;
        auto & adj = _adjacency[a];
        auto it = std::lower_bound(adj.begin(), adj.end(), b);
        if (it == adj.end() || *it != b)
            return std::nullopt;
        return _incident_edges[a][it - adj.begin()];
    }

    auto Graph::is_regular() const -> bool
    {
        return max_degree() == min_degree();
    }

    auto Graph::is_connected() const -> bool
    {
        if (_n == 0)
            return true;
        vector<bool> seen(_n, false);
        std::queue<Vertex> queue;
        queue.push(0);
        seen[0] = true;
        int count = 1;
        while (! queue.empty()) {
            auto v = queue.front();
            queue.pop();
            for (auto w : _adjacency[v])
                if (! seen[w]) {
                    seen[w] = true;
                    ++count;
                    queue.push(w);
                }
        }
        return count == _n;
    }

    auto ProductGraph::g_fibre(Vertex v) const -> vector<Vertex>
    {
        vector<Vertex> result;
        for (Vertex u = 0 ; u < g_size ; ++u)
            result.push_back(vertex_id(u, v));
        return result;
    }

    auto ProductGraph::h_fibre(Vertex u) const -> vector<Vertex>
    {
        vector<Vertex> result;
        for (Vertex v = 0 ; v < h_size ; ++v)
            result.push_back(vertex_id(u, v));
        return result;
    }

    auto make_graph(int n, const vector<pair<Vertex, Vertex> > & edges) -> Graph
    {
        return Graph(n, edges);
    }

    auto parse_family(std::string_view name) -> std::optional<Family>
    {
        if (name == "cycle")
            return Family::Cycle;
        if (name == "path")
            return Family::Path;
        if (name == "complete")
            return Family::Complete;
        if (name == "complete_bipartite")
            return Family::CompleteBipartite;
        if (name == "hypercube")
            return Family::Hypercube;
        if (name == "k_minus")
            return Family::KMinus;
        return std::nullopt;
    }

    auto cycle(int n) -> Graph
    {
        if (n < 3)
            throw Error(ErrorKind::BadParams, "cycle needs n >= 3");
        vector<pair<Vertex, Vertex> > edges;
        for (Vertex i = 0 ; i < n ; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return Graph(n, edges);
    }

    auto path(int n) -> Graph
    {
        if (n < 1)
            throw Error(ErrorKind::BadParams, "path needs n >= 1");
        vector<pair<Vertex, Vertex> > edges;
        for (Vertex i = 0 ; i + 1 < n ; ++i)
            edges.emplace_back(i, i + 1);
        return Graph(n, edges);
    }

    auto complete(int n) -> Graph
    {
        if (n < 1)
            throw Error(ErrorKind::BadParams, "complete needs n >= 1");
        vector<pair<Vertex, Vertex> > edges;
        for (Vertex i = 0 ; i < n ; ++i)
            for (Vertex j = i + 1 ; j < n ; ++j)
                edges.emplace_back(i, j);
        return Graph(n, edges);
    }

    auto complete_bipartite(int a, int b) -> Graph
    {
        if (a < 1 || b < 1)
            throw Error(ErrorKind::BadParams, "complete_bipartite needs both sides >= 1");
        vector<pair<Vertex, Vertex> > edges;
        for (Vertex i = 0 ; i < a ; ++i)
            for (Vertex j = 0 ; j < b ; ++j)
                edges.emplace_back(i, a + j);
        return Graph(a + b, edges);
    }

    auto hypercube(int dimension) -> Graph
    {
        if (dimension < 0 || dimension > 20)
            throw Error(ErrorKind::BadParams, "hypercube dimension out of range");
        int n = 1 << dimension;
        vector<pair<Vertex, Vertex> > edges;
        for (Vertex x = 0 ; x < n ; ++x)
            for (int i = 0 ; i < dimension ; ++i)
                if (! (x & (1 << i)))
                    edges.emplace_back(x, x | (1 << i));
        return Graph(n, edges);
    }

    auto k_minus(int half_order) -> Graph
    {
        if (half_order < 1)
            throw Error(ErrorKind::BadParams, "k_minus needs n >= 1");
        int n = 2 * half_order;
        vector<pair<Vertex, Vertex> > edges;
        for (Vertex i = 0 ; i < n ; ++i)
            for (Vertex j = i + 1 ; j < n ; ++j)
                if (j != i + half_order)
                    edges.emplace_back(i, j);
        return Graph(n, edges);
    }

    auto gen_family(Family family, const vector<int> & params) -> Graph
    {
        auto want = [&] (std::size_t count) {
            if (params.size() != count)
                throw Error(ErrorKind::BadParams, "expected " + std::to_string(count) + " parameter(s)");
        };

        switch (family) {
            case Family::Cycle:             want(1); return cycle(params[0]);
            case Family::Path:              want(1); return path(params[0]);
            case Family::Complete:          want(1); return complete(params[0]);
            case Family::CompleteBipartite: want(2); return complete_bipartite(params[0], params[1]);
            case Family::Hypercube:
                want(1);
                if (params[0] < 1)
                    throw Error(ErrorKind::BadParams, "hypercube needs n >= 1");
                return hypercube(params[0]);
            case Family::KMinus:            want(1); return k_minus(params[0]);
        }
        throw Error(ErrorKind::BadParams, "unknown family");
    }

    auto cartesian_product(const Graph & g, const Graph & h) -> ProductGraph
    {
        if (g.size() == 0 || h.size() == 0)
            throw Error(ErrorKind::BadParams, "empty factor");

        ProductGraph result;
        result.g_size = g.size();
        result.h_size = h.size();

        vector<pair<Vertex, Vertex> > edges;
        edges.reserve(std::size_t(g.edge_count()) * h.size() + std::size_t(g.size()) * h.edge_count());
        for (auto & e : g.edges())
            for (Vertex v = 0 ; v < h.size() ; ++v)
                edges.emplace_back(result.vertex_id(e.u, v), result.vertex_id(e.v, v));
        for (Vertex u = 0 ; u < g.size() ; ++u)
            for (auto & e : h.edges())
                edges.emplace_back(result.vertex_id(u, e.u), result.vertex_id(u, e.v));

        result.graph = Graph(g.size() * h.size(), edges);

        result.coord.resize(result.graph.size());
        for (Vertex u = 0 ; u < g.size() ; ++u)
            for (Vertex v = 0 ; v < h.size() ; ++v)
                result.coord[result.vertex_id(u, v)] = { u, v };

        result.edge_tag.reserve(result.graph.edge_count());
        for (auto & e : result.graph.edges())
            result.edge_tag.push_back(result.coord[e.u].second == result.coord[e.v].second ? EdgeTag::GEdge : EdgeTag::HEdge);

        return result;
    }

    auto square(const Graph & g) -> Graph
    {
        vector<pair<Vertex, Vertex> > edges;
        for (Vertex v = 0 ; v < g.size() ; ++v) {
            vector<bool> close(g.size(), false);
            for (auto w : g.neighbours(v)) {
                close[w] = true;
                for (auto x : g.neighbours(w))
                    close[x] = true;
            }
            for (Vertex x = v + 1 ; x < g.size() ; ++x)
                if (close[x])
                    edges.emplace_back(v, x);
        }
        return Graph(g.size(), edges);
    }

    auto subdivision(const Graph & g) -> Graph
    {
        vector<pair<Vertex, Vertex> > edges;
        for (EdgeIndex e = 0 ; e < g.edge_count() ; ++e) {
            edges.emplace_back(g.edge(e).u, g.size() + e);
            edges.emplace_back(g.edge(e).v, g.size() + e);
        }
        return Graph(g.size() + g.edge_count(), edges);
    }

    auto induced_subgraph(const Graph & g, const vector<Vertex> & vertices) -> Graph
    {
        vector<int> position(g.size(), -1);
        for (int i = 0 ; i < int(vertices.size()) ; ++i) {
            if (vertices[i] < 0 || vertices[i] >= g.size())
                throw Error(ErrorKind::VertexOutOfRange, std::to_string(vertices[i]));
            if (position[vertices[i]] != -1)
                throw Error(ErrorKind::BadParams, "repeated vertex in induced_subgraph");
            position[vertices[i]] = i;
        }
        vector<pair<Vertex, Vertex> > edges;
        for (auto & e : g.edges())
            if (position[e.u] != -1 && position[e.v] != -1)
                edges.emplace_back(position[e.u], position[e.v]);
        return Graph(int(vertices.size()), edges);
    }

    namespace
    {
        auto iso_extend(const Graph & a, const Graph & b, vector<Vertex> & map, vector<bool> & used, Vertex next) -> bool
        {
            if (next == a.size())
                return true;
            for (Vertex t = 0 ; t < b.size() ; ++t) {
                if (used[t] || a.degree(next) != b.degree(t))
                    continue;
                bool ok = true;
                for (Vertex p = 0 ; p < next && ok ; ++p)
                    if (a.adjacent(next, p) != b.adjacent(t, map[p]))
                        ok = false;
                if (! ok)
                    continue;
                map[next] = t;
                used[t] = true;
                if (iso_extend(a, b, map, used, next + 1))
                    return true;
                used[t] = false;
            }
            return false;
        }
    }

    auto are_isomorphic(const Graph & a, const Graph & b) -> bool
    {
        if (a.size() != b.size() || a.edge_count() != b.edge_count())
            return false;
        vector<int> da, db;
        for (Vertex v = 0 ; v < a.size() ; ++v) {
            da.push_back(a.degree(v));
            db.push_back(b.degree(v));
        }
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db)
            return false;
        vector<Vertex> map(a.size(), -1);
        vector<bool> used(b.size(), false);
        return iso_extend(a, b, map, used, 0);
    }
}

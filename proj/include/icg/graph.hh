/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ICG_GRAPH_HH
#define ICG_GRAPH_HH

#include <icg/error.hh>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace icg
{
    using Vertex = int;
    using EdgeIndex = int;

    struct Edge
    {
        Vertex u, v;

        auto operator<=> (const Edge &) const = default;
    };

    /**
     * Simple undirected graph on vertices 0..n-1. Edges are stored with u < v
     * and numbered 0..m-1 in lexicographic order; neighbour lists are sorted.
     * Immutable once built.
     */
    class Graph
    {
        private:
            int _n = 0;
            std::vector<Edge> _edges;
            std::vector<std::vector<Vertex> > _adjacency;
            std::vector<std::vector<EdgeIndex> > _incident_edges;

        public:
            Graph() = default;

            /// Throws SelfLoop, DuplicateEdge or VertexOutOfRange.
            Graph(int n, const std::vector<std::pair<Vertex, Vertex> > & edges);

            auto size() const -> int
            {
                return _n;
            }

            auto edge_count() const -> int
            {
                return int(_edges.size());
            }

            auto edges() const -> const std::vector<Edge> &
            {
                return _edges;
            }

            auto edge(EdgeIndex e) const -> const Edge &
            {
                return _edges[e];
            }

            auto neighbours(Vertex v) const -> const std::vector<Vertex> &
            {
                return _adjacency[v];
            }

            /// Edge ids parallel to neighbours(v).
            auto incident_edges(Vertex v) const -> const std::vector<EdgeIndex> &
            {
                return _incident_edges[v];
            }

            auto degree(Vertex v) const -> int
            {
                return int(_adjacency[v].size());
            }

            auto max_degree() const -> int;
            auto min_degree() const -> int;

            auto adjacent(Vertex a, Vertex b) const -> bool;

            /// Index of edge ab, or nullopt if absent.
            auto edge_index(Vertex a, Vertex b) const -> std::optional<EdgeIndex>;

            auto is_regular() const -> bool;
            auto is_connected() const -> bool;

            auto operator== (const Graph & other) const -> bool
            {
                return _n == other._n && _edges == other._edges;
            }
    };

    enum class EdgeTag
    {
        GEdge,
        HEdge
    };

    /**
     * G □ H with factor bookkeeping. Vertex (u, v) has id u * h_size + v.
     */
    struct ProductGraph
    {
        Graph graph;
        int g_size = 0, h_size = 0;
        std::vector<std::pair<Vertex, Vertex> > coord;
        std::vector<EdgeTag> edge_tag;

        auto vertex_id(Vertex u, Vertex v) const -> Vertex
        {
            return u * h_size + v;
        }

        /// Vertices of the G-fibre G_v (second coordinate v), ordered by first coordinate.
        auto g_fibre(Vertex v) const -> std::vector<Vertex>;

        /// Vertices of the H-fibre H_u (first coordinate u), ordered by second coordinate.
        auto h_fibre(Vertex u) const -> std::vector<Vertex>;
    };

    auto make_graph(int n, const std::vector<std::pair<Vertex, Vertex> > & edges) -> Graph;

    enum class Family
    {
        Cycle,
        Path,
        Complete,
        CompleteBipartite,
        Hypercube,
        KMinus
    };

    auto parse_family(std::string_view name) -> std::optional<Family>;

    /**
     * Named families with fixed labelings: cycle i ~ i+1 mod n; path on n
     * vertices; complete bipartite with sides 0..a-1 and a..a+b-1; hypercube
     * with coordinate i = bit i of the vertex id; k_minus(n) is K_2n without
     * the matching {i, i+n}. Throws BadParams.
     */
    auto gen_family(Family family, const std::vector<int> & params) -> Graph;

    auto cycle(int n) -> Graph;
    auto path(int n) -> Graph;
    auto complete(int n) -> Graph;
    auto complete_bipartite(int a, int b) -> Graph;
    auto hypercube(int dimension) -> Graph;
    auto k_minus(int half_order) -> Graph;

    /// Throws BadParams if either factor is empty.
    auto cartesian_product(const Graph & g, const Graph & h) -> ProductGraph;

    /// Same vertex set; uv is an edge iff dist(u, v) is 1 or 2.
    auto square(const Graph & g) -> Graph;

    /// Vertex v keeps id v; edge e becomes vertex n + e.
    auto subdivision(const Graph & g) -> Graph;

    /// Subgraph induced on the given vertices, relabelled 0..k-1 in the given order.
    auto induced_subgraph(const Graph & g, const std::vector<Vertex> & vertices) -> Graph;

    /// Throws MalformedGraph6. Trailing newline / carriage return is ignored.
    auto parse_graph6(std::string_view line) -> Graph;
    auto emit_graph6(const Graph & g) -> std::string;

    /// Brute-force isomorphism for small graphs (intended for at most ~10 vertices).
    auto are_isomorphic(const Graph & a, const Graph & b) -> bool;
}

#endif

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ICG_SOLVER_HH
#define ICG_SOLVER_HH

#include <icg/graph.hh>
#include <icg/incidence.hh>

#include <optional>
#include <vector>

namespace icg
{
    struct SolveResult
    {
        int optimum = 0;
        IncidenceColoring witness;
        unsigned long long nodes_explored = 0;
    };

    struct VertexColouringResult
    {
        int optimum = 0;
        std::vector<Color> colouring;
        unsigned long long nodes_explored = 0;
    };

    /// Options for the incidence colouring decision search.
    struct IncidenceSearchOptions
    {
        /// Bound on distinct incoming colours per vertex; nullopt means unrestricted.
        std::optional<int> max_incoming;

        /// Forbid the last two palette colours from meeting in any s0(v).
        bool adjustable = false;
    };

    struct IncidenceSearchOutcome
    {
        std::optional<IncidenceColoring> coloring;
        unsigned long long nodes_explored = 0;
    };

    /**
     * Exhaustive search for an incidence colouring with the given palette.
     * Incidences are chosen most-constrained first (smallest remaining domain,
     * ties broken by lowest index) and colours are introduced in ascending
     * order, so the result and node count are deterministic. Palettes above 64
     * colours are rejected with BadParams.
     */
    auto find_incidence_coloring(const Graph & g, int palette, const IncidenceSearchOptions & options = { }) -> IncidenceSearchOutcome;

    /// Exact incidence chromatic number. max_colors defaults to 2 * Delta; throws ExceedsBound.
    auto chi_i(const Graph & g, std::optional<int> max_colors = std::nullopt) -> SolveResult;

    /// Exact (k, p) incidence chromatic number. max_colors defaults to Delta^2 + 1.
    auto chi_ip(const Graph & g, int p, std::optional<int> max_colors = std::nullopt) -> SolveResult;

    /// Exact vertex chromatic number (DSATUR-ordered backtracking). max_colors defaults to n.
    auto chromatic_number(const Graph & g, std::optional<int> max_colors = std::nullopt) -> VertexColouringResult;

    /// A valid (Delta + 2)-colouring whose colours Delta and Delta + 1 never share an s0(v), if one exists.
    auto exists_adjustable(const Graph & g) -> std::optional<IncidenceColoring>;

    /// Partition of V into `classes` dominating sets, if one exists.
    auto dominating_partition(const Graph & g, int classes) -> std::optional<std::vector<std::vector<Vertex> > >;

    /// Edge-conflict graph for strong edge colouring: edges conflict when at distance at most two.
    auto strong_edge_conflict_graph(const Graph & g) -> Graph;

    /// Checks a per-edge colouring directly against the distance-two definition.
    auto verify_strong_edge_coloring(const Graph & g, const std::vector<Color> & edge_colors) -> bool;

    /// Exact strong chromatic index; the colouring is indexed by edge.
    auto strong_edge_chromatic_index(const Graph & g) -> VertexColouringResult;
}

#endif

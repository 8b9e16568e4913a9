/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ICG_HOMOMORPHISM_HH
#define ICG_HOMOMORPHISM_HH

#include <icg/graph.hh>
#include <icg/incidence.hh>

#include <optional>
#include <set>
#include <vector>

namespace icg
{
    /// A simple graph plus looped vertices. A loop only lets adjacent source
    /// vertices share that image; local injectivity is unaffected.
    struct TargetGraph
    {
        Graph base;
        std::set<Vertex> loops;
    };

    /// K_order^- with the matching {i, i + order / 2}; order must be even.
    auto kminus_target(int order) -> TargetGraph;

    /// K_n with a loop at vertex 0.
    auto kloop_target(int n) -> TargetGraph;

    auto plain_target(Graph g) -> TargetGraph;

    struct Homomorphism
    {
        std::vector<Vertex> map;

        auto operator== (const Homomorphism &) const -> bool = default;
    };

    auto is_homomorphism(const Graph & source, const TargetGraph & target, const Homomorphism & h) -> bool;

    /// Edge-preserving and injective on every neighbourhood N(v).
    auto is_locally_injective_homomorphism(const Graph & source, const TargetGraph & target, const Homomorphism & h) -> bool;

    /// Backtracking over source vertices in BFS order from 0, target values ascending.
    auto find_loc_inj_hom(const Graph & source, const TargetGraph & target) -> std::optional<Homomorphism>;

    /// Connected 2d-regular graphs only (throws NotApplicable); target K_{2d+2}^-.
    auto is_2_permutable(const Graph & g) -> std::optional<Homomorphism>;

    /// Target K_{Delta+2}^-; throws NoTarget when Delta is odd.
    auto is_sub_2_permutable(const Graph & g) -> std::optional<Homomorphism>;

    /// Matching partner of colour i in a palette of even size: (i + palette / 2) mod palette.
    auto bar(Color i, int palette) -> Color;

    /// c(u, uw) = h(w), a (Delta + 2, 1)-colouring. Throws InvalidHomomorphism.
    auto permutable_coloring(const Graph & g, const Homomorphism & h) -> IncidenceColoring;

    /**
     * Adjustable (Delta + 2)-colouring from a locally injective homomorphism
     * to K_{Delta+1} with a loop at 0: c(v, uv) = h(u) - 1 when h(u) > 0,
     * otherwise one of the free colours Delta, Delta + 1 taken from a greedy
     * proper 2-colouring of the subgraph mapped onto the looped vertex.
     */
    auto adjustable_from_loop_hom(const Graph & g, const Homomorphism & h) -> IncidenceColoring;

    /// c(v, vu) = target(h(v), h(u)). Throws EdgeNotInTarget or InvalidHomomorphism.
    auto pullback_coloring(const Graph & g, const Homomorphism & h, const IncidenceColoring & target) -> IncidenceColoring;
}

#endif

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ICG_CONSTRUCTIONS_HH
#define ICG_CONSTRUCTIONS_HH

#include <icg/graph.hh>
#include <icg/homomorphism.hh>
#include <icg/incidence.hh>

#include <map>
#include <vector>

namespace icg
{
    /// Recolour every incidence through a fixed-point-free involution of the palette. Throws NotInvolution.
    auto bar_coloring(const IncidenceColoring & c, const std::vector<Color> & involution) -> IncidenceColoring;

    /// bar_coloring with i -> (i + k/2) mod k.
    auto bar_coloring(const IncidenceColoring & c) -> IncidenceColoring;

    /// XOR of (i + 1) over the set bits i of x: the Hamming parity-check value.
    auto syndrome(Vertex x) -> Color;

    /// (n + 1)-colouring of Q_n, n = 2^m - 1, with c(v, vu) = syndrome(u). Needs 1 <= m <= 4.
    auto hamming_coloring(int m) -> IncidenceColoring;

    /// Vertices of Q_{2^m - 1} grouped by syndrome; class 0 is the Hamming code.
    auto hamming_classes(int m) -> std::vector<std::vector<Vertex> >;

    /**
     * Bookkeeping for colouring G □ H from a (Delta + 1)-colouring c of G and
     * an optimal colouring d' of a regular host H' containing H. The colours
     * of d' are shifted by `offset`; colours of c in `overlap` collide with
     * the shifted palette and are sent, per H-vertex v, to colours missing
     * from the spectrum of v under the restricted colouring.
     */
    struct ProductColoringPlan
    {
        int offset = 0;
        ColorSet overlap;
        std::vector<ColorSet> missing;                  // per vertex of H
        std::vector<std::map<Color, Color> > injection; // per vertex of H: overlap -> missing
        std::vector<Vertex> embedding;                  // H -> H'
        std::vector<Color> restricted;                  // shifted d' on the incidences of H
        int palette = 0;
    };

    /// Checks every hypothesis eagerly; throws PreconditionFailed naming the first failure.
    auto plan_product_delta1(const Graph & g, const IncidenceColoring & c, const Graph & h,
            const IncidenceColoring & d_prime, const std::vector<Vertex> & embedding) -> ProductColoringPlan;

    /// Colouring of cartesian_product(g, h) with Delta(G □ H) + 2 colours.
    auto product_coloring_delta1(const Graph & g, const IncidenceColoring & c, const Graph & h,
            const IncidenceColoring & d_prime, const std::vector<Vertex> & embedding) -> IncidenceColoring;

    /// n + 1 colours when n + 1 is a power of two, n + 2 otherwise; host equals hypercube(n).
    auto hypercube_coloring(int n) -> IncidenceColoring;

    /// (Delta(G □ K2) + 1)-colouring of cartesian_product(g, complete(2)) from a sub-2-permutable certificate.
    auto prism_coloring(const Graph & g, const Homomorphism & h) -> IncidenceColoring;

    /// (Delta(G □ H) + 2)-colouring of cartesian_product(g, h) from a sub-2-permutable G and an adjustable colouring of H.
    auto peradj_coloring(const Graph & g, const Homomorphism & hom, const Graph & h, const IncidenceColoring & d) -> IncidenceColoring;
}

#endif

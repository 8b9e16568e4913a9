/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ICG_INCIDENCE_HH
#define ICG_INCIDENCE_HH

#include <icg/graph.hh>

#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

namespace icg
{
    using Color = int;
    using ColorSet = std::set<Color>;

    /// The incidence (v, vw): vertex v together with the edge to w.
    struct Incidence
    {
        Vertex v, w;

        auto operator<=> (const Incidence &) const = default;
    };

    /// Incidence index: edge e = (u, v) with u < v owns 2e = (u, v) and 2e + 1 = (v, u).
    using IncidenceIndex = int;

    auto enumerate_incidences(const Graph & g) -> std::vector<Incidence>;

    auto incidence_index(const Graph & g, Incidence i) -> std::optional<IncidenceIndex>;

    auto incidence_at(const Graph & g, IncidenceIndex i) -> Incidence;

    auto incidences_adjacent(Incidence a, Incidence b) -> bool;

    /// All incidences adjacent to i (excluding i), ascending by index.
    auto adjacent_incidences(const Graph & g, IncidenceIndex i) -> std::vector<IncidenceIndex>;

    /**
     * A total assignment of colours 0..palette-1 to the incidences of host.
     * Validity is not enforced here; see verify_coloring.
     */
    class IncidenceColoring
    {
        private:
            Graph _host;
            int _palette = 0;
            std::vector<Color> _colors;

        public:
            IncidenceColoring() = default;

            /// colors is indexed by IncidenceIndex; throws BadParams if not total or out of palette.
            IncidenceColoring(Graph host, int palette, std::vector<Color> colors);

            auto host() const -> const Graph &
            {
                return _host;
            }

            auto palette_size() const -> int
            {
                return _palette;
            }

            auto colors() const -> const std::vector<Color> &
            {
                return _colors;
            }

            auto color(IncidenceIndex i) const -> Color
            {
                return _colors[i];
            }

            /// Throws BadParams if (v, w) is not an incidence of the host.
            auto color(Vertex v, Vertex w) const -> Color;

            /// Number of distinct colours actually used.
            auto colors_used() const -> int;

            auto operator== (const IncidenceColoring &) const -> bool = default;
    };

    struct Valid
    {
        auto operator== (const Valid &) const -> bool = default;
    };

    struct Violation
    {
        Incidence first, second;

        auto operator== (const Violation &) const -> bool = default;
    };

    using Verdict = std::variant<Valid, Violation>;

    /// Lexicographically first conflicting pair by incidence index, if any.
    auto verify_coloring(const IncidenceColoring & c) -> Verdict;

    auto is_valid(const IncidenceColoring & c) -> bool;

    struct Spectrum
    {
        ColorSet s0, s1;

        auto all() const -> ColorSet;
    };

    auto spectrum(const IncidenceColoring & c, Vertex v) -> Spectrum;

    /// Valid and every vertex sees at most p distinct incoming colours.
    auto verify_kp(const IncidenceColoring & c, int p) -> bool;

    /// Unordered pairs {x, y}, x < y, that never occur together in any s0(v).
    auto free_color_pairs(const IncidenceColoring & c) -> std::vector<std::pair<Color, Color> >;

    /// Palette is exactly Delta + 2 and free_color_pairs is nonempty.
    auto is_adjustable(const IncidenceColoring & c) -> bool;

    auto is_dominating_set(const Graph & g, const std::vector<Vertex> & s) -> bool;

    /// Throws NotAPartition unless the parts are pairwise disjoint and cover V.
    auto dominating_partition_check(const Graph & g, const std::vector<std::vector<Vertex> > & parts) -> bool;

    /// Every vertex receives a single colour on all its incoming incidences.
    auto incoming_constancy(const IncidenceColoring & c) -> bool;
}

#endif

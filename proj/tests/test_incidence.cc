/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <icg/incidence.hh>

#include "oracles.hh"

#include <doctest.h>

#include <random>

using namespace icg;

namespace
{
    auto kind_of(auto && f) -> ErrorKind
    {
        try {
            f();
        }
        catch (const Error & e) {
            return e.kind();
        }
        FAIL("expected an icg::Error");
        return ErrorKind::InternalError;
    }

    auto random_coloring(std::mt19937 & rng, const Graph & g, int k) -> IncidenceColoring
    {
        std::vector<Color> colors(2 * g.edge_count());
        for (auto & c : colors)
            c = int(rng() % k);
        return IncidenceColoring(g, k, colors);
    }
}

TEST_CASE("incidence numbering")
{
    auto g = cycle(4);
    auto inc = enumerate_incidences(g);
    CHECK(inc.size() == 8);
    for (int i = 0 ; i < int(inc.size()) ; ++i) {
        CHECK(incidence_index(g, inc[i]) == i);
        CHECK(incidence_at(g, i) == inc[i]);
        auto e = g.edge(i / 2);
        CHECK(inc[i] == (i % 2 == 0 ? Incidence{ e.u, e.v } : Incidence{ e.v, e.u }));
    }
    CHECK(! incidence_index(g, { 0, 2 }));
}

TEST_CASE("adjacency closed form agrees with the three cases")
{
    std::mt19937 rng(1);
    for (int trial = 0 ; trial < 60 ; ++trial) {
        auto g = oracle::random_graph(rng, 2 + int(rng() % 7), 0.5);
        auto inc = enumerate_incidences(g);
        for (auto & a : inc)
            for (auto & b : inc)
                if (a != b)
                    CHECK(incidences_adjacent(a, b) == oracle::three_case_adjacent(g, a, b));

        for (int i = 0 ; i < int(inc.size()) ; ++i) {
            std::vector<IncidenceIndex> expected;
            for (int j = 0 ; j < int(inc.size()) ; ++j)
                if (j != i && oracle::three_case_adjacent(g, inc[i], inc[j]))
                    expected.push_back(j);
            CHECK(adjacent_incidences(g, i) == expected);
            CHECK(int(expected.size()) <= 3 * g.max_degree());
        }
    }
}

TEST_CASE("adjacency is symmetric and irreflexive")
{
    auto g = hypercube(3);
    for (auto & a : enumerate_incidences(g)) {
        CHECK(! incidences_adjacent(a, a));
        for (auto & b : enumerate_incidences(g))
            CHECK(incidences_adjacent(a, b) == incidences_adjacent(b, a));
    }
}

TEST_CASE("colouring construction checks totality and range")
{
    auto g = path(3);
    CHECK(kind_of([&] { IncidenceColoring(g, 3, { 0, 1, 2 }); }) == ErrorKind::BadParams);
    CHECK(kind_of([&] { IncidenceColoring(g, 3, { 0, 1, 2, 3 }); }) == ErrorKind::BadParams);
    CHECK(kind_of([&] { IncidenceColoring(g, 3, { 0, 1, -1, 2 }); }) == ErrorKind::BadParams);
    IncidenceColoring c(g, 3, { 0, 1, 2, 0 });
    CHECK(c.color(1, 2) == 2);
    CHECK(c.color(2, 1) == 0);
    CHECK(kind_of([&] { (void) c.color(0, 2); }) == ErrorKind::BadParams);
    CHECK(c.colors_used() == 3);
}

TEST_CASE("verifier agrees with brute force on random colourings")
{
    std::mt19937 rng(2);
    int valid = 0;
    for (int trial = 0 ; trial < 3000 ; ++trial) {
        auto g = oracle::random_graph(rng, 2 + int(rng() % 5), 0.5);
        int k = 1 + int(rng() % 6);
        auto c = random_coloring(rng, g, k);
        bool expected = oracle::brute_valid(g, c.colors());
        CHECK(is_valid(c) == expected);
        valid += expected;
    }
    CHECK(valid > 100);
}

TEST_CASE("verifier reports the first conflict")
{
    // path 0-1-2: incidences (0,1) (1,0) (1,2) (2,1)
    auto g = path(3);
    // (1,0) and (2,1): the edge 12 joins the two vertices and carries (2,1)
    auto verdict = verify_coloring(IncidenceColoring(g, 3, { 0, 1, 2, 1 }));
    CHECK(std::holds_alternative<Violation>(verdict));
    CHECK(std::get<Violation>(verdict) == Violation{ { 1, 0 }, { 2, 1 } });

    // two incidences entering the same vertex may share a colour
    auto ok = verify_coloring(IncidenceColoring(g, 3, { 0, 1, 2, 0 }));
    CHECK(! std::holds_alternative<Violation>(ok));
    // (1,0) and (1,2) share vertex 1
    ok = verify_coloring(IncidenceColoring(g, 3, { 0, 1, 1, 2 }));
    CHECK(std::get<Violation>(ok) == Violation{ { 1, 0 }, { 1, 2 } });
}

TEST_CASE("spectra")
{
    auto g = path(3);
    IncidenceColoring c(g, 3, { 0, 1, 2, 0 });
    auto s = spectrum(c, 1);
    CHECK(s.s0 == ColorSet{ 1, 2 });
    CHECK(s.s1 == ColorSet{ 0 });
    CHECK(s.all() == ColorSet{ 0, 1, 2 });
    CHECK(spectrum(c, 0).s0 == ColorSet{ 0 });
    CHECK(spectrum(c, 0).s1 == ColorSet{ 1 });
}

TEST_CASE("spectrum sizes on valid colourings")
{
    std::mt19937 rng(3);
    for (int trial = 0 ; trial < 30 ; ++trial) {
        auto g = oracle::random_graph(rng, 3 + int(rng() % 3), 0.6);
        if (g.edge_count() == 0)
            continue;
        int k = oracle::brute_chi_i(g);
        int seen = 0;
        oracle::each_coloring(g, k, [&] (const std::vector<Color> & colors) {
            IncidenceColoring c(g, k, colors);
            for (Vertex v = 0 ; v < g.size() ; ++v) {
                auto s = spectrum(c, v);
                CHECK(int(s.s0.size()) == g.degree(v));
                CHECK(int(s.s1.size()) <= g.degree(v));
                for (auto x : s.s0)
                    CHECK(! s.s1.contains(x));
            }
            return ++seen < 20;
        });
    }
}

TEST_CASE("(k,p) checks")
{
    // constant incoming colour per vertex on C4: c(u, uw) = w
    auto g = cycle(4);
    std::vector<Color> colors;
    for (auto & i : enumerate_incidences(g))
        colors.push_back(i.w);
    IncidenceColoring c(g, 4, colors);
    CHECK(is_valid(c));
    CHECK(verify_kp(c, 1));
    CHECK(incoming_constancy(c));

    // C5 squared is K5, so no 4-colouring of C5 has constant incoming colours
    auto c5 = cycle(5);
    bool any = false;
    oracle::each_coloring(c5, 4, [&] (const std::vector<Color> & col) {
        IncidenceColoring e(c5, 4, col);
        CHECK(! verify_kp(e, 1));
        CHECK(! incoming_constancy(e));
        CHECK(verify_kp(e, 2));
        any = true;
        return true;
    });
    CHECK(any);
}

TEST_CASE("free pairs and adjustability")
{
    // P3 with 4 = Delta + 2 colours
    auto g = path(3);
    IncidenceColoring c(g, 4, { 0, 1, 2, 3 });
    REQUIRE(is_valid(c));
    // s0(0) = {0}, s0(1) = {1, 2}, s0(2) = {3}
    auto pairs = free_color_pairs(c);
    std::vector<std::pair<Color, Color> > expected{ { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 3 }, { 2, 3 } };
    CHECK(pairs == expected);
    CHECK(is_adjustable(c));

    // wrong palette size
    IncidenceColoring d(g, 5, { 0, 1, 2, 3 });
    CHECK(! is_adjustable(d));
}

TEST_CASE("free pairs match a direct scan")
{
    std::mt19937 rng(4);
    for (int trial = 0 ; trial < 200 ; ++trial) {
        auto g = oracle::random_graph(rng, 2 + int(rng() % 6), 0.5);
        int k = 2 + int(rng() % 5);
        auto c = random_coloring(rng, g, k);
        std::vector<std::pair<Color, Color> > expected;
        for (Color x = 0 ; x < k ; ++x)
            for (Color y = x + 1 ; y < k ; ++y) {
                bool together = false;
                for (Vertex v = 0 ; v < g.size() ; ++v) {
                    bool hx = false, hy = false;
                    for (auto w : g.neighbours(v)) {
                        hx = hx || c.color(v, w) == x;
                        hy = hy || c.color(v, w) == y;
                    }
                    together = together || (hx && hy);
                }
                if (! together)
                    expected.emplace_back(x, y);
            }
        CHECK(free_color_pairs(c) == expected);
    }
}

TEST_CASE("dominating sets")
{
    auto g = cycle(6);
    CHECK(is_dominating_set(g, { 0, 3 }));
    CHECK(! is_dominating_set(g, { 0, 1 }));
    CHECK(dominating_partition_check(g, { { 0, 3 }, { 1, 4 }, { 2, 5 } }));
    CHECK(! dominating_partition_check(g, { { 0, 1 }, { 2, 3 }, { 4, 5 } }));
    CHECK(kind_of([&] { dominating_partition_check(g, { { 0, 3 }, { 1, 4 } }); }) == ErrorKind::NotAPartition);
    CHECK(kind_of([&] { dominating_partition_check(g, { { 0, 3, 1 }, { 1, 4, 2, 5 } }); }) == ErrorKind::NotAPartition);
    CHECK(kind_of([&] { dominating_partition_check(g, { { 0, 3, 1, 4, 2, 5, 6 } }); }) == ErrorKind::NotAPartition);
}

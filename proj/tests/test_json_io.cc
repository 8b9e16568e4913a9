/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <icg/json_io.hh>
#include <icg/solver.hh>

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
}

TEST_CASE("graph round trip")
{
    std::mt19937 rng(41);
    for (int trial = 0 ; trial < 100 ; ++trial) {
        auto g = oracle::random_graph(rng, int(rng() % 10), 0.4);
        CHECK(graph_from_json(graph_to_json(g)) == g);
        CHECK(parse_graph_text(graph_to_json(g).dump()) == g);
    }
    CHECK(graph_to_json(path(3)).dump() == R"({"edges":[[0,1],[1,2]],"n":3})");
}

TEST_CASE("colouring round trip")
{
    for (auto & g : { cycle(5), hypercube(3), complete_bipartite(2, 3) }) {
        auto c = chi_i(g).witness;
        auto j = coloring_to_json(c);
        CHECK(coloring_from_json(j) == c);
        CHECK(coloring_from_json(json::parse(j.dump())) == c);
    }
}

TEST_CASE("colouring entries may come in any order")
{
    auto c = chi_i(cycle(4)).witness;
    auto j = coloring_to_json(c);
    std::reverse(j["colors"].begin(), j["colors"].end());
    CHECK(coloring_from_json(j) == c);
}

TEST_CASE("malformed colourings")
{
    auto j = coloring_to_json(chi_i(path(3)).witness);

    auto missing = j;
    missing["colors"].erase(0);
    CHECK(kind_of([&] { coloring_from_json(missing); }) == ErrorKind::MalformedJson);

    auto doubled = j;
    doubled["colors"][1] = doubled["colors"][0];
    CHECK(kind_of([&] { coloring_from_json(doubled); }) == ErrorKind::MalformedJson);

    auto stranger = j;
    stranger["colors"][0]["w"] = 2;
    CHECK(kind_of([&] { coloring_from_json(stranger); }) == ErrorKind::MalformedJson);

    auto range = j;
    range["colors"][0]["c"] = 17;
    CHECK(kind_of([&] { coloring_from_json(range); }) == ErrorKind::MalformedJson);

    auto no_palette = j;
    no_palette.erase("palette");
    CHECK(kind_of([&] { coloring_from_json(no_palette); }) == ErrorKind::MalformedJson);

    CHECK(kind_of([&] { graph_from_json(json{ { "n", 2 }, { "edges", { { 0, 1, 2 } } } }); }) == ErrorKind::MalformedJson);
    CHECK(kind_of([&] { graph_from_json(json{ { "n", "two" }, { "edges", json::array() } }); }) == ErrorKind::MalformedJson);
    CHECK(kind_of([&] { graph_from_json(json{ { "n", 2 }, { "edges", { { 0, 0 } } } }); }) == ErrorKind::SelfLoop);
}

TEST_CASE("graph text")
{
    CHECK(parse_graph_text("Dhc\n") == cycle(5));
    CHECK(parse_graph_text("  \nA_\nDhc\n") == complete(2));
    CHECK(parse_graph_text(R"({"n": 2, "edges": [[0, 1]]})") == complete(2));
    CHECK(kind_of([] { parse_graph_text("{ nope"); }) == ErrorKind::MalformedJson);
    CHECK(kind_of([] { parse_graph_text(""); }) == ErrorKind::MalformedGraph6);
}

TEST_CASE("homomorphisms and partitions")
{
    Homomorphism h{ { 0, 1, 2, 3 } };
    CHECK(homomorphism_from_json(homomorphism_to_json(h)) == h);
    CHECK(homomorphism_to_json(h).dump() == R"({"map":[0,1,2,3]})");
    CHECK(kind_of([] { homomorphism_from_json(json{ { "map", "x" } }); }) == ErrorKind::MalformedJson);
    CHECK(partition_to_json({ { 0, 3 }, { 1, 2 } }).dump() == R"({"classes":[[0,3],[1,2]]})");
}

TEST_CASE("dot output")
{
    IncidenceColoring c(path(3), 3, { 0, 1, 2, 0 });
    auto dot = coloring_to_dot(c);
    CHECK(dot.find("0 -- 1 [label=\"0|1\"]") != std::string::npos);
    CHECK(dot.find("1 -- 2 [label=\"2|0\"]") != std::string::npos);
    CHECK(coloring_to_dot(c, 1).find("1 -- 2 [label=\"3|1\"]") != std::string::npos);
}

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <icg/constructions.hh>

#include <algorithm>
#include <string>

using std::string;
using std::vector;

namespace icg
{
    namespace
    {
        [[noreturn]] auto precondition(const string & what) -> void
        {
            throw Error(ErrorKind::PreconditionFailed, what);
        }

        auto checked(IncidenceColoring c, const char * construction) -> IncidenceColoring
        {
            if (auto v = verify_coloring(c) ; std::holds_alternative<Violation>(v)) {
                auto & bad = std::get<Violation>(v);
                throw Error(ErrorKind::InternalError, string(construction) + " produced a conflict at ("
                        + std::to_string(bad.first.v) + "," + std::to_string(bad.first.w) + ") / ("
                        + std::to_string(bad.second.v) + "," + std::to_string(bad.second.w) + ")");
            }
            return c;
        }
    }

    auto bar_coloring(const IncidenceColoring & c, const vector<Color> & involution) -> IncidenceColoring
    {
        int k = c.palette_size();
        if (int(involution.size()) != k)
            throw Error(ErrorKind::NotInvolution, "involution size differs from palette");
        for (Color i = 0 ; i < k ; ++i) {
            if (involution[i] < 0 || involution[i] >= k)
                throw Error(ErrorKind::NotInvolution, "image outside palette");
            if (involution[i] == i)
                throw Error(ErrorKind::NotInvolution, "fixed point " + std::to_string(i));
            if (involution[involution[i]] != i)
                throw Error(ErrorKind::NotInvolution, "not self-inverse at " + std::to_string(i));
        }

        vector<Color> colors;
        colors.reserve(c.colors().size());
        for (auto col : c.colors())
            colors.push_back(involution[col]);
        return IncidenceColoring(c.host(), k, std::move(colors));
    }

    auto bar_coloring(const IncidenceColoring & c) -> IncidenceColoring
    {
        vector<Color> involution;
        for (Color i = 0 ; i < c.palette_size() ; ++i)
            involution.push_back(bar(i, c.palette_size()));
        return bar_coloring(c, involution);
    }

    auto syndrome(Vertex x) -> Color
    {
        Color result = 0;
        for (int i = 0 ; x >> i ; ++i)
            if ((x >> i) & 1)
                result ^= (i + 1);
        return result;
    }

    auto hamming_coloring(int m) -> IncidenceColoring
    {
        if (m < 1 || m > 4)
            throw Error(ErrorKind::BadParams, "hamming_coloring needs 1 <= m <= 4");
        int n = (1 << m) - 1;
        auto q = hypercube(n);
        vector<Color> colors;
        for (auto & i : enumerate_incidences(q))
            colors.push_back(syndrome(i.w));
        return checked(IncidenceColoring(q, n + 1, std::move(colors)), "hamming_coloring");
    }

    auto hamming_classes(int m) -> vector<vector<Vertex> >
    {
        if (m < 1 || m > 4)
            throw Error(ErrorKind::BadParams, "hamming_classes needs 1 <= m <= 4");
        int n = (1 << m) - 1;
        vector<vector<Vertex> > classes(n + 1);
        for (Vertex x = 0 ; x < (1 << n) ; ++x)
            classes[syndrome(x)].push_back(x);
        return classes;
    }

    auto plan_product_delta1(const Graph & g, const IncidenceColoring & c, const Graph & h,
            const IncidenceColoring & d_prime, const vector<Vertex> & embedding) -> ProductColoringPlan
    {
        auto & h_prime = d_prime.host();
        int delta_g = g.max_degree(), delta_h = h.max_degree(), delta_hp = h_prime.max_degree();

        if (! (c.host() == g))
            precondition("colouring c is not on G");
        if (c.palette_size() != delta_g + 1 || ! is_valid(c))
            precondition("c must be a valid (Delta(G)+1)-colouring of G");
        if (! h_prime.is_regular())
            precondition("H' must be regular");
        if (d_prime.palette_size() != delta_hp + 1 || ! is_valid(d_prime))
            precondition("d' must be a valid (Delta(H')+1)-colouring of H'");
        for (Vertex v = 0 ; v < h_prime.size() && delta_hp > 0 ; ++v)
            if (int(spectrum(d_prime, v).all().size()) != delta_hp + 1)
                precondition("d' must have a full spectrum at every vertex");

        if (int(embedding.size()) != h.size())
            precondition("embedding must map every vertex of H");
        vector<bool> hit(h_prime.size(), false);
        for (auto t : embedding) {
            if (t < 0 || t >= h_prime.size() || hit[t])
                precondition("embedding must be injective into H'");
            hit[t] = true;
        }
        for (auto & e : h.edges())
            if (! h_prime.adjacent(embedding[e.u], embedding[e.v]))
                precondition("embedding must send edges of H to edges of H'");

        if (delta_g + 1 < delta_hp - delta_h)
            precondition("degree condition Delta(G)+1 >= Delta(H')-Delta(H) fails");

        ProductColoringPlan plan;
        plan.offset = delta_g + delta_h - delta_hp + 1;
        plan.embedding = embedding;
        plan.palette = delta_hp + plan.offset + 1;
        for (Color col = plan.offset ; col <= delta_g ; ++col)
            plan.overlap.insert(col);

        for (auto & i : enumerate_incidences(h))
            plan.restricted.push_back(d_prime.color(embedding[i.v], embedding[i.w]) + plan.offset);

        auto restricted = IncidenceColoring(h, plan.palette, plan.restricted);
        for (Vertex v = 0 ; v < h.size() ; ++v) {
            auto seen = spectrum(restricted, v).all();
            ColorSet missing;
            for (Color col = plan.offset ; col <= delta_hp + plan.offset ; ++col)
                if (! seen.contains(col))
                    missing.insert(col);
            if (missing.size() < plan.overlap.size())
                precondition("too few missing colours at vertex " + std::to_string(v) + " of H");

            // order-preserving onto the smallest missing colours
            std::map<Color, Color> g_v;
            auto m = missing.begin();
            for (auto col : plan.overlap)
                g_v.emplace(col, *m++);

            plan.missing.push_back(std::move(missing));
            plan.injection.push_back(std::move(g_v));
        }

        return plan;
    }

    auto product_coloring_delta1(const Graph & g, const IncidenceColoring & c, const Graph & h,
            const IncidenceColoring & d_prime, const vector<Vertex> & embedding) -> IncidenceColoring
    {
        auto plan = plan_product_delta1(g, c, h, d_prime, embedding);
        auto product = cartesian_product(g, h);
        auto restricted = IncidenceColoring(h, plan.palette, plan.restricted);

        vector<Color> colors;
        for (auto & i : enumerate_incidences(product.graph)) {
            auto [u, v] = product.coord[i.v];
            auto [u2, v2] = product.coord[i.w];
            if (u == u2)
                colors.push_back(restricted.color(v, v2));
            else {
                Color col = c.color(u, u2);
                if (plan.overlap.contains(col))
                    col = plan.injection[v].at(col);
                if (! plan.missing[v].contains(col) && col >= plan.offset)
                    throw Error(ErrorKind::InternalError, "G-incidence colour lands in the H-spectrum");
                colors.push_back(col);
            }
        }

        return checked(IncidenceColoring(product.graph, plan.palette, std::move(colors)), "product_coloring_delta1");
    }

    auto hypercube_coloring(int n) -> IncidenceColoring
    {
        if (n < 1 || n > 15)
            throw Error(ErrorKind::BadParams, "hypercube_coloring needs 1 <= n <= 15");

        int m = 1;
        while ((1 << (m + 1)) - 1 <= n)
            ++m;
        int k = n - ((1 << m) - 1);
        if (k == 0)
            return hamming_coloring(m);

        auto g = hypercube((1 << m) - 1);
        auto c = hamming_coloring(m);
        auto h = hypercube(k);
        vector<Vertex> embedding(h.size());
        for (Vertex v = 0 ; v < h.size() ; ++v)
            embedding[v] = v;

        auto product = product_coloring_delta1(g, c, h, c, embedding);
        auto q = hypercube(n);
        if (! (product.host() == q))
            throw Error(ErrorKind::InternalError, "product labelling differs from Q_n");
        return IncidenceColoring(std::move(q), product.palette_size(), product.colors());
    }

    auto prism_coloring(const Graph & g, const Homomorphism & h) -> IncidenceColoring
    {
        auto c = permutable_coloring(g, h);
        int k = c.palette_size();
        auto product = cartesian_product(g, complete(2));

        vector<Color> colors;
        for (auto & i : enumerate_incidences(product.graph)) {
            auto [u, side] = product.coord[i.v];
            auto [u2, side2] = product.coord[i.w];
            if (u == u2)
                colors.push_back(side == 0 ? bar(h.map[u], k) : h.map[u]);
            else
                colors.push_back(side == 0 ? c.color(u, u2) : bar(c.color(u, u2), k));
        }

        return checked(IncidenceColoring(product.graph, k, std::move(colors)), "prism_coloring");
    }

    auto peradj_coloring(const Graph & g, const Homomorphism & hom, const Graph & h, const IncidenceColoring & d) -> IncidenceColoring
    {
        auto c = permutable_coloring(g, hom);
        int delta_g = g.max_degree(), delta_h = h.max_degree();
        int k = c.palette_size();

        if (! (d.host() == h))
            precondition("colouring d is not on H");
        if (d.palette_size() != delta_h + 2 || ! is_valid(d))
            precondition("d must be a valid (Delta(H)+2)-colouring of H");
        auto pairs = free_color_pairs(d);
        if (pairs.empty())
            precondition("d is not adjustable");

        // relabel d: free pair -> x, y; remaining colours ascending after them
        auto [a, b] = pairs.front();
        vector<Color> order{ a, b };
        for (Color col = 0 ; col < d.palette_size() ; ++col)
            if (col != a && col != b)
                order.push_back(col);
        vector<Color> relabel(d.palette_size());
        for (int i = 0 ; i < int(order.size()) ; ++i)
            relabel[order[i]] = delta_g + i;
        Color x = delta_g, y = delta_g + 1;

        int palette = delta_g + delta_h + 2;
        vector<Color> shifted;
        for (auto col : d.colors())
            shifted.push_back(relabel[col]);
        auto aligned = IncidenceColoring(h, palette, std::move(shifted));

        vector<bool> uses_y(h.size(), false);
        for (Vertex v = 0 ; v < h.size() ; ++v)
            uses_y[v] = spectrum(aligned, v).s0.contains(y);

        auto product = cartesian_product(g, h);
        vector<Color> colors;
        for (auto & i : enumerate_incidences(product.graph)) {
            auto [u, v] = product.coord[i.v];
            auto [u2, v2] = product.coord[i.w];
            if (v == v2) {
                Color col = c.color(u, u2);
                colors.push_back(uses_y[v] ? bar(col, k) : col);
            }
            else {
                Color col = aligned.color(v, v2);
                if (col == x)
                    col = bar(hom.map[u], k);
                else if (col == y)
                    col = hom.map[u];
                colors.push_back(col);
            }
        }

        return checked(IncidenceColoring(product.graph, palette, std::move(colors)), "peradj_coloring");
    }
}

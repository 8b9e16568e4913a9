/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <icg/solver.hh>

#include <bit>
#include <cstdint>
#include <string>

using std::uint64_t;
using std::vector;

namespace icg
{
    namespace
    {
        class IncidenceSearch
        {
            private:
                const Graph & _graph;
                int _palette;
                IncidenceSearchOptions _options;

                int _count;
                vector<vector<IncidenceIndex> > _adjacent;
                vector<vector<IncidenceIndex> > _incoming;   // per vertex: incidences (u, v)
                vector<vector<IncidenceIndex> > _outgoing;   // per vertex: incidences (v, u)
                vector<Vertex> _head, _tail;                 // incidence (v, w): head v, tail w

                vector<uint64_t> _domain;
                vector<Color> _assigned;
                vector<int> _used;
                vector<int> _incoming_count;                 // vertex * palette + colour
                vector<int> _incoming_distinct;
                vector<uint64_t> _incoming_mask;
                vector<std::pair<IncidenceIndex, uint64_t> > _trail;

                int _symmetric;                              // colours [0, _symmetric) are interchangeable
                Color _free_x = -1, _free_y = -1;

                unsigned long long _nodes = 0;

                auto restrict(IncidenceIndex j, uint64_t mask) -> bool
                {
                    if ((_domain[j] & mask) != _domain[j]) {
                        _trail.emplace_back(j, _domain[j]);
                        _domain[j] &= mask;
                    }
                    return _domain[j] != 0;
                }

                auto assign(IncidenceIndex i, Color c) -> bool
                {
                    uint64_t bit = uint64_t(1) << c;
                    _assigned[i] = c;
                    ++_used[c];

                    Vertex w = _tail[i];
                    bool new_incoming = (_incoming_count[w * _palette + c]++ == 0);
                    if (new_incoming) {
                        ++_incoming_distinct[w];
                        _incoming_mask[w] |= bit;
                    }

                    for (auto j : _adjacent[i])
                        if (_assigned[j] == -1 && ! restrict(j, ~bit))
                            return false;

                    if (_options.max_incoming) {
                        if (_incoming_distinct[w] > *_options.max_incoming)
                            return false;
                        if (new_incoming && _incoming_distinct[w] == *_options.max_incoming)
                            for (auto j : _incoming[w])
                                if (_assigned[j] == -1 && ! restrict(j, _incoming_mask[w]))
                                    return false;
                    }

                    if (_options.adjustable && (c == _free_x || c == _free_y)) {
                        uint64_t other = uint64_t(1) << (c == _free_x ? _free_y : _free_x);
                        for (auto j : _outgoing[_head[i]])
                            if (_assigned[j] == -1 && ! restrict(j, ~other))
                                return false;
                    }

                    return true;
                }

                auto unassign(IncidenceIndex i, Color c, std::size_t mark) -> void
                {
                    while (_trail.size() > mark) {
                        _domain[_trail.back().first] = _trail.back().second;
                        _trail.pop_back();
                    }
                    Vertex w = _tail[i];
                    if (--_incoming_count[w * _palette + c] == 0) {
                        --_incoming_distinct[w];
                        _incoming_mask[w] &= ~(uint64_t(1) << c);
                    }
                    --_used[c];
                    _assigned[i] = -1;
                }

                auto select() const -> IncidenceIndex
                {
                    IncidenceIndex best = -1;
                    int best_size = 65;
                    for (IncidenceIndex i = 0 ; i < _count ; ++i)
                        if (_assigned[i] == -1) {
                            int size = std::popcount(_domain[i]);
                            if (size < best_size) {
                                best = i;
                                best_size = size;
                                if (size <= 1)
                                    break;
                            }
                        }
                    return best;
                }

                auto expand() -> bool
                {
                    IncidenceIndex i = select();
                    if (i == -1)
                        return true;

                    Color first_unused = -1;
                    for (Color c = 0 ; c < _symmetric ; ++c)
                        if (_used[c] == 0) {
                            first_unused = c;
                            break;
                        }

                    uint64_t values = _domain[i];
                    while (values) {
                        Color c = std::countr_zero(values);
                        values &= values - 1;

                        if (c < _symmetric && _used[c] == 0 && c != first_unused)
                            continue;
                        if (_options.adjustable && c == _free_y && _used[_free_x] == 0)
                            continue;

                        ++_nodes;
                        auto mark = _trail.size();
                        bool ok = assign(i, c);
                        if (ok && expand())
                            return true;
                        unassign(i, c, mark);
                    }

                    return false;
                }

            public:
                IncidenceSearch(const Graph & g, int palette, const IncidenceSearchOptions & options) :
                    _graph(g),
                    _palette(palette),
                    _options(options),
                    _count(2 * g.edge_count()),
                    _incoming(g.size()),
                    _outgoing(g.size())
                {
                    for (IncidenceIndex i = 0 ; i < _count ; ++i) {
                        auto inc = incidence_at(g, i);
                        _head.push_back(inc.v);
                        _tail.push_back(inc.w);
                        _adjacent.push_back(adjacent_incidences(g, i));
                        _incoming[inc.w].push_back(i);
                        _outgoing[inc.v].push_back(i);
                    }

                    uint64_t full = (palette == 64) ? ~uint64_t(0) : ((uint64_t(1) << palette) - 1);
                    _domain.assign(_count, full);
                    _assigned.assign(_count, -1);
                    _used.assign(palette, 0);
                    _incoming_count.assign(std::size_t(g.size()) * palette, 0);
                    _incoming_distinct.assign(g.size(), 0);
                    _incoming_mask.assign(g.size(), 0);

                    _symmetric = palette;
                    if (options.adjustable) {
                        _free_x = palette - 2;
                        _free_y = palette - 1;
                        _symmetric = palette - 2;
                    }
                }

                auto run() -> IncidenceSearchOutcome
                {
                    IncidenceSearchOutcome result;
                    bool feasible = expand();
                    result.nodes_explored = _nodes;
                    if (feasible)
                        result.coloring = IncidenceColoring(_graph, _palette, _assigned);
                    return result;
                }
        };
    }

    auto find_incidence_coloring(const Graph & g, int palette, const IncidenceSearchOptions & options) -> IncidenceSearchOutcome
    {
        if (palette < 0 || palette > 64)
            throw Error(ErrorKind::BadParams, "palette must be in 0..64, got " + std::to_string(palette));
        if (options.max_incoming && *options.max_incoming < 1)
            throw Error(ErrorKind::BadParams, "p must be at least 1");
        if (options.adjustable && palette < 2)
            throw Error(ErrorKind::BadParams, "adjustable search needs two free colours");

        if (palette == 0)
            return g.edge_count() == 0
                ? IncidenceSearchOutcome{ IncidenceColoring(g, 0, { }), 0 }
                : IncidenceSearchOutcome{ std::nullopt, 0 };

        return IncidenceSearch(g, palette, options).run();
    }
}

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <icg/graph.hh>

#include <string>

using std::pair;
using std::string;
using std::vector;

namespace icg
{
    namespace
    {
        [[noreturn]] auto malformed(const string & why) -> void
        {
            throw Error(ErrorKind::MalformedGraph6, why);
        }
    }

    auto parse_graph6(std::string_view line) -> Graph
    {
        while (! line.empty() && (line.back() == '\n' || line.back() == '\r'))
            line.remove_suffix(1);

        constexpr std::string_view header = ">>graph6<<";
        if (line.starts_with(header))
            line.remove_prefix(header.size());

        if (line.empty())
            malformed("empty input");

        for (char ch : line)
            if (ch < 63 || ch > 126)
                malformed("byte out of range");

        std::size_t pos = 0;
        long long n = 0;
        auto take6 = [&] (int count) {
            long long value = 0;
            for (int i = 0 ; i < count ; ++i) {
                if (pos >= line.size())
                    malformed("truncated vertex count");
                value = (value << 6) | (line[pos++] - 63);
            }
            return value;
        };

        if (line[0] != 126)
            n = take6(1);
        else if (line.size() >= 2 && line[1] != 126) {
            ++pos;
            n = take6(3);
        }
        else {
            pos += 2;
            n = take6(6);
        }

        if (n > 100000)
            malformed("graph too large");

        std::size_t bits = std::size_t(n) * (n - (n > 0 ? 1 : 0)) / 2;
        std::size_t expected = (bits + 5) / 6;
        if (line.size() - pos != expected)
            malformed("expected " + std::to_string(expected) + " data bytes, got " + std::to_string(line.size() - pos));

        vector<pair<Vertex, Vertex> > edges;
        std::size_t k = 0;
        for (Vertex j = 1 ; j < n ; ++j)
            for (Vertex i = 0 ; i < j ; ++i, ++k) {
                int byte = line[pos + k / 6] - 63;
                if (byte & (1 << (5 - k % 6)))
                    edges.emplace_back(i, j);
            }

        // padding bits must be zero
        for (; k < expected * 6 ; ++k)
            if ((line[pos + k / 6] - 63) & (1 << (5 - k % 6)))
                malformed("nonzero padding");

        return Graph(int(n), edges);
    }

    auto emit_graph6(const Graph & g) -> string
    {
        long long n = g.size();
        string result;
        if (n <= 62)
            result.push_back(char(63 + n));
        else if (n <= 258047) {
            result.push_back(126);
            for (int s = 12 ; s >= 0 ; s -= 6)
                result.push_back(char(63 + ((n >> s) & 63)));
        }
        else {
            result.push_back(126);
            result.push_back(126);
            for (int s = 30 ; s >= 0 ; s -= 6)
                result.push_back(char(63 + ((n >> s) & 63)));
        }

        int current = 0, filled = 0;
        for (Vertex j = 1 ; j < n ; ++j)
            for (Vertex i = 0 ; i < j ; ++i) {
                current = (current << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++filled == 6) {
                    result.push_back(char(63 + current));
                    current = filled = 0;
                }
            }
        if (filled > 0)
            result.push_back(char(63 + (current << (6 - filled))));

        return result;
    }
}

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <icg/census.hh>
#include <icg/homomorphism.hh>
#include <icg/solver.hh>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <thread>

using std::string;
using std::vector;

namespace icg
{
    auto parse_predicate(std::string_view name) -> std::optional<Predicate>
    {
        if (name == "2-permutable")
            return Predicate::TwoPermutable;
        if (name == "sub-2-permutable")
            return Predicate::SubTwoPermutable;
        if (name == "2-adjustable")
            return Predicate::TwoAdjustable;
        if (name == "chi-i")
            return Predicate::ChiI;
        if (name == "chi-i1")
            return Predicate::ChiI1;
        return std::nullopt;
    }

    auto predicate_name(Predicate p) -> std::string_view
    {
        switch (p) {
            case Predicate::TwoPermutable:    return "2-permutable";
            case Predicate::SubTwoPermutable: return "sub-2-permutable";
            case Predicate::TwoAdjustable:    return "2-adjustable";
            case Predicate::ChiI:             return "chi-i";
            case Predicate::ChiI1:            return "chi-i1";
        }
        return "?";
    }

    auto parse_predicates(std::string_view list) -> std::set<Predicate>
    {
        std::set<Predicate> result;
        while (! list.empty()) {
            auto comma = list.find(',');
            auto name = list.substr(0, comma);
            if (! name.empty()) {
                auto p = parse_predicate(name);
                if (! p)
                    throw Error(ErrorKind::BadParams, "unknown predicate '" + string(name) + "'");
                result.insert(*p);
            }
            if (comma == std::string_view::npos)
                break;
            list.remove_prefix(comma + 1);
        }
        return result;
    }

    namespace
    {
        auto evaluate(const Graph & g, const std::set<Predicate> & predicates, CensusFlags & flags) -> void
        {
            if (predicates.contains(Predicate::TwoPermutable)) {
                try {
                    flags.two_permutable = is_2_permutable(g).has_value();
                }
                catch (const Error & e) {
                    if (e.kind() != ErrorKind::NotApplicable)
                        throw;
                    // 2-permutability is only defined for connected 2d-regular graphs
                    flags.two_permutable = false;
                }
            }

            if (predicates.contains(Predicate::SubTwoPermutable)) {
                if (g.max_degree() % 2 != 0)
                    flags.sub_two_permutable = TriState::NoTarget;
                else
                    flags.sub_two_permutable = is_sub_2_permutable(g) ? TriState::Yes : TriState::No;
            }

            if (predicates.contains(Predicate::TwoAdjustable))
                flags.two_adjustable = exists_adjustable(g).has_value();

            if (predicates.contains(Predicate::ChiI) && g.size() > 0)
                flags.chi_i = chi_i(g).optimum;

            if (predicates.contains(Predicate::ChiI1) && g.size() > 0)
                flags.chi_i1 = chi_ip(g, 1).optimum;
        }
    }

    auto classify(int index, std::string_view line, const std::set<Predicate> & predicates) -> CensusRecord
    {
        auto start = std::chrono::steady_clock::now();
        CensusRecord record;
        record.index = index;

        while (! line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' '))
            line.remove_suffix(1);
        record.graph6 = string(line);

        Graph g;
        try {
            g = parse_graph6(line);
        }
        catch (const Error & e) {
            record.error = e.what();
            return record;
        }

        record.n = g.size();
        record.m = g.edge_count();
        record.regular = g.is_regular();

        try {
            evaluate(g, predicates, record.flags);
        }
        catch (const Error & e) {
            record.error = e.what();
        }

        record.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
        return record;
    }

    auto census(const vector<string> & lines, const std::set<Predicate> & predicates, int jobs) -> CensusReport
    {
        vector<int> work;
        for (int i = 0 ; i < int(lines.size()) ; ++i)
            if (lines[i].find_first_not_of(" \t\r\n") != string::npos)
                work.push_back(i);

        CensusReport report;
        report.records.resize(work.size());

        std::atomic<std::size_t> next{ 0 };
        auto worker = [&] {
            for (std::size_t k = next++ ; k < work.size() ; k = next++)
                report.records[k] = classify(work[k] + 1, lines[work[k]], predicates);
        };

        jobs = std::clamp(jobs, 1, 256);
        if (jobs == 1)
            worker();
        else {
            vector<std::jthread> pool;
            for (int t = 0 ; t < jobs ; ++t)
                pool.emplace_back(worker);
        }

        auto & s = report.summary;
        for (auto p : predicates)
            if (p == Predicate::ChiI || p == Predicate::ChiI1)
                s.histograms[string(predicate_name(p))];
            else
                s.positives[string(predicate_name(p))] = 0;

        for (auto & r : report.records) {
            if (r.error) {
                ++s.errors;
                continue;
            }
            ++s.graphs;
            if (r.flags.two_permutable.value_or(false))
                ++s.positives["2-permutable"];
            if (r.flags.sub_two_permutable == TriState::Yes)
                ++s.positives["sub-2-permutable"];
            if (r.flags.two_adjustable.value_or(false))
                ++s.positives["2-adjustable"];
            if (r.flags.chi_i)
                ++s.histograms["chi-i"][*r.flags.chi_i];
            if (r.flags.chi_i1)
                ++s.histograms["chi-i1"][*r.flags.chi_i1];
        }

        return report;
    }

    auto read_lines(std::istream & in) -> vector<string>
    {
        vector<string> lines;
        string line;
        while (std::getline(in, line))
            lines.push_back(line);
        return lines;
    }

    auto census_record_to_json(const CensusRecord & r, bool timing) -> json
    {
        json j;
        j["index"] = r.index;
        j["graph6"] = r.graph6;
        if (r.error) {
            j["error"] = *r.error;
            return j;
        }
        j["n"] = r.n;
        j["m"] = r.m;
        j["regular"] = r.regular;

        json flags;
        flags["twoPermutable"] = r.flags.two_permutable ? json(*r.flags.two_permutable) : json(nullptr);
        if (! r.flags.sub_two_permutable)
            flags["sub2Permutable"] = nullptr;
        else if (*r.flags.sub_two_permutable == TriState::NoTarget)
            flags["sub2Permutable"] = "no-target";
        else
            flags["sub2Permutable"] = (*r.flags.sub_two_permutable == TriState::Yes);
        flags["twoAdjustable"] = r.flags.two_adjustable ? json(*r.flags.two_adjustable) : json(nullptr);
        flags["chiI"] = r.flags.chi_i ? json(*r.flags.chi_i) : json(nullptr);
        flags["chiI1"] = r.flags.chi_i1 ? json(*r.flags.chi_i1) : json(nullptr);
        j["flags"] = flags;

        if (timing)
            j["elapsedMicros"] = r.elapsed.count();
        return j;
    }

    auto census_summary_to_json(const CensusSummary & s, const std::set<Predicate> & predicates) -> json
    {
        json requested = json::array();
        for (auto p : predicates)
            requested.push_back(predicate_name(p));

        json histograms = json::object();
        for (auto & [name, counts] : s.histograms) {
            json h = json::object();
            for (auto & [value, count] : counts)
                h[std::to_string(value)] = count;
            histograms[name] = h;
        }

        return json{ { "summary", {
            { "graphs", s.graphs },
            { "errors", s.errors },
            { "predicates", requested },
            { "positives", s.positives },
            { "histograms", histograms } } } };
    }

    auto write_census_report(std::ostream & out, const CensusReport & report, const std::set<Predicate> & predicates, bool timing) -> void
    {
        for (auto & r : report.records)
            out << census_record_to_json(r, timing).dump() << '\n';
        out << census_summary_to_json(report.summary, predicates).dump() << '\n';
    }

    auto default_jobs() -> int
    {
        if (auto env = std::getenv("ICG_JOBS")) {
            int jobs = std::atoi(env);
            if (jobs > 0)
                return jobs;
        }
        return 1;
    }
}

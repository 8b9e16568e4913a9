/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ICG_CENSUS_HH
#define ICG_CENSUS_HH

#include <icg/json_io.hh>

#include <chrono>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace icg
{
    enum class Predicate
    {
        TwoPermutable,
        SubTwoPermutable,
        TwoAdjustable,
        ChiI,
        ChiI1
    };

    auto parse_predicate(std::string_view name) -> std::optional<Predicate>;
    auto predicate_name(Predicate p) -> std::string_view;

    /// Comma-separated list; throws BadParams on an unknown name.
    auto parse_predicates(std::string_view list) -> std::set<Predicate>;

    enum class TriState
    {
        Yes,
        No,
        NoTarget
    };

    /// Unrequested predicates stay nullopt.
    struct CensusFlags
    {
        std::optional<bool> two_permutable;
        std::optional<TriState> sub_two_permutable;
        std::optional<bool> two_adjustable;
        std::optional<int> chi_i;
        std::optional<int> chi_i1;
    };

    struct CensusRecord
    {
        int index = 0;                        // 1-based input line number
        std::string graph6;
        int n = 0, m = 0;
        bool regular = false;
        CensusFlags flags;
        std::optional<std::string> error;     // malformed line or failed evaluation
        std::chrono::microseconds elapsed{ 0 };
    };

    struct CensusSummary
    {
        int graphs = 0;
        int errors = 0;               // malformed lines and failed evaluations
        std::map<std::string, int> positives;
        std::map<std::string, std::map<int, int> > histograms;
    };

    struct CensusReport
    {
        std::vector<CensusRecord> records;
        CensusSummary summary;
    };

    auto classify(int index, std::string_view line, const std::set<Predicate> & predicates) -> CensusRecord;

    /// Blank lines are skipped (but still counted for numbering); records keep input order for any job count.
    auto census(const std::vector<std::string> & lines, const std::set<Predicate> & predicates, int jobs) -> CensusReport;

    auto read_lines(std::istream & in) -> std::vector<std::string>;

    auto census_record_to_json(const CensusRecord & r, bool timing = false) -> json;
    auto census_summary_to_json(const CensusSummary & s, const std::set<Predicate> & predicates) -> json;

    /// JSON lines: one record per line, then {"summary": ...}.
    auto write_census_report(std::ostream & out, const CensusReport & report, const std::set<Predicate> & predicates, bool timing = false) -> void;

    /// ICG_JOBS if set and positive, else 1.
    auto default_jobs() -> int;
}

#endif

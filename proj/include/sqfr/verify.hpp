#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sqfr/graph.hpp"
#include "sqfr/regularity.hpp"
#include "sqfr/report.hpp"

namespace sqfr {

struct VerifyOptions {
    std::int64_t prime = 2;
    int cap = kDefaultRegularityCap;
    std::uint64_t seed = 0;
    int sample_threshold = 200;  // colon-degree check samples above this many generators
    int ham_cap = 20;
};

/// Flat advisory cache file mapping (graph6, s, prime) -> regularity.
/// Unparsable lines are ignored; new entries are appended on flush.
class DiskCache {
public:
    explicit DiskCache(std::string path);
    std::optional<int> lookup(const std::string& g6, int s, std::int64_t p);
    void store(const std::string& g6, int s, std::int64_t p, int reg);
    void flush();

private:
    std::string path_;
    std::mutex mu_;
    std::map<std::tuple<std::string, int, std::int64_t>, int> entries_;
    std::vector<std::string> pending_;
};

/// One checker per bound / equality, producing structured reports.
class Verifier {
public:
    explicit Verifier(VerifyOptions opt = {}, DiskCache* disk = nullptr);

    RegEngine& engine() { return engine_; }
    const VerifyOptions& options() const { return opt_; }

    /// reg(I(G)^[s]) through the disk cache when one is attached.
    int reg_power(const Graph& g, const std::string& g6, int s);

    std::vector<Report> check_dagger(const Graph& g);           // reg <= match + s
    std::vector<Report> check_ddagger(const Graph& g);          // reg <= s + floor(n/2)
    std::vector<Report> check_bipartite_bound(const Graph& g);  // reg <= min(|X|,|Y|) + s
    std::vector<Report> check_cameron_walker(const Graph& g);   // reg = match + s, linear iff s = match
    std::vector<Report> check_lower_bound(const Graph& g);      // reg >= ind-match + s
    std::vector<Report> check_pendant_triangle_colon(const Graph& g);
    std::vector<Report> check_colon_degree_two(const Graph& g);
    std::vector<Report> check_regcol(const Graph& g);
    std::vector<Report> check_top_linear(const Graph& g);       // reg(I^[match]) = 2 match
    std::vector<Report> check_order_exists(const Graph& g);

    std::vector<Report> run_checks(const Graph& g, const std::vector<std::string>& check_ids);

private:
    VerifyOptions opt_;
    RegEngine engine_;
    DiskCache* disk_;

    Report base_report(const Graph& g, const std::string& check) const;
};

const std::vector<std::string>& all_check_ids();

struct SweepSummary {
    long long pass = 0;
    long long fail = 0;
    long long skipped = 0;
    long long error = 0;

    bool clean() const { return fail == 0 && error == 0; }
};

/// Applies the selected checks to every graph6 record of `in`, one JSON
/// report per line on `out` in input order, then a summary line. Malformed
/// records produce an error report and the stream continues. `jobs` > 1
/// processes graphs concurrently; output order and content do not depend on
/// the schedule.
SweepSummary run_sweep(std::istream& in, const std::vector<std::string>& check_ids,
                       const VerifyOptions& opt, int jobs, std::ostream& out,
                       DiskCache* disk = nullptr);

}  // namespace sqfr

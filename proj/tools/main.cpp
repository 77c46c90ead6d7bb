#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "sqfr/errors.hpp"
#include "sqfr/even_connection.hpp"
#include "sqfr/graph6.hpp"
#include "sqfr/homology.hpp"
#include "sqfr/ideal.hpp"
#include "sqfr/order.hpp"
#include "sqfr/regularity.hpp"
#include "sqfr/verify.hpp"

namespace {

// exit codes: 0 all-pass, 1 check failure, 2 input error, 3 precondition,
// 4 cap exceeded, 5 theorem violation
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCap = 4;
constexpr int kExitTheorem = 5;

struct Config {
    std::string g6;
    std::string edges;
    int s = 1;
    std::int64_t prime = 2;
    int cap = sqfr::kDefaultRegularityCap;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::string cache_path;
    std::uint64_t seed = 0;
    bool betti = false;
    std::string matching;
    std::string checks;
    std::string input = "-";
    std::string out_path;
};

sqfr::Graph load_graph(const Config& cfg) {
    if (cfg.g6.empty() == cfg.edges.empty()) {
        throw sqfr::ParseError("provide exactly one of --g6 / --edges");
    }
    if (!cfg.g6.empty()) return sqfr::parse_graph6(cfg.g6);
    return sqfr::parse_edge_list(cfg.edges);
}

void validate(const Config& cfg) {
    if (!sqfr::is_prime(cfg.prime)) throw sqfr::PreconditionError("--prime must be prime");
    if (cfg.cap < 1 || cfg.cap > 20) {
        throw sqfr::PreconditionError("--cap must be in 1..20");
    }
    if (cfg.jobs < 1) throw sqfr::PreconditionError("--jobs must be >= 1");
}

int cmd_reg(const Config& cfg) {
    sqfr::Graph g = load_graph(cfg);
    int match = sqfr::matching_number(g);
    if (cfg.s < 1 || cfg.s > match) {
        throw sqfr::PreconditionError("s must satisfy 1 <= s <= match = " +
                                      std::to_string(match));
    }
    sqfr::Ideal power = sqfr::squarefree_power(sqfr::edge_ideal(g), cfg.s);
    nlohmann::ordered_json out;
    out["schema"] = 1;
    out["regularity"] = sqfr::regularity(power, cfg.prime, cfg.cap);
    out["match"] = match;
    out["ind_match"] = sqfr::induced_matching_number(g);
    out["s"] = cfg.s;
    out["prime"] = cfg.prime;
    out["linear"] = sqfr::has_linear_resolution(power, cfg.prime, cfg.cap);
    if (cfg.betti) out["betti"] = sqfr::betti_table(power, cfg.prime, cfg.cap).to_json();
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_colon_graph(const Config& cfg) {
    sqfr::Graph g = load_graph(cfg);
    sqfr::Matching m = sqfr::parse_edge_pairs(cfg.matching);
    sqfr::ColonGraph h = sqfr::colon_graph(g, m);
    std::cout << sqfr::colon_graph_report(h).dump() << "\n";
    return 0;
}

int cmd_order(const Config& cfg) {
    sqfr::Graph g = load_graph(cfg);
    sqfr::OrderCertificate cert = sqfr::find_admissible_order(g, cfg.s);
    std::cout << sqfr::certificate_to_json(cert).dump() << "\n";
    return 0;
}

std::vector<std::string> split_checks(const std::string& text) {
    if (text.empty()) return sqfr::all_check_ids();
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

int cmd_sweep(const Config& cfg) {
    sqfr::VerifyOptions opt;
    opt.prime = cfg.prime;
    opt.cap = cfg.cap;
    opt.seed = cfg.seed;

    std::unique_ptr<sqfr::DiskCache> cache;
    if (!cfg.cache_path.empty()) cache = std::make_unique<sqfr::DiskCache>(cfg.cache_path);

    std::ifstream file;
    std::istream* in = &std::cin;
    if (cfg.input != "-") {
        file.open(cfg.input);
        if (!file) throw sqfr::ParseError("cannot read input '" + cfg.input + "'");
        in = &file;
    }
    std::ofstream out_file;
    std::ostream* out = &std::cout;
    if (!cfg.out_path.empty()) {
        out_file.open(cfg.out_path);
        if (!out_file) throw sqfr::ParseError("cannot write output '" + cfg.out_path + "'");
        out = &out_file;
    }
    sqfr::SweepSummary summary =
        sqfr::run_sweep(*in, split_checks(cfg.checks), opt, cfg.jobs, *out, cache.get());
    return summary.clean() ? 0 : kExitFailure;
}

void add_graph_flags(CLI::App* app, Config& cfg) {
    app->add_option("--g6", cfg.g6, "graph as a graph6 record")->envname("SQFR_G6");
    app->add_option("--edges", cfg.edges, "graph as 'u-v,u-v,...'");
}

void add_common_flags(CLI::App* app, Config& cfg) {
    app->add_option("--prime", cfg.prime, "field characteristic (prime)")->envname("SQFR_PRIME");
    app->add_option("--cap", cfg.cap, "regularity vertex cap (<= 20)")->envname("SQFR_CAP");
    app->add_option("--jobs", cfg.jobs, "parallel workers")->envname("SQFR_JOBS");
    app->add_option("--seed", cfg.seed, "seed for sampled checks")->envname("SQFR_SEED");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-ideal squarefree-power toolkit"};
    app.require_subcommand(1);
    Config cfg;

    CLI::App* reg = app.add_subcommand("reg", "regularity of I(G)^[s]");
    add_graph_flags(reg, cfg);
    add_common_flags(reg, cfg);
    reg->add_option("--s", cfg.s, "squarefree power");
    reg->add_flag("--betti", cfg.betti, "include the full Betti table");

    CLI::App* colon = app.add_subcommand("colon-graph", "colon graph of a matching");
    add_graph_flags(colon, cfg);
    add_common_flags(colon, cfg);
    colon->add_option("--matching", cfg.matching, "matching as 'u-v,u-v'")->required();

    CLI::App* order = app.add_subcommand("order", "admissible generator ordering");
    add_graph_flags(order, cfg);
    add_common_flags(order, cfg);
    order->add_option("--s", cfg.s, "squarefree power level");

    CLI::App* sweep = app.add_subcommand("sweep", "run checks over a graph6 stream");
    add_common_flags(sweep, cfg);
    sweep->add_option("input", cfg.input, "graph6 file, '-' for stdin");
    sweep->add_option("--checks", cfg.checks, "comma list (default: all)")
        ->envname("SQFR_CHECKS");
    sweep->add_option("--cache", cfg.cache_path, "regularity cache file")->envname("SQFR_CACHE");
    sweep->add_option("--out", cfg.out_path, "write JSONL here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        validate(cfg);
        if (reg->parsed()) return cmd_reg(cfg);
        if (colon->parsed()) return cmd_colon_graph(cfg);
        if (order->parsed()) return cmd_order(cfg);
        if (sweep->parsed()) return cmd_sweep(cfg);
        return kExitInput;
    } catch (const sqfr::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const sqfr::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const sqfr::TheoremViolationError& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        return kExitTheorem;
    } catch (const sqfr::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitTheorem;
    }
}

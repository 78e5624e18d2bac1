#include "kradius/bounds.hpp"
#include "kradius/builder.hpp"
#include "kradius/io.hpp"
#include "kradius/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_trace(const kradius::BuildPlan& plan) {
    std::ostringstream out;
    for (std::size_t i = 0; i < plan.trace.size(); ++i) {
        const kradius::PlanStep& step = plan.trace[i];
        if (i > 0) out << " -> ";
        out << to_string(step.strategy) << "(n=" << step.n << ", k=" << step.k;
        if (step.q) out << ", q=" << *step.q;
        out << ")";
    }
    return out.str();
}

/// The tightest lower bound applicable to (n, k).
std::uint64_t best_lower_bound(std::uint32_t n, std::uint32_t k) {
    const kradius::BoundSet b = kradius::bounds(n, k);
    std::uint64_t lower = b.general_lower;
    if (b.mod4_lower) lower = std::max(lower, *b.mod4_lower);
    if (b.ghosh_exact) lower = std::max(lower, *b.ghosh_exact);
    if (b.large_k_exact) lower = std::max(lower, *b.large_k_exact);
    return lower;
}

struct ConstructArgs {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::string strategy = "auto";
    std::string q_choice = "prime";
    std::string out_path = "-";
    std::string format = "text";
    bool show_underlines = false;
};

int run_construct(const ConstructArgs& args) {
    if (args.show_underlines && args.n % 2 != 0) {
        std::cerr << "error: --show-underlines requires an even n, got n="
                  << args.n << "\n";
        return kExitUsage;
    }
    const kradius::Strategy strategy = *kradius::parse_strategy(args.strategy);
    const kradius::QChoice q_choice = *kradius::parse_q_choice(args.q_choice);

    const kradius::BuildResult result =
        kradius::construct(args.n, args.k, strategy, q_choice);
    // construct() self-verifies alphabets up to 10000 symbols; cover the rest
    // here so every CLI run is checked.
    if (args.n > 10'000 && !kradius::verify(result.sequence).is_k_radius) {
        std::cerr << "error: constructed sequence failed verification\n";
        return kExitInternal;
    }

    const kradius::SequenceFormat format = args.format == "json"
                                               ? kradius::SequenceFormat::Json
                                               : kradius::SequenceFormat::Text;
    std::optional<std::uint32_t> underline_base;
    if (args.show_underlines) underline_base = args.n / 2;

    if (args.out_path == "-") {
        kradius::write_sequence(result.sequence, std::cout, format, underline_base);
    } else {
        std::ofstream out(args.out_path);
        if (!out) {
            std::cerr << "error: cannot open '" << args.out_path
                      << "' for writing\n";
            return kExitUsage;
        }
        kradius::write_sequence(result.sequence, out, format, underline_base);
    }

    std::cerr << "length: " << result.sequence.size() << "\n"
              << "lower_bound: " << best_lower_bound(args.n, args.k) << "\n"
              << "strategy: " << format_trace(result.plan) << "\n";
    return kExitOk;
}

struct VerifyArgs {
    std::string file = "-";
    std::optional<std::uint32_t> k_override;
    std::string format = "text";
};

int run_verify(const VerifyArgs& args) {
    kradius::Sequence seq = kradius::read_sequence_file(args.file);
    if (args.k_override) seq.k = *args.k_override;
    const kradius::CoverageReport report = kradius::verify(seq);

    if (args.format == "json") {
        nlohmann::json doc;
        doc["n"] = report.n;
        doc["k"] = report.k;
        doc["total_pairs"] = report.total_pairs;
        doc["covered_pairs"] = report.covered_pairs;
        doc["is_k_radius"] = report.is_k_radius;
        auto witnesses = nlohmann::json::array();
        for (const auto& [a, b] : report.uncovered_witnesses) {
            witnesses.push_back({a, b});
        }
        doc["uncovered_witnesses"] = std::move(witnesses);
        doc["witnesses_truncated"] = report.witnesses_truncated;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "n=" << report.n << " k=" << report.k << " pairs="
                  << report.covered_pairs << "/" << report.total_pairs
                  << " k_radius=" << (report.is_k_radius ? "yes" : "no") << "\n";
        for (const auto& [a, b] : report.uncovered_witnesses) {
            std::cout << "missing: (" << a << ", " << b << ")\n";
        }
        if (report.witnesses_truncated) {
            std::cout << "missing: ... (list truncated)\n";
        }
    }
    return report.is_k_radius ? kExitOk : kExitPropertyFails;
}

struct BoundArgs {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::string format = "text";
};

int run_bound(const BoundArgs& args) {
    const kradius::BoundSet b = kradius::bounds(args.n, args.k);
    if (args.format == "json") {
        nlohmann::json doc;
        doc["n"] = b.n;
        doc["k"] = b.k;
        doc["general_lower"] = b.general_lower;
        if (b.mod4_lower) doc["mod4_lower"] = *b.mod4_lower;
        if (b.ghosh_exact) doc["ghosh_exact"] = *b.ghosh_exact;
        if (b.large_k_exact) doc["large_k_exact"] = *b.large_k_exact;
        if (b.quadratic_upper) doc["quadratic_upper"] = *b.quadratic_upper;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "n=" << b.n << " k=" << b.k << "\n"
                  << "general_lower=" << b.general_lower << "\n";
        if (b.mod4_lower) std::cout << "mod4_lower=" << *b.mod4_lower << "\n";
        if (b.ghosh_exact) std::cout << "ghosh_exact=" << *b.ghosh_exact << "\n";
        if (b.large_k_exact) {
            std::cout << "large_k_exact=" << *b.large_k_exact << "\n";
        }
        if (b.quadratic_upper) {
            std::cout << "quadratic_upper=" << *b.quadratic_upper << "\n";
        }
    }
    return kExitOk;
}

struct SearchArgs {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    double budget = 2e7;
    std::optional<std::uint64_t> length_cap;
    bool allow_long = false;
    std::string format = "text";
};

int run_search(const SearchArgs& args) {
    if (args.n > 12 && !args.allow_long) {
        std::cerr << "error: search with n=" << args.n
                  << " can run for a very long time; pass --allow-long to "
                     "confirm\n";
        return kExitUsage;
    }
    if (!(args.budget >= 1.0)) {
        std::cerr << "error: --budget must be at least 1\n";
        return kExitUsage;
    }
    const auto budget = static_cast<std::uint64_t>(args.budget);
    const kradius::SearchResult result =
        kradius::exact_search(args.n, args.k, budget, args.length_cap);
    if (result.witness && !kradius::verify(*result.witness).is_k_radius) {
        std::cerr << "error: search witness failed verification\n";
        return kExitInternal;
    }

    if (args.format == "json") {
        nlohmann::json doc;
        doc["n"] = result.n;
        doc["k"] = result.k;
        doc["status"] = kradius::to_string(result.status);
        if (result.best_length) doc["best_length"] = *result.best_length;
        doc["proven_lower"] = result.proven_lower;
        doc["nodes_explored"] = result.nodes_explored;
        doc["elapsed_seconds"] = result.elapsed.count();
        if (result.witness) doc["witness"] = result.witness->symbols;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "n=" << result.n << " k=" << result.k
                  << " status=" << kradius::to_string(result.status);
        if (result.best_length) std::cout << " best_length=" << *result.best_length;
        std::cout << " proven_lower=" << result.proven_lower
                  << " nodes=" << result.nodes_explored << " elapsed="
                  << std::fixed << std::setprecision(3)
                  << result.elapsed.count() << "s\n";
        if (result.witness) {
            std::cout << "witness:";
            for (kradius::Symbol s : result.witness->symbols) {
                std::cout << " " << s;
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

struct BenchArgs {
    std::uint32_t k = 0;
    std::vector<std::uint32_t> n_list;
    std::vector<std::string> strategies{"auto"};
    std::string q_choice = "prime";
    std::string format = "csv";
};

std::string csv_quote(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

int run_bench(const BenchArgs& args) {
    const kradius::QChoice q_choice = *kradius::parse_q_choice(args.q_choice);
    const bool json = args.format == "json";
    if (json) {
        std::cout << "[";
    } else {
        std::cout << "n,k,strategy,q_used,length,lower_bound,ratio,"
                     "build_time,verify_time\n";
    }
    bool first_row = true;
    for (std::uint32_t n : args.n_list) {
        for (const std::string& strategy_name : args.strategies) {
            const kradius::Strategy strategy =
                *kradius::parse_strategy(strategy_name);
            std::optional<std::uint64_t> q_used;
            std::uint64_t length = 0;
            std::uint64_t lower = 0;
            double ratio = 0.0;
            double build_time = 0.0;
            double verify_time = 0.0;
            std::string error;
            try {
                const auto build_start = Clock::now();
                const kradius::BuildResult result =
                    kradius::construct(n, args.k, strategy, q_choice);
                build_time = seconds_since(build_start);
                if (!result.plan.trace.empty()) {
                    q_used = result.plan.trace.front().q;
                }
                length = result.sequence.size();
                const auto verify_start = Clock::now();
                const bool ok = kradius::verify(result.sequence).is_k_radius;
                verify_time = seconds_since(verify_start);
                if (!ok) throw std::logic_error("verification failed");
                lower = best_lower_bound(n, args.k);
                if (length < lower) {
                    throw std::logic_error("length below the lower bound");
                }
                // n^2 / 2k is the leading term every strategy chases.
                ratio = static_cast<double>(length) * 2.0 * args.k /
                        (static_cast<double>(n) * n);
            } catch (const std::exception& e) {
                error = e.what();
            }

            if (json) {
                nlohmann::json row;
                row["n"] = n;
                row["k"] = args.k;
                row["strategy"] = strategy_name;
                if (q_used) {
                    row["q_used"] = *q_used;
                } else {
                    row["q_used"] = nullptr;
                }
                if (error.empty()) {
                    row["length"] = length;
                    row["lower_bound"] = lower;
                    row["ratio"] = ratio;
                    row["build_time"] = build_time;
                    row["verify_time"] = verify_time;
                } else {
                    row["error"] = error;
                }
                std::cout << (first_row ? "" : ",") << "\n  " << row.dump();
            } else {
                std::cout << n << "," << args.k << "," << strategy_name << ",";
                if (q_used) std::cout << *q_used;
                std::cout << ",";
                if (error.empty()) {
                    std::cout << length << "," << lower << "," << std::fixed
                              << std::setprecision(4) << ratio << ","
                              << std::setprecision(6) << build_time << ","
                              << verify_time;
                } else {
                    std::cout << ",,,,," << csv_quote("error: " + error);
                }
                std::cout << "\n";
            }
            std::cout.flush();
            first_row = false;
        }
    }
    if (json) std::cout << "\n]\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-radius sequence construction, verification and search"};
    app.require_subcommand(1);

    const std::vector<std::string> strategy_names{
        "auto",          "main_recursive",  "optimal_2p", "block_expand",
        "trivial_large_k", "single_pass",   "ghosh_base"};
    const std::vector<std::string> q_choice_names{"prime", "factorial"};
    const std::vector<std::string> seq_formats{"text", "json"};
    const std::vector<std::string> bench_formats{"csv", "json"};

    ConstructArgs construct_args;
    CLI::App* construct = app.add_subcommand(
        "construct", "Build a k-radius sequence over symbols 0..n-1");
    construct->add_option("--n", construct_args.n, "Alphabet size")->required();
    construct->add_option("--k", construct_args.k, "Radius")->required();
    construct->add_option("--strategy", construct_args.strategy, "Construction")
        ->check(CLI::IsMember(strategy_names));
    construct->add_option("--q-choice", construct_args.q_choice,
                          "How the recursive construction picks q")
        ->check(CLI::IsMember(q_choice_names));
    construct->add_option("--out", construct_args.out_path,
                          "Output file, - for stdout");
    construct->add_option("--format", construct_args.format, "Output format")
        ->check(CLI::IsMember(seq_formats));
    construct->add_flag("--show-underlines", construct_args.show_underlines,
                        "Render symbols >= n/2 as _v (text format, even n)");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "Check that a sequence file has the k-radius property");
    verify->add_option("file", verify_args.file,
                       "Sequence file, - for stdin");
    verify->add_option("--k", verify_args.k_override,
                       "Override the radius from the file header");
    verify->add_option("--format", verify_args.format, "Report format")
        ->check(CLI::IsMember(seq_formats));

    BoundArgs bound_args;
    CLI::App* bound = app.add_subcommand(
        "bound", "Print length bounds that apply to (n, k)");
    bound->add_option("--n", bound_args.n, "Alphabet size")->required();
    bound->add_option("--k", bound_args.k, "Radius")->required();
    bound->add_option("--format", bound_args.format, "Output format")
        ->check(CLI::IsMember(seq_formats));

    SearchArgs search_args;
    CLI::App* search = app.add_subcommand(
        "search", "Exhaustively find the minimum k-radius sequence length");
    search->add_option("--n", search_args.n, "Alphabet size")->required();
    search->add_option("--k", search_args.k, "Radius")->required();
    search->add_option("--budget", search_args.budget,
                       "Node budget, e.g. 1e6");
    search->add_option("--length-cap", search_args.length_cap,
                       "Stop once candidate lengths exceed this");
    search->add_flag("--allow-long", search_args.allow_long,
                     "Permit n > 12 (can run for days)");
    search->add_option("--format", search_args.format, "Output format")
        ->check(CLI::IsMember(seq_formats));

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand(
        "bench", "Time constructions across alphabet sizes and strategies");
    bench->add_option("--k", bench_args.k, "Radius")->required();
    bench->add_option("--n-list", bench_args.n_list, "Alphabet sizes")
        ->required()
        ->delimiter(',');
    bench->add_option("--strategies", bench_args.strategies,
                      "Strategies to compare")
        ->delimiter(',')
        ->check(CLI::IsMember(strategy_names));
    bench->add_option("--q-choice", bench_args.q_choice,
                      "How the recursive construction picks q")
        ->check(CLI::IsMember(q_choice_names));
    bench->add_option("--format", bench_args.format, "Output format")
        ->check(CLI::IsMember(bench_formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct->parsed()) return run_construct(construct_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (bound->parsed()) return run_bound(bound_args);
        if (search->parsed()) return run_search(search_args);
        if (bench->parsed()) return run_bench(bench_args);
    } catch (const kradius::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const kradius::construction_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }

    std::cerr << "error: no subcommand given\n";
    return kExitUsage;
}

/**
 * oddcat — exact-arithmetic verification CLI for the odd nilHecke calculus.
 *
 *   oddcat verify <suite> [--n N] [--k K] [--degree-bound D]
 *                 [--format json|markdown] [--out FILE]
 *                 [--cache-dir PATH] [--specialize d0|undeformed]
 *                 [--jobs J]
 *
 * Exit status is nonzero iff any record failed.
 */
#include <atomic>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "oddcat/suites.hpp"

using namespace oddcat;

int main(int argc, char** argv) {
    CLI::App app{"oddcat: odd nilHecke / odd Chuang-Rouquier verification kernel"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    SuiteConfig cfg;
    std::string format = "json";
    std::string outfile;
    int jobs = 0;
    std::string cache_dir_opt;
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    verify->add_option("--n", cfg.n, "strand / weight parameter (default 4)");
    verify->add_option("--k", cfg.k, "fixed k (default: all admissible)");
    verify->add_option("--degree-bound", cfg.degree_bound,
                       "internal degree bound D (default 2n^2+8)");
    verify->add_option("--format", format, "report format: json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
    verify->add_option("--out", outfile, "write the report to a file instead of stdout");
    verify->add_option("--cache-dir", cache_dir_opt,
                       "cache directory (default $ODDCAT_CACHE or a temp dir)");
    verify->add_option("--specialize", cfg.specialize,
                       "coefficient specialization: d0 or undeformed")
        ->check(CLI::IsMember({"", "d0", "undeformed"}));
    verify->add_option("--jobs", jobs, "worker threads for 'all' (default: hardware)");

    CLI11_PARSE(app, argc, argv);

    if (!cache_dir_opt.empty()) cfg.cache_dir = cache_dir_opt;
    if (cfg.n < 1 || cfg.n > 6) {
        std::cerr << "error: --n must be between 1 and 6 at desk scale\n";
        return 2;
    }
    if (cfg.k > cfg.n) {
        std::cerr << "error: --k must satisfy 0 <= k <= n\n";
        return 2;
    }

    // warm the sign-table cache for the strands this run will touch
    for (int m = 2; m <= cfg.n; ++m) load_sign_table(m, cfg.cache_dir);

    std::vector<std::string> to_run;
    if (suite == "all") {
        to_run = suite_names();
    } else {
        bool known = false;
        for (const auto& s : suite_names()) known = known || s == suite;
        if (!known) {
            std::cerr << "error: unknown suite '" << suite << "'; choose from:";
            for (const auto& s : suite_names()) std::cerr << " " << s;
            std::cerr << " all\n";
            return 2;
        }
        to_run.push_back(suite);
    }

    RecordSink sink;
    if (to_run.size() == 1) {
        try {
            sink.merge(run_suite(to_run[0], cfg));
        } catch (const std::exception& e) {
            VerificationRecord r;
            r.suite = to_run[0];
            r.check = "suite execution";
            r.citation = "plumbing";
            r.passed = false;
            r.witness = e.what();
            sink.add(std::move(r));
        }
    } else {
        // fan suites across worker threads; report assembly is single-threaded
        unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs)
                                    : std::max(1u, std::thread::hardware_concurrency());
        workers = std::min<unsigned>(workers, to_run.size());
        std::atomic<size_t> next{0};
        std::vector<std::vector<VerificationRecord>> results(to_run.size());
        auto worker = [&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= to_run.size()) return;
                try {
                    results[i] = run_suite(to_run[i], cfg);
                } catch (const std::exception& e) {
                    VerificationRecord r;
                    r.suite = to_run[i];
                    r.check = "suite execution";
                    r.citation = "plumbing";
                    r.passed = false;
                    r.witness = e.what();
                    results[i] = {std::move(r)};
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (auto& rs : results) sink.merge(std::move(rs));
    }

    for (int m = 2; m <= cfg.n; ++m) store_sign_table(m, cfg.cache_dir);

    std::string rendered = format == "json" ? report_json(sink.records()).dump(2) + "\n"
                                            : report_markdown(sink.records());
    if (outfile.empty()) {
        std::cout << rendered;
    } else {
        try {
            write_report_file(outfile, rendered);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }
    return sink.all_passed() ? 0 : 1;
}

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hooklab/abacus.hpp"
#include "hooklab/genfun.hpp"
#include "hooklab/partition.hpp"
#include "hooklab/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

std::optional<int> env_qmax_default() {
    const char* raw = std::getenv("HOOKLAB_QMAX_DEFAULT");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    try {
        const int value = std::stoi(raw);
        if (value < 0) throw std::invalid_argument("negative");
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument("HOOKLAB_QMAX_DEFAULT must be a non-negative integer");
    }
}

int resolve_qmax(const std::optional<int>& flag, int fallback) {
    if (flag) return *flag;
    if (auto env = env_qmax_default()) return *env;
    return fallback;
}

json series_to_json(const hooklab::QSeries& series) {
    json terms = json::array();
    for (const auto& term : series.terms()) {
        json entry;
        entry["q"] = term.q_exp;
        entry["x"] = term.x_exp;
        entry["coeff"] = term.coeff.get_str();
        terms.push_back(std::move(entry));
    }
    return terms;
}

int run_enumerate(int n, const std::string& klass, bool hooks) {
    if (klass != "all" && klass != "sc")
        throw std::invalid_argument("--class must be 'all' or 'sc'");
    const auto emit = [&](const hooklab::Partition& p) {
        json line;
        line["partition"] = p.to_string();
        if (hooks) line["hooks"] = p.hook_lengths_desc();
        std::cout << line.dump() << '\n';
    };
    if (klass == "sc")
        hooklab::for_each_self_conjugate(n, emit);
    else
        hooklab::for_each_partition(n, emit);
    return 0;
}

int run_decompose(const std::string& partition_text, int t) {
    const hooklab::Partition p = hooklab::Partition::parse(partition_text);
    const hooklab::LittlewoodImage image = hooklab::decompose(p, t);
    json out;
    out["partition"] = p.to_string();
    out["t"] = t;
    out["word"] = hooklab::encode(p).to_string();
    out["core"] = image.core.to_string();
    out["core_word"] = hooklab::encode(image.core).to_string();
    json quotient = json::array();
    json quotient_words = json::array();
    for (const hooklab::Partition& nu : image.quotient) {
        quotient.push_back(nu.to_string());
        quotient_words.push_back(hooklab::encode(nu).to_string());
    }
    out["quotient"] = std::move(quotient);
    out["quotient_words"] = std::move(quotient_words);
    std::cout << out.dump() << '\n';
    return 0;
}

int run_count(int t, int n, const std::string& method) {
    mpz_class value;
    if (method == "oracle") {
        value = hooklab::a_star_oracle(t, n);
    } else if (method == "formula") {
        value = hooklab::a_star_formula(t, n);
    } else if (method == "series") {
        const hooklab::QSeries series = hooklab::a_star_series(t, n);
        const mpq_class coeff = series.coeff(n).coeff(0);
        if (coeff.get_den() != 1) throw std::logic_error("count: non-integer series coefficient");
        value = coeff.get_num();
    } else {
        throw std::invalid_argument("--method must be oracle, formula or series");
    }
    std::cout << value.get_str() << '\n';
    return 0;
}

int run_series(const std::string& which, std::optional<int> t, std::optional<int> qmax) {
    const int trunc = resolve_qmax(qmax, 30);
    hooklab::QSeries series(trunc);
    if (which == "sc") {
        series = hooklab::sc_series(trunc);
    } else if (which == "hstar") {
        series = hooklab::h_star(trunc);
    } else if (which == "thm11") {
        if (!t) throw std::invalid_argument("series --which thm11 requires --t");
        series = *t % 2 == 0 ? hooklab::thm11_even_rhs(*t, trunc)
                             : hooklab::thm11_odd_rhs(*t, trunc);
    } else if (which == "a_star") {
        if (!t) throw std::invalid_argument("series --which a_star requires --t");
        series = hooklab::a_star_series(*t, trunc);
    } else {
        throw std::invalid_argument("--which must be sc, hstar, thm11 or a_star");
    }
    std::cout << series_to_json(series).dump() << '\n';
    return 0;
}

int run_verify(const std::string& target, std::optional<int> t, std::optional<int> qmax,
               int jobs) {
    hooklab::SuiteOptions options;
    options.targets = {target};
    options.t = t;
    options.qmax = qmax;
    if (!options.qmax) options.qmax = env_qmax_default();
    options.jobs = jobs;
    const auto reports = hooklab::run_verification_suite(options);
    bool all_pass = true;
    for (const auto& report : reports) {
        std::cout << report.to_json().dump() << '\n';
        if (!report.pass) {
            all_pass = false;
            std::cerr << json(report.mismatch->to_json()).dump() << '\n';
        }
    }
    return all_pass ? 0 : kExitVerifyFailure;
}

int run_table(int n) {
    for (const auto& [label, value] : hooklab::a_star_table(n)) {
        json line;
        line["t"] = label;
        line["value"] = value.get_str();
        std::cout << line.dump() << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hooklab: exact hook statistics of self-conjugate partitions, the Littlewood "
                 "t-core/t-quotient decomposition, and q-series identity verification"};
    app.require_subcommand(1);

    auto* enumerate = app.add_subcommand("enumerate", "Stream partitions of n as JSON lines");
    int enum_n = 0;
    std::string enum_class = "all";
    bool enum_hooks = false;
    enumerate->add_option("--n", enum_n, "Partition size")->required()->check(CLI::Range(0, 1000000));
    enumerate->add_option("--class", enum_class, "Partition class: all or sc");
    enumerate->add_flag("--hooks", enum_hooks, "Include the hook multiset");

    auto* decompose = app.add_subcommand("decompose", "Littlewood t-core and t-quotient");
    std::string decompose_partition;
    int decompose_t = 1;
    decompose->add_option("--partition", decompose_partition, "Comma-separated parts, or -")
        ->required();
    decompose->add_option("--t", decompose_t, "Modulus t")->required()->check(CLI::Range(1, 1000000));

    auto* count = app.add_subcommand("count", "a_t*(n): t-hooks among self-conjugate partitions of n");
    int count_t = 1, count_n = 0;
    std::string count_method = "formula";
    count->add_option("--t", count_t, "Hook length t")->required()->check(CLI::Range(1, 1000000));
    count->add_option("--n", count_n, "Partition size")->required()->check(CLI::Range(0, 1000000));
    count->add_option("--method", count_method, "oracle, formula or series");

    auto* series = app.add_subcommand("series", "Print a truncated series as JSON triples");
    std::string series_which;
    std::optional<int> series_t, series_qmax;
    series->add_option("--which", series_which, "sc, hstar, thm11 or a_star")->required();
    series->add_option("--t", series_t, "Hook length t (thm11, a_star)")->check(CLI::Range(1, 1000000));
    series->add_option("--qmax", series_qmax, "Truncation order")->check(CLI::Range(0, 1000000));

    auto* verify = app.add_subcommand("verify", "Run verification targets, one JSON report per line");
    std::string verify_target = "all";
    std::optional<int> verify_t, verify_qmax;
    int verify_jobs = 1;
    verify->add_option("--target", verify_target,
                       "all, thm1.1, thm1.2, thm3.1, lemma3.2, lemma3.3, littlewood, bbcfw, table1");
    verify->add_option("--t", verify_t, "Restrict per-t targets")->check(CLI::Range(1, 1000000));
    verify->add_option("--qmax", verify_qmax, "Override default truncations")
        ->check(CLI::Range(0, 1000000));
    verify->add_option("--jobs", verify_jobs, "Worker threads")->check(CLI::Range(1, 1000000));

    auto* table = app.add_subcommand("table", "a_t*(n) for t = 1..n, plus the vanishing tail");
    int table_n = 16;
    table->add_option("--n", table_n, "Partition size")->required()->check(CLI::Range(1, 1000000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (enumerate->parsed()) return run_enumerate(enum_n, enum_class, enum_hooks);
        if (decompose->parsed()) return run_decompose(decompose_partition, decompose_t);
        if (count->parsed()) return run_count(count_t, count_n, count_method);
        if (series->parsed()) return run_series(series_which, series_t, series_qmax);
        if (verify->parsed()) return run_verify(verify_target, verify_t, verify_qmax, verify_jobs);
        if (table->parsed()) return run_table(table_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

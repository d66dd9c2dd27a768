// gsym: run Gaussian symmetrization checks from the command line.
//
//   gsym verify --builtin gaussian_bump --dim 2 --grid 128 --checks uno,dos,mt
//   gsym verify --expr "exp(-x1^2)" --grid 1024 --checks uno,dos --out r.json
//   gsym corpus list
//   gsym corpus describe coordinate
//
// Exit status: 0 all checks pass, 1 a check failed, 2 bad configuration,
// 3 runtime error.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsym/field.hpp"
#include "gsym/majorize.hpp"
#include "gsym/report.hpp"
#include "gsym/verify.hpp"

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_config = 2;
constexpr int exit_runtime = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> known_checks = {"uno", "dos", "norm", "mt", "interval", "orlicz", "converge"};

struct VerifyConfig {
    std::string expr;
    std::string builtin;
    std::vector<std::string> params;
    std::size_t dim = 1;
    long long grid = 4096;
    long long sgrid = 4096;
    std::vector<std::string> checks = {"uno", "dos"};
    std::string intervals = "0.1,0.2;0.6,0.7";
    std::vector<std::string> norms;
    std::optional<double> tol;
    bool equality = false;
    std::string out;
    std::string curves;
    long long seed = 0;
};

double parse_real(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size())
        throw ConfigError("bad " + what + " '" + text + "'");
    return v;
}

gsym::Params parse_params(const std::vector<std::string>& items) {
    gsym::Params out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigError("--param expects k=v, got '" + item + "'");
        out[item.substr(0, eq)] = parse_real(item.substr(eq + 1), "parameter value");
    }
    return out;
}

gsym::IntervalUnion parse_intervals(const std::string& text) {
    gsym::IntervalUnion E;
    std::stringstream parts(text);
    std::string part;
    while (std::getline(parts, part, ';')) {
        const auto comma = part.find(',');
        if (comma == std::string::npos)
            throw ConfigError("--intervals expects a,b[;c,d]..., got '" + text + "'");
        E.parts.emplace_back(parse_real(part.substr(0, comma), "interval end"),
                             parse_real(part.substr(comma + 1), "interval end"));
    }
    if (E.parts.empty())
        throw ConfigError("--intervals is empty");
    try {
        E.validate();
    } catch (const gsym::error& e) {
        throw ConfigError(e.what());
    }
    return E;
}

std::string file_stem(const std::string& check) {
    std::string s = check;
    for (char& c : s)
        if (c == ':' || c == '/')
            c = '_';
    return s;
}

void print_line(const gsym::IneqReport& r) {
    std::printf("%-24s %-4s max_violation=%.6g tolerance=%.6g (%lld ms)\n", r.check_name.c_str(),
                r.pass ? "PASS" : "FAIL", r.max_violation, r.tolerance, r.runtime_ms);
}

int run_verify(const VerifyConfig& cfg) {
    // grid, s-grid and dimension are checked before the field is built
    if (cfg.grid < 2)
        throw ConfigError("grid must be ≥ 2 cells per axis (got " + std::to_string(cfg.grid) + ")");
    if (cfg.sgrid < 8)
        throw ConfigError("sgrid must be ≥ 8 (got " + std::to_string(cfg.sgrid) + ")");
    if (cfg.dim < 1 || cfg.dim > 3)
        throw ConfigError("dim must be 1, 2 or 3");
    for (const auto& c : cfg.checks)
        if (std::find(known_checks.begin(), known_checks.end(), c) == known_checks.end())
            throw ConfigError("unknown check '" + c + "'");
    if (cfg.expr.empty() == cfg.builtin.empty())
        throw ConfigError("give exactly one of --expr or --builtin");
    if (!cfg.params.empty() && cfg.builtin.empty())
        throw ConfigError("--param only applies to --builtin fields");

    const gsym::IntervalUnion E = parse_intervals(cfg.intervals);
    std::vector<gsym::RINorm> norms;
    try {
        for (const auto& n : cfg.norms)
            norms.push_back(gsym::RINorm::parse(n));
    } catch (const gsym::invalid_parameter& e) {
        throw ConfigError(e.what());
    }
    if (norms.empty())
        norms = gsym::default_norm_family();

    const std::size_t N = static_cast<std::size_t>(cfg.grid);
    const std::size_t M = static_cast<std::size_t>(cfg.sgrid);
    std::optional<gsym::ScalarField> field;
    try {
        field = cfg.builtin.empty() ? gsym::parse_field(cfg.expr, cfg.dim)
                                    : gsym::builtin_field(cfg.builtin, parse_params(cfg.params), cfg.dim);
    } catch (const gsym::parse_error& e) {
        throw ConfigError(e.what());
    } catch (const gsym::unknown_field& e) {
        throw ConfigError(e.what());
    } catch (const gsym::invalid_parameter& e) {
        throw ConfigError(e.what());
    }
    std::optional<gsym::GaussianGrid> grid;
    try {
        grid.emplace(cfg.dim, N);
    } catch (const gsym::error& e) {
        throw ConfigError(e.what());
    }

    gsym::VerifyOptions opts;
    opts.tol = cfg.tol;
    opts.equality = cfg.equality;

    std::vector<gsym::IneqReport> reports;
    const gsym::FieldAnalysis a = gsym::analyze(*field, *grid, M);
    for (const auto& c : cfg.checks) {
        if (c == "converge")
            continue;
        if (c == "norm") {
            for (auto& r : gsym::check_norm_inequality(a, norms, opts))
                reports.push_back(std::move(r));
        } else {
            reports.push_back(gsym::run_check(c, a, opts, E));
        }
    }

    gsym::Report report;
    for (const auto& r : reports) {
        print_line(r);
        report.checks.push_back(gsym::to_entry(r));
    }

    if (std::find(cfg.checks.begin(), cfg.checks.end(), "converge") != cfg.checks.end()) {
        std::vector<std::size_t> Ns;
        for (std::size_t div : {4u, 2u, 1u}) {
            const std::size_t n = std::max<std::size_t>(8, N / div);
            if (Ns.empty() || n > Ns.back())
                Ns.push_back(n);
        }
        const gsym::detail::Stopwatch clock;
        const auto study = gsym::convergence_study(*field, cfg.dim, {"uno"}, Ns, M, opts);
        for (const auto& res : study) {
            gsym::ReportEntry e;
            e.name = "converge:" + res.check_name;
            e.field = field->label();
            e.dim = cfg.dim;
            e.N = N;
            e.M = M;
            e.tolerance = res.rows.back().tolerance;
            e.max_violation = res.rows.back().max_violation;
            e.pass = res.pass;
            e.runtime_ms = clock.elapsed_ms();
            std::printf("%-24s %-4s order=%.3g nonincreasing=%s\n", e.name.c_str(), e.pass ? "PASS" : "FAIL",
                        res.order, res.nonincreasing ? "yes" : "no");
            for (const auto& row : res.rows)
                std::printf("    N=%-8zu max_violation=%.6g tolerance=%.6g\n", row.N, row.max_violation,
                            row.tolerance);
            report.checks.push_back(e);
        }
    }

    if (!cfg.curves.empty()) {
        std::filesystem::create_directories(cfg.curves);
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const auto path = std::filesystem::path(cfg.curves) / (file_stem(reports[i].check_name) + ".csv");
            gsym::write_atomically(path, gsym::curves_csv(reports[i]));
            report.checks[i].curves_file = path.string();
        }
    }
    if (!cfg.out.empty())
        gsym::write_atomically(cfg.out, gsym::emit(report));

    return report.all_pass() ? exit_pass : exit_fail;
}

int run_corpus_list() {
    for (const auto& info : gsym::builtin_catalog())
        std::printf("%s\n", std::string(info.name).c_str());
    return exit_pass;
}

int run_corpus_describe(const std::string& name) {
    const gsym::BuiltinInfo* info = nullptr;
    try {
        info = &gsym::builtin_info(name);
    } catch (const gsym::unknown_field& e) {
        throw ConfigError(e.what());
    }
    std::printf("name:     %s\n", std::string(info->name).c_str());
    std::printf("formula:  %s\n", std::string(info->formula).c_str());
    std::printf("gradient: %s\n", std::string(info->gradient).c_str());
    std::printf("defaults:");
    if (info->defaults.empty())
        std::printf(" none");
    for (const auto& [k, v] : info->defaults)
        std::printf(" %s=%g", k.c_str(), v);
    std::printf("\n");
    return exit_pass;
}

}  // namespace

/// Replaces `--config FILE` after `verify` with one `--key=value` argument per
/// line of FILE, inserted directly after `verify`. Options keep their last
/// value, and command-line flags follow the inserted ones.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    const auto sub = std::find(args.begin(), args.end(), "verify");
    if (sub == args.end())
        return args;
    std::optional<std::string> path;
    for (auto it = sub + 1; it != args.end(); ++it) {
        if (*it == "--config") {
            if (it + 1 == args.end())
                throw ConfigError("--config needs a file name");
            path = *(it + 1);
            args.erase(it, it + 2);
            break;
        }
        if (it->starts_with("--config=")) {
            path = it->substr(9);
            args.erase(it);
            break;
        }
    }
    if (!path)
        return args;

    std::ifstream in(*path);
    if (!in)
        throw ConfigError("cannot read config file '" + *path + "'");
    std::vector<std::string> from_file;
    std::string line;
    for (int number = 1; std::getline(in, line); ++number) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string body = line.substr(first, last - first + 1);
        const auto eq = body.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigError(*path + ":" + std::to_string(number) + ": expected key=value");
        std::string key = body.substr(0, eq);
        std::string value = body.substr(eq + 1);
        key.erase(key.find_last_not_of(" \t") + 1);
        value.erase(0, value.find_first_not_of(" \t"));
        if (key == "config")
            throw ConfigError(*path + ":" + std::to_string(number) + ": config files do not nest");
        from_file.push_back("--" + key + "=" + value);
    }
    const auto pos = std::find(args.begin(), args.end(), "verify") + 1;
    args.insert(pos, from_file.begin(), from_file.end());
    return args;
}

int main(int argc, char** argv) {
    CLI::App app{"Gaussian symmetrization inequality checks", "gsym"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    VerifyConfig cfg;
    double tol = 0.0;
    std::string checks_text;
    std::string norms_text;

    auto* verify = app.add_subcommand("verify", "run checks on one field");
    std::string config_path;
    verify->add_option("--config", config_path, "flat key=value file using the long flag names");
    auto* expr_opt = verify->add_option("--expr", cfg.expr, "field formula in x1..xn");
    auto* builtin_opt = verify->add_option("--builtin", cfg.builtin, "corpus field name");
    expr_opt->excludes(builtin_opt);
    verify->add_option("--param", cfg.params, "builtin parameter k=v (repeatable)");
    verify->add_option("--dim", cfg.dim, "dimension")->capture_default_str();
    verify->add_option("--grid", cfg.grid, "cells per axis")->capture_default_str();
    verify->add_option("--sgrid", cfg.sgrid, "points on the s-grid")->capture_default_str();
    verify->add_option("--checks", checks_text, "comma list from uno,dos,norm,mt,interval,orlicz,converge");
    verify->add_option("--intervals", cfg.intervals, "a,b[;c,d]... for the interval check")->capture_default_str();
    verify->add_option("--norms", norms_text, "comma list such as lp:2,lorentz:2,orlicz:expsq");
    auto* tol_opt = verify->add_option("--tol", tol, "fixed tolerance for every check");
    verify->add_flag("--equality", cfg.equality, "two-sided comparison");
    verify->add_option("--out", cfg.out, "JSON report path");
    verify->add_option("--curves", cfg.curves, "directory for CSV curves");
    verify->add_option("--seed", cfg.seed, "reserved");

    auto* corpus = app.add_subcommand("corpus", "builtin field corpus");
    corpus->require_subcommand(1);
    corpus->add_subcommand("list", "list builtin fields");
    std::string describe_name;
    auto* describe = corpus->add_subcommand("describe", "show one builtin field");
    describe->add_option("name", describe_name)->required();

    try {
        std::vector<std::string> args = expand_config(std::vector<std::string>(argv + 1, argv + argc));
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "gsym: %s\n", e.what());
        return exit_config;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    auto split = [](const std::string& text) {
        std::vector<std::string> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty())
                out.push_back(item);
        return out;
    };

    try {
        if (verify->parsed()) {
            if (!checks_text.empty())
                cfg.checks = split(checks_text);
            cfg.norms = split(norms_text);
            if (tol_opt->count() > 0) {
                if (!(tol >= 0.0) || !std::isfinite(tol))
                    throw ConfigError("--tol must be a finite nonnegative number");
                cfg.tol = tol;
            }
            return run_verify(cfg);
        }
        if (describe->parsed())
            return run_corpus_describe(describe_name);
        return run_corpus_list();
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "gsym: %s\n", e.what());
        return exit_config;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "gsym: error: %s\n", e.what());
        return exit_runtime;
    }
}

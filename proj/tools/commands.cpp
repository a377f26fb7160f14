#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <optional>
#include <sstream>

#include "krylov2d/energy.hpp"
#include "krylov2d/ensemble.hpp"
#include "krylov2d/oracle.hpp"
#include "report.hpp"

namespace krylov2d::cli {

namespace {

int usage_error(const std::string& message) {
    std::fprintf(stderr, "error: %s\n", message.c_str());
    return exit_usage;
}

std::optional<OrthMode> parse_mode(const std::string& text) {
    if (text == "gs" || text == "fullgs") return OrthMode::full_gram_schmidt();
    if (text == "rec") return OrthMode::three_term();
    if (text.rfind("rec:", 0) == 0) {
        try {
            const int every = std::stoi(text.substr(4));
            if (every >= 1) return OrthMode::three_term(every);
        } catch (const std::exception&) {
        }
        return std::nullopt;
    }
    return std::nullopt;
}

std::string mode_string(const OrthMode& mode) {
    if (mode.kind == OrthMode::Kind::FullGramSchmidt) return "gs";
    if (mode.reorthogonalize_every) return "rec:" + std::to_string(*mode.reorthogonalize_every);
    return "rec";
}

// Inclusive arithmetic grid; midpoint rounding tolerates inexact steps.
std::vector<double> make_grid(double lo, double hi, double step) {
    const int count = static_cast<int>(std::floor((hi - lo) / step + 0.5)) + 1;
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int t = 0; t < count; ++t) {
        const double value = lo + static_cast<double>(t) * step;
        if (value > hi + step * 0.5) break;
        grid.push_back(value);
    }
    return grid;
}

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("KRYLOV2D_THREADS")) {
        const long value = std::strtol(env, nullptr, 10);
        if (value > 0) return static_cast<unsigned>(value);
    }
    return 0;  // run_sweep falls back to hardware concurrency
}

}  // namespace

int cmd_sweep(const SweepArgs& args) {
    std::vector<double> c_values = args.c_list;
    if (c_values.empty()) {
        if (args.c_max < args.c_min)
            return usage_error("sweep needs --c-list or --c-min/--c-max/--c-step");
        if (!(args.c_step > 0.0)) return usage_error("--c-step must be positive");
        c_values = make_grid(args.c_min, args.c_max, args.c_step);
    }
    for (double c : c_values)
        if (!(c >= 0.0)) return usage_error("disorder values must be >= 0");
    if (args.realizations < 1) return usage_error("--realizations must be >= 1");
    if (args.n < 1) return usage_error("--n must be >= 1");
    if (!(args.gamma_min > 0.0) || !(args.gamma_step > 0.0) || args.gamma_max < args.gamma_min)
        return usage_error("gamma grid must satisfy 0 < gamma-min <= gamma-max, gamma-step > 0");
    const std::optional<OrthMode> mode = parse_mode(args.mode);
    if (!mode) return usage_error("unknown --mode '" + args.mode + "' (gs | rec | rec:N)");

    SweepConfig config;
    config.c_values = std::move(c_values);
    config.realizations = args.realizations;
    config.n = args.n;
    config.seed = args.seed;
    config.mode = *mode;
    config.gamma_grid = make_grid(args.gamma_min, args.gamma_max, args.gamma_step);
    config.tail_start = args.tail_start;
    if (config.n + 1 < config.effective_tail_start() + 3)
        return usage_error("series of length n+1 is shorter than tail-start + 3");

    std::vector<EnsembleRecord> records;
    try {
        records = run_sweep(config, resolve_threads(args.threads));
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }

    std::ostringstream sweep_csv;
    sweep_csv << "c,realization,y,L,gamma,sse,breakdown,drift\n";
    for (const EnsembleRecord& record : records) {
        for (std::size_t r = 0; r < record.runs.size(); ++r) {
            const RealizationResult& run = record.runs[r];
            sweep_csv << format_double(record.c) << ',' << r << ',' << format_double(run.y)
                      << ',' << format_double(run.l) << ',' << format_double(run.gamma) << ','
                      << format_double(run.sse) << ',' << (run.breakdown ? 1 : 0) << ','
                      << format_double(run.drift) << '\n';
        }
    }

    std::ostringstream summary_csv;
    summary_csv << "c,min_y,min_L,argmin_y,argmin_L\n";
    for (const EnsembleRecord& record : records) {
        summary_csv << format_double(record.c) << ',' << format_double(record.min_y) << ','
                    << format_double(record.min_l) << ',' << record.argmin_y << ','
                    << record.argmin_l << '\n';
    }

    nlohmann::json config_echo;
    config_echo["c_values"] = config.c_values;
    config_echo["realizations"] = config.realizations;
    config_echo["n"] = config.n;
    config_echo["seed"] = config.seed;
    config_echo["mode"] = mode_string(config.mode);
    config_echo["gamma_grid"] = config.gamma_grid;
    config_echo["tail_start"] = config.effective_tail_start();

    try {
        OutputWriter writer(args.out_dir);
        writer.write_file("sweep.csv", sweep_csv.str());
        writer.write_file("summary.csv", summary_csv.str());
        writer.write_manifest("sweep", config_echo);
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_io;
    }
    return exit_ok;
}

int cmd_energy(const EnergyArgs& args) {
    if (args.c_list.empty()) return usage_error("energy needs --c-list");
    for (double c : args.c_list)
        if (!(c >= 0.0)) return usage_error("disorder values must be >= 0");
    if (args.k < 0) return usage_error("--k must be >= 0");
    const std::optional<OrthMode> mode = parse_mode(args.mode);
    if (!mode) return usage_error("unknown --mode '" + args.mode + "' (gs | rec | rec:N)");

    nlohmann::json config_echo;
    config_echo["c_values"] = args.c_list;
    config_echo["k"] = args.k;
    config_echo["seed"] = args.seed;
    config_echo["realization"] = args.realization;
    config_echo["mode"] = mode_string(*mode);
    nlohmann::json diagnostics = nlohmann::json::object();

    try {
        OutputWriter writer(args.out_dir);
        for (double c : args.c_list) {
            const std::string name = "energy_" + format_compact(c) + ".csv";
            std::optional<ShellProfile> profile;
            try {
                const PotentialField field(c, args.seed, args.realization);
                profile = energy_profile(field, args.k, *mode);
            } catch (const breakdown_error& e) {
                // flagged, not fatal: the remaining disorders still run
                std::fprintf(stderr, "warning: c=%s: %s\n", format_compact(c).c_str(), e.what());
                diagnostics[name] = {{"error", e.what()}};
                continue;
            } catch (const degeneracy_error& e) {
                std::fprintf(stderr, "warning: c=%s: %s\n", format_compact(c).c_str(), e.what());
                diagnostics[name] = {{"error", e.what()}};
                continue;
            }
            std::ostringstream csv;
            csv << "s,energy,cumulative_fraction\n";
            double cumulative = 0.0;
            for (int s = 0; s <= profile->k; ++s) {
                cumulative += profile->shells[static_cast<std::size_t>(s)];
                csv << s << ',' << format_double(profile->shells[static_cast<std::size_t>(s)])
                    << ',' << format_double(cumulative / profile->total) << '\n';
            }
            writer.write_file(name, csv.str());
            diagnostics[name] = {{"drift", profile->drift},
                                 {"scale_log2", profile->scale_log2},
                                 {"total", profile->total}};
        }
        writer.write_manifest("energy", config_echo, diagnostics);
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_io;
    }
    return exit_ok;
}

int cmd_verify(const VerifyArgs& args) {
    if (args.n < 1 || args.n > 30)
        return usage_error("--n must be in [1, 30]; the dense oracle is a small-scale check");
    if (args.c_list.empty()) return usage_error("verify needs at least one disorder value");
    if (args.seeds < 1) return usage_error("--seeds must be >= 1");
    if (!(args.tolerance > 0.0)) return usage_error("--tolerance must be positive");

    double worst = 0.0;
    for (int seed = 1; seed <= args.seeds; ++seed) {
        for (double c : args.c_list) {
            const PotentialField field(c, static_cast<std::uint64_t>(seed), 0);
            const DistanceSeries engine =
                run_krylov(field, args.n, OrthMode::full_gram_schmidt());
            const std::vector<double> dense =
                oracle_distance_series(field, args.n, args.n + 1);
            double max_diff = 0.0;
            for (std::size_t t = 0; t < dense.size(); ++t)
                max_diff =
                    std::max(max_diff, std::abs(engine.terms[t].distance - dense[t]));
            std::printf("c=%-6s seed=%-3d max|engine-oracle| = %.3e\n",
                        format_compact(c).c_str(), seed, max_diff);
            worst = std::max(worst, max_diff);
        }
    }
    std::printf("worst discrepancy %.3e (tolerance %.3e)\n", worst, args.tolerance);
    if (worst <= args.tolerance) return exit_ok;
    std::fprintf(stderr, "error: discrepancy exceeds tolerance\n");
    return exit_discrepancy;
}

}  // namespace krylov2d::cli

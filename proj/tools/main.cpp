#include <CLI11.hpp>

#include "commands.hpp"
#include "krylov2d/version.hpp"

int main(int argc, char** argv) {
    using namespace krylov2d::cli;

    CLI::App app{"Krylov-distance delocalization experiments for the disordered "
                 "Schroedinger operator on the 2D lattice"};
    app.set_version_flag("--version", krylov2d::version);
    app.require_subcommand(1);

    SweepArgs sweep;
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Sweep disorders and realizations; write sweep.csv, summary.csv, manifest.json");
    sweep_cmd->add_option("--c-list", sweep.c_list, "Comma-separated disorder values")
        ->delimiter(',');
    sweep_cmd->add_option("--c-min", sweep.c_min, "Smallest disorder of the range");
    sweep_cmd->add_option("--c-max", sweep.c_max, "Largest disorder of the range");
    sweep_cmd->add_option("--c-step", sweep.c_step, "Range step");
    sweep_cmd->add_option("--realizations", sweep.realizations, "Realizations per disorder");
    sweep_cmd->add_option("--n", sweep.n, "Krylov depth");
    sweep_cmd->add_option("--seed", sweep.seed, "Master seed");
    sweep_cmd->add_option("--mode", sweep.mode, "Orthogonalization: gs | rec | rec:N");
    sweep_cmd->add_option("--gamma-min", sweep.gamma_min, "Smallest rescaling exponent");
    sweep_cmd->add_option("--gamma-max", sweep.gamma_max, "Largest rescaling exponent");
    sweep_cmd->add_option("--gamma-step", sweep.gamma_step, "Exponent grid step");
    sweep_cmd->add_option("--tail-start", sweep.tail_start,
                          "First k used by the fit (-1: n/2)");
    sweep_cmd->add_option("--out-dir", sweep.out_dir, "Output directory");
    sweep_cmd->add_option("--threads", sweep.threads,
                          "Worker threads (0: KRYLOV2D_THREADS env, then hardware)");

    EnergyArgs energy;
    CLI::App* energy_cmd = app.add_subcommand(
        "energy", "Shell-energy profile of the orthogonalized vector m_k per disorder");
    energy_cmd->add_option("--c-list", energy.c_list, "Comma-separated disorder values")
        ->delimiter(',');
    energy_cmd->add_option("--k", energy.k, "Krylov step of the profiled vector")
        ->required();
    energy_cmd->add_option("--seed", energy.seed, "Master seed");
    energy_cmd->add_option("--realization", energy.realization, "Realization index");
    energy_cmd->add_option("--mode", energy.mode, "Orthogonalization: gs | rec | rec:N");
    energy_cmd->add_option("--out-dir", energy.out_dir, "Output directory");

    VerifyArgs verify;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Cross-check the matrix-free engine against the dense oracle");
    verify_cmd->add_option("--n", verify.n, "Krylov depth (at most 30)");
    verify_cmd->add_option("--c-list", verify.c_list, "Comma-separated disorder values")
        ->delimiter(',');
    verify_cmd->add_option("--seeds", verify.seeds, "Number of seeds (1..S)");
    verify_cmd->add_option("--tolerance", verify.tolerance, "Largest allowed discrepancy");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    if (sweep_cmd->parsed()) return cmd_sweep(sweep);
    if (energy_cmd->parsed()) return cmd_energy(energy);
    return cmd_verify(verify);
}

#ifndef KRYLOV2D_TOOLS_COMMANDS_HPP
#define KRYLOV2D_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace krylov2d::cli {

// Exit codes shared by all subcommands: 0 success, 1 verification
// discrepancy, 2 invalid arguments, 3 I/O failure.
inline constexpr int exit_ok = 0;
inline constexpr int exit_discrepancy = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_io = 3;

struct SweepArgs {
    std::vector<double> c_list;  // explicit values; empty -> use the range below
    double c_min = 0.0;
    double c_max = -1.0;  // c_max < c_min means "range not given"
    double c_step = 0.0;
    int realizations = 20;
    int n = 400;
    std::uint64_t seed = 1;
    std::string mode = "rec";
    double gamma_min = 0.10;
    double gamma_max = 2.00;
    double gamma_step = 0.05;
    int tail_start = -1;  // -1: n / 2
    std::string out_dir = "out";
    unsigned threads = 0;  // 0: KRYLOV2D_THREADS env var, then hardware
};

struct EnergyArgs {
    std::vector<double> c_list;
    int k = -1;
    std::uint64_t seed = 1;
    std::uint32_t realization = 0;
    std::string mode = "rec";
    std::string out_dir = "out";
};

struct VerifyArgs {
    int n = 25;
    std::vector<double> c_list = {0.0, 0.5, 2.0};
    int seeds = 5;
    double tolerance = 1e-9;
};

int cmd_sweep(const SweepArgs& args);
int cmd_energy(const EnergyArgs& args);
int cmd_verify(const VerifyArgs& args);

}  // namespace krylov2d::cli

#endif

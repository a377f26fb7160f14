#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "report.hpp"

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
    const std::string command = std::string(KRYLOV2D_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::string> data_rows(const std::string& csv) {
    std::vector<std::string> rows;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line))
        if (!line.empty()) rows.push_back(line);
    return rows;
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::path("cli_test") / name;
    fs::remove_all(dir);
    return dir;
}

void check_manifest(const fs::path& dir) {
    const nlohmann::json manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
    REQUIRE(manifest.contains("files"));
    for (const auto& [name, checksum] : manifest["files"].items())
        CHECK(krylov2d::cli::crc32_hex(slurp(dir / name)) == checksum.get<std::string>());
}

}  // namespace

TEST_CASE("sweep is bit-reproducible and self-describing") {
    const fs::path a = fresh_dir("sweep_a");
    const fs::path b = fresh_dir("sweep_b");
    const std::string flags = "sweep --c-list 0 --realizations 1 --n 50 --seed 1 --out-dir ";
    REQUIRE(run_cli(flags + a.string()) == 0);
    REQUIRE(run_cli(flags + b.string()) == 0);

    const std::string summary = slurp(a / "summary.csv");
    CHECK(summary == slurp(b / "summary.csv"));
    CHECK(slurp(a / "sweep.csv") == slurp(b / "sweep.csv"));

    const std::vector<std::string> rows = data_rows(summary);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].rfind("0,", 0) == 0);

    check_manifest(a);
    const nlohmann::json manifest = nlohmann::json::parse(slurp(a / "manifest.json"));
    CHECK(manifest["command"] == "sweep");
    CHECK(manifest["config"]["n"] == 50);
    CHECK(manifest["config"]["seed"] == 1);
}

TEST_CASE("sweep range flags produce the full grid") {
    const fs::path dir = fresh_dir("sweep_grid");
    REQUIRE(run_cli("sweep --c-min 0.2 --c-max 3.0 --c-step 0.2 --realizations 20 --n 30 "
                    "--seed 2 --out-dir " +
                    dir.string()) == 0);
    CHECK(data_rows(slurp(dir / "summary.csv")).size() == 15);
    CHECK(data_rows(slurp(dir / "sweep.csv")).size() == 300);
    // doubles are written with full round-trip precision
    CHECK(data_rows(slurp(dir / "summary.csv"))[0].rfind("0.20000000000000001,", 0) == 0);
    check_manifest(dir);
}

TEST_CASE("thread count does not change output checksums") {
    const fs::path one = fresh_dir("sweep_t1");
    const fs::path many = fresh_dir("sweep_t8");
    const std::string flags =
        "sweep --c-list 0.5,1.5 --realizations 4 --n 60 --seed 9 ";
    REQUIRE(run_cli(flags + "--threads 1 --out-dir " + one.string()) == 0);
    REQUIRE(run_cli(flags + "--threads 8 --out-dir " + many.string()) == 0);

    const nlohmann::json ma = nlohmann::json::parse(slurp(one / "manifest.json"));
    const nlohmann::json mb = nlohmann::json::parse(slurp(many / "manifest.json"));
    CHECK(ma["files"] == mb["files"]);
    CHECK(slurp(one / "sweep.csv") == slurp(many / "sweep.csv"));
}

TEST_CASE("energy profile files carry shell rows and checksums") {
    const fs::path dir = fresh_dir("energy_small");
    REQUIRE(run_cli("energy --c-list 0 --k 1 --out-dir " + dir.string()) == 0);
    const std::vector<std::string> rows = data_rows(slurp(dir / "energy_0.csv"));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "0,0,0");
    CHECK(rows[1] == "1,4,1");
    check_manifest(dir);

    const fs::path two = fresh_dir("energy_two");
    REQUIRE(run_cli("energy --c-list 0.5,2 --k 20 --seed 3 --out-dir " + two.string()) == 0);
    CHECK(fs::exists(two / "energy_0.5.csv"));
    CHECK(fs::exists(two / "energy_2.csv"));
    CHECK(data_rows(slurp(two / "energy_2.csv")).size() == 21);
    check_manifest(two);
}

TEST_CASE("verify succeeds on a small case") {
    CHECK(run_cli("verify --n 2 --c-list 0 --seeds 1") == 0);
}

TEST_CASE("invalid flags exit with code 2") {
    CHECK(run_cli("energy --k -1 --c-list 0") == 2);
    CHECK(run_cli("energy --c-list 0") == 2);  // --k is required
    CHECK(run_cli("verify --n 40") == 2);
    CHECK(run_cli("verify --n 0") == 2);
    CHECK(run_cli("sweep") == 2);  // no disorder grid at all
    CHECK(run_cli("sweep --c-list 0.5 --n 20 --realizations 1 --mode bogus") == 2);
    CHECK(run_cli("sweep --c-list 0.5 --n 20 --realizations 1 --tail-start 19") == 2);
    CHECK(run_cli("bogus-subcommand") == 2);
    CHECK(run_cli("sweep --c-min 1.0 --c-max 0.5 --c-step 0.1") == 2);
}

TEST_CASE("unwritable output directory exits with code 3") {
    CHECK(run_cli("sweep --c-list 0 --realizations 1 --n 20 --out-dir /dev/null/nested") == 3);
    CHECK(run_cli("energy --c-list 0 --k 1 --out-dir /dev/null/nested") == 3);
}

#include "report.hpp"

#include <zlib.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "krylov2d/version.hpp"

namespace krylov2d::cli {

std::string format_double(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

std::string format_compact(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%g", x);
    return buffer;
}

std::string crc32_hex(std::string_view bytes) {
    uLong crc = ::crc32(0L, Z_NULL, 0);
    crc = ::crc32(crc, reinterpret_cast<const Bytef*>(bytes.data()),
                  static_cast<uInt>(bytes.size()));
    char buffer[16];
    std::snprintf(buffer, sizeof buffer, "%08lx", static_cast<unsigned long>(crc));
    return buffer;
}

OutputWriter::OutputWriter(std::filesystem::path out_dir) : out_dir_(std::move(out_dir)) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir_, ec);
    if (ec)
        throw std::runtime_error("cannot create output directory " + out_dir_.string() + ": " +
                                 ec.message());
}

void OutputWriter::write_file(const std::string& name, std::string_view bytes) {
    const std::filesystem::path path = out_dir_ / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw std::runtime_error("failed to write " + path.string());
    checksums_[name] = crc32_hex(bytes);
}

namespace {

std::string utc_timestamp() {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

}  // namespace

void OutputWriter::write_manifest(const std::string& command, const nlohmann::json& config,
                                  const nlohmann::json& diagnostics) {
    nlohmann::json manifest;
    manifest["artifact"] = "krylov2d";
    manifest["version"] = krylov2d::version;
    manifest["command"] = command;
    manifest["timestamp"] = utc_timestamp();
    manifest["config"] = config;
    if (!diagnostics.empty()) manifest["diagnostics"] = diagnostics;
    manifest["files"] = checksums_;

    const std::filesystem::path path = out_dir_ / "manifest.json";
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << manifest.dump(2) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("failed to write " + path.string());
}

}  // namespace krylov2d::cli

#ifndef KRYLOV2D_TOOLS_REPORT_HPP
#define KRYLOV2D_TOOLS_REPORT_HPP

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

namespace krylov2d::cli {

/// Full round-trip decimal representation (17 significant digits), so CSV
/// bytes, and therefore checksums, are well-defined.
std::string format_double(double x);

/// Compact representation for embedding a disorder value in a file name.
std::string format_compact(double x);

/// CRC-32 of a byte string as 8 lowercase hex digits.
std::string crc32_hex(std::string_view bytes);

/// Collects output files of one command, writes them under out_dir, and
/// finishes with a manifest.json listing every file with its checksum.
class OutputWriter {
public:
    explicit OutputWriter(std::filesystem::path out_dir);

    /// Writes bytes to out_dir/name and records the checksum.
    /// Throws std::runtime_error on I/O failure.
    void write_file(const std::string& name, std::string_view bytes);

    /// Writes manifest.json with the command name, the resolved
    /// configuration echo, and the per-file checksums.
    void write_manifest(const std::string& command, const nlohmann::json& config,
                        const nlohmann::json& diagnostics = nlohmann::json::object());

    const std::map<std::string, std::string>& checksums() const { return checksums_; }

private:
    std::filesystem::path out_dir_;
    std::map<std::string, std::string> checksums_;
};

}  // namespace krylov2d::cli

#endif

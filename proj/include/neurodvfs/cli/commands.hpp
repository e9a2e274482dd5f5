#pragma once

#include "neurodvfs/bench/network_spec.hpp"
#include "neurodvfs/sim/config.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace neurodvfs::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kConfig = 2, kRuntime = 3 };

/// Run config file: {"network": {"benchmark": name, "seed": n} or
/// {"file": path}, "sim": SimConfig}. Relative network files resolve
/// against the config's directory.
struct RunConfig {
    std::string benchmark;             ///< empty when loaded from a file
    std::uint64_t network_seed = 1;
    std::filesystem::path network_file;
    sim::SimConfig sim;
};

RunConfig load_run_config(const std::filesystem::path& path);
RunConfig run_config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
nlohmann::json to_json(const RunConfig& config);
bench::NetworkSpec load_network(const RunConfig& config);

struct ManifestFile {
    std::string name;
    std::uintmax_t bytes = 0;
    std::string fnv1a64;
};

/// Everything needed to replay a command: the resolved config (itself a
/// valid run config), the seeds and the outputs with their hashes.
struct RunManifest {
    std::string command;
    std::string config_path;
    std::string run_id;
    nlohmann::json resolved_config;
    std::string extra; ///< command-specific arguments, e.g. the variant list
    std::uint64_t network_seed = 0;
    std::uint64_t sim_seed = 0;
    std::string output_dir;
    std::vector<ManifestFile> files;
};

nlohmann::json to_json(const RunManifest& manifest);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a64_hex(const std::string& bytes);
std::string file_hash(const std::filesystem::path& path);

/// Entry point of the neurodvfs executable. Returns an ExitCode.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace neurodvfs::cli

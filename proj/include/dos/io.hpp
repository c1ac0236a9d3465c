#pragma once

#include <map>
#include <string>
#include <vector>

#include "dos/matroid.hpp"
#include "dos/types.hpp"

namespace dos {

/// Version string recorded in run manifests.
std::string artifact_version();

/// Numbers in CSV/JSON outputs carry 12 significant digits.
std::string format_number(double x);

// --- JSON wire formats -----------------------------------------------------
// schedule: {"p": ..., "times": [...], "tail_is_one": true}
// instance: {"values": [...], "default_tail": ...}
// matroid:  {"ground_size": n, "parts": [[ids]...], "forbidden": [ids]}

std::string schedule_to_json(const ThresholdSchedule& s);
ThresholdSchedule schedule_from_json(const std::string& text);

std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

UnitaryPartitionMatroid matroid_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Reproducibility sidecar written next to every CLI output. Replaying a
/// manifest re-executes the command with identical parameters and seed.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> params;
    std::uint64_t seed = 0;
    std::string version;
    std::vector<std::string> outputs;

    std::string to_json() const;
    static RunManifest from_json(const std::string& text);
    /// Writes to `<output>.manifest.json`.
    void write_for(const std::string& output_path) const;
};

}  // namespace dos

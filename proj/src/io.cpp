#include "dos/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dos {

using nlohmann::json;

std::string artifact_version() { return "pdos 1.0.0"; }

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string schedule_to_json(const ThresholdSchedule& s) {
    json j;
    j["p"] = s.p();
    j["times"] = s.times();
    j["tail_is_one"] = s.tail_is_one();
    return j.dump(2) + "\n";
}

ThresholdSchedule schedule_from_json(const std::string& text) {
    json j = json::parse(text);
    return ThresholdSchedule(j.at("p").get<double>(), j.at("times").get<std::vector<double>>(),
                             j.value("tail_is_one", true));
}

std::string instance_to_json(const Instance& inst) {
    json j;
    j["values"] = inst.values();
    j["default_tail"] = inst.default_tail();
    return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
    json j = json::parse(text);
    return Instance(j.at("values").get<std::vector<double>>(), j.value("default_tail", 0.0));
}

UnitaryPartitionMatroid matroid_from_json(const std::string& text) {
    json j = json::parse(text);
    return UnitaryPartitionMatroid(j.at("ground_size").get<int>(),
                                   j.at("parts").get<std::vector<std::vector<int>>>(),
                                   j.value("forbidden", std::vector<int>{}));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
}

std::string RunManifest::to_json() const {
    json j;
    j["command"] = command;
    j["params"] = params;
    j["seed"] = seed;
    j["version"] = version;
    j["outputs"] = outputs;
    return j.dump(2) + "\n";
}

RunManifest RunManifest::from_json(const std::string& text) {
    json j = json::parse(text);
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.params = j.at("params").get<std::map<std::string, std::string>>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.version = j.value("version", "");
    m.outputs = j.at("outputs").get<std::vector<std::string>>();
    return m;
}

void RunManifest::write_for(const std::string& output_path) const {
    write_file(output_path + ".manifest.json", to_json());
}

}  // namespace dos

#include "bdprng/report.hpp"

#include <nlohmann/json.hpp>

namespace bdprng {

std::string RunManifest::to_json() const {
    nlohmann::json j;
    j["formatVersion"] = format_version;
    j["command"] = command;
    j["options"] = options;
    if (!seed_config_json.empty())
        j["seedConfig"] = nlohmann::json::parse(seed_config_json);
    if (!output_path.empty()) j["output"] = output_path;
    j["elapsedSeconds"] = elapsed_seconds;
    return j.dump(2);
}

RunManifest RunManifest::from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    RunManifest m;
    m.format_version = j.at("formatVersion").get<int>();
    m.command = j.at("command").get<std::string>();
    if (j.contains("options"))
        m.options = j.at("options").get<std::map<std::string, std::string>>();
    if (j.contains("seedConfig")) m.seed_config_json = j.at("seedConfig").dump();
    if (j.contains("output")) m.output_path = j.at("output").get<std::string>();
    if (j.contains("elapsedSeconds"))
        m.elapsed_seconds = j.at("elapsedSeconds").get<double>();
    return m;
}

}  // namespace bdprng

// Run manifest embedded in every report so results are regenerable from the
// report alone.

#ifndef BDPRNG_REPORT_HPP
#define BDPRNG_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>

namespace bdprng {

struct RunManifest {
    std::string command;                         // subcommand name
    std::map<std::string, std::string> options;  // resolved flag values
    std::string seed_config_json;                // generator seed, when any
    std::string output_path;
    int format_version = 1;
    double elapsed_seconds = 0.0;

    std::string to_json() const;
    static RunManifest from_json(const std::string& text);
};

}  // namespace bdprng

#endif

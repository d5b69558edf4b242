#ifndef ADLAB_RUNNER_RUNNER_HPP
#define ADLAB_RUNNER_RUNNER_HPP

#include <map>
#include <string>

#include <json.hpp>

namespace adlab::runner {

struct RunOutput {
    nlohmann::json result;   // deterministic: same command + seed, same bytes
    std::string summary;     // one line for stdout
    bool aborted = false;    // numeric divergence; artifacts still persisted
};

// Executes one named experiment. `overrides` layer over the command's
// defaults; unknown keys are rejected (ConfigError). When out_dir is
// non-empty the command writes result.json plus its CSV artifacts there,
// and run_meta.json with the wall-clock timestamp kept out of the result.
RunOutput run_command(const std::string& command,
                      const std::map<std::string, std::string>& overrides,
                      const std::string& out_dir);

// Supported command names, for usage messages.
std::string command_list();

} // namespace adlab::runner

#endif

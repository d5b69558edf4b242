// Command-line front end for the adminlab shared library. Flags are
// folded into key=value overrides; flags win over --config file entries.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adminlab.h"

namespace {

struct CommonArgs {
    std::string out_dir;
    std::string config_file;
    std::vector<std::string> sets;
    bool json_stdout = false;
    std::string seed;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--out", args.out_dir, "Directory for result.json and CSV artifacts");
    cmd->add_option("--seed", args.seed, "Run seed (unsigned 64-bit)");
    cmd->add_option("--config", args.config_file,
                    "Plain-text key=value file; command-line flags win");
    cmd->add_option("--set", args.sets, "Extra override as key=value (repeatable)");
    cmd->add_flag("--json", args.json_stdout, "Print the full result JSON on stdout");
}

int parse_kv(const std::string& entry, std::map<std::string, std::string>& into,
             const char* source) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0) {
        std::fprintf(stderr, "adminlab: bad %s entry '%s' (expected key=value)\n", source,
                     entry.c_str());
        return ADMINLAB_STATUS_CONFIG;
    }
    into[entry.substr(0, eq)] = entry.substr(eq + 1);
    return ADMINLAB_OK;
}

int collect_overrides(const CommonArgs& args, std::map<std::string, std::string>& kv) {
    if (!args.config_file.empty()) {
        std::ifstream in(args.config_file);
        if (!in) {
            std::fprintf(stderr, "adminlab: cannot open config file '%s'\n",
                         args.config_file.c_str());
            return ADMINLAB_STATUS_CONFIG;
        }
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            if (int rc = parse_kv(line, kv, "config-file"); rc != ADMINLAB_OK) return rc;
        }
    }
    // Flags (including --set) override the file.
    for (const auto& entry : args.sets)
        if (int rc = parse_kv(entry, kv, "--set"); rc != ADMINLAB_OK) return rc;
    if (!args.seed.empty()) kv["seed"] = args.seed;
    return ADMINLAB_OK;
}

int run(const std::string& command, const CommonArgs& args,
        const std::map<std::string, std::string>& extra) {
    std::map<std::string, std::string> kv;
    if (int rc = collect_overrides(args, kv); rc != ADMINLAB_OK) return rc;
    for (const auto& [k, v] : extra) kv[k] = v;

    std::vector<const char*> keys, values;
    keys.reserve(kv.size());
    values.reserve(kv.size());
    for (const auto& [k, v] : kv) {
        keys.push_back(k.c_str());
        values.push_back(v.c_str());
    }

    adminlab_result* result = nullptr;
    const int rc = adminlab_run(command.c_str(), keys.data(), values.data(), keys.size(),
                                args.out_dir.empty() ? nullptr : args.out_dir.c_str(), &result);
    if (rc != ADMINLAB_OK) {
        std::fprintf(stderr, "adminlab %s: %s\n", command.c_str(), adminlab_last_error());
        adminlab_result_free(result);
        return rc;
    }
    if (args.json_stdout) std::printf("%s\n", adminlab_result_json(result));
    else std::printf("%s\n", adminlab_result_summary(result));
    adminlab_result_free(result);
    return ADMINLAB_OK;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"adminlab: adversarial dependence minimization experiments"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    struct SubSpec {
        CLI::App* cmd;
        CommonArgs args;
        std::map<std::string, std::string> extra;
    };
    std::map<std::string, SubSpec> subs;

    auto make_sub = [&](const char* name, const char* desc) -> SubSpec& {
        SubSpec& spec = subs[name];
        spec.cmd = app.add_subcommand(name, desc);
        add_common(spec.cmd, spec.args);
        return spec;
    };

    {
        SubSpec& s = make_sub("dcorr", "Dependence metrics on a generator or CSV file");
        auto& extra = s.extra;
        s.cmd->add_option_function<std::string>(
            "--gen", [&extra](const std::string& v) { extra["gen"] = v; },
            "Generator: quadratic | pairwise-not-mutual | pica | gaussian");
        s.cmd->add_option_function<std::string>(
            "--input", [&extra](const std::string& v) { extra["input"] = v; },
            "CSV file of samples (rows) × variables (columns)");
        s.cmd->add_option_function<std::string>(
            "--n", [&extra](const std::string& v) { extra["n"] = v; }, "Sample count");
    }
    {
        SubSpec& s = make_sub("pica", "Variance-maximizing reductions on the three-signal benchmark");
        auto& extra = s.extra;
        s.cmd->add_option_function<std::string>(
            "--method", [&extra](const std::string& v) { extra["method"] = v; },
            "pca-svd | pca-covreg | pca-linear-pred | pica-nonlinear | nlpica");
        s.cmd->add_option_function<std::string>(
            "--steps", [&extra](const std::string& v) { extra["steps"] = v; }, "Training steps");
    }
    {
        SubSpec& s = make_sub("converge", "Adversarial game convergence on correlated Gaussians");
        auto& extra = s.extra;
        s.cmd->add_option_function<std::string>(
            "--steps", [&extra](const std::string& v) { extra["steps"] = v; }, "Training steps");
        s.cmd->add_option_function<std::string>(
            "--d", [&extra](const std::string& v) { extra["d"] = v; }, "Embedding width");
    }
    {
        SubSpec& s = make_sub("classify", "Shapes-world classifier with the adversarial regularizer");
        auto& extra = s.extra;
        s.cmd->add_flag_function(
            "--baseline", [&extra](std::int64_t) { extra["admin"] = "false"; },
            "Train without the adversarial term (λ = 0)");
        s.cmd->add_option_function<std::string>(
            "--steps", [&extra](const std::string& v) { extra["steps"] = v; }, "Training steps");
    }
    {
        SubSpec& s = make_sub("ssl", "Label-free two-view training on the shapes world");
        auto& extra = s.extra;
        s.cmd->add_option_function<std::string>(
            "--lambda", [&extra](const std::string& v) { extra["lambda"] = v; },
            "Adversarial weight (0 = invariance-only control)");
        s.cmd->add_option_function<std::string>(
            "--steps", [&extra](const std::string& v) { extra["steps"] = v; }, "Training steps");
    }
    {
        SubSpec& s = make_sub("sweep-margin", "Classification margin sweep");
        auto& extra = s.extra;
        s.cmd->add_option_function<std::string>(
            "--alphas", [&extra](const std::string& v) { extra["alphas"] = v; },
            "Comma-separated ascending margins, starting at 0");
    }
    make_sub("ablate", "Standardized / margin / unconstrained loss comparison");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : ADMINLAB_STATUS_CONFIG;
    }

    for (auto& [name, spec] : subs)
        if (spec.cmd->parsed()) return run(name, spec.args, spec.extra);
    return ADMINLAB_STATUS_CONFIG;
}

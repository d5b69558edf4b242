#include "adminlab.h"

#include <map>
#include <new>
#include <string>

#include "core/error.hpp"
#include "runner/runner.hpp"

namespace {

thread_local std::string g_last_error;

std::string g_commands_cache;

} // namespace

struct adminlab_result {
    std::string json;
    std::string summary;
};

extern "C" {

const char* adminlab_version(void) { return "0.1.0"; }

const char* adminlab_last_error(void) { return g_last_error.c_str(); }

const char* adminlab_commands(void) {
    if (g_commands_cache.empty()) g_commands_cache = adlab::runner::command_list();
    return g_commands_cache.c_str();
}

int adminlab_run(const char* command, const char* const* keys, const char* const* values,
                 size_t n_kv, const char* out_dir, adminlab_result** out) {
    if (out) *out = nullptr;
    if (!command) {
        g_last_error = "command must not be null";
        return ADMINLAB_STATUS_CONFIG;
    }
    try {
        std::map<std::string, std::string> overrides;
        for (size_t i = 0; i < n_kv; ++i) {
            if (!keys || !values || !keys[i] || !values[i])
                throw adlab::ConfigError("null key/value in configuration");
            overrides[keys[i]] = values[i];
        }
        const adlab::runner::RunOutput result =
            adlab::runner::run_command(command, overrides, out_dir ? out_dir : "");
        if (out) {
            auto* handle = new adminlab_result;
            handle->json = result.result.dump(2);
            handle->summary = result.summary;
            *out = handle;
        }
        g_last_error.clear();
        return ADMINLAB_OK;
    } catch (const adlab::NumericError& e) {
        g_last_error = e.what();
        return ADMINLAB_STATUS_NUMERIC;
    } catch (const adlab::ConfigError& e) {
        g_last_error = e.what();
        return ADMINLAB_STATUS_CONFIG;
    } catch (const adlab::IoError& e) {
        g_last_error = e.what();
        return ADMINLAB_STATUS_CONFIG;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return ADMINLAB_STATUS_NUMERIC;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ADMINLAB_STATUS_CONFIG;
    }
}

const char* adminlab_result_json(const adminlab_result* result) {
    return result ? result->json.c_str() : "";
}

const char* adminlab_result_summary(const adminlab_result* result) {
    return result ? result->summary.c_str() : "";
}

void adminlab_result_free(adminlab_result* result) { delete result; }

} // extern "C"

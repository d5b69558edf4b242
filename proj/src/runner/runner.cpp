#include "runner/runner.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "apps/classify.hpp"
#include "apps/converge.hpp"
#include "apps/knn.hpp"
#include "apps/pca.hpp"
#include "apps/pica.hpp"
#include "apps/ssl.hpp"
#include "core/error.hpp"
#include "io/csv.hpp"
#include "metrics/dependence.hpp"
#include "synth/generators.hpp"
#include "synth/shapes.hpp"

namespace adlab::runner {

namespace {

using nlohmann::json;

constexpr int kResultSchemaVersion = 1;

// Effective configuration: command defaults overlaid with user overrides,
// every key echoed into the result verbatim.
class KvConfig {
public:
    KvConfig(const char* command, std::map<std::string, std::string> defaults,
             const std::map<std::string, std::string>& overrides)
        : values_(std::move(defaults)) {
        for (const auto& [key, value] : overrides) {
            const auto it = values_.find(key);
            if (it == values_.end())
                throw ConfigError(std::string(command) + ": unknown config key '" + key + "'");
            it->second = value;
        }
    }

    const std::string& str(const std::string& key) const { return values_.at(key); }

    double num(const std::string& key) const {
        const std::string& s = values_.at(key);
        try {
            std::size_t pos = 0;
            const double v = std::stod(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw ConfigError("config key '" + key + "': expected a number, got '" + s + "'");
        }
    }

    std::size_t count(const std::string& key) const {
        const double v = num(key);
        if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v)))
            throw ConfigError("config key '" + key + "': expected a non-negative integer");
        return static_cast<std::size_t>(v);
    }

    std::uint64_t u64(const std::string& key) const {
        const std::string& s = values_.at(key);
        try {
            std::size_t pos = 0;
            const std::uint64_t v = std::stoull(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw ConfigError("config key '" + key + "': expected an unsigned integer, got '" +
                              s + "'");
        }
    }

    bool flag(const std::string& key) const {
        const std::string& s = values_.at(key);
        if (s == "true" || s == "1" || s == "yes") return true;
        if (s == "false" || s == "0" || s == "no") return false;
        throw ConfigError("config key '" + key + "': expected a boolean, got '" + s + "'");
    }

    std::vector<double> num_list(const std::string& key) const {
        const std::string& s = values_.at(key);
        std::vector<double> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                out.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw ConfigError("config key '" + key + "': bad list entry '" + item + "'");
            }
        }
        if (out.empty()) throw ConfigError("config key '" + key + "': empty list");
        return out;
    }

    json echo() const {
        json j = json::object();
        for (const auto& [key, value] : values_) j[key] = value;
        return j;
    }

private:
    std::map<std::string, std::string> values_;
};

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (double v : m.row(r)) row.push_back(v);
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_text(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << body;
}

void write_runlog_csv(const std::filesystem::path& path, const game::RunLog& log) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    log.write_csv(out);
}

void write_scatter_csv(const std::filesystem::path& path, const Matrix& scatter) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(scatter.rows());
    for (std::size_t r = 0; r < scatter.rows(); ++r) {
        std::vector<std::string> row;
        for (double v : scatter.row(r)) row.push_back(io::format_double(v));
        rows.push_back(std::move(row));
    }
    io::write_csv(path.string(), {"z1", "z2", "v1", "v2"}, rows);
}

struct CommandContext {
    std::filesystem::path out_dir;
    bool has_out = false;
    std::vector<std::string> files_written;

    void write_file(const std::string& name, const std::function<void(const std::filesystem::path&)>& fn) {
        if (!has_out) return;
        fn(out_dir / name);
        files_written.push_back(name);
    }
};

json corr_summary_json(const metrics::CorrSummary& s) {
    return {{"mean_abs_offdiag_pearson", s.mean_abs_offdiag_pearson},
            {"mean_sq_dcorr", s.mean_sq_dcorr},
            {"per_dim_dcorr", s.per_dim_dcorr},
            {"degenerate_columns", s.degenerate_columns}};
}

// ---- dcorr ---------------------------------------------------------------

RunOutput cmd_dcorr(const std::map<std::string, std::string>& overrides) {
    KvConfig cfg("dcorr",
                 {{"gen", "quadratic"},
                  {"input", ""},
                  {"n", "4096"},
                  {"a", "1.0"},
                  {"dim", "4"},
                  {"seed", "1"}},
                 overrides);

    Matrix data;
    if (!cfg.str("input").empty()) {
        data = io::read_csv_matrix(cfg.str("input"));
        if (data.rows() < 4) throw ConfigError("dcorr: need at least 4 rows");
        if (data.cols() < 2) throw ConfigError("dcorr: need at least 2 columns");
    } else {
        const std::string gen = cfg.str("gen");
        const std::size_t n = cfg.count("n");
        const std::uint64_t seed = cfg.u64("seed");
        if (gen == "quadratic") data = synth::gen_quadratic_pair(n, cfg.num("a"), seed);
        else if (gen == "pairwise-not-mutual") data = synth::gen_pairwise_not_mutual(n, seed);
        else if (gen == "pica") data = synth::gen_pica_observations(n, seed).second;
        else if (gen == "gaussian") data = synth::gen_correlated_gaussian(n, cfg.count("dim"), seed);
        else throw ConfigError("dcorr: unknown generator '" + gen + "'");
    }
    if (data.rows() > 8192)
        throw ConfigError("dcorr: supported range is n <= 8192 (O(n^2) kernels)");

    const metrics::CorrSummary summary = metrics::corr_summary(data);
    const Matrix rho = metrics::pearson_matrix(data);
    const Matrix dc = metrics::dcorr_matrix(data);

    json metrics_json = corr_summary_json(summary);
    metrics_json["pearson_matrix"] = matrix_json(rho);
    metrics_json["dcorr_matrix"] = matrix_json(dc);
    metrics_json["n"] = data.rows();
    metrics_json["d"] = data.cols();
    if (data.cols() == 2) metrics_json["dcorr"] = dc(0, 1);

    std::ostringstream sum;
    sum << "dcorr: n=" << data.rows() << " d=" << data.cols()
        << " mean|pearson|=" << io::format_double(summary.mean_abs_offdiag_pearson)
        << " mean_sq_dcorr=" << io::format_double(summary.mean_sq_dcorr);
    if (data.cols() == 2) sum << " dcorr=" << io::format_double(dc(0, 1));

    RunOutput out;
    out.result = json{{"schema_version", kResultSchemaVersion},
                      {"command", "dcorr"},
                      {"config", cfg.echo()},
                      {"metrics", metrics_json}};
    out.summary = sum.str();
    return out;
}

// ---- pica ----------------------------------------------------------------

RunOutput cmd_pica(const std::map<std::string, std::string>& overrides, CommandContext& ctx) {
    KvConfig cfg("pica",
                 {{"method", "pica-nonlinear"},
                  {"steps", "5000"},
                  {"batch", "512"},
                  {"k", "16"},
                  {"encoder_lr", "0.005"},
                  {"predictor_lr", "0.02"},
                  {"lambda", "1.0"},
                  {"recon_coef", "0.02"},
                  {"bank_hidden", "32"},
                  {"nlpica_hidden", "64"},
                  {"eval_n", "100000"},
                  {"dcorr_n", "4096"},
                  {"scatter_n", "2000"},
                  {"seed", "7"}},
                 overrides);

    apps::PicaConfig pc;
    pc.method = apps::pica_method_from_string(cfg.str("method"));
    pc.steps = cfg.count("steps");
    pc.batch = cfg.count("batch");
    pc.k = cfg.count("k");
    pc.encoder_lr = cfg.num("encoder_lr");
    pc.predictor_lr = cfg.num("predictor_lr");
    pc.lambda = cfg.num("lambda");
    pc.recon_coef = cfg.num("recon_coef");
    pc.bank_hidden = cfg.count("bank_hidden");
    pc.nlpica_hidden = cfg.count("nlpica_hidden");
    pc.eval_n = cfg.count("eval_n");
    pc.dcorr_n = cfg.count("dcorr_n");
    pc.scatter_n = cfg.count("scatter_n");
    pc.seed = cfg.u64("seed");

    const apps::PicaReport report = apps::run_pica(pc);

    json metrics_json = {{"method", report.method},
                         {"explained_variance", report.explained_variance},
                         {"reconstruction_mse", report.reconstruction_mse},
                         {"dcorr_z1_z2", report.dcorr_z1_z2},
                         {"aborted", report.aborted}};
    if (!report.w_abs_normalized.empty())
        metrics_json["w_abs_normalized"] = matrix_json(report.w_abs_normalized);
    if (!report.log.steps.empty()) metrics_json["run"] = report.log.summary_json();

    ctx.write_file("scatter.csv",
                   [&](const std::filesystem::path& p) { write_scatter_csv(p, report.scatter); });
    if (!report.log.steps.empty())
        ctx.write_file("runlog.csv",
                       [&](const std::filesystem::path& p) { write_runlog_csv(p, report.log); });

    std::ostringstream sum;
    sum << "pica[" << report.method << "]: ev=" << io::format_double(report.explained_variance)
        << " recon_mse=" << io::format_double(report.reconstruction_mse)
        << " dcorr(z1,z2)=" << io::format_double(report.dcorr_z1_z2)
        << (report.aborted ? " ABORTED" : "");

    RunOutput out;
    out.result = json{{"schema_version", kResultSchemaVersion},
                      {"command", "pica"},
                      {"config", cfg.echo()},
                      {"metrics", metrics_json}};
    out.summary = sum.str();
    out.aborted = report.aborted;
    return out;
}

// ---- converge --------------------------------------------------------------

RunOutput cmd_converge(const std::map<std::string, std::string>& overrides, CommandContext& ctx) {
    KvConfig cfg("converge",
                 {{"steps", "5000"},
                  {"d", "4"},
                  {"input_dim", "8"},
                  {"hidden", "32"},
                  {"bank_hidden", "32"},
                  {"batch", "256"},
                  {"k", "4"},
                  {"lambda", "1.0"},
                  {"encoder_lr", "0.001"},
                  {"predictor_lr", "0.01"},
                  {"dcorr_interval", "1000"},
                  {"eval_n", "4096"},
                  {"seed", "1"}},
                 overrides);

    apps::ConvergeConfig cc;
    cc.steps = cfg.count("steps");
    cc.embed_dim = cfg.count("d");
    cc.input_dim = cfg.count("input_dim");
    cc.hidden = cfg.count("hidden");
    cc.bank_hidden = cfg.count("bank_hidden");
    cc.batch = cfg.count("batch");
    cc.k = cfg.count("k");
    cc.lambda = cfg.num("lambda");
    cc.encoder_lr = cfg.num("encoder_lr");
    cc.predictor_lr = cfg.num("predictor_lr");
    cc.dcorr_interval = cfg.count("dcorr_interval");
    cc.eval_n = cfg.count("eval_n");
    cc.seed = cfg.u64("seed");

    const apps::ConvergeOutcome o = apps::run_convergence(cc);

    json metrics_json = {{"final_predictor_mse", o.log.final_predictor_mse},
                         {"mean_abs_pearson", o.log.terminal.mean_abs_offdiag_pearson},
                         {"mean_sq_dcorr_start", o.log.initial_mean_sq_dcorr},
                         {"mean_sq_dcorr_end", o.log.terminal.mean_sq_dcorr},
                         {"final_mean_norm", o.log.final_mean_norm},
                         {"run", o.log.summary_json()},
                         {"aborted", o.aborted}};

    ctx.write_file("runlog.csv",
                   [&](const std::filesystem::path& p) { write_runlog_csv(p, o.log); });

    std::ostringstream sum;
    sum << "converge: final_predictor_mse=" << io::format_double(o.log.final_predictor_mse)
        << " mean|pearson|=" << io::format_double(o.log.terminal.mean_abs_offdiag_pearson)
        << " mean_sq_dcorr " << io::format_double(o.log.initial_mean_sq_dcorr) << " -> "
        << io::format_double(o.log.terminal.mean_sq_dcorr) << (o.aborted ? " ABORTED" : "");

    RunOutput out;
    out.result = json{{"schema_version", kResultSchemaVersion},
                      {"command", "converge"},
                      {"config", cfg.echo()},
                      {"metrics", metrics_json}};
    out.summary = sum.str();
    out.aborted = o.aborted;
    return out;
}

// ---- classify / sweep-margin / ablate --------------------------------------

std::map<std::string, std::string> classify_defaults() {
    return {{"admin", "true"},   {"formulation", "margin"}, {"distance", "l1"},
            {"alpha", "0.4"},    {"lambda", "5.0"},         {"k", "1"},
            {"bank_hidden", "32"}, {"steps", "3000"},       {"batch", "256"},
            {"n_per_class", "2000"}, {"sigma", "0.1"},      {"intensity", "0.3"},
            {"m", "16"},
            {"d", "16"},         {"hidden", "64"},          {"encoder_lr", "0.02"},
            {"predictor_lr", "0.06"}, {"predictor_opt", "sgd_momentum"}, {"momentum", "0.9"},
            {"weight_decay", "0.0001"},
            {"warmup", "100"},   {"knn_k", "20"},           {"seed", "1"}};
}

apps::ClassifyConfig classify_config_from(const KvConfig& cfg) {
    apps::ClassifyConfig cc;
    cc.use_admin = cfg.flag("admin");
    cc.formulation = game::formulation_from_string(cfg.str("formulation"));
    cc.distance = game::distance_from_string(cfg.str("distance"));
    cc.alpha = cfg.num("alpha");
    cc.lambda = cfg.num("lambda");
    cc.k = cfg.count("k");
    cc.bank_hidden = cfg.count("bank_hidden");
    cc.steps = cfg.count("steps");
    cc.batch = cfg.count("batch");
    cc.n_per_class = cfg.count("n_per_class");
    cc.noise_sigma = cfg.num("sigma");
    cc.intensity = cfg.num("intensity");
    cc.feature_dim = cfg.count("m");
    cc.embed_dim = cfg.count("d");
    cc.hidden = cfg.count("hidden");
    cc.encoder_lr = cfg.num("encoder_lr");
    cc.predictor_lr = cfg.num("predictor_lr");
    cc.predictor_opt = nn::optimizer_from_string(cfg.str("predictor_opt"));
    cc.momentum = cfg.num("momentum");
    cc.weight_decay = cfg.num("weight_decay");
    cc.warmup = cfg.count("warmup");
    cc.knn_k = cfg.count("knn_k");
    cc.seed = cfg.u64("seed");
    return cc;
}

json classify_metrics_json(const apps::ClassifyOutcome& o) {
    return {{"train_accuracy", o.train_accuracy},
            {"shape_knn", o.shape_knn},
            {"color_knn", o.color_knn},
            {"heldout_as_class0", o.heldout_as_class0},
            {"mean_sq_dcorr", o.mean_sq_dcorr},
            {"final_mean_norm", o.final_mean_norm},
            {"aborted", o.aborted}};
}

RunOutput cmd_classify(const std::map<std::string, std::string>& overrides, CommandContext& ctx) {
    KvConfig cfg("classify", classify_defaults(), overrides);
    const apps::ClassifyOutcome o = apps::train_classifier(classify_config_from(cfg));

    json metrics_json = classify_metrics_json(o);
    metrics_json["run"] = o.log.summary_json();
    ctx.write_file("runlog.csv",
                   [&](const std::filesystem::path& p) { write_runlog_csv(p, o.log); });

    std::ostringstream sum;
    sum << "classify[" << (cfg.flag("admin") ? "admin" : "baseline")
        << "]: train_acc=" << io::format_double(o.train_accuracy)
        << " shape_knn=" << io::format_double(o.shape_knn)
        << " color_knn=" << io::format_double(o.color_knn)
        << " mean_sq_dcorr=" << io::format_double(o.mean_sq_dcorr) << (o.aborted ? " ABORTED" : "");

    RunOutput out;
    out.result = json{{"schema_version", kResultSchemaVersion},
                      {"command", "classify"},
                      {"config", cfg.echo()},
                      {"metrics", metrics_json}};
    out.summary = sum.str();
    out.aborted = o.aborted;
    return out;
}

std::size_t sweep_threads() {
    if (const char* env = std::getenv("ADMIN_LAB_THREADS")) {
        const long v = std::atol(env);
        if (v >= 1) return static_cast<std::size_t>(v);
    }
    return 2;
}

RunOutput cmd_sweep_margin(const std::map<std::string, std::string>& overrides,
                           CommandContext& ctx) {
    auto defaults = classify_defaults();
    defaults["alphas"] = "0,0.1,0.2,0.4,0.8,1.6";
    KvConfig cfg("sweep-margin", defaults, overrides);
    std::vector<double> alphas = cfg.num_list("alphas");
    for (std::size_t i = 1; i < alphas.size(); ++i)
        if (alphas[i] <= alphas[i - 1])
            throw ConfigError("sweep-margin: alphas must be strictly ascending");

    const auto rows = apps::sweep_margin(alphas, classify_config_from(cfg), sweep_threads());

    json rows_json = json::array();
    std::vector<std::vector<std::string>> csv_rows;
    for (const auto& row : rows) {
        rows_json.push_back({{"alpha", row.alpha},
                             {"secondary_accuracy", row.secondary_accuracy},
                             {"mean_sq_dcorr", row.mean_sq_dcorr},
                             {"aborted", row.aborted}});
        csv_rows.push_back({io::format_double(row.alpha),
                            io::format_double(row.secondary_accuracy),
                            io::format_double(row.mean_sq_dcorr)});
    }
    ctx.write_file("table.csv", [&](const std::filesystem::path& p) {
        io::write_csv(p.string(), {"alpha", "secondary_accuracy", "mean_sq_dcorr"}, csv_rows);
    });

    std::ostringstream sum;
    sum << "sweep-margin: " << rows.size() << " runs;";
    for (const auto& row : rows)
        sum << " a=" << io::format_double(row.alpha) << ":"
            << io::format_double(row.secondary_accuracy);

    RunOutput out;
    out.result = json{{"schema_version", kResultSchemaVersion},
                      {"command", "sweep-margin"},
                      {"config", cfg.echo()},
                      {"metrics", json{{"rows", rows_json}}}};
    out.summary = sum.str();
    return out;
}

RunOutput cmd_ablate(const std::map<std::string, std::string>& overrides, CommandContext& ctx) {
    KvConfig cfg("ablate", classify_defaults(), overrides);
    const auto rows = apps::ablate_formulations(classify_config_from(cfg));

    json rows_json = json::array();
    std::vector<std::vector<std::string>> csv_rows;
    for (const auto& row : rows) {
        rows_json.push_back({{"name", row.name},
                             {"shape_knn", row.shape_knn},
                             {"color_knn", row.color_knn},
                             {"mean_sq_dcorr", row.mean_sq_dcorr},
                             {"final_mean_norm", row.final_mean_norm},
                             {"aborted", row.aborted}});
        csv_rows.push_back({row.name, io::format_double(row.shape_knn),
                            io::format_double(row.color_knn),
                            io::format_double(row.mean_sq_dcorr),
                            io::format_double(row.final_mean_norm)});
    }
    ctx.write_file("table.csv", [&](const std::filesystem::path& p) {
        io::write_csv(p.string(),
                      {"formulation", "shape_knn", "color_knn", "mean_sq_dcorr", "final_mean_norm"},
                      csv_rows);
    });

    std::ostringstream sum;
    sum << "ablate:";
    for (const auto& row : rows)
        sum << " " << row.name << "(R2=" << io::format_double(row.mean_sq_dcorr)
            << ",norm=" << io::format_double(row.final_mean_norm) << ")";

    RunOutput out;
    out.result = json{{"schema_version", kResultSchemaVersion},
                      {"command", "ablate"},
                      {"config", cfg.echo()},
                      {"metrics", json{{"rows", rows_json}}}};
    out.summary = sum.str();
    return out;
}

// ---- ssl -------------------------------------------------------------------

RunOutput cmd_ssl(const std::map<std::string, std::string>& overrides, CommandContext& ctx) {
    KvConfig cfg("ssl",
                 {{"formulation", "standardized"},
                  {"distance", "l2_squared"},
                  {"alpha", "0.4"},
                  {"lambda", "5.0"},
                  {"k", "1"},
                  {"bank_hidden", "32"},
                  {"steps", "2000"},
                  {"batch", "256"},
                  {"n_per_class", "2000"},
                  {"sigma", "0.1"},
                  {"intensity", "0.3"},
                  {"m", "16"},
                  {"d", "16"},
                  {"hidden", "64"},
                  {"encoder_lr", "0.02"},
                  {"predictor_lr", "0.06"},
                  {"momentum", "0.9"},
                  {"weight_decay", "0.0001"},
                  {"warmup", "100"},
                  {"knn_k", "20"},
                  {"seed", "1"}},
                 overrides);

    apps::SslConfig sc;
    sc.formulation = game::formulation_from_string(cfg.str("formulation"));
    sc.distance = game::distance_from_string(cfg.str("distance"));
    sc.alpha = cfg.num("alpha");
    sc.lambda = cfg.num("lambda");
    sc.k = cfg.count("k");
    sc.bank_hidden = cfg.count("bank_hidden");
    sc.steps = cfg.count("steps");
    sc.batch = cfg.count("batch");
    sc.n_per_class = cfg.count("n_per_class");
    sc.noise_sigma = cfg.num("sigma");
    sc.intensity = cfg.num("intensity");
    sc.feature_dim = cfg.count("m");
    sc.embed_dim = cfg.count("d");
    sc.hidden = cfg.count("hidden");
    sc.encoder_lr = cfg.num("encoder_lr");
    sc.predictor_lr = cfg.num("predictor_lr");
    sc.momentum = cfg.num("momentum");
    sc.weight_decay = cfg.num("weight_decay");
    sc.warmup = cfg.count("warmup");
    sc.knn_k = cfg.count("knn_k");
    sc.seed = cfg.u64("seed");

    const apps::SslOutcome o = apps::train_ssl_toy(sc);

    json metrics_json = {{"shape_knn", o.shape_knn},
                         {"color_knn", o.color_knn},
                         {"mean_sq_dcorr", o.mean_sq_dcorr},
                         {"run", o.log.summary_json()},
                         {"aborted", o.aborted}};
    ctx.write_file("runlog.csv",
                   [&](const std::filesystem::path& p) { write_runlog_csv(p, o.log); });

    std::ostringstream sum;
    sum << "ssl: shape_knn=" << io::format_double(o.shape_knn)
        << " color_knn=" << io::format_double(o.color_knn)
        << " mean_sq_dcorr=" << io::format_double(o.mean_sq_dcorr) << (o.aborted ? " ABORTED" : "");

    RunOutput out;
    out.result = json{{"schema_version", kResultSchemaVersion},
                      {"command", "ssl"},
                      {"config", cfg.echo()},
                      {"metrics", metrics_json}};
    out.summary = sum.str();
    out.aborted = o.aborted;
    return out;
}

} // namespace

std::string command_list() {
    return "dcorr, pica, converge, classify, ssl, sweep-margin, ablate";
}

RunOutput run_command(const std::string& command,
                      const std::map<std::string, std::string>& overrides,
                      const std::string& out_dir) {
    CommandContext ctx;
    if (!out_dir.empty()) {
        ctx.out_dir = out_dir;
        ctx.has_out = true;
        std::error_code ec;
        std::filesystem::create_directories(ctx.out_dir, ec);
        if (ec) throw IoError("cannot create output directory " + out_dir + ": " + ec.message());
    }

    const auto started = std::chrono::system_clock::now();

    RunOutput out;
    auto persist = [&](const RunOutput& result) {
        if (!ctx.has_out) return;
        write_text(ctx.out_dir / "result.json", result.result.dump(2) + "\n");
        // Wall-clock metadata stays out of result.json so reruns stay
        // byte-identical.
        const auto finished = std::chrono::system_clock::now();
        nlohmann::json meta = {
            {"command", command},
            {"started_unix_ms",
             std::chrono::duration_cast<std::chrono::milliseconds>(started.time_since_epoch())
                 .count()},
            {"duration_ms",
             std::chrono::duration_cast<std::chrono::milliseconds>(finished - started).count()},
            {"files", ctx.files_written},
        };
        write_text(ctx.out_dir / "run_meta.json", meta.dump(2) + "\n");
    };

    if (command == "dcorr") out = cmd_dcorr(overrides);
    else if (command == "pica") out = cmd_pica(overrides, ctx);
    else if (command == "converge") out = cmd_converge(overrides, ctx);
    else if (command == "classify") out = cmd_classify(overrides, ctx);
    else if (command == "ssl") out = cmd_ssl(overrides, ctx);
    else if (command == "sweep-margin") out = cmd_sweep_margin(overrides, ctx);
    else if (command == "ablate") out = cmd_ablate(overrides, ctx);
    else throw ConfigError("unknown command '" + command + "'; available: " + command_list());

    out.result["files"] = ctx.files_written;
    persist(out);
    if (out.aborted) throw NumericError(out.summary);
    return out;
}

} // namespace adlab::runner

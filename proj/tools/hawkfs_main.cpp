// hawkfs command line: dataset preparation, centralized/distributed wrapper
// runs, report comparison, and synthetic benchmark generation.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "hawkfs/config.hpp"
#include "hawkfs/distributed.hpp"
#include "hawkfs/exec.hpp"
#include "hawkfs/io.hpp"
#include "hawkfs/report_io.hpp"
#include "hawkfs/synthetic.hpp"
#include "hawkfs/wrapper.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliOverrides {
    std::string config_path;
    std::string scheme;
    std::string profile;
    std::string out_dir;
    std::string prepared_dir;
    std::string data_path;
    std::string label_column;
    std::string classifier;
    std::string dataset_name;
    int clients = -1;
    int runs = -1;
    int population = -1;
    int iterations = -1;
    long long seed = -1;
    long long subsample = -1;
};

void add_common_options(CLI::App* cmd, CliOverrides& o) {
    cmd->add_option("--config", o.config_path, "JSON run configuration")
        ->check(CLI::ExistingFile);
    cmd->add_option("--scheme", o.scheme, "centralized or distributed");
    cmd->add_option("--clients", o.clients, "number of distributed clients");
    cmd->add_option("--runs", o.runs, "number of independent runs");
    cmd->add_option("--population", o.population, "optimizer population size");
    cmd->add_option("--iterations", o.iterations, "optimizer iterations");
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--out", o.out_dir, "output directory");
    cmd->add_option("--profile", o.profile, "parameter profile: paper or desk");
    cmd->add_option("--classifier", o.classifier, "rwn or knn");
    cmd->add_option("--data", o.data_path, "labelled CSV input");
    cmd->add_option("--label", o.label_column, "label column name or zero-based index");
    cmd->add_option("--prepared", o.prepared_dir, "directory holding prepared artifacts");
    cmd->add_option("--name", o.dataset_name, "dataset id used in reports");
    cmd->add_option("--subsample", o.subsample, "stratified row cap (0 = off)");
}

hawkfs::RunConfig resolve_config(const CliOverrides& o) {
    hawkfs::RunConfig c;
    if (!o.config_path.empty()) c = hawkfs::config_from_json(hawkfs::io::read_json(o.config_path));
    if (!o.profile.empty()) hawkfs::apply_profile(c, o.profile);
    if (!o.scheme.empty()) c.scheme = o.scheme;
    if (o.clients >= 0) c.n_clients = o.clients;
    if (o.runs >= 0) c.n_runs = o.runs;
    if (o.population >= 0) c.hho.population_size = o.population;
    if (o.iterations >= 0) c.hho.max_iterations = o.iterations;
    if (o.seed >= 0) c.master_seed = static_cast<std::uint64_t>(o.seed);
    if (!o.out_dir.empty()) c.output_dir = o.out_dir;
    if (!o.prepared_dir.empty()) c.prepared_dir = o.prepared_dir;
    if (!o.data_path.empty()) c.data_path = o.data_path;
    if (!o.label_column.empty()) c.label_column = o.label_column;
    if (!o.classifier.empty()) c.classifier = o.classifier;
    if (!o.dataset_name.empty()) c.dataset_name = o.dataset_name;
    if (o.subsample >= 0) c.subsample_cap = static_cast<std::size_t>(o.subsample);
    c.validate();
    return c;
}

// Label column may be a header name or a zero-based index.
hawkfs::Dataset load_labelled(const std::string& path, const std::string& label) {
    if (!label.empty() && label.find_first_not_of("0123456789") == std::string::npos) {
        // still prefer an exact header match over an index reading
        try {
            return hawkfs::load_csv(path, label);
        } catch (const std::invalid_argument&) {
            return hawkfs::load_csv(path, std::stoi(label));
        }
    }
    return hawkfs::load_csv(path, label);
}

int cmd_prepare(const CliOverrides& o) {
    const hawkfs::RunConfig config = resolve_config(o);
    if (config.data_path.empty() && config.sources.empty()) {
        throw std::invalid_argument("prepare: no input given (use --data or config sources)");
    }

    hawkfs::Dataset data = config.sources.empty()
                               ? load_labelled(config.data_path, config.label_column)
                               : hawkfs::integrate(config.sources);
    const auto loaded_rows = data.n_samples();
    if (config.subsample_cap > 0) {
        data = hawkfs::subsample_stratified(data, config.subsample_cap,
                                            hawkfs::derive_seed(config.master_seed, 0x5ca1e));
    }

    hawkfs::SplitSpec spec = config.split;
    spec.seed = config.master_seed;
    const hawkfs::Splits raw = hawkfs::split(data, spec);

    const hawkfs::NormalizationParams norm = hawkfs::fit_normalizer(raw.train);
    const hawkfs::Splits splits{hawkfs::apply_normalizer(raw.train, norm),
                                hawkfs::apply_normalizer(raw.validation, norm),
                                hawkfs::apply_normalizer(raw.test, norm)};

    const fs::path out(config.output_dir);
    hawkfs::io::write_dataset_csv(splits.train, (out / "train.csv").string());
    hawkfs::io::write_dataset_csv(splits.validation, (out / "validation.csv").string());
    hawkfs::io::write_dataset_csv(splits.test, (out / "test.csv").string());
    hawkfs::io::write_json(hawkfs::io::normalization_to_json(norm),
                           (out / "normalization.json").string());

    json manifest;
    manifest["schema"] = "hawkfs-prepared-v1";
    manifest["dataset"] = hawkfs::dataset_summary(data, config.resolved_dataset_name());
    manifest["dataset"]["loaded_rows"] = loaded_rows;
    manifest["feature_names"] = data.feature_names;
    manifest["class_names"] = data.class_names;
    manifest["rows"] = {{"train", splits.train.n_samples()},
                        {"validation", splits.validation.n_samples()},
                        {"test", splits.test.n_samples()}};
    manifest["config"] = hawkfs::config_to_json(config);
    hawkfs::io::write_json(manifest, (out / "prepared.json").string());

    std::printf("prepared %s: %lld train / %lld validation / %lld test rows, %lld features\n",
                config.resolved_dataset_name().c_str(),
                static_cast<long long>(splits.train.n_samples()),
                static_cast<long long>(splits.validation.n_samples()),
                static_cast<long long>(splits.test.n_samples()),
                static_cast<long long>(splits.train.n_features()));
    return 0;
}

hawkfs::Splits load_prepared(const std::string& dir, std::string& dataset_id, json& dataset_block) {
    const fs::path base(dir);
    const json manifest = hawkfs::io::read_json((base / "prepared.json").string());
    dataset_id = manifest.at("dataset").at("id").get<std::string>();
    dataset_block = manifest.at("dataset");
    const hawkfs::LabelRegistry registry = manifest.at("class_names").get<std::vector<std::string>>();

    hawkfs::Splits splits{
        hawkfs::load_csv((base / "train.csv").string(), "label", registry),
        hawkfs::load_csv((base / "validation.csv").string(), "label", registry),
        hawkfs::load_csv((base / "test.csv").string(), "label", registry)};
    return splits;
}

int cmd_run(const CliOverrides& o) {
    const hawkfs::RunConfig config = resolve_config(o);

    std::string dataset_id;
    json dataset_block;
    hawkfs::Splits splits = load_prepared(config.resolved_prepared_dir(), dataset_id, dataset_block);

    hawkfs::WrapperSettings ws;
    ws.hho = config.hho;
    ws.weights = config.weights;
    ws.neuron_bits = config.neuron_bits;
    ws.classifier = config.classifier;
    ws.knn_k = config.knn_k;

    const fs::path out(config.output_dir);
    fs::create_directories(out);

    json report;
    report["schema"] = "hawkfs-report-v1";
    report["scheme"] = config.scheme;
    report["dataset"] = dataset_block;
    report["config"] = hawkfs::config_to_json(config);

    json freq;
    if (config.scheme == "centralized") {
        const hawkfs::AggregateReport agg =
            hawkfs::repeat_runs(config.n_runs, splits, ws, config.master_seed);
        json runs = json::array();
        for (std::size_t i = 0; i < agg.runs.size(); ++i) {
            const std::string curve_name = "run_" + std::to_string(i) + ".csv";
            hawkfs::io::write_convergence_csv(agg.runs[i].curve, (out / curve_name).string());
            json entry = hawkfs::search_result_to_json(agg.runs[i]);
            entry["convergence_csv"] = curve_name;
            runs.push_back(std::move(entry));
        }
        report["runs"] = std::move(runs);
        report["aggregate"] = hawkfs::aggregate_to_json(agg);
        for (std::size_t j = 0; j < agg.selection_frequency.size(); ++j) {
            freq[splits.train.feature_names[j]] = agg.selection_frequency[j];
        }
        std::printf("centralized %s (%d runs): mean F-measure %.4f, mean accuracy %.4f\n",
                    dataset_id.c_str(), config.n_runs, agg.f_measure.mean, agg.accuracy.mean);
    } else {
        hawkfs::DistributedSettings ds;
        ds.wrapper = ws;
        ds.n_clients = config.n_clients;
        ds.local_train_fraction = 1.0 - config.split.validation_fraction_of_train;
        hawkfs::DistributedReport rep = hawkfs::run_distributed(splits, ds, config.master_seed);
        rep.dataset_id = dataset_id;
        for (const auto& client : rep.per_client) {
            hawkfs::io::write_convergence_csv(
                client.result.curve,
                (out / ("client_" + std::to_string(client.client_id) + ".csv")).string());
        }
        json dist = hawkfs::distributed_to_json(rep);
        report.update(dist);
        std::vector<double> sel(splits.train.feature_names.size(), 0.0);
        for (const auto& client : rep.per_client) {
            for (std::size_t j = 0; j < sel.size(); ++j) {
                if (client.result.decoded.feature_mask[j]) sel[j] += 1.0;
            }
        }
        for (std::size_t j = 0; j < sel.size(); ++j) {
            freq[splits.train.feature_names[j]] = sel[j] / static_cast<double>(config.n_clients);
        }
        std::printf("distributed %s (%d clients): mean F-measure %.4f, mean accuracy %.4f\n",
                    dataset_id.c_str(), config.n_clients, rep.f_measure.mean, rep.accuracy.mean);
    }

    json selected;
    selected["schema"] = "hawkfs-selected-features-v1";
    selected["dataset"] = dataset_id;
    selected["frequency"] = std::move(freq);
    hawkfs::io::write_json(selected, (out / "selected_features.json").string());
    hawkfs::io::write_json(report, (out / "report.json").string());
    std::printf("wrote %s\n", (out / "report.json").c_str());
    return 0;
}

// Pulls the aggregate metric means out of either report flavour.
json aggregate_block(const json& report, const std::string& path) {
    if (!report.contains("aggregate")) {
        throw std::invalid_argument("report " + path + " has no aggregate block");
    }
    return report.at("aggregate");
}

int cmd_report(const std::vector<std::string>& paths, const std::string& csv_out) {
    if (paths.size() != 2) throw std::invalid_argument("report: expected exactly two report files");
    const json a = hawkfs::io::read_json(paths[0]);
    const json b = hawkfs::io::read_json(paths[1]);

    const std::string id_a = a.at("dataset").at("id").get<std::string>();
    const std::string id_b = b.at("dataset").at("id").get<std::string>();
    if (id_a != id_b) {
        throw std::invalid_argument("report: dataset identifiers differ ('" + id_a + "' vs '" +
                                    id_b + "')");
    }

    const json agg_a = aggregate_block(a, paths[0]);
    const json agg_b = aggregate_block(b, paths[1]);

    std::string csv = "metric,report_a,report_b,delta\n";
    std::printf("%-12s %12s %12s %10s\n", "metric", "report_a", "report_b", "delta");
    for (const char* metric : {"accuracy", "recall", "precision", "f_measure"}) {
        const double va = agg_a.at(metric).at("mean").get<double>();
        const double vb = agg_b.at(metric).at("mean").get<double>();
        std::printf("%-12s %12.4f %12.4f %10.4f\n", metric, va, vb, va - vb);
        csv += std::string(metric) + "," + hawkfs::io::format_double(va) + "," +
               hawkfs::io::format_double(vb) + "," + hawkfs::io::format_double(va - vb) + "\n";
    }
    if (!csv_out.empty()) hawkfs::io::atomic_write_text(csv_out, csv);
    return 0;
}

int cmd_datagen(const std::string& kind, const std::string& out_dir, int n, std::uint64_t seed) {
    const fs::path out(out_dir);
    fs::create_directories(out);
    if (kind == "phishing-like") {
        const auto d = hawkfs::synthetic::phishing_like(n > 0 ? n : 10000, seed);
        hawkfs::io::write_dataset_csv(d, (out / "phishing_like.csv").string());
        std::printf("wrote %s (%lld rows)\n", (out / "phishing_like.csv").c_str(),
                    static_cast<long long>(d.n_samples()));
    } else if (kind == "botnet-device") {
        // one feature-only capture file per class, integration style
        const auto d = hawkfs::synthetic::botnet_device_like(n > 0 ? n : 50000, seed);
        std::vector<Eigen::Index> benign, attack;
        for (Eigen::Index i = 0; i < d.n_samples(); ++i) {
            (d.labels[static_cast<std::size_t>(i)] == 0 ? benign : attack).push_back(i);
        }
        hawkfs::io::write_features_csv(hawkfs::take_rows(d, benign),
                                       (out / "device_benign.csv").string());
        hawkfs::io::write_features_csv(hawkfs::take_rows(d, attack),
                                       (out / "device_attack.csv").string());
        std::printf("wrote %s and %s (%lld + %lld rows)\n", (out / "device_benign.csv").c_str(),
                    (out / "device_attack.csv").c_str(), static_cast<long long>(benign.size()),
                    static_cast<long long>(attack.size()));
    } else if (kind == "informative") {
        const auto d = hawkfs::synthetic::informative_noise(n > 0 ? n : 1000, 5, 15, 0.4, 0.2, seed);
        hawkfs::io::write_dataset_csv(d, (out / "informative.csv").string());
        std::printf("wrote %s (%lld rows)\n", (out / "informative.csv").c_str(),
                    static_cast<long long>(d.n_samples()));
    } else {
        throw std::invalid_argument(
            "unknown --kind '" + kind +
            "' (expected phishing-like, botnet-device, or informative)");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wrapper feature selection for IoT botnet detection: a binary Harris Hawks "
                 "optimizer tunes the feature subset and hidden-layer size of a random weight "
                 "network, under centralized or simulated distributed training."};
    app.require_subcommand(1);

    CliOverrides o;

    auto* prepare = app.add_subcommand("prepare", "Integrate, normalize, and split a dataset");
    add_common_options(prepare, o);

    auto* run = app.add_subcommand("run", "Run the wrapper search on prepared data");
    add_common_options(run, o);

    std::vector<std::string> report_paths;
    std::string report_csv;
    auto* report = app.add_subcommand("report", "Compare two report.json files");
    report->add_option("reports", report_paths, "two report.json paths")->expected(2);
    report->add_option("--out", report_csv, "also write the comparison as CSV");

    std::string gen_kind = "phishing-like";
    std::string gen_out = "data";
    int gen_n = 0;
    long long gen_seed = 7;
    auto* datagen = app.add_subcommand("datagen", "Write synthetic benchmark datasets");
    datagen->add_option("--kind", gen_kind, "phishing-like, botnet-device, or informative");
    datagen->add_option("--out", gen_out, "output directory");
    datagen->add_option("-n,--rows", gen_n, "row count (0 = kind default)");
    datagen->add_option("--seed", gen_seed, "generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (prepare->parsed()) return cmd_prepare(o);
        if (run->parsed()) return cmd_run(o);
        if (report->parsed()) return cmd_report(report_paths, report_csv);
        if (datagen->parsed()) {
            return cmd_datagen(gen_kind, gen_out, gen_n, static_cast<std::uint64_t>(gen_seed));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

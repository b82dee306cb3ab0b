#include "hawkfs/config.hpp"

#include <filesystem>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hawkfs {

std::string RunConfig::resolved_dataset_name() const {
    if (!dataset_name.empty()) return dataset_name;
    if (!data_path.empty()) return std::filesystem::path(data_path).stem().string();
    if (!sources.empty()) return std::filesystem::path(sources.front().path).stem().string();
    return "dataset";
}

void RunConfig::validate() const {
    if (scheme != "centralized" && scheme != "distributed") {
        throw std::invalid_argument("config: scheme must be centralized or distributed");
    }
    if (classifier != "rwn" && classifier != "knn") {
        throw std::invalid_argument("config: classifier must be rwn or knn");
    }
    if (n_runs < 1) throw std::invalid_argument("config: n_runs must be >= 1");
    if (scheme == "distributed" && n_clients < 2) {
        throw std::invalid_argument("config: distributed scheme needs at least 2 clients");
    }
    if (neuron_bits < 1 || neuron_bits > 10) {
        throw std::invalid_argument("config: neuron_bits must lie in [1, 10]");
    }
    if (knn_k < 1) throw std::invalid_argument("config: knn_k must be >= 1");
    if (!(split.train_fraction > 0.0 && split.train_fraction < 1.0) ||
        !(split.validation_fraction_of_train > 0.0 && split.validation_fraction_of_train < 1.0)) {
        throw std::invalid_argument("config: split fractions must lie strictly inside (0,1)");
    }
    hho.validate();
    weights.validate();
    if (output_dir.empty()) throw std::invalid_argument("config: output_dir must not be empty");
}

void apply_profile(RunConfig& config, const std::string& name) {
    if (name.empty()) return;
    if (name == "paper") {
        config.hho.population_size = 200;
        config.hho.max_iterations = 100;
        config.n_runs = 30;
        config.subsample_cap = 0;
    } else if (name == "desk") {
        config.hho.population_size = 30;
        config.hho.max_iterations = 30;
        config.n_runs = 5;
        config.subsample_cap = 20000;
    } else {
        throw std::invalid_argument("unknown profile '" + name + "' (expected paper or desk)");
    }
    config.profile = name;
}

nlohmann::json config_to_json(const RunConfig& c) {
    nlohmann::json j;
    j["data_path"] = c.data_path;
    j["label_column"] = c.label_column;
    nlohmann::json srcs = nlohmann::json::array();
    for (const auto& s : c.sources) {
        srcs.push_back({{"path", s.path}, {"class_id", s.class_id}, {"class_name", s.class_name}});
    }
    j["sources"] = srcs;
    j["dataset_name"] = c.dataset_name;
    j["subsample_cap"] = c.subsample_cap;
    j["split"] = {{"train_fraction", c.split.train_fraction},
                  {"validation_fraction_of_train", c.split.validation_fraction_of_train},
                  {"stratified", c.split.stratified}};
    j["hho"] = {{"population_size", c.hho.population_size},
                {"max_iterations", c.hho.max_iterations},
                {"levy_beta", c.hho.levy_beta}};
    j["n_runs"] = c.n_runs;
    j["weights"] = {{"alpha", c.weights.alpha}, {"beta", c.weights.beta}, {"gamma", c.weights.gamma}};
    j["neuron_bits"] = c.neuron_bits;
    j["classifier"] = c.classifier;
    j["knn_k"] = c.knn_k;
    j["scheme"] = c.scheme;
    j["n_clients"] = c.n_clients;
    j["output_dir"] = c.output_dir;
    j["prepared_dir"] = c.prepared_dir;
    j["master_seed"] = c.master_seed;
    j["profile"] = c.profile;
    return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
    RunConfig c;
    c.data_path = j.value("data_path", c.data_path);
    c.label_column = j.value("label_column", c.label_column);
    if (j.contains("sources")) {
        for (const auto& s : j.at("sources")) {
            IntegrateSource src;
            src.path = s.at("path").get<std::string>();
            src.class_id = s.value("class_id", 0);
            src.class_name = s.value("class_name", std::string{});
            c.sources.push_back(std::move(src));
        }
    }
    c.dataset_name = j.value("dataset_name", c.dataset_name);
    c.subsample_cap = j.value("subsample_cap", c.subsample_cap);
    if (j.contains("split")) {
        const auto& s = j.at("split");
        c.split.train_fraction = s.value("train_fraction", c.split.train_fraction);
        c.split.validation_fraction_of_train =
            s.value("validation_fraction_of_train", c.split.validation_fraction_of_train);
        c.split.stratified = s.value("stratified", c.split.stratified);
    }
    if (j.contains("hho")) {
        const auto& h = j.at("hho");
        c.hho.population_size = h.value("population_size", c.hho.population_size);
        c.hho.max_iterations = h.value("max_iterations", c.hho.max_iterations);
        c.hho.levy_beta = h.value("levy_beta", c.hho.levy_beta);
    }
    c.n_runs = j.value("n_runs", c.n_runs);
    if (j.contains("weights")) {
        const auto& w = j.at("weights");
        c.weights.alpha = w.value("alpha", c.weights.alpha);
        c.weights.beta = w.value("beta", c.weights.beta);
        c.weights.gamma = w.value("gamma", c.weights.gamma);
    }
    c.neuron_bits = j.value("neuron_bits", c.neuron_bits);
    c.classifier = j.value("classifier", c.classifier);
    c.knn_k = j.value("knn_k", c.knn_k);
    c.scheme = j.value("scheme", c.scheme);
    c.n_clients = j.value("n_clients", c.n_clients);
    c.output_dir = j.value("output_dir", c.output_dir);
    c.prepared_dir = j.value("prepared_dir", c.prepared_dir);
    c.master_seed = j.value("master_seed", c.master_seed);
    c.profile = j.value("profile", c.profile);
    return c;
}

}  // namespace hawkfs

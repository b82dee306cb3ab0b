#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hawkfs/dataset.hpp"
#include "hawkfs/hho.hpp"
#include "hawkfs/wrapper.hpp"

namespace hawkfs {

// Everything a run needs, loadable from one JSON document and overridable
// by command-line flags. Defaults follow the full-scale experiment profile.
struct RunConfig {
    // data sources: either one labelled CSV or several feature-only files
    // integrated with per-file class ids
    std::string data_path;
    std::string label_column = "label";
    std::vector<IntegrateSource> sources;
    std::string dataset_name;
    std::size_t subsample_cap = 0;

    SplitSpec split;

    hho::HhoParams hho;
    int n_runs = 30;
    FitnessWeights weights;
    int neuron_bits = 10;
    std::string classifier = "rwn";
    int knn_k = 5;

    std::string scheme = "centralized";  // or "distributed"
    int n_clients = 4;

    std::string output_dir = "out";
    std::string prepared_dir;  // defaults to output_dir
    std::uint64_t master_seed = 42;
    std::string profile;  // "", "paper", or "desk"

    std::string resolved_prepared_dir() const {
        return prepared_dir.empty() ? output_dir : prepared_dir;
    }
    std::string resolved_dataset_name() const;

    void validate() const;
};

// paper: population 200, 100 iterations, 30 runs, no subsampling.
// desk:  population 30, 30 iterations, 5 runs, 20k-row subsample cap.
void apply_profile(RunConfig& config, const std::string& name);

nlohmann::json config_to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);

}  // namespace hawkfs

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hawkfs/linalg.hpp"

namespace hawkfs {

// Tabular classification data. Rows carry their original index in row_ids
// so splits and client partitions stay auditable after shuffling.
struct Dataset {
    Matrix features;  // n_samples x n_features
    std::vector<int> labels;
    std::vector<std::string> feature_names;
    std::vector<std::string> class_names;
    std::vector<std::uint64_t> row_ids;

    Eigen::Index n_samples() const { return features.rows(); }
    Eigen::Index n_features() const { return features.cols(); }
    int n_classes() const { return static_cast<int>(class_names.size()); }

    // Throws std::runtime_error on any violated invariant.
    void validate() const;
};

struct NormalizationParams {
    Vector min;
    Vector max;
};

struct SplitSpec {
    double train_fraction = 0.66;               // train+validation share of the full set
    double validation_fraction_of_train = 0.25; // validation share of that pool
    bool stratified = true;
    std::uint64_t seed = 0;
};

struct Splits {
    Dataset train;
    Dataset validation;
    Dataset test;
};

// Maps class-name strings to dense ids. When loading, an open registry
// assigns ids in first-appearance order; a fixed registry rejects labels it
// has not seen (used to keep ids consistent across prepared split files).
using LabelRegistry = std::vector<std::string>;

Dataset load_csv(const std::string& path, const std::string& label_column);
Dataset load_csv(const std::string& path, int label_column);
Dataset load_csv(const std::string& path, const std::string& label_column,
                 const std::optional<LabelRegistry>& fixed_labels);

struct IntegrateSource {
    std::string path;
    int class_id = 0;
    std::string class_name;  // defaults to the class id as text
};

// Concatenates feature-only CSVs, labelling every row of a file with that
// file's class id.
Dataset integrate(const std::vector<IntegrateSource>& sources);

NormalizationParams fit_normalizer(const Dataset& train);
Dataset apply_normalizer(const Dataset& data, const NormalizationParams& params);

// Two-way split: the first partition receives floor(fraction * n) samples
// (per class when stratified), the second the remainder.
std::pair<Dataset, Dataset> split_two(const Dataset& data, double fraction,
                                      bool stratified, std::uint64_t seed);

Splits split(const Dataset& data, const SplitSpec& spec);

// Disjoint, exhaustive, class-stratified partitions with sizes differing by
// at most one.
std::vector<Dataset> partition_clients(const Dataset& train, int n_clients, std::uint64_t seed);

// Stratified cap on the sample count; returns the input unchanged when it
// already fits. cap = 0 means no cap.
Dataset subsample_stratified(const Dataset& data, std::size_t cap, std::uint64_t seed);

Dataset concat(const Dataset& a, const Dataset& b);
Dataset take_rows(const Dataset& data, const std::vector<Eigen::Index>& rows);

}  // namespace hawkfs

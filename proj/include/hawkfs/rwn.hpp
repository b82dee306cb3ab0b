#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hawkfs/linalg.hpp"

#include <nlohmann/json_fwd.hpp>

namespace hawkfs {

enum class Activation { sigmoid };

struct RwnConfig {
    int n_hidden = 32;
    double weight_lo = -1.0;
    double weight_hi = 1.0;
    Activation activation = Activation::sigmoid;
    std::uint64_t seed = 0;

    void validate() const;
};

// Single-hidden-layer network with a frozen random hidden layer; only the
// output weights are fitted, by a minimum-norm least-squares solve.
struct RwnModel {
    Matrix input_weights;   // n_hidden x n_features
    Vector hidden_biases;   // n_hidden
    Matrix output_weights;  // n_hidden x n_classes
    RwnConfig config;
    Eigen::Index n_features = 0;
    int n_classes = 0;
};

// H(i,k) = sigmoid(<W_k, x_i> + b_k); the row loop runs on the OpenMP pool.
Matrix hidden_activations(const RwnModel& model, const Matrix& x);

// n_classes comes from the label registry, not from the labels present, so
// a client missing a class still produces a compatible output layer.
RwnModel rwn_train(const Matrix& x, std::span<const int> labels, int n_classes,
                   const RwnConfig& config);

// argmax over output columns; ties resolve to the lowest class id
std::vector<int> rwn_predict(const RwnModel& model, const Matrix& x);

nlohmann::json rwn_to_json(const RwnModel& model, const std::vector<std::string>& class_names = {});
RwnModel rwn_from_json(const nlohmann::json& j);

}  // namespace hawkfs

#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "hawkfs/dataset.hpp"
#include "hawkfs/hho.hpp"

namespace hawkfs::io {

// Writes are atomic: content lands in a temp file that is renamed over the
// target, so concurrent producers never interleave partial files.
void atomic_write_text(const std::string& path, const std::string& content);

void write_json(const nlohmann::json& j, const std::string& path);
nlohmann::json read_json(const std::string& path);

// Shortest round-trip decimal form (std::to_chars), so written values
// reload bit-identically.
std::string format_double(double v);

// Header row of feature names plus a final "label" column holding class
// names.
void write_dataset_csv(const Dataset& d, const std::string& path);

// Feature columns only; used for integration-style source files.
void write_features_csv(const Dataset& d, const std::string& path);

void write_convergence_csv(const hho::ConvergenceCurve& curve, const std::string& path);

nlohmann::json normalization_to_json(const NormalizationParams& params);
NormalizationParams normalization_from_json(const nlohmann::json& j);

}  // namespace hawkfs::io
